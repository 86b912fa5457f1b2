mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use repstab::charpoly::{coinv_series, def_poly, sym_series};
use repstab::coinv::{coinv_character_univariate, coinv_graded_dims, orbit_count};
use repstab::config::{config_delta, config_ranges, derangement_count, hersh_reiner_dim, sphere_dim};
use repstab::exact;
use repstab::ranges::{
    literature_cg, literature_congruence, ranges_coinv, ranges_congruence, ranges_from_cg, ranges_from_hyper,
    ranges_from_hyper_chain,
};
use repstab::symchar::{decompose_class_function, ClassFunction};
use repstab::verify;
use repstab::witness::sharpness_check;
use repstab::{Caps, CharPoly, Characteristic, ConfigParams, HypTriple, MultiDegree, Partition, Witness, WitnessKind};

use render::{Output, Table};

#[derive(Parser)]
#[command(
    name = "repstab",
    version,
    about = "Stable ranges and character polynomials for FI-modules"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Lift every enumeration cap
    #[arg(long, global = true)]
    override_caps: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Stable-range tuples
    #[command(subcommand)]
    Ranges(RangesCmd),
    /// Character polynomials
    #[command(subcommand)]
    Charpoly(CharpolyCmd),
    /// Profile and sharpness report of a witness family
    Witness(WitnessArgs),
    /// Orbit counts and coinvariant algebras
    #[command(subcommand)]
    Coinv(CoinvCmd),
    /// Ordered configuration spaces
    #[command(subcommand)]
    Config(ConfigCmd),
    /// Run every oracle suite
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum RangesCmd {
    /// From the local degree c and stable degree g
    Cg {
        #[arg(long, allow_negative_numbers = true)]
        c: i64,
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
    },
    /// From two hyperhomology generation degrees
    Hyper {
        #[arg(long)]
        theta_k: i64,
        #[arg(long, allow_negative_numbers = true)]
        theta_k1: i64,
    },
    /// From a strictly increasing sequence of generation degrees
    HyperChain {
        #[arg(long, value_delimiter = ',', required = true)]
        theta: Vec<i64>,
        #[arg(long)]
        k: usize,
    },
    /// Coinvariant algebras of total degree |J|
    Coinv {
        #[arg(long)]
        total_degree: i64,
    },
    /// Homology of congruence subgroups
    Congruence {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        k: i64,
    },
    /// Previously known ranges for comparison
    Literature {
        #[arg(long, value_enum)]
        kind: LiteratureKind,
        #[arg(long, allow_negative_numbers = true, required_if_eq("kind", "cg"))]
        c: Option<i64>,
        #[arg(long, allow_negative_numbers = true, required_if_eq("kind", "cg"))]
        g: Option<i64>,
        #[arg(long, required_if_eq("kind", "congruence"))]
        s: Option<i64>,
        #[arg(long, required_if_eq("kind", "congruence"))]
        k: Option<i64>,
        /// Characteristic of the coefficient field; M is undetermined without it
        #[arg(long = "char")]
        characteristic: Option<u32>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LiteratureKind {
    Cg,
    Congruence,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Series {
    Sym,
    Coinv,
}

#[derive(Args)]
struct PolySource {
    /// Take S^(j) or C^(j)
    #[arg(long, value_enum, requires = "j", required_unless_present = "poly")]
    series: Option<Series>,
    #[arg(long)]
    j: Option<usize>,
    /// A polynomial in the JSON schema of `charpoly --format json`
    #[arg(long, conflicts_with_all = ["series", "j"])]
    poly: Option<String>,
}

#[derive(Subcommand)]
enum CharpolyCmd {
    /// Evaluate at a cycle type
    Eval {
        #[command(flatten)]
        source: PolySource,
        /// Cycle type, e.g. 2,1,1; empty for the identity of S_0
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = false)]
        lambda: Partition,
    },
    /// S^(j), the degree-j symmetric power
    Sym {
        #[arg(long)]
        j: usize,
    },
    /// C^(j), the degree-j coinvariants
    Coinv {
        #[arg(long)]
        j: usize,
    },
    /// Replace every power X_j^a by the falling factorial of X_j
    Umbral {
        #[command(flatten)]
        source: PolySource,
    },
    /// Defining polynomial of a witness from its characters in degrees 0..=up-to
    Defpoly {
        #[arg(long, ignore_case = true)]
        family: FamilyArg,
        #[arg(long, allow_negative_numbers = true)]
        param: i64,
        #[arg(long)]
        g: Option<i64>,
        #[arg(long)]
        up_to: usize,
        #[arg(long, allow_negative_numbers = true, default_value_t = -1)]
        h: i64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    I,
    T,
    S,
    V,
    /// S(c) + I(g) with c = param
    Si,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long, ignore_case = true)]
    family: FamilyArg,
    #[arg(long, allow_negative_numbers = true)]
    param: i64,
    /// g for the S(c) + I(g) family
    #[arg(long)]
    g: Option<i64>,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
}

#[derive(Subcommand)]
enum CoinvCmd {
    /// Number of S_n-orbits of monomials of multidegree J
    Orbits {
        #[arg(long, value_parser = parse_multidegree)]
        j: MultiDegree,
        #[arg(long)]
        n: usize,
    },
    /// Graded dimensions of the coinvariant algebra
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        vars: usize,
        #[arg(long)]
        max_total: usize,
    },
    /// Character of the degree-j piece for one set of variables
    Char {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct ManifoldArgs {
    #[arg(long)]
    d: u64,
    #[arg(long)]
    u: u64,
    #[arg(long)]
    k: u64,
    /// d = 2 and the manifold is not a 2-sphere minus a closed set
    #[arg(long)]
    plane_exception: bool,
}

impl ManifoldArgs {
    fn params(&self) -> repstab::Result<ConfigParams> {
        ConfigParams::new(self.d, self.u, self.k, self.plane_exception)
    }
}

#[derive(Subcommand)]
enum ConfigCmd {
    /// Generation degree of H^k
    Delta(ManifoldArgs),
    /// Stable ranges of H^k
    Ranges(ManifoldArgs),
    /// Fixed-point-free permutations of r letters with l cycles
    Derangements {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        l: usize,
    },
    /// dim H^{i(d-1)} of the configuration space of n points in R^d
    HershReiner {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        n: usize,
    },
    /// dim of the first nontrivial cohomology for S^d
    Sphere {
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Domain(repstab::Error),
    Usage(String),
}

impl From<repstab::Error> for Failure {
    fn from(e: repstab::Error) -> Self {
        Failure::Domain(e)
    }
}

type Res<T> = Result<T, Failure>;

fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts = parse_list(s)?;
    if parts.contains(&0) {
        return Err("parts must be positive".into());
    }
    Ok(Partition::from_unsorted(parts))
}

fn parse_multidegree(s: &str) -> Result<MultiDegree, String> {
    MultiDegree::new(parse_list(s)?).map_err(|e| e.to_string())
}

fn witness_of(family: FamilyArg, param: i64, g: Option<i64>) -> Res<Witness> {
    let kind = match family {
        FamilyArg::I => WitnessKind::I,
        FamilyArg::T => WitnessKind::T,
        FamilyArg::S => WitnessKind::S,
        FamilyArg::V => WitnessKind::V,
        FamilyArg::Si => {
            let g = g.ok_or_else(|| Failure::Usage("--g is required for --family si".into()))?;
            return Ok(Witness::sum_si(param, g)?);
        }
    };
    if g.is_some() {
        return Err(Failure::Usage("--g only applies to --family si".into()));
    }
    Ok(Witness::new(kind, param)?)
}

fn poly_of(source: &PolySource, caps: &Caps) -> Res<CharPoly> {
    if let Some(text) = &source.poly {
        return serde_json::from_str(text).map_err(|e| Failure::Usage(format!("--poly: {e}")));
    }
    let j = source.j.expect("clap enforces --j");
    let series = match source.series.expect("clap enforces --series") {
        Series::Sym => sym_series(j, caps)?,
        Series::Coinv => coinv_series(j, caps)?,
    };
    Ok(series[j].clone())
}

fn poly_output(p: &CharPoly) -> Output {
    let binomial = p.render_binomial();
    let monomial = p.render_monomial();
    let table = format!("binomial: {binomial}\nmonomial: {monomial}\n");
    Output::new(json!({"binomial": binomial, "monomial": monomial, "terms": p}), table)
}

fn class_function_output(f: &ClassFunction, caps: &Caps) -> Res<Output> {
    let decomposition = decompose_class_function(f, caps)?;
    let mut t = Table::new(&["cycle type", "value"]);
    for lambda in repstab::partition::partitions_of(f.degree()) {
        t.row(&[lambda.to_string(), exact::format(&f.value(&lambda))]);
    }
    let mut d = Table::new(&["Specht", "multiplicity"]);
    for (mu, m) in &decomposition {
        d.row(&[mu.to_string(), m.to_string()]);
    }
    let entries: Vec<_> = decomposition
        .iter()
        .map(|(mu, m)| json!({"partition": mu, "multiplicity": m}))
        .collect();
    Ok(Output::new(
        json!({"character": f, "decomposition": entries}),
        format!("{}\n{}", t.render(), d.render()),
    ))
}

fn run_ranges(cmd: RangesCmd) -> Res<Output> {
    Ok(match cmd {
        RangesCmd::Cg { c, g } => render::ranges(&ranges_from_cg(HypTriple::new(c, g)?)),
        RangesCmd::Hyper { theta_k, theta_k1 } => render::ranges(&ranges_from_hyper(theta_k, theta_k1)?),
        RangesCmd::HyperChain { theta, k } => render::ranges(&ranges_from_hyper_chain(&theta, k)?),
        RangesCmd::Coinv { total_degree } => render::ranges(&ranges_coinv(total_degree)?),
        RangesCmd::Congruence { s, k } => render::ranges(&ranges_congruence(s, k)?),
        RangesCmd::Literature {
            kind,
            c,
            g,
            s,
            k,
            characteristic,
        } => {
            let field = characteristic.map(Characteristic::new).transpose()?;
            let r = match kind {
                LiteratureKind::Cg => literature_cg(HypTriple::new(c.unwrap_or(-1), g.unwrap_or(-1))?, field),
                LiteratureKind::Congruence => literature_congruence(s.unwrap_or(0), k.unwrap_or(0), field)?,
            };
            render::literature(&r)
        }
    })
}

fn run_charpoly(cmd: CharpolyCmd, caps: &Caps) -> Res<Output> {
    Ok(match cmd {
        CharpolyCmd::Eval { source, lambda } => {
            let value = exact::format(&poly_of(&source, caps)?.evaluate(&lambda));
            render::scalar("value", value)
        }
        CharpolyCmd::Sym { j } => poly_output(&sym_series(j, caps)?[j]),
        CharpolyCmd::Coinv { j } => poly_output(&coinv_series(j, caps)?[j]),
        CharpolyCmd::Umbral { source } => poly_output(&poly_of(&source, caps)?.umbral_down()),
        CharpolyCmd::Defpoly {
            family,
            param,
            g,
            up_to,
            h,
        } => {
            let w = witness_of(family, param, g)?;
            let chars = (0..=up_to)
                .map(|r| w.character(r, caps))
                .collect::<repstab::Result<Vec<_>>>()?;
            poly_output(&def_poly(&chars, h)?)
        }
    })
}

fn run_witness(args: WitnessArgs, caps: &Caps) -> Res<Output> {
    let w = witness_of(args.family, args.param, args.g)?;
    if args.max_n > caps.oracle {
        return Err(repstab::Error::SizeCapExceeded {
            what: "max-n",
            value: args.max_n,
            cap: caps.oracle,
        }
        .into());
    }
    let caps = Caps {
        oracle: args.max_n,
        ..*caps
    };
    let profile = w.profile()?;
    let report = sharpness_check(&w, &caps)?;
    let dims: Vec<u64> = (0..=args.max_n).map(|n| w.dim(n)).collect();

    let mut out = String::new();
    out.push_str(&format!("witness: {w}\n"));
    out.push_str(&format!("t_i: {}\n", profile.t_formula()));
    out.push_str(&format!("regularity: {}\n", profile.regularity));
    out.push_str(&format!(
        "(c, g): ({}, {})\n\n",
        profile.hyp_triple.c, profile.hyp_triple.g
    ));
    let mut d = Table::new(&["n", "dim"]);
    for (n, dim) in dims.iter().enumerate() {
        d.row(&[n.to_string(), dim.to_string()]);
    }
    out.push_str(&d.render());
    out.push('\n');
    let mut t = Table::new(&["coordinate", "value", "sharp", "evidence"]);
    for c in &report.checks {
        t.row(&[
            c.coordinate.to_string(),
            c.claimed.to_string(),
            if c.passed { "yes" } else { "no" }.to_string(),
            c.detail.clone(),
        ]);
    }
    out.push_str(&t.render());
    Ok(Output::new(
        json!({
            "witness": w.to_string(),
            "profile": profile,
            "t_formula": profile.t_formula(),
            "dims": dims,
            "sharpness": report,
        }),
        out,
    ))
}

fn run_coinv(cmd: CoinvCmd, caps: &Caps) -> Res<Output> {
    Ok(match cmd {
        CoinvCmd::Orbits { j, n } => render::scalar("orbits", orbit_count(&j, n, caps)?),
        CoinvCmd::Dims { n, vars, max_total } => {
            let dims = coinv_graded_dims(n, vars, max_total, caps)?;
            let mut t = Table::new(&["multidegree", "dim"]);
            for (j, d) in &dims {
                t.row(&[j.to_string(), d.to_string()]);
            }
            let total: u64 = dims.values().sum();
            t.row(&["total".to_string(), total.to_string()]);
            let entries: Vec<_> = dims.iter().map(|(j, d)| json!({"multidegree": j, "dim": d})).collect();
            Output::new(json!({"dims": entries, "total": total}), t.render())
        }
        CoinvCmd::Char { j, n } => class_function_output(&coinv_character_univariate(j, n, caps)?, caps)?,
    })
}

fn run_config(cmd: ConfigCmd) -> Res<Output> {
    Ok(match cmd {
        ConfigCmd::Delta(m) => render::scalar("delta", config_delta(m.params()?)?),
        ConfigCmd::Ranges(m) => render::ranges(&config_ranges(m.params()?)?),
        ConfigCmd::Derangements { r, l } => render::scalar("count", derangement_count(r, l)),
        ConfigCmd::HershReiner { i, n } => {
            if i == 0 {
                return Err(repstab::Error::InvalidParams("need i >= 1".into()).into());
            }
            render::scalar("dim", hersh_reiner_dim(i, n))
        }
        ConfigCmd::Sphere { n } => render::scalar("dim", sphere_dim(n)),
    })
}

fn run_verify(max_n: usize, caps: &Caps) -> (Output, bool) {
    let report = verify::run_all(max_n, caps);
    let mut t = Table::new(&["suite", "passed", "failed", "status"]);
    let mut notes = String::new();
    for s in &report.suites {
        t.row(&[
            s.name.to_string(),
            s.passed.to_string(),
            s.failed.to_string(),
            if s.ok() { "ok" } else { "FAIL" }.to_string(),
        ]);
        for f in &s.failures {
            notes.push_str(&format!("{}: {f}\n", s.name));
        }
    }
    let ok = report.ok();
    let table = format!(
        "{}{notes}{}\n",
        t.render(),
        if ok { "all suites passed" } else { "some suites failed" }
    );
    (Output::new(serde_json::to_value(&report).unwrap(), table), ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = if cli.override_caps {
        Caps::lifted()
    } else {
        Caps::default()
    };
    let mut ok = true;
    let result = match cli.command {
        Command::Ranges(cmd) => run_ranges(cmd),
        Command::Charpoly(cmd) => run_charpoly(cmd, &caps),
        Command::Witness(args) => run_witness(args, &caps),
        Command::Coinv(cmd) => run_coinv(cmd, &caps),
        Command::Config(cmd) => run_config(cmd),
        Command::Verify { max_n } => {
            let (out, passed) = run_verify(max_n, &caps);
            ok = passed;
            Ok(out)
        }
    };
    match result {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", out.json),
                Format::Table => print!("{}", out.table),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({"error": e.kind(), "message": e.to_string()}));
            ExitCode::FAILURE
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
