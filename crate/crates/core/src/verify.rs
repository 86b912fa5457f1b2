//! Exhaustive self-check suites over small parameter grids.
//!
//! Every suite compares the main algorithms with the [`crate::oracle`]
//! functions or with tabulated tuples. Suites run in parallel and are
//! reported in name order.

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::charpoly::{coinv_series, def_poly, sym_series, CharPoly};
use crate::coinv::{coinv_character_univariate, coinv_graded_dims, orbit_count, MultiDegree};
use crate::config::{
    config_delta, config_ranges, derangement_count, derangements_by_recurrence, hersh_reiner_dim, sphere_dim,
    ConfigParams,
};
use crate::error::Result;
use crate::exact::{frac, int};
use crate::oracle;
use crate::partition::{partitions_of, specht_dim, syt_major_counts, Partition};
use crate::ranges::{
    literature_cg, ranges_coinv, ranges_congruence, ranges_from_cg, ranges_from_hyper, ranges_from_hyper_chain,
    regularity_bound, t_bounds, HypTriple, StableRanges,
};
use crate::symchar::{induced_trivial_character, specht_character, ClassFunction};
use crate::witness::{sharpness_check, Witness};

/// Failures kept per suite in the report.
const SHOWN_FAILURES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }
}

struct Tally {
    name: &'static str,
    passed: u64,
    failed: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            passed: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < SHOWN_FAILURES {
                self.failures.push(what());
            }
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: impl FnOnce() -> String) {
        let ok = got == want;
        self.check(ok, || format!("{}: got {got:?}, want {want:?}", what()));
    }

    fn run(&mut self, body: impl FnOnce(&mut Tally) -> Result<()>) {
        if let Err(e) = body(self) {
            self.check(false, || format!("error: {e}"));
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            passed: self.passed,
            failed: self.failed,
            failures: self.failures,
        }
    }
}

type Suite = fn(usize, &Caps) -> SuiteResult;

const SUITES: &[(&str, Suite)] = &[
    ("characters", characters),
    ("charpoly-coinvariant", charpoly_coinvariant),
    ("charpoly-defpoly", charpoly_defpoly),
    ("charpoly-trace", charpoly_trace),
    ("charpoly-umbral", charpoly_umbral),
    ("coinvariants", coinvariants),
    ("configuration", configuration),
    ("orbits", orbits),
    ("ranges", ranges),
    ("tableaux", tableaux),
    ("witnesses", witnesses),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(name, _)| *name).collect()
}

/// Runs every suite with symmetric-group degrees up to `max_n`.
pub fn run_all(max_n: usize, caps: &Caps) -> VerifyReport {
    let mut suites: Vec<SuiteResult> = SUITES.par_iter().map(|(_, suite)| suite(max_n, caps)).collect();
    suites.sort_by_key(|s| s.name);
    VerifyReport { max_n, suites }
}

fn cycle_types(max_n: usize) -> impl Iterator<Item = Partition> {
    (0..=max_n).flat_map(partitions_of)
}

fn characters(max_n: usize, caps: &Caps) -> SuiteResult {
    let mut t = Tally::new("characters");
    let top = max_n.min(caps.oracle);
    t.run(|t| {
        for n in 0..=top {
            for mu in partitions_of(n) {
                for lambda in partitions_of(n) {
                    t.eq(
                        specht_character(&mu, &lambda)?,
                        oracle::jacobi_trudi_character(&mu, &lambda),
                        || format!("chi^{mu}({lambda})"),
                    );
                }
                let chi = ClassFunction::from_fn(n, |l| int(specht_character(&mu, l).unwrap_or(0)));
                t.eq(chi.inner_product(&chi)?, int(1), || format!("<chi^{mu}, chi^{mu}>"));
                t.eq(specht_dim(&mu), oracle::standard_tableaux(&mu).len() as u64, || {
                    format!("dim S^{mu}")
                });
            }
        }
        Ok(())
    });
    t.finish()
}

fn tableaux(max_n: usize, caps: &Caps) -> SuiteResult {
    let mut t = Tally::new("tableaux");
    t.run(|t| {
        for n in 0..=max_n.min(caps.syt) {
            for mu in partitions_of(n) {
                let counts = syt_major_counts(&mu, caps)?;
                let brute = oracle::major_index_counts(&mu);
                for (j, &want) in brute.iter().enumerate() {
                    t.eq(counts.get(&j).copied().unwrap_or(0), want, || format!("u^{j}({mu})"));
                }
            }
        }
        Ok(())
    });
    t.finish()
}

fn charpoly_trace(max_n: usize, caps: &Caps) -> SuiteResult {
    let mut t = Tally::new("charpoly-trace");
    t.run(|t| {
        let s = sym_series(5, caps)?;
        for lambda in cycle_types(max_n) {
            let series = oracle::cycle_series(&lambda, 5);
            for (j, p) in s.iter().enumerate() {
                t.eq(p.evaluate(&lambda), int(series[j]), || format!("S^({j})({lambda})"));
            }
        }
        Ok(())
    });
    t.finish()
}

/// Whether `C^(j)` computes the degree-`j` coinvariant character of `S_n`.
pub fn coinvariant_character_matches(c: &CharPoly, j: usize, n: usize, caps: &Caps) -> Result<bool> {
    let chi = coinv_character_univariate(j, n, caps)?;
    Ok(partitions_of(n).iter().all(|l| c.evaluate(l) == chi.value(l)))
}

fn charpoly_coinvariant(max_n: usize, caps: &Caps) -> SuiteResult {
    let mut t = Tally::new("charpoly-coinvariant");
    let top = max_n.min(caps.oracle);
    t.run(|t| {
        let c = coinv_series(5, caps)?;
        for (j, p) in c.iter().enumerate() {
            for n in j..=top {
                t.check(coinvariant_character_matches(p, j, n, caps)?, || {
                    format!("C^({j}) at n = {n}")
                });
            }
        }
        for (j, p) in c.iter().enumerate().take(5).skip(2) {
            let mut fails = false;
            for n in 0..j {
                fails |= !coinvariant_character_matches(p, j, n, caps)?;
            }
            t.check(fails, || format!("C^({j}) should fail below n = {j}"));
        }
        Ok(())
    });
    t.finish()
}

fn charpoly_defpoly(max_n: usize, caps: &Caps) -> SuiteResult {
    let mut t = Tally::new("charpoly-defpoly");
    let top = max_n.min(caps.oracle);
    t.run(|t| {
        for g in 0..=3usize {
            let w: Vec<ClassFunction> = (0..=g).map(ClassFunction::trivial).collect();
            let p = def_poly(&w, -1)?;
            for n in 0..=top {
                let mut sum = ClassFunction::zero(n);
                for r in 0..=g.min(n) {
                    sum = sum.add(&induced_trivial_character(r, n, caps)?)?;
                }
                for lambda in partitions_of(n) {
                    t.eq(p.evaluate(&lambda), sum.value(&lambda), || format!("g = {g}, {lambda}"));
                }
            }
        }
        Ok(())
    });
    t.finish()
}

fn charpoly_umbral(_max_n: usize, _caps: &Caps) -> SuiteResult {
    let mut t = Tally::new("charpoly-umbral");
    let x = CharPoly::var;
    let one = CharPoly::one();
    let half = frac(1, 2);
    let shifted = &x(1) - &one;
    let input = &(&shifted * &shifted).scale(&half) + &(&x(2).scale(&int(2)) - &one).scale(&half);
    let x1m3 = &x(1) - &CharPoly::int(3);
    let want = &(&CharPoly::binomial(&x1m3, 2) + &x(2)) + &x1m3.scale(&int(2));
    t.eq(input.umbral_down(), want, || "umbral fixture".into());
    t.eq(x(1).umbral_down(), x(1), || "umbral of X1".into());
    for e1 in 0..4u32 {
        for e2 in 0..3u32 {
            let m = CharPoly::monomial(vec![e1, e2], int(1));
            let falling =
                |j: usize, e: u32| (0..e).fold(CharPoly::one(), |acc, k| &acc * &(&x(j) - &CharPoly::int(k as i64)));
            t.eq(m.umbral_down(), &falling(1, e1) * &falling(2, e2), || {
                format!("X1^{e1} X2^{e2}")
            });
            let sum = &m + &x(3);
            t.eq(sum.umbral_down(), &m.umbral_down() + &x(3), || "linearity".into());
        }
    }
    t.finish()
}

/// Tabulated tuples: `(label, computed, expected)`.
pub fn ranges_fixtures() -> Result<Vec<(String, StableRanges, [i64; 6])>> {
    let cg = |c, g| -> Result<StableRanges> { Ok(ranges_from_cg(HypTriple::new(c, g)?)) };
    let mut out = vec![
        ("cg(-1,2)".to_string(), cg(-1, 2)?, [2, -1, 3, -1, 2, 4]),
        ("cg(2,1)".into(), cg(2, 1)?, [3, 4, 3, 2, 1, 3]),
        ("cg(2,3)".into(), cg(2, 3)?, [5, 6, 5, 2, 3, 6]),
        ("cg(3,-1)".into(), cg(3, -1)?, [3, 4, 4, 3, -1, 4]),
        ("hyper(0,0)".into(), ranges_from_hyper(0, 0)?, [0, -1, 0, -1, 0, 0]),
        ("hyper(2,1)".into(), ranges_from_hyper(2, 1)?, [4, 5, 3, 2, 2, 4]),
        ("hyper(1,3)".into(), ranges_from_hyper(1, 3)?, [2, 5, 5, 4, 1, 5]),
        (
            "chain((1,2),0)".into(),
            ranges_from_hyper_chain(&[1, 2], 0)?,
            [1, 2, 3, 2, 1, 3],
        ),
        (
            "chain((0,2,4),1)".into(),
            ranges_from_hyper_chain(&[0, 2, 4], 1)?,
            [4, 5, 7, 6, 2, 7],
        ),
        (
            "chain((0,1,4),1)".into(),
            ranges_from_hyper_chain(&[0, 1, 4], 1)?,
            [2, 4, 6, 5, 1, 6],
        ),
        ("coinv(1)".into(), ranges_coinv(1)?, [2, 3, 1, 0, 1, 2]),
        ("coinv(4)".into(), ranges_coinv(4)?, [8, 9, 7, 6, 4, 8]),
        ("congruence(1,0)".into(), ranges_congruence(1, 0)?, [0, -1, 0, -1, 0, 0]),
        ("congruence(1,1)".into(), ranges_congruence(1, 1)?, [2, 4, 6, 5, 2, 6]),
        (
            "congruence(2,2)".into(),
            ranges_congruence(2, 2)?,
            [9, 10, 13, 12, 4, 13],
        ),
        (
            "congruence(1,3)".into(),
            ranges_congruence(1, 3)?,
            [12, 13, 15, 14, 6, 15],
        ),
        (
            "sphere config(4,2,3)".into(),
            config_ranges(ConfigParams::new(4, 2, 3, false)?)?,
            [4, 5, 3, 2, 2, 4],
        ),
        (
            "euclidean config(3,1,2)".into(),
            config_ranges(ConfigParams::new(3, 1, 2, false)?)?,
            [4, 5, 3, 2, 2, 4],
        ),
    ];
    for i in 1..=10i64 {
        for d in [3u64, 4] {
            let m = if d % 2 == 1 { 3 * i } else { 3 * i + 1 };
            out.push((
                format!("euclidean fixture i = {i}, d = {d}"),
                crate::config::euclidean_sharp_ranges(i as u64, d)?,
                [2 * i, -1, 4 * i - 1, -1, 2 * i, m],
            ));
        }
    }
    Ok(out)
}

fn ranges(_max_n: usize, _caps: &Caps) -> SuiteResult {
    let mut t = Tally::new("ranges");
    t.run(|t| {
        for (label, got, want) in ranges_fixtures()? {
            t.eq(got.as_array(), want, || label);
        }
        for c in -1..=20 {
            for g in -1..=20 {
                let h = HypTriple::new(c, g)?;
                let new = ranges_from_cg(h).as_array();
                let old = literature_cg(h, None).determined();
                t.check((0..5).all(|i| new[i] <= old[i]), || {
                    format!("dominance at c = {c}, g = {g}")
                });
                t.check(
                    StableRanges::new(new[0], new[1], new[2], new[3], new[4], new[5]).is_ok(),
                    || format!("invariant at c = {c}, g = {g}"),
                );
                if c >= 0 {
                    t.eq(t_bounds(h).1 - 1, regularity_bound(h), || {
                        format!("t1 - 1 at c = {c}, g = {g}")
                    });
                }
            }
        }
        for delta in 1..=20 {
            t.eq(
                ranges_from_cg(HypTriple::new(2 * delta - 2, delta)?),
                ranges_coinv(delta)?,
                || format!("doubled tuple at delta = {delta}"),
            );
        }
        for theta in 1..=12 {
            let base = ranges_from_hyper(theta, theta)?;
            for other in -1..=theta {
                t.eq(ranges_from_hyper(theta, other)?, base, || {
                    format!("hyper({theta},{other})")
                });
            }
        }
        Ok(())
    });
    t.finish()
}

/// The primitive families with parameters `<= max_param` plus the sums `S(c) ⊕ I(g)`.
pub fn small_witnesses(max_param: i64) -> Vec<Witness> {
    let mut out: Vec<Witness> = (-1..=max_param).map(Witness::i).collect();
    out.extend((0..=max_param).map(Witness::t));
    out.extend((0..=max_param).map(Witness::s));
    out.extend((1..=max_param).map(Witness::v));
    for c in 0..=max_param {
        for g in 0..=(c + 1) / 2 {
            out.push(Witness::SumSI { c, g });
        }
    }
    out
}

fn witnesses(max_n: usize, caps: &Caps) -> SuiteResult {
    let mut t = Tally::new("witnesses");
    let top = max_n.min(caps.oracle);
    t.run(|t| {
        for w in small_witnesses(4) {
            let report = sharpness_check(&w, caps)?;
            for c in &report.checks {
                t.check(c.passed, || format!("{w} {}: {}", c.coordinate, c.detail));
            }
            let profile = w.profile()?;
            t.eq(profile.stable_ranges, ranges_from_cg(profile.hyp_triple), || {
                format!("{w} tuple")
            });
            t.eq(profile.regularity, regularity_bound(profile.hyp_triple), || {
                format!("{w} regularity")
            });
            for n in 0..=top {
                t.eq(w.character(n, caps)?.at_identity(), int(w.dim(n) as i64), || {
                    format!("{w} dim at n = {n}")
                });
            }
        }
        Ok(())
    });
    t.finish()
}

fn coinvariants(max_n: usize, caps: &Caps) -> SuiteResult {
    let mut t = Tally::new("coinvariants");
    t.run(|t| {
        for n in 0..=max_n.min(caps.coinv_n) {
            let bound = (n * n.saturating_sub(1) / 2).min(caps.coinv_total_univariate);
            let dims: Vec<u64> = coinv_graded_dims(n, 1, bound, caps)?.into_values().collect();
            t.eq(dims.clone(), oracle::q_factorial(n), || {
                format!("Hilbert series n = {n}")
            });
            let total: u64 = dims.iter().sum();
            t.eq(total, (1..=n as u64).product::<u64>(), || format!("total n = {n}"));
            if n <= caps.oracle {
                for (j, &d) in dims.iter().enumerate() {
                    t.eq(
                        coinv_character_univariate(j, n, caps)?.at_identity(),
                        int(d as i64),
                        || format!("character degree at j = {j}, n = {n}"),
                    );
                }
            }
        }
        if caps.coinv_n >= 3 && caps.coinv_vars >= 2 && caps.coinv_total_diagonal >= 3 {
            let total: u64 = coinv_graded_dims(3, 2, 3, caps)?.values().sum();
            t.eq(total, 16, || "diagonal n = 3".into());
        }
        Ok(())
    });
    t.finish()
}

fn orbits(_max_n: usize, caps: &Caps) -> SuiteResult {
    let mut t = Tally::new("orbits");
    t.run(|t| {
        for labels in 1..=2 {
            for j in MultiDegree::all_up_to(labels, 4) {
                let size = j.total();
                let counts: Vec<u64> = (0..=size + 2)
                    .map(|n| orbit_count(&j, n, caps))
                    .collect::<Result<_>>()?;
                t.check(counts.windows(2).all(|w| w[0] <= w[1]), || format!("{j} monotone"));
                t.check(counts[size..].iter().all(|&c| c == counts[size]), || {
                    format!("{j} constant")
                });
                if size >= 1 {
                    t.check(counts[size - 1] < counts[size], || format!("{j} jumps at |J|"));
                }
            }
        }
        Ok(())
    });
    t.finish()
}

fn configuration(_max_n: usize, _caps: &Caps) -> SuiteResult {
    let mut t = Tally::new("configuration");
    t.run(|t| {
        for i in 1..=4 {
            for n in 0..=10 {
                t.eq(hersh_reiner_dim(i, n), oracle::stirling_product(i, n), || {
                    format!("i = {i}, n = {n}")
                });
            }
        }
        for r in 0..=8 {
            for l in 0..=r {
                let d = derangement_count(r, l);
                t.eq(d, derangements_by_recurrence(r, l), || format!("D({r},{l}) recurrence"));
                t.eq(d, oracle::derangements_by_cycle_type(r, l), || {
                    format!("D({r},{l}) classes")
                });
            }
        }
        for n in 3..=40usize {
            t.eq(sphere_dim(n), (n * (n - 3) / 2) as u64, || format!("sphere n = {n}"));
        }
        for n in 4..=8 {
            let shape = Partition::new(vec![n - 2, 2])?;
            t.eq(sphere_dim(n), specht_dim(&shape), || format!("sphere Specht n = {n}"));
        }
        for d in 2..=7u64 {
            for u in 0..=d - 2 {
                for k in d - 1..=3 * d {
                    let p = ConfigParams::new(d, u, k, false)?;
                    let delta = config_delta(p)? as i64;
                    if delta >= 1 {
                        t.eq(
                            config_ranges(p)?,
                            ranges_from_cg(HypTriple::new(2 * delta - 2, delta)?),
                            || format!("d = {d}, u = {u}, k = {k}"),
                        );
                    }
                }
            }
        }
        Ok(())
    });
    t.finish()
}
