//! End-to-end acceptance checks, one line per criterion.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use repstab::charpoly::{coinv_series, sym_series, CharPoly};
use repstab::coinv::{coinv_character_univariate, coinv_graded_dims, orbit_count, MultiDegree};
use repstab::config::{
    config_ranges, derangement_count, derangements_by_enumeration, euclidean_sharp_ranges, hersh_reiner_dim,
};
use repstab::exact::{frac, int};
use repstab::oracle;
use repstab::partition::{partitions_of, Partition};
use repstab::ranges::{
    literature_cg, ranges_coinv, ranges_congruence, ranges_from_cg, ranges_from_hyper, ranges_from_hyper_chain,
};
use repstab::witness::{sharpness_check, Witness};
use repstab::{Caps, ConfigParams, HypTriple, Result};

type Check = fn() -> Result<Vec<String>>;

fn c4_reproduction() -> Result<Vec<String>> {
    let c = coinv_series(4, &Caps::default())?;
    let rendered = c[4].render_binomial();
    let want = "X4 + X3*X1 + binom(X2,2) + X2*binom(X1,2) + binom(X1,4) - X3 + 2*binom(X1,3) - X1";
    let mut failures = Vec::new();
    if rendered != want {
        failures.push(format!("rendered {rendered}"));
    }
    let basis: BTreeMap<Vec<u32>, i64> = [
        (vec![0, 0, 0, 1], 1),
        (vec![1, 0, 1], 1),
        (vec![0, 2], 1),
        (vec![2, 1], 1),
        (vec![4], 1),
        (vec![0, 0, 1], -1),
        (vec![3], 2),
        (vec![1], -1),
    ]
    .into_iter()
    .collect();
    let got: BTreeMap<Vec<u32>, i64> = c[4]
        .to_binomial_basis()
        .into_iter()
        .map(|(e, v)| (e, repstab::exact::to_i64(&v).unwrap_or(i64::MIN)))
        .collect();
    if got != basis {
        failures.push(format!("binomial coefficients {got:?}"));
    }
    Ok(failures)
}

fn tuple_tables() -> Result<Vec<String>> {
    let cg = |c, g| -> Result<[i64; 6]> { Ok(ranges_from_cg(HypTriple::new(c, g)?).as_array()) };
    let cases: Vec<(&str, [i64; 6], [i64; 6])> = vec![
        ("cg(-1,2)", cg(-1, 2)?, [2, -1, 3, -1, 2, 4]),
        ("cg(2,1)", cg(2, 1)?, [3, 4, 3, 2, 1, 3]),
        ("cg(2,3)", cg(2, 3)?, [5, 6, 5, 2, 3, 6]),
        ("cg(3,-1)", cg(3, -1)?, [3, 4, 4, 3, -1, 4]),
        ("cg(2,2)", cg(2, 2)?, [4, 5, 3, 2, 2, 4]),
        ("hyper(0,0)", ranges_from_hyper(0, 0)?.as_array(), [0, -1, 0, -1, 0, 0]),
        ("hyper(2,1)", ranges_from_hyper(2, 1)?.as_array(), [4, 5, 3, 2, 2, 4]),
        ("hyper(1,3)", ranges_from_hyper(1, 3)?.as_array(), [2, 5, 5, 4, 1, 5]),
        (
            "chain((1,2),0)",
            ranges_from_hyper_chain(&[1, 2], 0)?.as_array(),
            [1, 2, 3, 2, 1, 3],
        ),
        (
            "chain((0,2,4),1)",
            ranges_from_hyper_chain(&[0, 2, 4], 1)?.as_array(),
            [4, 5, 7, 6, 2, 7],
        ),
        (
            "chain((0,1,4),1)",
            ranges_from_hyper_chain(&[0, 1, 4], 1)?.as_array(),
            [2, 4, 6, 5, 1, 6],
        ),
        ("coinv(1)", ranges_coinv(1)?.as_array(), [2, 3, 1, 0, 1, 2]),
        ("coinv(4)", ranges_coinv(4)?.as_array(), [8, 9, 7, 6, 4, 8]),
        (
            "congruence(1,0)",
            ranges_congruence(1, 0)?.as_array(),
            [0, -1, 0, -1, 0, 0],
        ),
        (
            "congruence(1,1)",
            ranges_congruence(1, 1)?.as_array(),
            [2, 4, 6, 5, 2, 6],
        ),
        (
            "congruence(2,2)",
            ranges_congruence(2, 2)?.as_array(),
            [9, 10, 13, 12, 4, 13],
        ),
        (
            "congruence(1,3)",
            ranges_congruence(1, 3)?.as_array(),
            [12, 13, 15, 14, 6, 15],
        ),
        (
            "sphere",
            config_ranges(ConfigParams::new(4, 2, 3, false)?)?.as_array(),
            [4, 5, 3, 2, 2, 4],
        ),
        (
            "euclidean d=3 k=2",
            config_ranges(ConfigParams::new(3, 1, 2, false)?)?.as_array(),
            [4, 5, 3, 2, 2, 4],
        ),
        (
            "euclidean sharp i=1 d=3",
            euclidean_sharp_ranges(1, 3)?.as_array(),
            [2, -1, 3, -1, 2, 3],
        ),
        (
            "euclidean sharp i=2 d=4",
            euclidean_sharp_ranges(2, 4)?.as_array(),
            [4, -1, 7, -1, 4, 7],
        ),
    ];
    let mut failures: Vec<String> = cases
        .into_iter()
        .filter(|(_, got, want)| got != want)
        .map(|(label, got, want)| format!("{label}: {got:?} != {want:?}"))
        .collect();
    for d in 3..=8u64 {
        if config_ranges(ConfigParams::new(d, d - 2, d - 1, false)?)?.as_array() != [4, 5, 3, 2, 2, 4] {
            failures.push(format!("euclidean d = {d}, k = d - 1"));
        }
    }
    Ok(failures)
}

fn dominance() -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for c in -1..=20 {
        for g in -1..=20 {
            let h = HypTriple::new(c, g)?;
            let new = ranges_from_cg(h).as_array();
            let old = literature_cg(h, None).determined();
            if (0..5).any(|i| new[i] > old[i]) {
                failures.push(format!("(c,g)=({c},{g}): {new:?} vs {old:?}"));
            }
        }
    }
    Ok(failures)
}

fn trace_identity() -> Result<Vec<String>> {
    let s = sym_series(5, &Caps::default())?;
    let mut failures = Vec::new();
    for n in 0..=7 {
        for lambda in partitions_of(n) {
            let series = oracle::cycle_series(&lambda, 5);
            for (j, p) in s.iter().enumerate() {
                if p.evaluate(&lambda) != int(series[j]) {
                    failures.push(format!("S^({j}) at {lambda}"));
                }
            }
        }
    }
    Ok(failures)
}

fn coinvariant_match(c: &CharPoly, j: usize, n: usize, caps: &Caps) -> Result<bool> {
    let chi = coinv_character_univariate(j, n, caps)?;
    Ok(partitions_of(n).iter().all(|l| c.evaluate(l) == chi.value(l)))
}

fn coinvariant_sharpness() -> Result<Vec<String>> {
    let caps = Caps::default();
    let c = coinv_series(4, &caps)?;
    let mut failures = Vec::new();
    for (j, cj) in c.iter().enumerate().skip(2) {
        for n in j..=7 {
            if !coinvariant_match(cj, j, n, &caps)? {
                failures.push(format!("C^({j}) wrong at n = {n}"));
            }
        }
        let mut fails_below = false;
        for n in 0..j {
            fails_below |= !coinvariant_match(cj, j, n, &caps)?;
        }
        if !fails_below {
            failures.push(format!("C^({j}) also holds below n = {j}"));
        }
    }
    Ok(failures)
}

fn univariate_oracle() -> Result<Vec<String>> {
    let caps = Caps::default();
    let mut failures = Vec::new();
    for n in 0..=5usize {
        let dims: Vec<u64> = coinv_graded_dims(n, 1, n * n.saturating_sub(1) / 2, &caps)?
            .into_values()
            .collect();
        if dims != oracle::q_factorial(n) {
            failures.push(format!("n = {n}: {dims:?}"));
        }
        if dims.iter().sum::<u64>() != (1..=n as u64).product::<u64>() {
            failures.push(format!("n = {n}: total {}", dims.iter().sum::<u64>()));
        }
    }
    let diagonal: u64 = coinv_graded_dims(3, 2, 3, &caps)?.values().sum();
    if diagonal != 16 {
        failures.push(format!("diagonal n = 3: {diagonal}"));
    }
    Ok(failures)
}

fn orbit_stabilization() -> Result<Vec<String>> {
    let caps = Caps::default();
    let mut failures = Vec::new();
    for labels in 1..=2 {
        for j in MultiDegree::all_up_to(labels, 4) {
            let size = j.total();
            let at = |n| orbit_count(&j, n, &caps);
            let stable = at(size)?;
            for n in size..=size + 3 {
                if at(n)? != stable {
                    failures.push(format!("{j} changes at n = {n}"));
                }
            }
            if size >= 1 && at(size - 1)? >= stable {
                failures.push(format!("{j} not smaller at n = {}", size - 1));
            }
        }
    }
    Ok(failures)
}

fn witness_sharpness() -> Result<Vec<String>> {
    let caps = Caps::default();
    let mut witnesses: Vec<Witness> = (-1..=4).map(Witness::i).collect();
    witnesses.extend((0..=4).map(Witness::t));
    witnesses.extend((0..=4).map(Witness::s));
    witnesses.extend((1..=4).map(Witness::v));
    let mut failures = Vec::new();
    for w in &witnesses {
        let report = sharpness_check(w, &caps)?;
        for c in report.checks.iter().filter(|c| !c.passed) {
            failures.push(format!("{w} {}: {}", c.coordinate, c.detail));
        }
    }
    for g in 2..=4i64 {
        let v = Witness::v(g);
        let r = v.profile()?.stable_ranges;
        if r.hmax != 2 * g - 2 {
            failures.push(format!("V({g}) hmax {}", r.hmax));
        }
        let i = Witness::i(g).profile()?.stable_ranges;
        if i.m != 2 * g {
            failures.push(format!("I({g}) M {}", i.m));
        }
    }
    // V(g) has dimension binom(n,g) - binom(n,g-1); its polynomial is negative one below hmax + 1
    for g in 2..=4i64 {
        let n = 2 * g - 2;
        let poly = repstab::exact::binom(n, g) - repstab::exact::binom(n, g - 1);
        if poly >= 0 {
            failures.push(format!("V({g}) polynomial at {n} is {poly}"));
        }
    }
    Ok(failures)
}

fn hersh_reiner() -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for i in 1..=4 {
        for n in 0..=10 {
            if hersh_reiner_dim(i, n) != oracle::stirling_product(i, n) {
                failures.push(format!("i = {i}, n = {n}"));
            }
        }
    }
    for r in 0..=8 {
        for l in 0..=r {
            if derangement_count(r, l) != derangements_by_enumeration(r, l) {
                failures.push(format!("D({r},{l})"));
            }
        }
    }
    Ok(failures)
}

fn umbral_fixture() -> Result<Vec<String>> {
    let x = CharPoly::var;
    let one = CharPoly::one();
    let half = frac(1, 2);
    let shifted = &x(1) - &one;
    let input = &(&shifted * &shifted).scale(&half) + &(&x(2).scale(&int(2)) - &one).scale(&half);
    let x1m3 = &x(1) - &CharPoly::int(3);
    let want = &(&CharPoly::binomial(&x1m3, 2) + &x(2)) + &x1m3.scale(&int(2));
    let got = input.umbral_down();
    let mut failures = Vec::new();
    if got != want {
        failures.push(format!("{} != {}", got.render_monomial(), want.render_monomial()));
    }
    let check_at = Partition::new(vec![2, 1, 1, 1, 1])?;
    if got.evaluate(&check_at) != int(3) {
        failures.push(format!("value at {check_at}: {}", got.evaluate(&check_at)));
    }
    Ok(failures)
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, Check); 10] = [
        ("C^(4) reproduction", 1, c4_reproduction),
        ("tuple tables", 1, tuple_tables),
        ("dominance over literature tuples", 1, dominance),
        ("trace identity n <= 7, j <= 5", 10, trace_identity),
        ("coinvariant character range sharpness", 30, coinvariant_sharpness),
        ("univariate and diagonal coinvariant oracle", 60, univariate_oracle),
        ("orbit stabilization", 5, orbit_stabilization),
        ("witness sharpness", 30, witness_sharpness),
        ("Hersh-Reiner and Stirling", 10, hersh_reiner),
        ("umbral fixture", 1, umbral_fixture),
    ];
    let mut all_ok = true;
    for (k, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_budget = elapsed < Duration::from_secs(*budget);
        let (ok, note) = match outcome {
            Ok(f) if f.is_empty() && in_budget => (true, String::new()),
            Ok(f) if f.is_empty() => (false, format!(" over budget {budget}s")),
            Ok(f) => (false, format!(" {}", f.join("; "))),
            Err(e) => (false, format!(" error: {e}")),
        };
        all_ok &= ok;
        println!(
            "criterion {:>2}: {} {name} ({:.3}s){note}",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
