use std::process::{Command, Output};

use repstab::{CharPoly, LiteratureRanges, StableRanges};
use serde_json::Value;

fn repstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repstab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = repstab(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn ranges_cg_json_is_exact() {
    assert_eq!(
        stdout(&["ranges", "cg", "--c", "2", "--g", "3", "--format", "json"]).trim(),
        r#"{"t0":5,"t1":6,"A":5,"hmax":2,"delta":3,"M":6}"#
    );
    let r: StableRanges = serde_json::from_value(json(&["ranges", "cg", "--c", "-1", "--g", "2"])).unwrap();
    assert_eq!(r.as_array(), [2, -1, 3, -1, 2, 4]);
}

#[test]
fn ranges_table_is_aligned() {
    let out = stdout(&["config", "ranges", "--d", "4", "--u", "2", "--k", "3"]);
    assert_eq!(out, "t0  t1  A  hmax  delta  M\n 4   5  3     2      2  4\n");
}

#[test]
fn other_tuples() {
    let get = |args: &[&str]| -> [i64; 6] { serde_json::from_value::<StableRanges>(json(args)).unwrap().as_array() };
    assert_eq!(
        get(&["ranges", "hyper", "--theta-k", "1", "--theta-k1", "3"]),
        [2, 5, 5, 4, 1, 5]
    );
    assert_eq!(
        get(&["ranges", "hyper-chain", "--theta", "0,2,4", "--k", "1"]),
        [4, 5, 7, 6, 2, 7]
    );
    assert_eq!(get(&["ranges", "coinv", "--total-degree", "4"]), [8, 9, 7, 6, 4, 8]);
    assert_eq!(
        get(&["ranges", "congruence", "--s", "2", "--k", "2"]),
        [9, 10, 13, 12, 4, 13]
    );
    assert_eq!(
        get(&[
            "config",
            "ranges",
            "--d",
            "2",
            "--u",
            "0",
            "--k",
            "1",
            "--plane-exception"
        ]),
        [2, 3, 1, 0, 1, 2]
    );
}

#[test]
fn literature_m_may_be_undetermined() {
    let lit: LiteratureRanges =
        serde_json::from_value(json(&["ranges", "literature", "--kind", "cg", "--c", "2", "--g", "3"])).unwrap();
    assert_eq!(lit.determined(), [6, 9, 17, 2, 3]);
    assert_eq!(lit.m, None);
    let out = stdout(&[
        "ranges",
        "literature",
        "--kind",
        "congruence",
        "--s",
        "1",
        "--k",
        "1",
        "--char",
        "0",
    ]);
    assert!(out.ends_with(" 2   4  7     5      2  9\n"), "{out}");
}

#[test]
fn charpoly_commands() {
    assert_eq!(stdout(&["charpoly", "coinv", "--j", "0"]), "binomial: 1\nmonomial: 1\n");
    let c4 = json(&["charpoly", "coinv", "--j", "4"]);
    assert_eq!(
        c4["binomial"],
        "X4 + X3*X1 + binom(X2,2) + X2*binom(X1,2) + binom(X1,4) - X3 + 2*binom(X1,3) - X1"
    );
    let terms: CharPoly = serde_json::from_value(c4["terms"].clone()).unwrap();
    let poly = serde_json::to_string(&terms).unwrap();
    assert_eq!(
        stdout(&["charpoly", "eval", "--poly", &poly, "--lambda", "1,1,1,1"]),
        "5\n"
    );
    assert_eq!(
        stdout(&["charpoly", "eval", "--series", "sym", "--j", "2", "--lambda", "1,1,1"]),
        "6\n"
    );
    assert_eq!(
        stdout(&["charpoly", "eval", "--series", "coinv", "--j", "2", "--lambda", "2,1"]),
        "0\n"
    );
    let umbral = json(&["charpoly", "umbral", "--poly", r#"[{"exponents":[2],"coeff":"1"}]"#]);
    assert_eq!(umbral["monomial"], "X1^2 - X1");
    let def = json(&["charpoly", "defpoly", "--family", "I", "--param", "2", "--up-to", "2"]);
    assert_eq!(def["binomial"], "X2 + binom(X1,2)");
}

#[test]
fn witness_report() {
    let report = json(&["witness", "--family", "V", "--param", "2", "--max-n", "8"]);
    assert_eq!(report["sharpness"]["passed"], true);
    assert_eq!(report["t_formula"], "t_i = i+4");
    assert_eq!(report["profile"]["regularity"], 4);
    let r: StableRanges = serde_json::from_value(report["profile"]["stable_ranges"].clone()).unwrap();
    assert_eq!(r.as_array(), [4, 5, 3, 2, 2, 4]);
    assert_eq!(report["dims"][4], 2);
    let sum = json(&["witness", "--family", "si", "--param", "3", "--g", "1"]);
    assert_eq!(sum["sharpness"]["passed"], true);
}

#[test]
fn coinv_commands() {
    assert_eq!(stdout(&["coinv", "orbits", "--j", "2,1", "--n", "4"]), "4\n");
    let dims = json(&["coinv", "dims", "--n", "3", "--vars", "2", "--max-total", "4"]);
    assert_eq!(dims["total"], 16);
    assert_eq!(dims["dims"][0]["multidegree"], serde_json::json!([0, 0]));
    let ch = json(&["coinv", "char", "--j", "2", "--n", "4"]);
    assert_eq!(ch["decomposition"].as_array().unwrap().len(), 2);
}

#[test]
fn config_scalars() {
    assert_eq!(stdout(&["config", "delta", "--d", "5", "--u", "0", "--k", "7"]), "7\n");
    assert_eq!(stdout(&["config", "derangements", "--r", "4", "--l", "2"]), "3\n");
    assert_eq!(stdout(&["config", "hersh-reiner", "--i", "2", "--n", "4"]), "11\n");
    assert_eq!(json(&["config", "sphere", "--n", "6"])["dim"], 9);
}

#[test]
fn verify_passes() {
    let out = stdout(&["verify", "--max-n", "5"]);
    assert!(out.ends_with("all suites passed\n"), "{out}");
    let report = json(&["verify", "--max-n", "4"]);
    let names: Vec<&str> = report["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn domain_errors_exit_one_with_json() {
    let out = repstab(&["config", "delta", "--d", "4", "--u", "2", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "LowDegreeRegime");
    let out = repstab(&["ranges", "coinv", "--total-degree", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let out = repstab(&["charpoly", "sym", "--j", "20"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "SeriesCapExceeded");
    assert_eq!(String::from_utf8(out.stderr).unwrap().lines().count(), 1);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["ranges", "cg", "--c", "2"][..],
        &["ranges", "cg", "--c", "2", "--g", "3", "--bogus"],
        &["charpoly", "eval", "--lambda", "1"],
        &["coinv", "orbits", "--j", "x", "--n", "3"],
        &["witness", "--family", "q", "--param", "1"],
    ] {
        let out = repstab(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "coinv",
        "dims",
        "--n",
        "3",
        "--vars",
        "2",
        "--max-total",
        "3",
        "--format",
        "json",
    ];
    assert_eq!(repstab(&args).stdout, repstab(&args).stdout);
    let v = ["verify", "--max-n", "4"];
    assert_eq!(repstab(&v).stdout, repstab(&v).stdout);
}
