//! End-to-end runs of the compiled binary: JSON shapes, CSV shapes,
//! exit codes, and byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn eulerchi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerchi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("eulerchi-cli-{}-{name}", std::process::id()));
    path
}

#[test]
fn euler_table_matches_known_values() {
    let out = eulerchi(&["euler", "--max", "4"]);
    let rows = stdout_json(&out);
    let numbers: Vec<&str> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["number"].as_str().unwrap())
        .collect();
    assert_eq!(numbers, ["1", "-1/2", "0", "1/4", "0"]);
    assert_eq!(rows[2]["polynomial"], serde_json::json!(["0", "-1", "1"]));
}

#[test]
fn characters_of_three_include_the_quadratic_one() {
    let out = eulerchi(&["characters", "--modulus", "3"]);
    let rows = stdout_json(&out);
    assert_eq!(rows.as_array().unwrap().len(), 2);
    let quad = &rows[1];
    assert_eq!(quad["order"], 2);
    assert_eq!(quad["conductor"], 3);
    assert_eq!(quad["primitive"], true);
    let coeffs: Vec<&str> = quad["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["coeffs"][0].as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["0", "1", "-1"]);
}

#[test]
fn attached_table_matches_known_values() {
    let out = eulerchi(&["gen-euler", "--modulus", "3", "--char-index", "1", "--max", "2"]);
    let table = stdout_json(&out);
    let numbers: Vec<&str> = table["numbers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["coeffs"][0].as_str().unwrap())
        .collect();
    assert_eq!(numbers, ["-2", "0", "4"]);
    assert_eq!(table["character"]["modulus"], 3);
}

#[test]
fn power_sum_matches_known_value() {
    let out = eulerchi(&["power-sum", "--modulus", "3", "--char-index", "1", "--k", "2", "--n", "8"]);
    let value = stdout_json(&out);
    assert_eq!(value["value"]["coeffs"][0], "-154");
}

#[test]
fn fermionic_check_passes_and_reports_valuation() {
    let out = eulerchi(&[
        "fermionic", "--modulus", "3", "--char-index", "1", "--k", "1", "--p", "5", "--n", "1",
    ]);
    let report = stdout_json(&out);
    assert_eq!(report["partial_sum"]["coeffs"][0], "-15");
    assert_eq!(report["difference_valuation"], 1);
    assert_eq!(report["passed"], true);
}

#[test]
fn fermionic_check_fails_honestly_for_non_integral_shift() {
    let out = eulerchi(&[
        "fermionic", "--modulus", "3", "--char-index", "1", "--k", "2", "--p", "5", "--n", "2",
        "--x", "1/5",
    ]);
    assert_eq!(exit_code(&out), 1);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["doubled_sum_identity_passed"], true);
    assert_eq!(report["congruence_passed"], false);
}

#[test]
fn verify_small_grid_exits_zero() {
    let out = eulerchi(&[
        "verify", "--identity", "theorem1", "--modulus", "3", "--w1", "1", "3", "--w2", "1", "3",
        "--max-l", "4",
    ]);
    let reports = stdout_json(&out);
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 2 * 4 * 5);
    assert!(reports.iter().all(|r| r["passed"] == true));
}

#[test]
fn verify_covers_every_identity_tag() {
    for (identity, extra) in [
        ("recurrence", &["--count", "5"][..]),
        ("eq13", &["--modulus", "3", "--max-l", "4"][..]),
        ("theorem1", &["--modulus", "3", "--w1", "1", "--w2", "3", "--max-l", "3"][..]),
        ("theorem2", &["--modulus", "3", "--w1", "1", "--w2", "3", "--max-l", "3"][..]),
        ("tchi-all", &["--modulus", "3", "--w1", "1", "--w2", "3", "--max-l", "3"][..]),
    ] {
        let mut args = vec!["verify", "--identity", identity];
        args.extend_from_slice(extra);
        let out = eulerchi(&args);
        assert_eq!(exit_code(&out), 0, "identity {identity}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["characters", "--modulus", "6"][..],
        &["verify", "--identity", "nonsense"][..],
        &["gen-euler", "--modulus", "3", "--char-index", "7", "--max", "2"][..],
        &["verify", "--identity", "eq13", "--modulus", "3", "--shift", "2"][..],
        &["fermionic", "--modulus", "3", "--char-index", "1", "--k", "1", "--p", "3", "--n", "1"][..],
        &["fermionic", "--modulus", "3", "--char-index", "1", "--k", "1", "--p", "5", "--n", "1", "--x", "一"][..],
        &["euler", "--max"][..],
    ] {
        let out = eulerchi(args);
        assert_eq!(exit_code(&out), 2, "args {args:?}");
        assert!(!out.stderr.is_empty(), "args {args:?} should explain themselves");
    }
}

#[test]
fn output_file_is_byte_deterministic() {
    let first = temp_path("det-1.json");
    let second = temp_path("det-2.json");
    let grid = [
        "verify", "--identity", "tchi-all", "--modulus", "3", "5", "--w1", "1", "3", "--w2", "3",
        "--max-l", "4", "--output",
    ];
    for path in [&first, &second] {
        let mut args = grid.to_vec();
        let path = path.to_str().unwrap();
        args.push(path);
        let out = eulerchi(&args);
        assert_eq!(exit_code(&out), 0);
        assert!(out.stdout.is_empty(), "--output should silence stdout");
    }
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
    std::fs::remove_file(first).ok();
    std::fs::remove_file(second).ok();
}

#[test]
fn truncation_env_sets_default_depth() {
    let out = Command::new(env!("CARGO_BIN_EXE_eulerchi"))
        .args(["euler"])
        .env("EULERCHI_TRUNCATION", "3")
        .output()
        .expect("binary runs");
    let rows = stdout_json(&out);
    assert_eq!(rows.as_array().unwrap().len(), 4);
}

#[test]
fn csv_tables_have_stable_headers() {
    let out = eulerchi(&["euler", "--max", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n,number,polynomial\n"));
    assert_eq!(text.lines().count(), 4);

    let out = eulerchi(&["characters", "--modulus", "5", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("modulus,index,order,conductor,primitive,values\n"));
    assert!(text.contains("5,1,4,5,true,"));

    let out = eulerchi(&[
        "verify", "--identity", "eq13", "--modulus", "3", "--max-l", "2", "--format", "csv",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("identity,modulus,index,degree,w1,w2,shift,lhs,rhs,discrepancy,passed\n"));
    for line in text.lines().skip(1) {
        assert_eq!(line.split(',').count(), 11, "row {line}");
        assert!(line.ends_with(",true"));
    }
}
