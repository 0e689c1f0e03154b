use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfree"))
        .args(args)
        .env_remove("QFREE_SEED")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = qfree(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    });
    (out.status.code().unwrap(), v)
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap_or_else(|| panic!("not a number: {v}"))
}

fn write_tmp(name: &str, contents: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn verify_lemma31_passes() {
    let (code, v) = report(&["verify-lemma31", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert_eq!(v["command"], "verify-lemma31");
    assert_eq!(v["metrics"]["rewritten_display_mismatches"], 2);
    assert!(num(&v["metrics"]["wall_time_ms"]) >= 0.0);
    let (code, v) = report(&["verify-lemma31", "--n", "3", "--kind", "orth"]);
    assert_eq!(code, 0);
    assert_eq!(v["metrics"]["df2_exact"], true);
}

#[test]
fn char_moments_include_catalan() {
    let (code, v) = report(&["char-moments", "--max-k", "12"]);
    assert_eq!(code, 0);
    assert_eq!(v["metrics"]["moment_12"], 132);
    assert_eq!(v["metrics"]["moment_11"], 0);
    assert_eq!(v["records"].as_array().unwrap().len(), 13);
}

#[test]
fn semicircle_entropy() {
    let (code, v) = report(&["entropy", "--semicircle", "1"]);
    assert_eq!(code, 0);
    assert!((num(&v["metrics"]["chi"]) - 1.41894).abs() < 1e-3);
    assert_eq!(num(&v["params"]["tol"]), 2e-3);
}

#[test]
fn entropy_of_atoms_is_minus_infinity() {
    let p = write_tmp("atoms.csv", "0,0.5\n1,0.5\n");
    let (code, v) = report(&["entropy", "--measure", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["metrics"]["chi"], "-Infinity");
}

#[test]
fn fkl_from_file() {
    let p = write_tmp("zero_e.csv", &format!("0,0.5\n{},0.5\n", std::f64::consts::E));
    let (code, v) = report(&["fkl", "--measure", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!((num(&v["metrics"]["fkl_det"]) - std::f64::consts::E.sqrt()).abs() < 1e-12);
}

#[test]
fn classical_point_is_deterministic() {
    let args = ["classical-point", "--n", "2", "--samples", "5", "--seed", "11"];
    let strip = |mut v: Value| {
        v["metrics"].as_object_mut().unwrap().remove("wall_time_ms");
        serde_json::to_string(&v).unwrap()
    };
    let (code, a) = report(&args);
    assert_eq!(code, 0);
    assert!(num(&a["metrics"]["max_residual"]) <= 1e-10);
    let (_, b) = report(&args);
    assert_eq!(strip(a.clone()), strip(b));

    let env = Command::new(env!("CARGO_BIN_EXE_qfree"))
        .args(["classical-point", "--n", "2", "--samples", "5"])
        .env("QFREE_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(strip(a), strip(serde_json::from_slice(&env.stdout).unwrap()));
}

#[test]
fn failing_check_exits_one() {
    let (code, v) = report(&[
        "classical-point", "--n", "2", "--samples", "3", "--seed", "1", "--tol", "1e-300",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["pass"], false);
    assert!(!v["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn cayley_checks() {
    for group in ["Z3", "Z4", "S3", "D4", "S4"] {
        for check in ["pentagon", "theta", "baaj-skandalis"] {
            let (code, v) = report(&["cayley", "--group", group, "--check", check]);
            assert_eq!((code, &v["pass"]), (0, &Value::Bool(true)), "{group} {check}");
        }
    }
    let (_, v) = report(&["cayley", "--group", "S3", "--check", "baaj-skandalis"]);
    assert_eq!(v["metrics"]["with_v_in_place_of_v_tilde_holds"], false);
    let (_, v) = report(&["cayley", "--group", "Z3", "--check", "theta", "--gen-set", "1,2"]);
    assert_eq!(v["metrics"]["edges"], 6);
}

#[test]
fn d2_bound() {
    let (code, v) = report(&["d2-bound", "--n", "4", "--eps", "0.5"]);
    assert_eq!(code, 0);
    assert_eq!(v["metrics"]["norm_sq"], 16);
    assert!((num(&v["metrics"]["exact"]) - 2.0).abs() < 1e-15);
    assert!((num(&v["metrics"]["bound"]) - 4.0).abs() < 1e-15);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify-lemma31", "--n", "2", "--frobnicate"],
        vec!["verify-lemma31", "--n", "0"],
        vec!["cayley", "--group", "Q8", "--check", "theta"],
        vec!["cayley", "--group", "Z3", "--check", "theta", "--gen-set", "1"],
        vec!["entropy", "--semicircle", "1", "--measure", "x.csv"],
        vec!["fkl", "--measure", "/nonexistent/file.csv"],
        vec!["d2-bound", "--n", "2", "--eps", "-1"],
        vec!["char-moments", "--max-k", "1000"],
        vec!["classical-point", "--n", "2", "--tol=-1"],
    ] {
        let out = qfree(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = qfree(&["--frobnicate"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn bad_csv_reports_line() {
    let p = write_tmp("bad.csv", "1.0,0.5\nx,0.5\n");
    let out = qfree(&["fkl", "--measure", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains('2'));
}
