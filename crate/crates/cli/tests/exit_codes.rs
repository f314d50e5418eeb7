use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn modulus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modulus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON object")
}

fn write_matrix(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn list_prints_catalog() {
    let out = modulus(&["--list"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("C-NEGCROSS"));
    assert!(text.contains("CE-4"));

    let out = modulus(&["--list", "--format", "json"]);
    assert_eq!(json(&out)["catalog"].as_array().unwrap().len(), 34);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["--format", "yaml"][..],
        &["--trials", "0"],
        &["--claims", "NOT-A-CLAIM"],
        &["--no-such-flag"],
    ] {
        let out = modulus(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn default_claims_pass() {
    let out = modulus(&["--dims", "2,3", "--trials", "20", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["claims"].as_array().unwrap().len(), 34);
    assert_eq!(v["config"]["trials"], 20);
    assert!(v["version"].is_string());
}

#[test]
fn registry_only_run_reports_five_entries() {
    let out = modulus(&["--claims", "registry", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let claims = v["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 5);
    for c in claims {
        assert_eq!(c["registry"]["matched"], true, "{}", c["id"]);
        assert_eq!(c["registry"]["result"]["verdict"], "VIOLATION");
    }
}

#[test]
fn violations_exit_1_and_replay() {
    // A tolerance below rounding error turns equalities into violations.
    let base = [
        "--claims",
        "C-PRODSA",
        "--dims",
        "2",
        "--tol-rel",
        "1e-20",
        "--tol-abs",
        "1e-300",
    ];
    let mut args = base.to_vec();
    args.extend(["--trials", "20", "--format", "json"]);
    let out = modulus(&args);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["verdict"], "fail");
    let violations = v["claims"][0]["violations"].as_array().unwrap();
    assert!(!violations.is_empty());

    for violation in violations {
        let token = violation["replay"].as_str().unwrap();
        let mut again = base.to_vec();
        again.extend(["--seed", token, "--trials", "1", "--format", "json"]);
        let out = modulus(&again);
        assert_eq!(code(&out), 1);
        let replayed = &json(&out)["claims"][0]["violations"][0];
        assert_eq!(replayed["residuals"], violation["residuals"]);
        assert_eq!(replayed["seed"], violation["seed"]);
    }
}

#[test]
fn user_matrices_failing_hypothesis_exit_0() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_matrix(
        dir.path(),
        "a.json",
        r#"{"dim":2,"entries":[[-1,0],[1,0],[1,0],[-1,0]]}"#,
    );
    let b = write_matrix(
        dir.path(),
        "b.json",
        r#"{"dim":2,"entries":[[2,0],[0,0],[0,0],[0,0]]}"#,
    );
    let out = modulus(&[
        "--claims",
        "C-TRI",
        "--matrix-file",
        &a,
        &b,
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["instance"]["result"]["verdict"], "HYPOTHESIS_FAIL");
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn user_matrices_satisfying_claim_exit_0() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_matrix(
        dir.path(),
        "a.json",
        r#"{"dim":2,"entries":[[1,1],[0,0],[0,0],[2,0]]}"#,
    );
    let b = write_matrix(
        dir.path(),
        "b.json",
        r#"{"dim":2,"entries":[[-3,0],[0,0],[0,0],[0,1]]}"#,
    );
    let out = modulus(&["--claims", "C-TRI", "--matrix-file", &a, &b]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("result Pass"));
}

#[test]
fn bad_matrix_files_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_matrix(dir.path(), "bad.json", r#"{"dim":2,"entries":[[1,0]]}"#);
    let ok = write_matrix(
        dir.path(),
        "ok.json",
        r#"{"dim":2,"entries":[[1,0],[0,0],[0,0],[1,0]]}"#,
    );
    let three = write_matrix(
        dir.path(),
        "three.json",
        r#"{"dim":3,"entries":[[1,0],[0,0],[0,0],[0,0],[1,0],[0,0],[0,0],[0,0],[1,0]]}"#,
    );
    let missing = dir.path().join("missing.json");
    for args in [
        vec!["--claims", "C-TRI", "--matrix-file", &bad, &ok],
        vec!["--claims", "C-TRI", "--matrix-file", &ok, &three],
        vec![
            "--claims",
            "C-TRI",
            "--matrix-file",
            &ok,
            missing.to_str().unwrap(),
        ],
        vec!["--claims", "C-TRI", "--matrix-file", &ok],
    ] {
        assert_eq!(code(&modulus(&args)), 2, "{args:?}");
    }
}

#[test]
fn probe_reports_exceptions() {
    let out = modulus(&[
        "--probe",
        "--claims",
        "C-TRI,C-SUMNORM",
        "--dims",
        "2",
        "--trials",
        "200",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let probe = &v["probes"][0];
    assert_eq!(probe["dim"], 2);
    assert!(probe["claims"][0]["violations"].as_u64().unwrap() > 0);
}
