use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn gspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gspec")).args(args).env_remove("GSPEC_BUDGET").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = gspec(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("gspec-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn reports_carry_the_format_tag() {
    for args in [
        &["info", "builtin:S3/S3"][..],
        &["spec", "builtin:A5xA5/diag"],
        &["radical", "builtin:A5xZ2/A5"],
        &["topology", "builtin:S5/A5"],
        &["dimension", "builtin:A5xA5/first"],
        &["zero-divisors", "builtin:D4/1"],
        &["galois", "builtin:S3/1"],
        &["homs", "builtin:S3/1", "builtin:Z2/1"],
    ] {
        let v = json(args);
        assert_eq!(v["format"], "gspec-report-v1", "{args:?}");
        assert_eq!(v["command"], args[0], "{args:?}");
    }
}

#[test]
fn solve_counts_involutions() {
    let v = json(&["solve", "builtin:S5/A5", "--system", "X1^2 = 1;"]);
    let n = v["solutions"]["count"].as_u64().unwrap();
    // identity plus the ten transpositions and fifteen double transpositions
    assert_eq!(n, 26);
    let path = scratch("sys.txt", "X1^2 = 1;\nX1^4 = 1;\n");
    let v = json(&["solve", "builtin:S3/1", "--system", path.to_str().unwrap(), "--noetherian"]);
    assert_eq!(v["solutions"]["count"], 4);
    assert_eq!(v["noetherian"]["kept"], serde_json::json!([0]));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn input_errors_exit_2() {
    let bad = scratch("bad.json", "{ \"format\": ");
    let cases: Vec<Vec<&str>> = vec![
        vec!["info", "builtin:NOPE"],
        vec!["info", "/definitely/not/here.json"],
        vec!["info", bad.to_str().unwrap()],
        vec!["solve", "builtin:S3/S3", "--system", "X1^ = 1;"],
        vec!["--dot", "info", "builtin:S3/S3"],
        vec!["verify", "--props", "9.9"],
        vec!["frobnicate"],
        vec![],
    ];
    for args in cases {
        let out = gspec(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    std::fs::remove_file(bad).unwrap();
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["--json", "topology", "builtin:A5xA5/diag"];
    let one = Command::new(env!("CARGO_BIN_EXE_gspec")).args(args).env("GSPEC_THREADS", "1").output().unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_gspec")).args(args).env("GSPEC_THREADS", "4").output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, gspec(&args).stdout);
}

#[test]
fn dot_output() {
    let out = gspec(&["--dot", "spec", "builtin:A5xA5/diag"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("digraph"));
}

#[test]
fn description_files_load() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let v = json(&["info", dir.join("a4_over_v4.json").to_str().unwrap()]);
    assert_eq!(v["ambient_order"], 12);
    assert_eq!(v["g_order"], 4);
}

#[test]
fn verify_subset() {
    let out = gspec(&["--json", "verify", "--props", "2.1,4.2,7.2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["2.1", "4.2", "7.2"]);
    assert_eq!(v["disputed"].as_array().unwrap().len(), 1);
}
