use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn stablerep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stablerep")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

fn report(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn classify_round_trips_a_spec_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "spec.json", r#"{"n":2,"lambda":[1,1],"alpha":[0.5,0.5],"beta":[]}"#);
    let r = report(&stablerep(&["classify", &spec]));
    let inv = &r["result"]["invariant"];
    assert_eq!(inv["n"], 2);
    assert_eq!(inv["lambda"], serde_json::json!([1, 1]));
    let alpha: Vec<f64> = serde_json::from_value(inv["alpha"].clone()).unwrap();
    assert_eq!(alpha.len(), 2);
    assert!(alpha.iter().all(|a| (a - 0.5).abs() < 1e-6));
    assert_eq!(inv["beta"], serde_json::json!([]));
}

#[test]
fn psd_check_and_dual_norm() {
    let dir = tempfile::tempdir().unwrap();
    let delta = write(dir.path(), "delta.json", r#"{"level":4,"values":[{"perm":[],"value":1}]}"#);
    let r = report(&stablerep(&["psd-check", &delta]));
    assert_eq!(r["result"]["positive_definite"], true);
    assert_eq!(r["result"]["min_eigenvalue"], 1.0);
    assert!(r["irrep_sha256"]["4"].is_string());

    let chi = write(
        dir.path(),
        "chi.json",
        r#"{"level":3,"values":[{"perm":[],"value":1},{"perm":[[1,2,3]],"value":-0.5},{"perm":[[1,3,2]],"value":[-0.5,0]}]}"#,
    );
    let r = report(&stablerep(&["dual-norm", &chi]));
    assert!((r["result"]["dual_norm"].as_f64().unwrap() - 1.0).abs() < 1e-9);

    let bad = write(dir.path(), "bad.json", r#"{"level":2,"values":[{"perm":[],"value":1},{"perm":[[1,2]],"value":1.5}]}"#);
    let out = stablerep(&["psd-check", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["result"]["positive_definite"], false);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.json", "{\"level\": 3,\n \"values\": [}");
    let out = stablerep(&["dual-norm", &broken]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let invalid = write(dir.path(), "invalid.json", r#"{"alpha":[0.7],"beta":[0.6]}"#);
    assert_eq!(stablerep(&["char-thoma", &invalid]).status.code(), Some(2));

    let delta = write(dir.path(), "delta.json", r#"{"level":2,"values":[{"perm":[],"value":1}]}"#);
    assert_eq!(stablerep(&["dual-norm", &delta, "--level", "9"]).status.code(), Some(3));
    assert_eq!(stablerep(&["dual-norm", &delta, "--level", "3"]).status.code(), Some(3));
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let values = write(dir.path(), "values.json", r#"{"2":0.39,"3":0.22499999999999998,"4":0.1311,"5":0.07808999999999998,"6":0.04671899999999999}"#);
    let args = ["recover-params", values.as_str(), "--support-bounds", "2,1", "--seed", "7"];
    let first = stablerep(&args);
    let second = stablerep(&args);
    let r = report(&first);
    assert_eq!(first.stdout, second.stdout);
    let alpha: Vec<f64> = serde_json::from_value(r["result"]["alpha"].clone()).unwrap();
    assert!((alpha[0] - 0.6).abs() < 1e-6 && (alpha[1] - 0.2).abs() < 1e-6);

    let spec = write(dir.path(), "spec.json", r#"{"n":1,"lambda":[1],"alpha":[0.5],"beta":[0.2]}"#);
    let csv_args = ["stability-profile", spec.as_str(), "--level", "4", "--max-m", "3", "--format", "csv"];
    let a = stablerep(&csv_args);
    let b = stablerep(&csv_args);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,defect,witness");
    assert!(lines[1].starts_with("0,") && !lines[1].starts_with("0,0,"));
    assert!(lines[2].starts_with("1,0,") && lines[4].starts_with("3,0,"));
}

#[test]
fn cache_hash_matches_in_memory_tables() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let delta = write(dir.path(), "delta.json", r#"{"level":4,"values":[{"perm":[],"value":1}]}"#);
    let cached = report(&stablerep(&["dual-norm", &delta, "--cache-dir", cache.to_str().unwrap()]));
    let reloaded = report(&stablerep(&["dual-norm", &delta, "--cache-dir", cache.to_str().unwrap()]));
    let plain = report(&stablerep(&["dual-norm", &delta]));
    assert_eq!(cached["irrep_sha256"], plain["irrep_sha256"]);
    assert_eq!(cached, reloaded);
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 5);
}

#[test]
fn remaining_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "spec.json", r#"{"n":2,"lambda":[1,1],"alpha":[0.5],"beta":[0.25]}"#);
    let other = write(dir.path(), "other.json", r#"{"n":2,"lambda":[2],"alpha":[0.5],"beta":[0.25]}"#);
    let thoma = write(dir.path(), "thoma.json", r#"{"alpha":[0.5],"beta":[0.25]}"#);

    let r = report(&stablerep(&["eval-state", &spec, "--perm", "[[1,2]]"]));
    assert_eq!(r["result"]["value"], -1.0);

    let r = report(&stablerep(&["char-finite", "--lambda", "[2,1]", "--cycle-type", "[3]"]));
    assert_eq!(r["result"]["value"], -1);

    let r = report(&stablerep(&["char-thoma", &thoma, "--cycle-type", "[2]"]));
    assert_eq!(r["result"]["value"], 0.1875);

    let r = report(&stablerep(&["asymptotic-char", &spec, "--perm", "[[1,2]]"]));
    assert_eq!(r["result"]["asymptotic"]["value"], 0.1875);
    assert_eq!(r["result"]["asymptotic"]["stabilized_at"], 2);

    let r = report(&stablerep(&["quasi-equivalent", &spec, &spec]));
    assert_eq!(r["result"]["quasi_equivalent"], true);
    let r = report(&stablerep(&["quasi-equivalent", &spec, &other]));
    assert_eq!(r["result"]["quasi_equivalent"], false);

    let r = report(&stablerep(&["centrality-defect", &spec, "--depth", "2", "--level", "5"]));
    assert_eq!(r["result"]["defect"], 0.0);

    let r = report(&stablerep(&["gns-verify", &spec, "--level", "3"]));
    assert_eq!(r["result"]["biregular_pairs_checked"], 1296);

    let r = report(&stablerep(&["induce-char", "--lambda", "[1]", "--mu", "[1]"]));
    assert_eq!(r["result"]["induced"]["values"], serde_json::json!([2, 0]));
}
