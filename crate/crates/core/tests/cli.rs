//! End-to-end runs of the command-line binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein-coulomb")).args(args).output().expect("binary runs")
}

#[test]
fn unknown_suite_is_a_config_error() {
    let out = run(&["--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn out_of_range_options_are_config_errors() {
    assert_eq!(run(&["--gamma-range", "0"]).status.code(), Some(2));
    assert_eq!(run(&["--basis-depth", "3"]).status.code(), Some(2));
    assert_eq!(run(&["--mode", "fuzzy"]).status.code(), Some(2));
}

#[test]
fn random_mode_reports_are_byte_identical() {
    let args = ["--suite", "daha-a1", "--mode", "random", "--seed", "42", "--report", "json"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn json_report_has_the_documented_shape() {
    let out = run(&["--suite", "skein-s03", "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["version", "config", "suites", "total_millis", "pass"] {
        assert!(v.get(key).is_some(), "missing {}", key);
    }
    let suite = &v["suites"][0];
    assert_eq!(suite["name"], "skein-s03");
    let check = &suite["checks"][0];
    for key in ["desc", "pass", "tier", "residual_text", "millis"] {
        assert!(check.get(key).is_some(), "missing {}", key);
    }
    assert_eq!(v["pass"], true);
}

#[test]
fn exit_status_follows_verdicts() {
    // the printed A1 quartic fails; the corrected reading passes
    assert_eq!(run(&["--suite", "daha-a1"]).status.code(), Some(1));
    assert_eq!(run(&["--suite", "daha-a1", "--variant", "corrected"]).status.code(), Some(0));
    assert_eq!(run(&["--suite", "monopole-jordan"]).status.code(), Some(0));
}

#[test]
fn text_report_carries_the_json_verdicts() {
    let json = run(&["--suite", "theorem-s11", "--report", "json", "--gamma-range", "2"]);
    let text = run(&["--suite", "theorem-s11", "--report", "text", "--gamma-range", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let text = String::from_utf8(text.stdout).unwrap();
    let checks = v["suites"][0]["checks"].as_array().unwrap();
    let lines: Vec<_> = text.lines().filter(|l| l.starts_with("  PASS") || l.starts_with("  FAIL")).collect();
    assert_eq!(lines.len(), checks.len());
    for (c, l) in checks.iter().zip(lines) {
        assert_eq!(l.starts_with("  PASS"), c["pass"].as_bool().unwrap());
        assert!(l.ends_with(c["desc"].as_str().unwrap()));
    }
}

#[test]
fn report_can_be_written_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = run(&["--suite", "skein-s03", "--report", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["config"]["mode"], "symbolic");
}
