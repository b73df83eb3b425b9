//! End-to-end tests of the certificate runner binary: exit codes, output
//! shapes, byte stability, and the edge-list override.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heawood-cert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 output")
}

fn petersen_file() -> PathBuf {
    let mut lines = String::new();
    for i in 0..5u32 {
        lines.push_str(&format!("{} {}\n", i + 1, (i + 1) % 5 + 1)); // outer 5-cycle
        lines.push_str(&format!("{} {}\n", i + 1, i + 6)); // spokes
        lines.push_str(&format!("{} {}\n", i + 6, (i + 2) % 5 + 6)); // pentagram
    }
    let path = std::env::temp_dir().join(format!("petersen-{}.edges", std::process::id()));
    std::fs::write(&path, lines).expect("write temp file");
    path
}

#[test]
fn all_machine_report_verifies_and_is_byte_stable() {
    let first = run(&["all", "--format", "machine"]);
    assert!(first.status.success(), "exit code 0 expected");
    let second = run(&["all", "--format", "machine"]);
    assert_eq!(
        first.stdout, second.stdout,
        "machine output must be byte-identical"
    );

    let report: serde_json::Value = serde_json::from_str(&stdout(&first)).expect("valid JSON");
    assert_eq!(report["schema_version"], "1");
    assert!(report["graph_digest"]
        .as_str()
        .unwrap()
        .starts_with("sha256:"));
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 16);
    for check in checks {
        assert_eq!(check["status"], "VERIFIED", "check {} failed", check["id"]);
    }
    assert_eq!(report["axioms"].as_array().unwrap().len(), 6);
    let finals: Vec<&str> = report["final_groups"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(finals, vec!["trivial", "Z2", "Z3", "Z6", "Z7", "D3", "D7"]);
}

#[test]
fn classify_text_report_prints_the_final_list() {
    let output = run(&["classify"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("final groups: trivial, Z2, Z3, Z6, Z7, D3, D7"));
    assert!(text.contains("derivation:"));
}

#[test]
fn dump_cycles_counts_match_the_censuses() {
    for (length, expected) in [("6", 28usize), ("12", 56), ("14", 24)] {
        let output = run(&["dump", "cycles", "--length", length]);
        assert!(output.status.success());
        assert_eq!(stdout(&output).lines().count(), expected, "length {length}");
    }
}

#[test]
fn dump_cycles_rejects_out_of_range_lengths() {
    let output = run(&["dump", "cycles", "--length", "2"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn single_check_passes_with_exit_zero() {
    let output = run(&["check", "K1"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("VERIFIED"));
}

#[test]
fn unknown_check_id_is_a_usage_error() {
    let output = run(&["check", "K99"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let output = run(&["frobnicate"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn petersen_override_fails_k1_with_exit_one() {
    let path = petersen_file();
    let output = run(&["--graph", path.to_str().unwrap(), "check", "K1"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("FAILED"));

    let all = run(&[
        "--graph",
        path.to_str().unwrap(),
        "all",
        "--format",
        "machine",
    ]);
    assert_eq!(all.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&all)).expect("valid JSON");
    assert_eq!(report["checks"][0]["status"], "FAILED");
    assert_eq!(report["final_groups"], serde_json::Value::Null);
    let _ = std::fs::remove_file(path);
}

#[test]
fn graph_dump_round_trips_and_derived_labels_work() {
    let output = run(&["dump", "graph"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 21);
    assert!(text.starts_with("1 2\n"));

    let derived = run(&["dump", "graph", "--labeling", "derived12"]);
    assert!(derived.status.success());
    let derived_text = stdout(&derived);
    assert_eq!(derived_text.lines().count(), 21);
    assert!(derived_text.contains('v'));
    assert!(derived_text.contains('w'));
}

#[test]
fn group_dumps_have_expected_shapes() {
    let spectrum = run(&["dump", "group", "--spectrum"]);
    assert!(spectrum.status.success());
    let text = stdout(&spectrum);
    assert_eq!(text.lines().count(), 7);
    assert!(text.contains("order 1: 1"));
    assert!(text.contains("order 8: 84"));

    let conjugacy = run(&["dump", "group", "--conjugacy"]);
    assert!(conjugacy.status.success());
    assert_eq!(stdout(&conjugacy).lines().count(), 9);

    let subgroups = run(&["dump", "group", "--subgroups"]);
    assert!(subgroups.status.success());
    let text = stdout(&subgroups);
    assert!(text.contains("Z7⋊Z6 order 42: 8"));
    assert!(text.contains("PSL(2,7) order 168: 1"));

    let none = run(&["dump", "group"]);
    assert_eq!(none.status.code(), Some(2), "one table flag is required");
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join(format!("heawood-report-{}.json", std::process::id()));
    let output = run(&[
        "check",
        "K2",
        "--format",
        "machine",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    assert!(stdout(&output).is_empty());
    let written = std::fs::read_to_string(&path).expect("file written");
    let parsed: serde_json::Value = serde_json::from_str(&written).expect("valid JSON");
    assert_eq!(parsed["id"], "K2");
    let _ = std::fs::remove_file(path);
}

#[test]
fn bad_edge_list_file_is_a_usage_error() {
    let path = std::env::temp_dir().join(format!("bad-{}.edges", std::process::id()));
    std::fs::write(&path, "1 1\n").unwrap();
    let output = run(&["--graph", path.to_str().unwrap(), "check", "K1"]);
    assert_eq!(output.status.code(), Some(2));
    let missing = run(&["--graph", "/nonexistent/file.edges", "check", "K1"]);
    assert_eq!(missing.status.code(), Some(2));
    let _ = std::fs::remove_file(path);
}
