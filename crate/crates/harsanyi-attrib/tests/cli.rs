//! End-to-end tests of the `harsanyi` binary: exit codes, determinism, and
//! the JSON surface of each subcommand.

use std::path::Path;
use std::process::{Command, Output};

fn harsanyi<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_harsanyi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_small_table(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("pair.json");
    std::fs::write(
        &path,
        r#"{"n": 2, "values": [0.0, 1.0, 1.0, 3.0], "labels": ["a", "b"]}"#,
    )
    .unwrap();
    path
}

#[test]
fn interactions_report_has_schema_and_rows() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_small_table(dir.path());
    let out = harsanyi([
        "interactions",
        "--input",
        input.to_str().unwrap(),
        "--mode",
        "and-only",
    ]);
    let report = stdout_json(&out);
    assert_eq!(report["schema"], "harsanyi-attrib/1");
    assert_eq!(report["meta"]["n"], 2);
    let rows = report["interactions"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    // Sorted by combined magnitude: all three entries are 1 here; the
    // reconstruction error is reported and tiny.
    assert!(report["reconstruction_max_error"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn attribute_reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_small_table(dir.path());
    let args = [
        "attribute",
        "--input",
        input.to_str().unwrap(),
        "--mode",
        "learned",
        "--seed",
        "9",
    ];
    let first = harsanyi(args);
    let second = harsanyi(args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let report = stdout_json(&first);
    assert_eq!(report["shapley"][0]["label"], "a");
    let phi0 = report["shapley"][0]["value"].as_f64().unwrap();
    assert!((phi0 - 1.5).abs() <= 1e-12);
}

#[test]
fn synth_is_deterministic_and_loads_back() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = harsanyi([
            "synth",
            "--kind",
            "random",
            "--n",
            "6",
            "--seed",
            "42",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b);

    let out = harsanyi(["attribute", "--input", a.to_str().unwrap()]);
    let report = stdout_json(&out);
    assert_eq!(report["shapley"].as_array().unwrap().len(), 6);
}

#[test]
fn missing_input_exits_2() {
    let out = harsanyi(["attribute", "--input", "/nonexistent/table.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn malformed_json_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    std::fs::write(&path, "not json at all").unwrap();
    let out = harsanyi(["interactions", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn coalition_index_out_of_range_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_small_table(dir.path());
    let out = harsanyi([
        "coalition",
        "--input",
        input.to_str().unwrap(),
        "--coalition",
        "0,5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("5"), "stderr: {err}");
}

#[test]
fn coalition_conflict_triple_on_pair_game() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_small_table(dir.path());
    let out = harsanyi([
        "coalition",
        "--input",
        input.to_str().unwrap(),
        "--mode",
        "and-only",
        "--coalition",
        "0,1",
        "--coalition",
        "0",
    ]);
    let report = stdout_json(&out);
    let sections = report["coalitions"].as_array().unwrap();
    assert_eq!(sections.len(), 2);
    assert_eq!(sections[0]["varphi"].as_f64().unwrap(), 1.0);
    assert_eq!(sections[0]["shapley_sum"].as_f64().unwrap(), 3.0);
    assert_eq!(sections[0]["residual"].as_f64().unwrap(), 2.0);
    let eff = &sections[0]["efficiency"];
    assert!(eff["max_abs_error"].as_f64().unwrap() <= 1e-12);
    // Singleton section: varphi equals the Shapley value 1.5.
    assert_eq!(sections[1]["varphi"].as_f64().unwrap(), 1.5);
}

#[test]
fn verify_passes_on_small_table_and_exits_0() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("t.json");
    let out = harsanyi([
        "synth",
        "--kind",
        "planted-mixed",
        "--n",
        "5",
        "--and-plant",
        "3:1.0",
        "--or-plant",
        "24:0.5",
        "--output",
        table.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = harsanyi(["verify", "--input", table.to_str().unwrap()]);
    let report = stdout_json(&out);
    assert_eq!(report["pass"], serde_json::Value::Bool(true));
    let checks = report["identities"].as_array().unwrap();
    assert!(checks.len() >= 10);
    for check in checks {
        assert_eq!(check["pass"], serde_json::Value::Bool(true), "{check}");
    }
}

#[test]
fn verify_rejects_n_beyond_oracle_reach_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("big.json");
    let out = harsanyi([
        "synth",
        "--kind",
        "random",
        "--n",
        "13",
        "--output",
        table.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = harsanyi(["verify", "--input", table.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_table_with_header_and_explicit_n() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    std::fs::write(&path, "mask,value\n0,0.0\n1,1.0\n2,1.0\n3,3.0\n").unwrap();
    let out = harsanyi([
        "attribute",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "csv",
        "--n",
        "2",
    ]);
    let report = stdout_json(&out);
    let phi0 = report["shapley"][0]["value"].as_f64().unwrap();
    assert!((phi0 - 1.5).abs() <= 1e-12);
}

#[test]
fn env_cap_override_rejects_table() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("t.json");
    let out = harsanyi([
        "synth",
        "--kind",
        "random",
        "--n",
        "5",
        "--output",
        table.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_harsanyi"))
        .args(["attribute", "--input", table.to_str().unwrap()])
        .env("HARSANYI_N_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("4"), "stderr: {err}");
}

#[test]
fn diverged_optimizer_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("t.json");
    let out = harsanyi([
        "synth",
        "--kind",
        "random",
        "--n",
        "5",
        "--seed",
        "1",
        "--output",
        table.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = harsanyi([
        "attribute",
        "--input",
        table.to_str().unwrap(),
        "--mode",
        "learned",
        "--step0",
        "1e9",
        "--decay",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("diverged"));
}

#[test]
fn output_flag_writes_report_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_small_table(dir.path());
    let report_path = dir.path().join("report.json");
    let out = harsanyi([
        "interactions",
        "--input",
        input.to_str().unwrap(),
        "--output",
        report_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&report_path).unwrap();
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["schema"], "harsanyi-attrib/1");
}

#[test]
fn unknown_flag_exits_2() {
    let out = harsanyi(["attribute", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn linear_synth_needs_weights() {
    let out = harsanyi(["synth", "--kind", "linear", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("lin.json");
    let out = harsanyi([
        "synth",
        "--kind",
        "linear",
        "--n",
        "3",
        "--weights",
        "1,2,4",
        "--output",
        table.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    // A linear game attributes each variable exactly its own weight.
    let out = harsanyi(["attribute", "--input", table.to_str().unwrap()]);
    let report = stdout_json(&out);
    let phi: Vec<f64> = report["shapley"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row["value"].as_f64().unwrap())
        .collect();
    assert_eq!(phi, vec![1.0, 2.0, 4.0]);
}
