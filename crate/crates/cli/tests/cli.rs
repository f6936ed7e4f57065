//! End-to-end tests of the command-line surface: output shape, exit codes,
//! determinism and the JSON schema.

use std::process::{Command, Output};

fn unitensor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unitensor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn table_n3_matches_published_values() {
    let output = unitensor(&["table", "--n", "3", "--k", "3", "--g", "0"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 1 + 27, "header plus 27 rows");
    // Largest row first.
    assert!(rows[1].starts_with("3|3|3"));
    let affine_row = rows
        .iter()
        .find(|r| r.starts_with("1^3|1^3|1^3"))
        .expect("affine row present");
    assert!(affine_row.contains("t + 1"), "U column: {affine_row}");
    assert!(affine_row.contains("t + 6"), "A column: {affine_row}");
    assert!(
        affine_row.contains("imaginary"),
        "root column: {affine_row}"
    );
    let e6_row = rows
        .iter()
        .find(|r| r.starts_with("2,1|1^3|1^3"))
        .expect("real-root row present");
    assert!(e6_row.contains("real"));
}

#[test]
fn table_output_is_byte_stable() {
    let first = unitensor(&[
        "table", "--n", "2", "--k", "3", "--g", "1", "--format", "json",
    ]);
    let second = unitensor(&[
        "table", "--n", "2", "--k", "3", "--g", "1", "--format", "json",
    ]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn table_json_round_trips() {
    let output = unitensor(&[
        "table", "--n", "2", "--k", "3", "--g", "0", "--format", "json",
    ]);
    assert!(output.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid json");
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["k"], 3);
    let rows = doc["rows"].as_array().expect("rows array");
    assert_eq!(rows.len(), 8);
    let d4 = rows
        .iter()
        .find(|r| r["mu"] == "1^2|1^2|1^2")
        .expect("D4 row");
    assert_eq!(d4["v"]["coeffs"], serde_json::json!([1]));
    assert_eq!(d4["root_class"], "real");
    // Round trip: re-serialize and parse again.
    let reprinted = serde_json::to_string(&doc).unwrap();
    let doc2: serde_json::Value = serde_json::from_str(&reprinted).unwrap();
    assert_eq!(doc, doc2);
}

#[test]
fn table_single_row_and_csv() {
    let output = unitensor(&[
        "table",
        "--n",
        "3",
        "--k",
        "3",
        "--g",
        "0",
        "--mu",
        "1^3|1^3|1^3",
        "--format",
        "csv",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("mu,v,u,a,d,delta,root_class"));
    assert_eq!(
        lines.next(),
        Some("\"1^3|1^3|1^3\",0 1,1 1,6 1,2,0,imaginary")
    );
}

#[test]
fn feasibility_guard_requires_force() {
    let output = unitensor(&["table", "--n", "7", "--k", "3", "--g", "0"]);
    assert_eq!(output.status.code(), Some(2));
    let output = unitensor(&["table", "--n", "8", "--k", "3", "--g", "0", "--mu", "bogus"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn mu_argument_is_validated() {
    let output = unitensor(&[
        "table", "--n", "3", "--k", "3", "--g", "0", "--mu", "2,1|1^3",
    ]);
    assert_eq!(output.status.code(), Some(2));
    let output = unitensor(&[
        "table", "--n", "3", "--k", "2", "--g", "0", "--mu", "2,1|1^3",
    ]);
    assert!(output.status.success());
}

#[test]
fn check_known_and_unknown_suites() {
    let output = unitensor(&["check", "--suite", "prop321", "--max-n", "3"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("prop321: pass"));
    let output = unitensor(&["check", "--suite", "harcos", "--samples", "50"]);
    assert!(output.status.success());
    let output = unitensor(&["check", "--suite", "unknown"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn oracle_comparison_and_json_records() {
    let output = unitensor(&["oracle", "--n", "2", "--q", "2", "--g", "0"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("pass"));
    let output = unitensor(&["oracle", "--n", "2", "--q", "2", "--g", "0", "--json"]);
    assert!(output.status.success());
    let records: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid json");
    let rows = records.as_array().expect("record array");
    assert_eq!(rows.len(), 8);
    for row in rows {
        assert_eq!(row["n"], 2);
        assert_eq!(row["q"], 2);
        assert!(row["mu"].is_string());
        assert!(row["value"].is_string());
    }
    // Steinberg cube over F_2.
    let st = rows.iter().find(|r| r["mu"] == "1^2|1^2|1^2").unwrap();
    assert_eq!(st["value"], "1");
    let output = unitensor(&["oracle", "--n", "4", "--q", "2", "--g", "0"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn generic_oracle_flag() {
    let output = unitensor(&["oracle", "--n", "2", "--q", "3", "--g", "0", "--generic"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("oracle-generic"));
    let output = unitensor(&["oracle", "--n", "3", "--q", "3", "--g", "0", "--generic"]);
    assert_eq!(output.status.code(), Some(2));
}
