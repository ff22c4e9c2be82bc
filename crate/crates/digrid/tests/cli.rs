use std::process::{Command, Output};

fn digrid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_digrid")).args(args).env_remove("DIGRID_JOBS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn wiener_text_and_json() {
    let o = digrid(&["wiener", "--orient", "conj", "--m", "3", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("W = 516"));

    let o = digrid(&["wiener", "--orient", "comb", "--m", "4", "--n", "6", "--format", "json", "--transmissions"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["wiener"], "3702");
    assert_eq!(v["formula"], "3702");
    assert_eq!(v["formula_match"], true);
    assert_eq!(v["transmissions"].as_array().unwrap().len(), 24);
}

#[test]
fn ladder_and_snake() {
    let o = digrid(&["wiener", "--orient", "ladder", "--n", "6"]);
    assert!(stdout(&o).contains("W = 604"));
    let o = digrid(&["wiener", "--orient", "snake", "--m", "1", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("W = 20"));
}

#[test]
fn domain_errors_exit_one() {
    assert_eq!(digrid(&["wiener", "--orient", "comb", "--m", "3", "--n", "5"]).status.code(), Some(1));
    assert_eq!(digrid(&["wiener", "--orient", "conj", "--m", "0", "--n", "5"]).status.code(), Some(1));
    assert_eq!(digrid(&["table", "--m-range", "5..3", "--n-range", "4..6"]).status.code(), Some(1));
    let o = digrid(&["search", "--m", "3", "--n", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--big"));
}

#[test]
fn io_errors_exit_two() {
    let o = digrid(&["wiener", "--file", "/nonexistent/orientation.json"]);
    assert_eq!(o.status.code(), Some(2));
    let o = digrid(&["export", "--orient", "conj", "--m", "2", "--n", "2", "--dot", "/nonexistent/dir/x.dot"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table_formats() {
    let o = digrid(&["compare", "--m-range", "3..4", "--n-range", "4..6"]);
    let csv = stdout(&o);
    assert_eq!(csv.lines().count(), 7);
    assert!(csv.contains("4,6,3702,3370,332,617/2304,0.267795,formula,PASS,PASS"));

    let o = digrid(&["table", "--m-range", "3", "--n-range", "4..5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["w_comb"], "538");
    assert_eq!(rows[1]["w_comb"], serde_json::Value::Null);

    let o = digrid(&["table", "--m-range", "3", "--n-range", "4", "--format", "md"]);
    assert!(stdout(&o).starts_with("| m | n |"));
}

#[test]
fn search_and_witness_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w");
    let o = digrid(&["search", "--m", "2", "--n", "4", "--symmetry", "--jobs", "2", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["max_wiener"], "182");
    assert_eq!(v["proven_optimal"], true);
    let json = std::fs::read_to_string(out.join("witness_000.json")).unwrap();
    let w = digrid::format::parse_orientation(&json).unwrap();
    assert_eq!(digrid_core::wiener_index(&w.materialize()).get(), 182);
    assert!(out.join("witness_000.dot").exists());

    let o = digrid(&["search", "--m", "3", "--n", "3", "--local", "--seed", "5", "--restarts", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("lower bound"));
}

#[test]
fn export_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("c.json");
    let dot = dir.path().join("c.dot");
    let o = digrid(&["export", "--orient", "comb", "--m", "3", "--n", "4", "--json", json.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = digrid(&["wiener", "--file", json.to_str().unwrap()]);
    assert!(stdout(&o).contains("W = 538"));
    assert!(std::fs::read_to_string(dot).unwrap().starts_with("digraph"));

    let o = digrid(&["export", "--orient", "conj", "--m", "2", "--n", "2", "--bits"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bits"].as_str().unwrap().len(), 4);
}
