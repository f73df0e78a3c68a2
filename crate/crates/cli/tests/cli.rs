use std::io::Write;
use std::process::{Command, Output, Stdio};

use ramseylab::graph::complete_multipartite;
use ramseylab::graph6::emit_graph6;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramseylab"))
        .args(args)
        .env_remove("RAMSEYLAB_BUDGET")
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ramseylab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("invalid JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn invariants_of_pentagon() {
    let out = run(&["invariants", "C5"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["chi"], 3);
    assert_eq!(v["s"], 1);
    assert_eq!(v["tau"], 1);
    assert_eq!(v["edge_critical"], true);
    assert!(v["critical_coloring"].is_object());
}

#[test]
fn invariants_from_stdin() {
    let k33 = emit_graph6(&complete_multipartite(&[3, 3]));
    let out = run_stdin(&["invariants"], &format!("{k33}\n"));
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["chi"], 2);
    assert_eq!(v["s"], 3);
    assert_eq!(v["edge_critical"], false);
    assert_eq!(code(&run_stdin(&["invariants"], "\n")), 1);
}

#[test]
fn input_errors_and_size_limits() {
    assert_eq!(code(&run(&["invariants", "not-a-graph!"])), 1);
    assert_eq!(code(&run(&["no-such-command"])), 1);
    assert_eq!(code(&run(&["invariants", "K40"])), 3);
    assert_eq!(code(&run(&["verify", "--red", "K3", "--blue", "K3", "--host", "K14"])), 3);
}

#[test]
fn ramsey_is_worker_independent() {
    let one = run(&["ramsey", "--red", "K3", "--blue", "K3", "--workers", "1"]);
    let many = run(&["ramsey", "--red", "K3", "--blue", "K3", "--workers", "8"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, many.stdout);
    let v = json(&one);
    assert_eq!(v["status"], "resolved");
    assert_eq!(v["value"], 6);
    assert_eq!(v["upper"]["evidence"]["kind"], "exhaustion");
    assert_eq!(v["lower"]["evidence"]["kind"], "counterexample");
}

#[test]
fn budget_exhaustion_exit_code() {
    let out = run(&["ramsey", "--red", "K3", "--blue", "fan:2,2", "--lo", "9", "--hi", "9", "--budget", "50"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["reason"]["kind"], "budget_exhausted");
    let out = Command::new(env!("CARGO_BIN_EXE_ramseylab"))
        .args(["verify", "--red", "K3", "--blue", "K3", "--host", "K6"])
        .env("RAMSEYLAB_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["status"], "budget_exhausted");
}

#[test]
fn star_ramsey_computes_r_first() {
    let out = run(&["star-ramsey", "--red", "K3", "--blue", "K3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["ramsey_number"], 6);
    assert_eq!(v["value"], 5);
}

#[test]
fn certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let out = run(&[
        "verify", "--red", "K3", "--blue", "fan:2,2", "--host", "K8", "--certificate", cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["arrows"], false);
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let coloring = dir.path().join("coloring.json");
    std::fs::write(&coloring, saved["evidence"]["coloring"].to_string()).unwrap();
    let out = run(&["verify", "--red", "K3", "--blue", "fan:2,2", "--coloring", coloring.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["neither"], true);
}

#[test]
fn constructions_verify_as_neither() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("star.json");
    let p = path.to_str().unwrap();
    let out = run(&["construct", "star-witness", "--k", "2", "--t", "2", "--n", "3", "-o", p]);
    assert_eq!(code(&out), 0);
    let out = run(&["verify", "--red", "C5", "--blue", "fan:3,2", "--coloring", p]);
    assert_eq!(json(&out)["neither"], true);
    let out = run(&["verify", "--red", "K3", "--blue", "fan:2,2", "--coloring", p]);
    assert_eq!(json(&out)["neither"], false);
    let out = run(&["construct", "burr", "--chi", "3", "--s", "1", "--h", "5"]);
    assert_eq!(json(&out)["host"]["n"], 8);
    assert_eq!(code(&run(&["construct", "burr", "--chi", "3"])), 1);
}

#[test]
fn predictions_carry_sources() {
    let v = json(&run(&["predict", "--k", "2", "--t", "2", "--n", "5"]));
    assert_eq!(v["predict_R"]["value"], 21);
    assert_eq!(v["predict_R"]["validity"], "asymptotic_only");
    assert_eq!(v["predict_rstar"]["value"], 12);
    assert_eq!(v["burr_lower"]["source"], "Burr");
    assert_eq!(v["hao_lin_lower"]["source"], "Hao-Lin");
    let v = json(&run(&["predict", "--tag", "h", "--k", "2", "--t", "2", "--n", "4"]));
    assert!(v["result"]["value"].is_null());
    assert_eq!(v["result"]["symbolic"], "(k-1+o(1))n");
    assert_eq!(code(&run(&["predict", "--tag", "q"])), 1);
}

#[test]
fn diagnose_star_witness() {
    let out = run(&["diagnose", "--k", "2", "--t", "2", "--n", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["report"]["all_pass"], true);
    assert_eq!(v["partition"]["metrics"]["deficiency"], 0);
    assert_eq!(v["config"]["seed"], 0);
}

#[test]
fn table_rows_and_markers() {
    let out = run(&["table", "--k", "2", "--t", "2", "--n", "1..2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["formula_R"], 5);
    assert_eq!(rows[0]["search_R"], 6);
    assert_eq!(rows[0]["note"], "asymptotic threshold not reached");
    assert_eq!(rows[1]["formula_R"], 9);
    assert_eq!(rows[1]["search_R"], 9);
    assert_eq!(rows[1]["search_rstar"], 6);
    assert_eq!(rows[1]["note"], "");
}

#[test]
fn table_budget_and_empty_ranges() {
    let v = json(&run(&["table", "--k", "3", "--t", "2", "--n", "2..4", "--budget", "1000"]));
    let rows = v["rows"].as_array().unwrap();
    let formulas: Vec<_> = rows.iter().map(|r| (r["formula_R"].clone(), r["formula_rstar"].clone())).collect();
    assert_eq!(formulas, [(13.into(), 10.into()), (19.into(), 14.into()), (25.into(), 18.into())]);
    assert!(rows.iter().all(|r| r["search_R"].as_str().unwrap().starts_with("unsolved")));
    let out = run(&["table", "--k", "3..2", "--t", "2", "--n", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["rows"], Value::Array(vec![]));
    let md = run(&["table", "--k", "3..2", "--t", "2", "--n", "1", "--md"]);
    assert_eq!(code(&md), 0);
    assert!(String::from_utf8_lossy(&md.stdout).contains("empty"));
}

#[test]
fn markdown_output() {
    let out = run(&["table", "--k", "2", "--t", "2", "--n", "1", "--md", "--no-search"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("| k | t | n |"));
    let out = run(&["invariants", "K3", "--md"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("| field | value |"));
}
