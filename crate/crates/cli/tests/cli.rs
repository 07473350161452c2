//! End-to-end checks of the `crossings` binary: subcommands, file formats,
//! and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crossings"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("crossings-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn formula_single_value() {
    let out = run(&["formula", "--family", "K122n", "--n", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "23 proved");
}

#[test]
fn formula_conjectured_warns() {
    let out = run(&["formula", "--family", "K24n", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "12 conjectured");
    assert!(String::from_utf8_lossy(&out.stderr).contains("conjectural"));
}

#[test]
fn formula_table_csv() {
    let out = run(&["formula", "--table", "--family", "K1111n", "--max-n", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,n,value,status"));
    let values: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(values, ["1", "2", "5", "8", "13", "18"]);
}

#[test]
fn construct_count_round_trip() {
    let json = tmp("k1111n4.json");
    let svg = tmp("k1111n4.svg");
    let out = run(&[
        "construct",
        "--family",
        "K1111n",
        "--n",
        "4",
        "--out",
        json.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let out = run(&["count", json.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "8");

    // Selector form: crossings between the Z stars and everything else.
    let out = run(&["count", json.to_str().unwrap(), "--between", "Z", "Z"]);
    assert_eq!(stdout(&out).trim(), "4"); // Z(4,4)

    assert!(std::fs::read_to_string(&svg).unwrap().contains("<svg"));
    std::fs::remove_file(&json).ok();
    std::fs::remove_file(&svg).ok();
}

#[test]
fn count_between_part_pair() {
    let json = tmp("k14n4.json");
    run(&[
        "construct",
        "--family",
        "K14n",
        "--n",
        "4",
        "--out",
        json.to_str().unwrap(),
    ]);
    let out = run(&["count", json.to_str().unwrap(), "--between", "XY", "Z"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "4"); // 2 * floor(4/2)
    std::fs::remove_file(&json).ok();
}

#[test]
fn malformed_drawing_exits_2() {
    let path = tmp("bad.json");
    std::fs::write(&path, "{\"format\": \"crossing-drawing/1\"").unwrap();
    let out = run(&["count", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();

    let out = run(&["count", "/nonexistent/definitely-missing.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_error_exits_2() {
    let out = run(&["construct", "--n", "3", "--out", "/tmp/x.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_small_graph() {
    let out = run(&["exact", "--graph", "1,1,1,1,1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("cr(K_{1,1,1,1,1}) = 1"));
}

#[test]
fn exact_budget_exhaustion_exits_3() {
    let out = run(&["exact", "--graph", "1,1,1,1,1", "--max-k", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("budget exhausted"));
}

#[test]
fn bipartite_construction() {
    let json = tmp("k44.json");
    let out = run(&[
        "construct",
        "--bipartite",
        "4,4",
        "--out",
        json.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&["count", json.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "4");
    std::fs::remove_file(&json).ok();
}

#[test]
fn census_report_file() {
    let path = tmp("census.json");
    let out = run(&["census", "--graph", "2,3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["format"], "crossing-census/1");
    assert_eq!(report["classes"].as_array().unwrap().len(), 6);
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_subset() {
    let report_path = tmp("verify.json");
    let out = run(&[
        "verify",
        "--family",
        "K13n",
        "--max-n",
        "3",
        "--solver-budget",
        "60s",
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "verify failed: {}", stdout(&out));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["format"], "crossing-report/1");
    assert_eq!(report["passed"], true);
    let names: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"construct/K13n"));
    assert!(names.contains(&"census/region-lemmas"));
    std::fs::remove_file(&report_path).ok();
}
