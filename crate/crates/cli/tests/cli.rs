// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use girthpath::io::{digest, parse_edge_list, parse_json};
use serde_json::Value;
use tempfile::TempDir;

fn girthpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girthpath"))
        .args(args)
        .env("SOURCE_DATE_EPOCH", "1700000000")
        .env_remove("GIRTHPATH_LIMITS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

const TRIANGLE: &str = "3 3\n0 1\n1 2\n2 0\n";

#[test]
fn counterexample_prints_girth_and_both_path_values() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("d.el");
    let out = girthpath(&[
        "generate",
        "counterexample",
        "--delta",
        "2",
        "--g",
        "4",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("girth=4 ell=5 exact_ell=6 "));
    let d = parse_edge_list(&fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(d.vertex_count(), 9);
}

#[test]
fn smallest_counterexample_is_a_digon() {
    let out = girthpath(&[
        "generate",
        "counterexample",
        "--delta",
        "1",
        "--a",
        "1",
        "--b",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2 2\n0 1\n1 0\n");
}

#[test]
fn counterexample_needs_girth_or_both_lengths() {
    assert_eq!(
        code(&girthpath(&[
            "generate",
            "counterexample",
            "--delta",
            "1",
            "--a",
            "1"
        ])),
        2
    );
    assert_eq!(
        code(&girthpath(&[
            "generate",
            "counterexample",
            "--delta",
            "0",
            "--g",
            "4"
        ])),
        2
    );
}

#[test]
fn random_cd_regular_is_valid_and_seeded() {
    let args = [
        "generate",
        "random",
        "--kind",
        "cd_regular",
        "--n",
        "400",
        "--d",
        "100",
        "--C",
        "2",
        "--seed",
        "7",
    ];
    let first = girthpath(&args);
    assert_eq!(code(&first), 0);
    let d = parse_edge_list(&stdout(&first)).unwrap();
    let profile = d.degree_profile().unwrap();
    assert_eq!((profile.min_out, profile.max_out), (100, 100));
    assert!(profile.max_in <= 200);
    assert_eq!(stdout(&girthpath(&args)), stdout(&first));
}

#[test]
fn analyze_triangle() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "tri.el", TRIANGLE);
    let out = girthpath(&["analyze", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["ell"], 2);
    assert_eq!(report["path_bounds"]["girth"], 3);
    assert_eq!(report["violations"].as_array().unwrap().len(), 0);
    let bounds = report["path_bounds"]["bounds"].as_array().unwrap();
    assert!(bounds.iter().all(|b| b["status"] != "violated"));
    let manifest = &report["manifest"];
    assert_eq!(manifest["command"], "analyze");
    assert_eq!(manifest["timestamp"], "2023-11-14T22:13:20Z");
    assert_eq!(
        manifest["instance_digest"],
        digest(&parse_edge_list(TRIANGLE).unwrap())
    );
}

#[test]
fn analyze_lift_instance() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("d23.el");
    let gen = girthpath(&[
        "generate",
        "counterexample",
        "--delta",
        "2",
        "--a",
        "2",
        "--b",
        "3",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(code(&gen), 0);
    let out = girthpath(&["analyze", file.to_str().unwrap()]);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["path_bounds"]["girth"], 5);
    // Derived by the exact solvers: 9, above the closed form 7.
    assert_eq!(report["ell"], 9);
}

#[test]
fn analyze_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "tri.el", TRIANGLE);
    let a = girthpath(&["analyze", file.to_str().unwrap()]);
    let b = girthpath(&["analyze", file.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "bad.el", "3 1\n0 0\n");
    assert_eq!(code(&girthpath(&["analyze", file.to_str().unwrap()])), 2);
    let file = write(dir.path(), "junk.el", "not a graph\n");
    assert_eq!(code(&girthpath(&["analyze", file.to_str().unwrap()])), 2);
    assert_eq!(code(&girthpath(&["analyze", "/nonexistent/file.el"])), 2);
}

#[test]
fn scale_limit_exits_3_unless_skipped() {
    let dir = TempDir::new().unwrap();
    let arcs: Vec<String> = (0..8).map(|v| format!("{v} {}", (v + 1) % 8)).collect();
    let file = write(dir.path(), "c8.el", &format!("8 8\n{}\n", arcs.join("\n")));
    let path = file.to_str().unwrap();
    assert_eq!(
        code(&girthpath(&["--limits", "dp=4,bb=4", "analyze", path])),
        3
    );
    let skipped = girthpath(&["--limits", "dp=4,bb=4", "analyze", path, "--skip-exact"]);
    assert_eq!(code(&skipped), 0);
    let report: Value = serde_json::from_str(&stdout(&skipped)).unwrap();
    assert!(report["ell"].is_null());
    assert_eq!(
        code(&girthpath(&["--limits", "dp=nope", "analyze", path])),
        2
    );
}

#[test]
fn limits_are_read_from_the_environment() {
    let dir = TempDir::new().unwrap();
    let arcs: Vec<String> = (0..8).map(|v| format!("{v} {}", (v + 1) % 8)).collect();
    let file = write(dir.path(), "c8.el", &format!("8 8\n{}\n", arcs.join("\n")));
    let out = Command::new(env!("CARGO_BIN_EXE_girthpath"))
        .args(["analyze", file.to_str().unwrap()])
        .env("GIRTHPATH_LIMITS", "dp=4,bb=4,budget=1000")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
}

#[test]
fn export_round_trips_through_json() {
    let dir = TempDir::new().unwrap();
    let text = "# comment\n4 4\n2 3\n0 1\n1 2\n3 0\n";
    let file = write(dir.path(), "g.el", text);
    let json = girthpath(&["export", file.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&json), 0);
    let json_text = stdout(&json);
    let value: Value = serde_json::from_str(&json_text).unwrap();
    assert_eq!(value["manifest"]["command"], "export");
    assert_eq!(
        parse_json(&json_text).unwrap(),
        parse_edge_list(text).unwrap()
    );
    let json_file = write(dir.path(), "g.json", &json_text);
    let back = girthpath(&[
        "export",
        json_file.to_str().unwrap(),
        "--format",
        "edgelist",
    ]);
    let canonical = girthpath(&["export", file.to_str().unwrap(), "--format", "edgelist"]);
    assert_eq!(stdout(&back), "4 4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(back.stdout, canonical.stdout);
}

#[test]
fn export_dot_and_csv() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "tri.el", TRIANGLE);
    let dot = stdout(&girthpath(&[
        "export",
        file.to_str().unwrap(),
        "--format",
        "dot",
    ]));
    assert_eq!(dot.matches("->").count(), 3);
    let csv = stdout(&girthpath(&[
        "export",
        file.to_str().unwrap(),
        "--format",
        "csv",
    ]));
    assert_eq!(csv, "tail,head\n0,1\n1,2\n2,0\n");
    assert_eq!(
        code(&girthpath(&[
            "export",
            file.to_str().unwrap(),
            "--format",
            "yaml"
        ])),
        2
    );
}

#[test]
fn verify_closure_writes_one_row_per_order() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("closure.csv");
    let out = girthpath(&["verify", "closure", "--csv", csv.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("closure: PASS"));
    let mut reader = csv::Reader::from_path(&csv).unwrap();
    let header = reader.headers().unwrap().clone();
    assert_eq!(&header[0], "instance_id");
    assert_eq!(&header[1], "status");
    assert_eq!(reader.records().count(), 4);
}

#[test]
fn verify_random_suite_csv_has_one_row_per_instance() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("oriented.csv");
    let json = dir.path().join("oriented.json");
    let out = girthpath(&[
        "verify",
        "oriented-bound",
        "--instances",
        "25",
        "--seed",
        "3",
        "--csv",
        csv.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(csv::Reader::from_path(&csv).unwrap().records().count(), 25);
    let report: Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(report["manifest"]["seed"], 3);
    assert_eq!(report["rows"].as_array().unwrap().len(), 25);
}

#[test]
fn verify_partition_from_flags_and_config() {
    let out = girthpath(&[
        "verify",
        "partition",
        "--d",
        "64",
        "--multiplier",
        "4",
        "--C",
        "2",
        "--seed",
        "7",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let dir = TempDir::new().unwrap();
    let config = write(
        dir.path(),
        "lll.json",
        r#"{"C": 2, "d": 64, "c_prime": 0.1625, "seed": 7, "max_resample_rounds": 100000}"#,
    );
    let csv = dir.path().join("p.csv");
    let out = girthpath(&[
        "verify",
        "partition",
        "--multiplier",
        "4",
        "--config",
        config.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = fs::read_to_string(csv).unwrap();
    assert!(text.contains("cd-d64-n256"));
    let bad = write(dir.path(), "bad.json", r#"{"colour": 1}"#);
    assert_eq!(
        code(&girthpath(&[
            "verify",
            "partition",
            "--config",
            bad.to_str().unwrap()
        ])),
        2
    );
}

#[test]
fn verify_reports_failing_suite_with_exit_1() {
    let out = girthpath(&["verify", "lift-family"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("probe girth_matches: 15/15"));
}

#[test]
fn unknown_suite_exits_2() {
    assert_eq!(code(&girthpath(&["verify", "everything"])), 2);
}
