use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn kspectra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kspectra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--out", "json"]);
    let out = kspectra(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn edge_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn path_has_no_two_core() {
    let f = edge_file("0 1\n1 2\n");
    let v = json(&["core", "--k", "2", "--input", path_str(f.path())]);
    let r = &v["result"];
    assert_eq!(r["core_exists"], false);
    assert_eq!(r["core_size"], 0);
    assert_eq!(r["message"], "No k-core exists");
    assert_eq!(r["wave_sizes"], serde_json::json!([2, 1]));
}

#[test]
fn core_csv_lists_every_vertex() {
    let f = edge_file("1 2\n2 3\n3 1\n3 4\n");
    let out = kspectra(&["core", "--k", "2", "--input", path_str(f.path()), "--out", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "vertex,in_core,wave\n1,1,\n2,1,\n3,1,\n4,0,0\n");
}

#[test]
fn complete_graph_on_boundary() {
    let f = edge_file("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let v = json(&["spectral", "--k", "3", "--input", path_str(f.path())]);
    let r = &v["result"];
    assert!((r["rho"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(r["core_exists"], true);
    let scores: Vec<f64> = r["vector"].as_object().unwrap().values().map(|s| s.as_f64().unwrap()).collect();
    assert_eq!(scores.len(), 4);
    assert!(scores.iter().all(|&s| (s - 0.5).abs() < 1e-12));
}

#[test]
fn karate_degree_vs_kec2_rank_correlation() {
    let v = json(&["compare", "--k", "2", "--input", "karate"]);
    let pairs = v["result"]["pairs"].as_array().unwrap();
    let dc_kec = pairs
        .iter()
        .find(|p| p["a"] == "dc" && p["b"] == "kec2")
        .expect("dc/kec2 pair");
    assert!((dc_kec["r_s"].as_f64().unwrap() - 0.7583).abs() < 1e-3);
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["centrality", "--k", "2", "--dataset", "karate", "--out", "json"];
    let a = kspectra(&args);
    let b = kspectra(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cycles_report_totals() {
    let v = json(&["cycles", "--dataset", "karate", "--max-len", "3"]);
    assert_eq!(v["result"]["totals"]["c3"], 45);
}

#[test]
fn unknown_dataset_exits_with_input_status() {
    let out = kspectra(&["core", "--k", "2", "--dataset", "no-such-graph"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown dataset"));
}

#[test]
fn malformed_file_reports_line() {
    let f = edge_file("0 1\n1 x\n");
    let out = kspectra(&["core", "--k", "2", "--input", path_str(f.path())]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn missing_file_exits_with_input_status() {
    let out = kspectra(&["core", "--k", "2", "--input", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn zero_k_is_a_usage_error() {
    let out = kspectra(&["core", "--k", "0", "--dataset", "karate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dropped_edges_are_warned() {
    let f = edge_file("0 1\n1 0\n1 1\n1 2\n");
    let v = json(&["core", "--k", "1", "--input", path_str(f.path())]);
    assert_eq!(v["graph"]["dropped_self_loops"], 1);
    assert_eq!(v["graph"]["dropped_duplicates"], 1);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);

    let out = kspectra(&["core", "--k", "1", "--input", path_str(f.path()), "--out", "csv"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("# warning: dropped 1 self-loop"));
}

#[test]
fn non_convergence_is_warned() {
    let v = json(&["spectral", "--k", "2", "--dataset", "karate", "--max-iters", "2"]);
    assert_eq!(v["result"]["converged"], false);
    let warnings = v["warnings"].as_array().unwrap();
    assert!(warnings.iter().any(|w| w.as_str().unwrap().contains("without converging")));
}

#[test]
fn self_check_passes() {
    let out = kspectra(&["self-check", "--graphs", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
}

#[test]
fn compare_csv_is_a_symmetric_matrix() {
    let out = kspectra(&["compare", "--k", "2", "--dataset", "karate", "--measures", "dc,kec", "--out", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0], ["measure", "dc", "kec2"]);
    assert_eq!(rows[1][1], "1");
    assert_eq!(rows[1][2], rows[2][1]);
    assert!((rows[1][2].parse::<f64>().unwrap() - 0.7583).abs() < 1e-3);
}
