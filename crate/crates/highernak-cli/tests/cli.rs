//! End-to-end smoke tests for the binary.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_highernak"))
        .args(args)
        .env_remove("HIGHERNAK_PRIME")
        .output()
        .expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    (code, String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn gldim_report() {
    let (code, out) = run(&["gldim", "--kind", "A", "--d", "2", "--kupisch", "1,2,2,3,3,4,3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["gldim"], 6);
    assert_eq!(v["prime"], 101);
}

#[test]
fn triangulation_count() {
    let (code, out) = run(&["polytope", "triangulations", "--p", "6", "--d", "1", "--count"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["count"], 14);
}

#[test]
fn prime_flag_is_reported() {
    let (code, out) = run(&["--prime", "3", "gldim", "--kind", "A", "--d", "1", "--kupisch", "1,2,2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["prime"], 3);
}

#[test]
fn usage_error_exits_2() {
    let out = Command::new(env!("CARGO_BIN_EXE_highernak"))
        .arg("no-such-command")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn engine_error_exits_1() {
    // inadmissible Kupisch series
    let (code, _) = run(&["gldim", "--kind", "A", "--d", "1", "--kupisch", "2,2"]);
    assert_eq!(code, 1);
}

#[test]
fn dot_export() {
    let (code, out) = run(&["algebra", "--kind", "Atilde", "--d", "2", "--kupisch", "3", "--dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
}

#[test]
fn ct_verify_small() {
    let (code, out) = run(&["ct-verify", "--kind", "Atilde", "--d", "2", "--kupisch", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["verified"], true);
    assert_eq!(v["report"]["members"], 6);
}

#[test]
fn flip_pentagon() {
    let (code, out) = run(&[
        "polytope", "flip", "--p", "5", "--d", "1",
        "--triangulation", "0,2;0,3;0,4", "--simplex", "0,2",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let simplices = v["report"]["simplices"].as_array().unwrap();
    assert_eq!(simplices.len(), 3);
    assert!(simplices.contains(&serde_json::json!([1, 3])));
}

#[test]
fn flip_rejects_invalid_triangulation() {
    let (code, _) = run(&[
        "polytope", "flip", "--p", "5", "--d", "1",
        "--triangulation", "0,2;0,3", "--simplex", "0,2",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn cluster_model_pentagon() {
    let (code, out) = run(&["cluster-model", "--n", "2", "--d", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["objects"].as_array().unwrap().len(), 5);
    assert_eq!(v["report"]["mutation_edges"].as_array().unwrap().len(), 5);
}
