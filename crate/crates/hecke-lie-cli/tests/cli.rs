use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-lie"))
        .args(args)
        .env_remove("HECKE_LIE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    v["result"].clone()
}

fn text(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn group_info_g4() {
    let r = json(&["group", "info", "--builtin", "g4"]);
    assert_eq!(r["order"], 24);
    assert_eq!(r["classes"], 7);
    assert_eq!(r["reflections"], 8);
    assert_eq!(r["distinguished"], 4);
    assert_eq!(r["hyperplane_classes"][0]["e"], 3);
}

#[test]
fn group_info_imprimitive() {
    let r = json(&["group", "info", "--builtin", "g(3,3,3)"]);
    assert_eq!(r["order"], 54);
    assert_eq!(r["reflections"], 9);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["group", "info", "--file", "/nonexistent/group.json"]).status.code(), Some(1));
    assert_eq!(run(&["decompose", "--builtin", "g4", "--gens", "bogus"]).status.code(), Some(1));
    assert_eq!(run(&["decompose", "--builtin", "g4", "--gens", "hlambda", "--lambda", "1,x"]).status.code(), Some(1));
}

#[test]
fn decompose_hs_g4() {
    let r = json(&["decompose", "--builtin", "g4", "--gens", "hs"]);
    let dims: Vec<u64> = r["blocks"].as_array().unwrap().iter().map(|b| b["dim"].as_u64().unwrap()).collect();
    let mut sorted = dims.clone();
    sorted.sort();
    assert_eq!(sorted, [3, 3, 3, 8]);
    assert_eq!(r["derived_dim"], 17);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn decompose_hlambda_minus_one() {
    let r = json(&["decompose", "--builtin", "g4", "--gens", "hlambda", "--lambda", "1,-1"]);
    assert_eq!(r["derived_dim"], 6);
    assert_eq!(r["blocks"].as_array().unwrap().len(), 2);
}

#[test]
fn spetsial_generators_g25() {
    let r = json(&["decompose", "--builtin", "g25", "--gens", "hst"]);
    assert_eq!(r["derived_dim"], 589);
    let r = json(&["decompose", "--builtin", "g25", "--gens", "hs"]);
    assert_eq!(r["derived_dim"], 600);
}

#[test]
fn resource_caps_exit_two() {
    assert_eq!(run(&["--element-cap", "10", "group", "info", "--builtin", "g4"]).status.code(), Some(2));
}

#[test]
fn generic_report() {
    let r = json(&["generic", "--builtin", "g4", "--lambda", "1,1"]);
    assert_eq!(r["report"]["in_l1"], true);
    assert_eq!(r["report"]["generic"], false);
    let r = json(&["generic", "--builtin", "g4", "--lambda", "1,2"]);
    assert_eq!(r["report"]["generic"], true);
}

#[test]
fn adpoly_single() {
    let r = json(&["adpoly", "--n", "3", "--single"]);
    assert_eq!(r["outcome"], "polynomial");
    assert_eq!(r["verified"], true);
    let out = run(&["--format", "json", "adpoly", "--n", "4", "--single"]);
    assert_eq!(out.status.code(), Some(5));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["outcome"], "impossible");
}

#[test]
fn text_and_json_agree() {
    let r = json(&["decompose", "--builtin", "g4", "--gens", "h"]);
    let t = text(&["decompose", "--builtin", "g4", "--gens", "h"]);
    let head = format!("dim {}  center {}  derived {}", r["dim"], r["center_dim"], r["derived_dim"]);
    assert!(t.contains(&head), "{head:?} not in\n{t}");
}

#[test]
fn cache_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--cache-dir", d, "--format", "json", "classify", "--builtin", "g4", "--set", "all"];
    let cold = run(&args);
    assert!(cold.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let warm = run(&args);
    assert_eq!(cold.stdout, warm.stdout);
    let fresh = run(&["--no-cache", "--format", "json", "classify", "--builtin", "g4", "--set", "all"]);
    assert_eq!(cold.stdout, fresh.stdout);
}
