use std::process::{Command, Output};

use serde_json::Value;

fn uindep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uindep"))
        .args(args)
        .env_remove("UINDEP_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = uindep(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_7_3() {
    let r = json(&["analyze", "--knot", "7_3"]);
    assert_eq!(r["u"], 2);
    assert_eq!(r["minimal_unknotting_sets"].as_array().unwrap().len(), 18);
    for key in ["n", "independent_profile", "maximal_profile", "exchange", "matroid", "chromatic", "witnesses", "oracle_note"] {
        assert!(r.get(key).is_some(), "{key}");
    }
}

#[test]
fn analyze_trefoil_word() {
    let r = json(&["analyze", "--conway", "3"]);
    assert_eq!(r["u"], 1);
    assert_eq!(r["matroid"], true);
}

#[test]
fn analyze_empty_pd_is_unknot() {
    let r = json(&["analyze", "--pd", ""]);
    assert_eq!(r["u"], 0);
    assert_eq!(r["chromatic"], Value::Null);
}

#[test]
fn pd_from_file() {
    let path = std::env::temp_dir().join(format!("uindep-cli-{}.pd", std::process::id()));
    std::fs::write(&path, "# left trefoil\nX[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n").unwrap();
    let r = json(&["analyze", "--pd", &format!("@{}", path.display())]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(r["n"], 3);
    assert_eq!(r["exchange"], true);
}

#[test]
fn json_is_deterministic_across_workers() {
    let a = uindep(&["analyze", "--knot", "7_6", "--format", "json", "--workers", "1"]);
    let b = uindep(&["analyze", "--knot", "7_6", "--format", "json", "--workers", "3"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(env!("CARGO_BIN_EXE_uindep"))
        .args(["analyze", "--knot", "7_6", "--format", "json"])
        .env("UINDEP_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn table1_matches() {
    let out = uindep(&["table1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row = |k: &str| text.lines().find(|l| l.starts_with(k)).unwrap().split_whitespace().nth(3).unwrap().to_string();
    assert_eq!(row("3_1 "), "yes");
    assert_eq!(row("5_2 "), "no");
    assert_eq!(row("8_6 "), "no");
    assert!(text.contains("all values match"));
    // Progress goes to stderr only.
    assert!(!text.contains("[1/20]"));
    assert!(String::from_utf8(out.stderr).unwrap().contains("[1/20] 3_1"));
}

#[test]
fn iso_verdicts() {
    assert_eq!(json(&["iso", "6_1", "6_3"])["isomorphic"], true);
    assert_eq!(json(&["iso", "6_1", "6_2"])["isomorphic"], false);
    let r = json(&["iso", "6_1", "--conway", "4,2"]);
    assert_eq!(r["isomorphic"], true);
    assert_eq!(r["bijection"].as_array().unwrap().len(), 6);
}

#[test]
fn family_verdicts() {
    let r = json(&["family", "torus-odd", "--n", "3"]);
    assert_eq!(r["proposition"]["report"]["u"], 3);
    assert_eq!(r["proposition"]["report"]["matroid"], true);
    assert_eq!(r["lemma"]["holds"], true);
    assert_eq!(json(&["family", "twist-pair", "--n", "2"])["proposition"]["report"]["matroid"], false);
    assert_eq!(json(&["family", "twist-pair", "--n", "1"])["proposition"]["report"]["matroid"], true);
}

#[test]
fn chromatic_command() {
    let r = json(&["chromatic", "--knot", "7_2"]);
    assert_eq!(r["chromatic"], 4);
    assert_eq!(r["fewer_parts_infeasible"], true);
    assert_eq!(r["partition"].as_array().unwrap().len(), 4);
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("uindep-cli-out-{}.json", std::process::id()));
    let out = uindep(&["analyze", "--knot", "3_1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["u"], 1);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| uindep(args).status.code().unwrap();
    assert_eq!(code(&["analyze", "--pd", "X[1,2,3]"]), 2);
    assert_eq!(code(&["analyze", "--pd", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]"]), 2);
    assert_eq!(code(&["analyze", "--conway", "2,2,2"]), 2);
    assert_eq!(code(&["analyze", "--knot", "9_99"]), 4);
    assert_eq!(code(&["analyze", "--knot", "10_8", "--cap", "9"]), 3);
    assert_eq!(code(&["analyze", "--knot", "3_1", "--cap", "20"]), 3);
    assert_eq!(code(&["family", "bridge-triple", "--n", "3"]), 3);
    assert_eq!(code(&["analyze", "--knot", "3_1", "--conway", "3"]), 2);
    assert_eq!(code(&["iso", "6_1"]), 2);
}
