use std::process::Command;

use serde_json::Value;
use wmin_cli::run;

fn args(a: &[&str]) -> Vec<String> {
    a.iter().map(|s| s.to_string()).collect()
}

fn results(a: &[&str]) -> Value {
    let r = run(&args(a));
    assert_eq!(r.exit_code, 0, "{:?}", r.checks);
    r.to_json()["results"].clone()
}

#[test]
fn info_g3() {
    let v = results(&["info", "G(3)"]);
    assert_eq!(v["h_dual"], "-3/2");
    assert_eq!(v["z"], serde_json::json!([["-4/3", "-1"]]));
}

#[test]
fn classify_psl() {
    let v = results(&["classify", "psl(2|2)", "--level", "-2"]);
    assert_eq!(v["verdict"], "UnitaryNontrivial");
    assert_eq!(v["c"], "6");
}

#[test]
fn verify_d21a_subset() {
    let r = run(&args(&["verify", "D(2,1;a=1)", "--checks", "k14,jacobi"]));
    assert_eq!(r.exit_code, 0);
    assert!(r.checks.iter().any(|c| c.name == "k14/alignment"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&args(&["classify", "G(3)", "--level", "0.5"])).exit_code, 2);
    assert_eq!(run(&args(&["info", "sl(3|2)"])).exit_code, 2);
    assert_eq!(run(&args(&["frobnicate"])).exit_code, 2);
    assert_eq!(run(&args(&["verify", "G(3)", "--checks", "nonsense"])).exit_code, 1);
    assert_eq!(run(&args(&["central-charge", "psl(2|2)", "--level", "0"])).exit_code, 1);
    assert_eq!(run(&args(&["partner-level", "D(2,1;a=2)", "--level", "1"])).exit_code, 1);
}

#[test]
fn json_is_deterministic_and_sorted() {
    let a = run(&args(&["collapsing", "sl(2|4)", "--json"])).render();
    let b = run(&args(&["collapsing", "sl(2|4)", "--json"])).render();
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(a.find("\"checks\"").unwrap() < a.find("\"results\"").unwrap());
}

#[test]
fn series_and_unitary() {
    assert_eq!(results(&["series", "--n", "0", "--p", "2"])["c"], "0");
    assert_eq!(results(&["series", "--n", "0", "--p", "3"])["c"], "1/2");
    let v = results(&["unitary", "G(3)", "--count", "3"]);
    let ks: Vec<&str> = v["levels"].as_array().unwrap().iter().map(|x| x["k"].as_str().unwrap()).collect();
    assert_eq!(ks, ["-3/2", "-9/4", "-3"]);
    assert_eq!(results(&["unitary", "osp(4|6)"])["empty"], true);
}

#[test]
fn dump_algebra_writes_json() {
    let path = std::env::temp_dir().join(format!("wmin-dump-{}.json", std::process::id()));
    let r = run(&args(&["info", "spo(2|3)", "--dump-algebra", path.to_str().unwrap()]));
    assert_eq!(r.exit_code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 12);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_wmin");
    let ok = Command::new(bin).args(["info", "F(4)", "--json"]).output().unwrap();
    assert!(ok.status.success());
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["results"]["h_dual"], "-2");
    let bad = Command::new(bin).args(["classify", "F(4)"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert!(help.status.success());
}
