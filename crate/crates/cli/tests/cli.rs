use std::path::PathBuf;
use std::process::{Command, Output};

fn tlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tlab")).args(args).env_remove("TLAB_BUDGET").output().expect("run tlab")
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn s(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

fn stdout_json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn planar_round() {
    let f = tmp("cap5.json");
    assert_eq!(tlab(&["gen", "cap2", "--n", "5", "--seed", "1", "--out", s(&f)]).status.code(), Some(0));
    let check = tlab(&["check", s(&f)]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(stdout_json(&check)["shadow_class"], "Strict2");
    let r = tlab(&["realize", s(&f), "--target", "5"]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(stdout_json(&r)["set_ids"].as_array().unwrap().len(), 5);
    let svg = tmp("cap5.svg");
    assert_eq!(tlab(&["render", s(&f), "--svg", s(&svg), "--realize"]).status.code(), Some(0));
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn spatial_round() {
    let f = tmp("boxes.json");
    assert_eq!(tlab(&["gen", "strict2-3d", "--n", "6", "--seed", "2", "--out", s(&f)]).status.code(), Some(0));
    let rep = tmp("boxes-report.json");
    let p = tlab(&["pipeline", s(&f), "--report", s(&rep)]);
    assert_eq!(p.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    assert!(v["fraction"].is_string() && v["stage"].is_string());
    let stab = tlab(&["stab", s(&f), "--plane", "0,0,1,-1/2"]);
    assert_eq!(stab.status.code(), Some(0));
    assert!(stdout_json(&stab)["count"].as_u64().is_some());
    let svg = tmp("boxes.svg");
    assert_eq!(tlab(&["render", s(&f), "--svg", s(&svg)]).status.code(), Some(0));
}

#[test]
fn separate_monotone_lines() {
    let f = tmp("mono.json");
    assert_eq!(tlab(&["gen", "monotone3", "--n", "10", "--out", s(&f)]).status.code(), Some(0));
    let o = tlab(&["separate", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["count"], 29);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(tlab(&["verify", "vertical_hull_equiv", "--trials", "5", "--seed", "7"]).status.code(), Some(0));
    assert_eq!(tlab(&["verify", "no_such_suite"]).status.code(), Some(2));
    let dir = tmp("ce");
    std::fs::create_dir_all(&dir).unwrap();
    let o = tlab(&["verify", "paraboloid", "--trials", "1", "--out-dir", s(&dir)]);
    assert_eq!(o.status.code(), Some(1));
    let written = stdout_json(&o)["failures"][0]["instance"].as_str().unwrap().to_string();
    assert_eq!(tlab(&["check", &written]).status.code(), Some(0));
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(tlab(&["check", "/nonexistent/instance.json"]).status.code(), Some(2));
    let f = tmp("garbage.json");
    std::fs::write(&f, "{\"dim\": 4, \"sets\": []}").unwrap();
    assert_eq!(tlab(&["check", s(&f)]).status.code(), Some(2));
    assert_eq!(tlab(&["gen", "cap2", "--n", "4", "--fatness", "x"]).status.code(), Some(2));
}
