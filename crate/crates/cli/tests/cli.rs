use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn g31() -> Command {
    Command::new(env!("CARGO_BIN_EXE_g31"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("g31-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn read_json(path: &PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn list_checks_covers_registry() {
    let out = g31().arg("list-checks").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for id in [
        "orders",
        "theorem-main",
        "scindage-f",
        "centre-derive-h",
        "remark-w6plus-vs-cw6prime",
    ] {
        assert!(text.lines().any(|l| l.starts_with(id)), "{id} missing");
    }
    assert_eq!(text.lines().count(), 31);
}

#[test]
fn unknown_check_is_a_usage_error() {
    let out = g31().args(["verify", "--check", "bogus-id"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus-id"));
}

#[test]
fn theorem_main_json_report() {
    let path = scratch("theorem.json");
    let out = g31()
        .args(["verify", "--check", "theorem-main", "--format", "json", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let r = read_json(&path);
    let e = &r["entries"][0];
    assert_eq!(e["check_id"], "theorem-main");
    assert_eq!(e["status"], "pass");
    assert_eq!(e["witness"]["order"], 46080);
    assert!(e["timing_ms"].is_u64());
}

#[test]
fn seed_and_trials_from_environment() {
    let out = g31()
        .args(["verify", "--check", "remark-b2c2", "--format", "json"])
        .env("G31_SEED", "17")
        .env("G31_TRIALS", "5")
        .output()
        .unwrap();
    assert!(out.status.success());
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["seed"], 17);
    assert_eq!(r["trials"], 5);
}

#[test]
fn emit_generators_have_trace_two() {
    let path = scratch("generators.json");
    assert!(g31()
        .args(["emit", "--what", "generators", "--out"])
        .arg(&path)
        .status()
        .unwrap()
        .success());
    let mats = read_json(&path);
    let mats = mats.as_array().unwrap();
    assert_eq!(mats.len(), 5);
    for m in mats {
        let m: g31_core::linalg::MatJson = serde_json::from_value(m.clone()).unwrap();
        let m = g31_core::linalg::Mat::from_json(&m).unwrap();
        assert_eq!(m.trace(), g31_core::exact::GaussRat::from_integer(2));
    }
}

#[test]
fn emit_reflections_and_tau() {
    let path = scratch("reflections.json");
    assert!(g31()
        .args(["emit", "--what", "reflections", "--out"])
        .arg(&path)
        .status()
        .unwrap()
        .success());
    assert_eq!(read_json(&path).as_array().unwrap().len(), 60);

    let path = scratch("tau.json");
    assert!(g31()
        .args(["emit", "--what", "tau", "--out"])
        .arg(&path)
        .status()
        .unwrap()
        .success());
    let t = read_json(&path);
    let t = t.as_array().unwrap();
    assert_eq!(t.len(), 720);
    let x = t.iter().find(|e| e["sigma"] == "[2,1,4,3,6,5]").unwrap();
    assert_eq!(x["tau"], "[2,1,3,4,5,6]");
}

#[test]
fn emit_group_is_deterministic() {
    let a = scratch("group-a.json");
    let b = scratch("group-b.json");
    for p in [&a, &b] {
        assert!(g31()
            .args(["emit", "--what", "group", "--out"])
            .arg(p)
            .status()
            .unwrap()
            .success());
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    assert_eq!(read_json(&a).as_array().unwrap().len(), 46080);
}
