use std::fs;
use std::process::Command;
use std::sync::Arc;

use srgkit::field::Field;
use srgkit::space::FormedSpace;

fn srgkit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_srgkit")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn build_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sp6.g6");
    let p = path.to_str().unwrap();
    let (code, _, err) = srgkit(&["build", "--family", "polar", "--form", "symplectic", "--d", "3", "--q", "2", "--out", p]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = srgkit(&["--json", "check", "--in", p, "--aut"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["v"], 63);
    assert_eq!(v["alpha"], 30);
    assert_eq!(v["beta"], 45);
    assert_eq!(v["aut_order"], "1451520");
    assert_eq!(v["rank"], 3);
}

#[test]
fn check_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pentagon.g6");
    fs::write(&path, "Dhc\n").unwrap();
    let p = path.to_str().unwrap();
    let first = srgkit(&["--json", "check", "--in", p, "--local", "--aut"]);
    let second = srgkit(&["--json", "check", "--in", p, "--local", "--aut"]);
    assert_eq!(first.0, 0);
    assert_eq!(first.1, second.1);
}

#[test]
fn non_srg_exits_with_property_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("path.g6");
    fs::write(&path, "Bg\n").unwrap();
    let (code, out, _) = srgkit(&["check", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("not SRG"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(srgkit(&["build", "--family", "nope"]).0, 2);
    assert_eq!(srgkit(&["check", "--in", "/nonexistent/graph.g6"]).0, 2);
    assert_eq!(srgkit(&["survey", "nope"]).0, 2);
}

#[test]
fn switch_plan_with_json_params() {
    let dir = tempfile::tempdir().unwrap();
    let plan = dir.path().join("plan.json");
    let space = FormedSpace::symplectic(Arc::new(Field::of_order(2).unwrap()), 6).unwrap();
    let u = space.projective().subspace_points(&space.standard_maximal_subspace());
    let spec = serde_json::json!({
        "space": space.params(),
        "U": u,
        "design": "pg-hyperplanes",
        "phi": [1, 0, 2, 3, 4, 5, 6],
    });
    fs::write(&plan, spec.to_string()).unwrap();
    let out_path = dir.path().join("gphi.g6");
    let (code, out, err) = srgkit(&["--json", "switch", "--plan", plan.to_str().unwrap(), "--out", out_path.to_str().unwrap(), "--aut"]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["four_vc"], true);
    assert!(fs::read_to_string(&out_path).unwrap().starts_with('~'));
}

#[test]
fn aut_and_doublecosets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.g6");
    fs::write(&path, "IheA@GUAo\n").unwrap();
    let (code, out, _) = srgkit(&["--json", "aut", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], "120");
    let (code, out, _) = srgkit(&["doublecosets", "--d", "3", "--q", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("252"));
}
