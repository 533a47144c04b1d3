//! End-to-end tests of the `crt` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn crt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crt")).args(args).output().expect("run crt")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("crt-cli-test-{}-{name}", std::process::id()))
}

#[test]
fn verify_self_conjugate_fixture() {
    let o = crt(&["verify", "catalog:T"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("relations: pass, acyclic: pass, free: pass"));
}

#[test]
fn verify_cuntz_module_is_not_free() {
    let o = crt(&["verify", "O5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("relations: pass, acyclic: pass, free: FAIL"));
}

#[test]
fn tensor_with_zero_is_zero() {
    let path = temp_path("zero.json");
    let o = crt(&["tensor", "catalog:zero", "catalog:R", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let z = crt(&["compare", path.to_str().unwrap(), "catalog:zero"]);
    assert_eq!(z.status.code(), Some(0), "{}", stdout(&z));
    assert_eq!(v["kind"], serde_json::json!("tensor"));
    std::fs::remove_file(path).ok();
}

#[test]
fn kunneth_output_matches_stored_product() {
    let path = temp_path("o3o3.json");
    let o = crt(&["kunneth", "O3", "O3", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("stored table: match"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["matches_expected"], serde_json::json!(true));
    assert_eq!(v["solutions"].as_array().unwrap().len(), 1);
    assert_eq!(v["solutions"][0]["split"], serde_json::json!(false));
    let c = crt(&["compare", path.to_str().unwrap(), "product(2,2)"]);
    assert_eq!(c.status.code(), Some(0), "{}", stdout(&c));
    assert!(stdout(&c).contains('≅'));
    let d = crt(&["compare", path.to_str().unwrap(), "product(2,4)"]);
    assert_eq!(d.status.code(), Some(1));
    std::fs::remove_file(path).ok();
}

#[test]
fn module_json_round_trips_through_show() {
    let path = temp_path("o4.json");
    let o = crt(&["catalog", "show", "O4", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let c = crt(&["compare", path.to_str().unwrap(), "O4"]);
    assert_eq!(c.status.code(), Some(0), "{}", stdout(&c));
    std::fs::remove_file(path).ok();
}

#[test]
fn output_is_deterministic() {
    let a = crt(&["kunneth", "O5", "O5"]);
    let b = crt(&["kunneth", "O5", "O5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(crt(&["verify", "no-such-module"]).status.code(), Some(2));
    assert_eq!(crt(&["verify", "/nonexistent/module.json"]).status.code(), Some(2));
    assert_eq!(crt(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(crt(&["compare", "O3", "O5"]).status.code(), Some(1));
    assert_eq!(crt(&["catalog", "list"]).status.code(), Some(0));
}

#[test]
fn period_window_controls_rendered_degrees() {
    let o = crt(&["catalog", "show", "R", "--period-window", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let header = stdout(&o).lines().find(|l| l.trim_start().starts_with('n')).unwrap().to_string();
    assert_eq!(header.split_whitespace().collect::<Vec<_>>(), ["n", "0", "1", "2", "3"]);
}
