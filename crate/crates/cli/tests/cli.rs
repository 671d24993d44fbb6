use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deformkit")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("deformkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn build_writes_algebra_file() {
    let out_path = temp_path("acon_table.json");
    let out = run(&["build", "--input", &data("acon.json"), "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("dim 12\n"));
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(file["dim"], 12);
    // the written table analyzes like the presentation
    let v = json(&["analyze", "--input", out_path.to_str().unwrap()]);
    assert_eq!(v["radical_dim"], 11);
    assert_eq!(v["profile"], serde_json::json!({"1": 1}));
}

#[test]
fn build_examples() {
    assert_eq!(json(&["build", "--input", &data("dual_numbers.json")])["dim"], 2);
    let out = run(&["build", "--input", &data("acon_expected_11.json")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("dimension 12") && err.contains("expected 11"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn analyze_examples() {
    let text = stdout(&run(&["analyze", "--input", &data("m2_plus_q.json")]));
    assert!(text.contains("profile 1^1 2^1\n") && text.contains("radical 0\n"), "{text}");
    let text = stdout(&run(&["analyze", "--input", &data("dual_numbers_table.json")]));
    assert!(text.contains("radical 1\n") && text.contains("profile of semisimplification 1^1\n"), "{text}");
    let v = json(&["analyze", "--input", &data("acon.json")]);
    assert_eq!(v["radical_dim"], 11);
    assert_eq!(v["semisimple"], false);
}

#[test]
fn analyze_rejects_invalid_tables() {
    let path = temp_path("broken.json");
    let src = r#"{"dim": 2, "unit": ["1", "0"], "table": [[["2", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]]}"#;
    std::fs::write(&path, src).unwrap();
    let out = run(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("associativity"));
}

#[test]
fn scan_examples() {
    let v = json(&["scan", "--input", &data("dual_family.json"), "--base", "1/4"]);
    assert_eq!(v["verdict"]["kind"], "StableSemisimpleTarget");
    assert_eq!(v["verdict"]["profile"], serde_json::json!({"1": 2}));
    assert_eq!(v["rows"].as_array().unwrap().len(), 12);
    assert_eq!(v["rows"][0]["s"], "1/4");
    let v = json(&["scan", "--input", &data("m2_constant_family.json")]);
    assert_eq!(v["verdict"]["profile"], serde_json::json!({"2": 1}));
    let out = run(&["scan", "--input", &data("dual_constant_family.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict NeverSemisimpleOnSchedule"));
    assert!(stdout(&out).contains("no stable target on this schedule"));
}

#[test]
fn scan_usage_errors() {
    assert_eq!(run(&["scan", "--input", &data("dual_family.json"), "--base", "0"]).status.code(), Some(1));
    assert_eq!(run(&["scan", "--input", &data("dual_family.json"), "--base", "x"]).status.code(), Some(1));
    assert_eq!(run(&["scan", "--input", &data("dual_family.json"), "--count", "1"]).status.code(), Some(1));
    assert_eq!(run(&["scan", "--input", &data("acon.json")]).status.code(), Some(2));
}

#[test]
fn obstruct_examples() {
    let v = json(&["obstruct", "--input", &data("acon.json")]);
    assert_eq!(v["dim_in_N"], 12);
    let statuses: Vec<&str> = v["targets"].as_array().unwrap().iter().map(|t| t["status"].as_str().unwrap()).collect();
    assert_eq!(statuses, ["NotExcluded", "NotExcluded", "NotExcluded", "NotExcluded", "Excluded"]);
    assert_eq!(v["generators"], serde_json::json!(["x", "y"]));
    let v = json(&["obstruct", "--input", &data("exterior.json"), "--gen", "x", "--gen", "y"]);
    assert_eq!(v["dim_in_N"], 4);
    assert!(v["targets"].as_array().unwrap().iter().all(|t| t["status"] == "NotExcluded" && t["bound"] == 4));
    let v = json(&["obstruct", "--input", &data("field.json"), "--gen", "1", "--gen", "1"]);
    assert_eq!(v["targets"].as_array().unwrap().len(), 1);
    // coordinate vectors work too
    let v = json(&["obstruct", "--input", &data("m2_plus_q.json"), "--gen", "0,1,0,0,0", "--gen", "0,0,1,0,1"]);
    assert_eq!(v["generators"], serde_json::json!(["0,1,0,0,0", "0,0,1,0,1"]));
}

#[test]
fn obstruct_errors() {
    let out = run(&["obstruct", "--input", &data("m2_plus_q.json"), "--gen", "e11_0", "--gen", "e22_0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("subalgebra of dimension"));
    assert_eq!(run(&["obstruct", "--input", &data("m2_plus_q.json")]).status.code(), Some(1));
    assert_eq!(run(&["obstruct", "--input", &data("acon.json"), "--gen", "x"]).status.code(), Some(1));
    assert_eq!(run(&["obstruct", "--input", &data("acon.json"), "--gen", "x", "--gen", "1,2"]).status.code(), Some(1));
}

#[test]
fn enumerate_examples() {
    for (n, count) in [("12", 5), ("4", 2), ("1", 1)] {
        assert_eq!(stdout(&run(&["enumerate", n])).lines().count(), count);
    }
    let v = json(&["enumerate", "4"]);
    assert_eq!(v["profiles"], serde_json::json!([{"1": 4}, {"2": 1}]));
}

#[test]
fn identity_span_command() {
    let v = json(&["identity-span", "--input", &data("m2_plus_q.json"), "--m", "1"]);
    assert_eq!(v["rows"][0]["span_dim"], 3);
    assert_eq!(v["rows"][0]["ideal_dim"], 4);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["enumerate", "12", "--format", "yaml"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "--input", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--input", &data("dual_family.json")]).status.code(), Some(2));
}

#[test]
fn out_flag_redirects_reports() {
    let path = temp_path("enumerate.json");
    let out = run(&["enumerate", "9", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["profiles"].as_array().unwrap().len(), 4);
}
