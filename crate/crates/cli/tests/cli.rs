use std::process::{Command, Output};

fn cliffan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffan")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SPACE_SETS: [&str; 4] = ["--phi", "standard", "--psi", "reversed"];

fn classify_json(expr: &str) -> serde_json::Value {
    let mut args = vec!["classify", "--m", "3", "--format", "json", "--expr", expr];
    args.extend(SPACE_SETS);
    let o = cliffan(&args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classify_worked_examples() {
    let cases = [
        ("(x2^2 - x1^2)*e[2] - 2*x1*x2*e[3] - x1*e[1,2] + x3*e[2,3]", "{H, Hpp, I}"),
        ("2*x1*x3*e[1] - x2*e[2] - (x1^2 - x3^2)*e[3]", "{H, Hpp, I}"),
        ("2*x2*x3*e[1] - (x1^2 + x2^2)*e[2]", "{Hpp, I}"),
        ("x1*x3*e[1] + x2*e[2]", "{H, I}"),
        ("(x1*x2 + x2*x3)*e[2]", "{H, Hpp}"),
        ("0", "{H, Hpp, I}"),
    ];
    for (expr, region) in cases {
        assert_eq!(classify_json(expr)["region"], region, "{expr}");
    }
    let first = classify_json(cases[0].0);
    assert_eq!(first["hypLeft"], true);
    assert_eq!(first["hypRight"], true);
}

#[test]
fn classify_json_schema() {
    let v = classify_json("x1*e[1]");
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    let mut expected = vec!["harmonic", "phiPsiHarmonic", "inframonogenic", "hypLeft", "hypRight", "region"];
    expected.sort();
    let mut keys = keys;
    keys.sort();
    assert_eq!(keys, expected);
    assert_eq!(v["region"], "{H, Hpp, I}");
}

#[test]
fn classify_text() {
    let o = cliffan(&["classify", "--m", "3", "--expr", "x1^2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("harmonic: false"));
    assert!(out.contains("region: {}"));
}

#[test]
fn parse_error_exits_2_with_position() {
    let o = cliffan(&["classify", "--m", "3", "--expr", "x1 + * x2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 5"));
    let o = cliffan(&["classify", "--m", "2", "--expr", "x3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cliffan(&["verify", "--seed", "-4"]).status.code(), Some(2));
    assert_eq!(cliffan(&["verify", "--m", "1"]).status.code(), Some(2));
    assert_eq!(cliffan(&["classify", "--m", "40", "--expr", "x1"]).status.code(), Some(2));
    assert_eq!(cliffan(&["classify", "--m", "3", "--phi", "rot2:3/5", "--expr", "x1"]).status.code(), Some(2));
    assert_eq!(cliffan(&["solve", "--region", "Q"]).status.code(), Some(2));
    assert_eq!(cliffan(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_small_config_passes_and_is_deterministic() {
    let args = ["verify", "--m", "2,3", "--trials", "5", "--seed", "42"];
    let a = cliffan(&args);
    let b = cliffan(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("PASS  m=3  level recursion"));
}

#[test]
fn verify_reports_corrupted_operator() {
    let o = cliffan(&["verify", "--m", "3", "--trials", "3", "--corrupt"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL  m=3  level recursion"), "{out}");
    assert!(out.contains("input:"));
}

#[test]
fn verify_json_roundtrips() {
    let o = cliffan(&["verify", "--m", "2", "--trials", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["allPass"], true);
    assert!(v["outcomes"].as_array().unwrap().iter().all(|o| o["passed"] == true));
    let typed: cliffan::suite::SuiteReport = serde_json::from_str(&stdout(&o)).unwrap();
    let again = serde_json::to_string_pretty(&typed).unwrap() + "\n";
    assert_eq!(again, stdout(&o));
}

#[test]
fn solve_reports_dimensions_and_witnesses() {
    let mut args = vec!["solve", "--m", "3", "--degree", "2", "--format", "json", "--region", "H,Hpp,I", "--region", "Hpp,I"];
    args.extend(SPACE_SETS);
    let o = cliffan(&args);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["dims"]["triple"].as_u64().unwrap() >= 1);
    for key in ["H", "Hpp", "I", "H∩Hpp", "H∩I", "Hpp∩I", "triple"] {
        assert!(v["dims"][key].is_u64(), "{key}");
    }
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 2);
    let w = v["witnesses"][1].as_str().unwrap();
    assert_eq!(classify_json(w)["region"], "{Hpp, I}");
}

#[test]
fn solve_degree_zero_is_trivial() {
    let o = cliffan(&["solve", "--m", "3", "--degree", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in ["H", "Hpp", "I", "triple"] {
        assert_eq!(v["dims"][key], 8);
    }
}

#[test]
fn matrix_file_sets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rot.json");
    std::fs::write(&path, r#"[["3/5", "-4/5"], ["4/5", "3/5"]]"#).unwrap();
    let spec = format!("matrix:{}", path.display());
    let o = cliffan(&["classify", "--m", "2", "--phi", &spec, "--psi", "rot2:3/5", "--expr", "x1*x2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::write(&path, r#"[["1", "1"], ["0", "1"]]"#).unwrap();
    let o = cliffan(&["classify", "--m", "2", "--phi", &spec, "--expr", "x1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn demo_passes() {
    let o = cliffan(&["demo"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
    let o = cliffan(&["demo", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["allPass"], true);
}
