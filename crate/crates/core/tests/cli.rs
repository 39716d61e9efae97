use std::process::{Command, Output};

use serde_json::Value;

fn lambda_check(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lambda-check")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn json_report_matches_golden() {
    let out = lambda_check(&["--group", "rational", "--space", "x2", "--check", "axiom2", "--expect", "fail", "--samples", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("x2_axiom2.json"));
}

#[test]
fn text_report_matches_golden() {
    let out = lambda_check(&[
        "--group", "triadic", "--space", "x1:1", "--check", "axiom1", "--check", "axiom3", "--expect", "pass",
        "--expect", "fail", "--samples", "30", "--chain-depth", "4", "--format", "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("x1_text.txt"));
}

#[test]
fn same_arguments_give_identical_bytes() {
    let args = ["--group", "triadic", "--space", "x1:1", "--check", "all", "--samples", "60", "--seed", "17"];
    let (a, b) = (lambda_check(&args), lambda_check(&args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn report_schema() {
    let out = lambda_check(&["--group", "int", "--space", "interval:0..10", "--check", "all", "--samples", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["version"], 1);
    assert_eq!(v["exit_code"], 0);
    assert_eq!(v["config"]["seed"], 0);
    let checks = v["checks"].as_array().unwrap();
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["metric", "axiom1", "axiom2", "axiom3", "unique", "fork", "condition-a"]);
    for c in checks {
        assert_eq!(c["pass"], true, "{c}");
        assert_eq!(c["seed"], 0);
        assert!(c["samples"].as_u64().unwrap() >= 1);
        assert!(c["witness"].is_null());
    }
}

#[test]
fn exit_codes() {
    let fails = ["--group", "rational", "--space", "x2", "--check", "axiom2", "--samples", "20"];
    assert_eq!(lambda_check(&fails).status.code(), Some(1));
    let mut expected = fails.to_vec();
    expected.extend(["--expect", "fail"]);
    assert_eq!(lambda_check(&expected).status.code(), Some(0));
    let mut wrong = fails.to_vec();
    wrong.extend(["--expect", "pass"]);
    assert_eq!(lambda_check(&wrong).status.code(), Some(1));
    let passes = ["--group", "rational", "--space", "x2", "--check", "axiom1", "--expect", "fail", "--samples", "20"];
    assert_eq!(lambda_check(&passes).status.code(), Some(1));
}

#[test]
fn configuration_errors_exit_with_two() {
    let cases: [&[&str]; 7] = [
        &["--group", "dyadic", "--space", "x1:1", "--check", "axiom3"],
        &["--group", "int", "--space", "x2", "--check", "axiom2"],
        &["--group", "int", "--space", "x3:2", "--check", "axiom2"],
        &["--group", "int", "--space", "interval:0..5", "--check", "axiom9"],
        &["--group", "octal", "--space", "interval:0..5", "--check", "metric"],
        &["--group", "int", "--space", "interval:0..5", "--check", "metric", "--samples", "0"],
        &["--group", "int", "--space", "interval:0..5", "--check", "metric", "--bogus"],
    ];
    for args in cases {
        let out = lambda_check(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty() || json(&out)["error"].is_string(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn condition_a_needs_no_space() {
    let out = lambda_check(&["--group", "triadic", "--check", "condition-a", "--expect", "fail"]);
    assert_eq!(out.status.code(), Some(0));
    let w = &json(&out)["checks"][0]["witness"];
    assert_eq!(w["relation"], "no-half-max");
    assert_eq!(w["values"]["lambda0"], "1");
    assert_eq!(w["chain"].as_array().unwrap().len(), 20);
}

#[test]
fn out_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let path_arg = path.to_str().unwrap();
    let args = ["--group", "rational", "--space", "x2", "--check", "axiom2", "--expect", "fail", "--samples", "20"];
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path_arg]);
    let out = lambda_check(&with_out);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), lambda_check(&args).stdout);
}

#[test]
fn tree_files_are_read_from_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("edges.txt");
    std::fs::write(&path, "r a 2\nr b 1/2\nb c 3/2\n").unwrap();
    let space = format!("tree:@{}", path.display());
    let out = lambda_check(&["--group", "rational", "--space", &space, "--check", "all", "--samples", "100"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    std::fs::write(&path, "r a 2\na b 1\nb r 1\n").unwrap();
    assert_eq!(lambda_check(&["--group", "rational", "--space", &space, "--check", "metric"]).status.code(), Some(2));
}
