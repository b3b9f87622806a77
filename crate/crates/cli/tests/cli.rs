//! End-to-end runs of the binary: exit statuses, JSON output and determinism.

use std::process::{Command, Output};

use eckardt::{parse_point, Failure, FailureKind, Status};
use eckardt_core::Error;
use serde_json::Value;

fn eckardt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eckardt")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let out = eckardt(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn body(args: &[&str]) -> Value {
    let mut v = json(args);
    v.as_object_mut().unwrap().remove("body").unwrap()
}

#[test]
fn input_errors_exit_with_one() {
    let cases: [&[&str]; 6] = [
        &["check", "x0^3 + y"],
        &["eckardt", "x0^3 + x1^3"],
        &["check", "--builtin", "nonesuch"],
        &["eckardt", "--builtin", "x1", "--primes", "32004"],
        &["eckardt", "--frobnicate"],
        &["check"],
    ];
    for args in cases {
        let out = eckardt(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn check_reports_singularity() {
    assert_eq!(body(&["check", "x0^3 + x1^3"])["smoothness"]["smooth"], false);
    assert_eq!(body(&["check", "--builtin", "x2"])["smoothness"]["smooth"], true);
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(eckardt(&["--help"]).status.code(), Some(0));
    assert_eq!(eckardt(&["--version"]).status.code(), Some(0));
}

#[test]
fn statuses_follow_the_failure_kind() {
    let f = |kind| Failure { stage: "test", kind };
    assert_eq!(f(FailureKind::Core(Error::NoConsensus(vec![32003, 31013]))).status(), Status::NoConsensus);
    assert_eq!(f(FailureKind::Core(Error::Internal("x".into()))).status(), Status::Inconsistent);
    assert_eq!(f(FailureKind::Inconsistent("x".into())).status(), Status::Inconsistent);
    assert_eq!(f(FailureKind::Input("x".into())).status(), Status::InputError);
    let cap = f(FailureKind::Core(Error::BasisCap { limit: 10 }));
    assert_eq!(cap.status(), Status::InputError);
    assert!(cap.to_string().contains("--max-basis"));
}

#[test]
fn polynomial_input_matches_builtin() {
    let out = eckardt(&["eckardt", "x0^3 + x1^3 + x2^3 + x3^3 + x4^3"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("30"), "{text}");

    let b = body(&["eckardt", "x0^3 + x1^3 + x2^3 + x3^3 + x4^3"]);
    assert_eq!(b["input"]["builtin"], "fermat");
    assert_eq!(b["eckardt"]["total"], 30);
    assert_eq!(b["paper_expectations"]["all_match"], true);
}

#[test]
fn input_file_is_read() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klein.txt");
    std::fs::write(&path, "x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0\n").unwrap();
    let b = body(&["report", "--input", path.to_str().unwrap()]);
    assert_eq!(b["input"]["builtin"], "klein");
    assert_eq!(b["eckardt"]["total"], 0);
    assert_eq!(b["triple_lines"]["total"], 0);
    assert_eq!(b["paper_expectations"]["all_match"], true);
}

#[test]
fn json_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x1.json");
    let out = eckardt(&["triple-lines", "--builtin", "x1", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["body"]["triple_lines"]["total"], 9);
    let cells: u64 = v["body"]["triple_lines"]["per_cell"].as_array().unwrap().iter().map(|c| c["total"].as_u64().unwrap()).sum();
    assert_eq!(cells, 9);
    assert!(v["timings"].is_object());
}

#[test]
fn reports_are_deterministic() {
    let args = ["report", "--builtin", "x3"];
    let a = body(&args);
    assert_eq!(a, body(&args));
    assert_eq!(a["eckardt"]["total"], 2);
    assert_eq!(a["triple_lines"]["total"], 39);
    assert_eq!(a["paper_expectations"]["all_match"], true);
}

#[test]
fn x4_report() {
    let b = body(&["report", "--builtin", "x4"]);
    assert_eq!(b["eckardt"]["total"], 12);
    assert_eq!(b["triple_lines"]["total"], 81);
    assert_eq!(b["elliptic_curves"].as_array().unwrap().len(), 4);
}

#[test]
fn triple_lines_through_a_point() {
    let b = body(&["triple-lines", "--builtin", "x3", "--through", "(0:1:0:0:0)"]);
    assert_eq!(b["triple_lines_through"]["total"], 9);
    assert!(b.get("triple_lines").is_none());
}

#[test]
fn generate_is_seeded() {
    let a = body(&["generate", "--seed", "7"]);
    assert_eq!(a, body(&["generate", "--seed", "7"]));
    assert_eq!(a["generated"]["witness_is_triple"], true);
    assert_eq!(a["eckardt"]["total"], 0);
}

#[test]
fn points_parse_in_each_notation() {
    let a = parse_point("(1:-1/2:0:0:3)").unwrap();
    assert_eq!(parse_point("1:-1/2:0:0:3").unwrap(), a);
    assert_eq!(parse_point("1,-1/2,0,0,3").unwrap(), a);
    assert!(parse_point("(0:0:0:0:0)").is_err());
    assert!(parse_point("(1:2:3)").is_err());
    assert!(parse_point("(1:a:0:0:0)").is_err());
}
