use std::io::Write;
use std::process::{Command, Output};

use paminus::logic::parse_formula;
use serde_json::Value;

fn paminus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paminus")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = paminus(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn gen_native_round_trips() {
    let out = paminus(&["gen", "phi", "1", "--format", "native"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let f = parse_formula(text.trim()).unwrap();
    assert_eq!(f, paminus::generators::phi(1).unwrap());
}

#[test]
fn gen_prover_is_one_conjecture() {
    let out = paminus(&["gen", "nu", "2", "--format", "prover"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].starts_with("fof(nu_2, conjecture, "));
    let out = paminus(&["gen", "nu", "2", "--format", "prover", "--with-axioms"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 16);
}

#[test]
fn gen_rejects_zero() {
    assert_eq!(paminus(&["gen", "phi", "0"]).status.code(), Some(2));
    assert_eq!(paminus(&["gen", "psi", "1"]).status.code(), Some(2));
}

#[test]
fn check_examples() {
    let (code, v) = json(&["check", "nagell", "--k", "2", "--m-max", "50", "--n-max", "50"]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"], "pass");
    assert_eq!(v["details"]["instances_checked"], 2500);

    let (code, v) = json(&["check", "phi-search", "--k", "1", "--n-max", "20"]);
    assert_eq!((code, &v["outcome"]), (0, &Value::from("pass")));

    let (code, v) = json(&["check", "harmonic", "--n", "1", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["value"], "3/2");
}

#[test]
fn check_usage_errors() {
    assert_eq!(json(&["check", "harmonic", "--n", "2", "--k", "1", "--m", "2,1"]).0, 2);
    assert_eq!(json(&["check", "nagell"]).0, 2);
    assert_eq!(json(&["check", "phi-search", "--k", "0"]).0, 2);
}

#[test]
fn kurschak_examples() {
    let (code, v) = json(&["kurschak", "--n", "4", "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(
        (v["details"]["unique_index"].as_u64(), v["details"]["a"].as_u64()),
        (Some(0), Some(2))
    );
    let (_, v) = json(&["kurschak", "--n", "1", "--k", "1"]);
    assert_eq!(
        (v["details"]["unique_index"].as_u64(), v["details"]["a"].as_u64()),
        (Some(1), Some(1))
    );
    assert_eq!(json(&["kurschak", "--n", "0", "--k", "1"]).0, 2);
}

#[test]
fn model_examples() {
    let (code, v) = json(&["model", "check-axioms", "poly", "--samples", "500", "--seed", "42"]);
    assert_eq!(code, 0);
    let rows = v["details"]["axioms"].as_array().unwrap();
    assert_eq!(rows.len(), 15);
    assert!(rows.iter().all(|r| r["fail"] == 0));

    let (code, v) = json(&["model", "parity-demo"]);
    assert_eq!(code, 0);
    assert_eq!(
        (&v["details"]["even"], &v["details"]["odd"]),
        (&Value::from("false"), &Value::from("false"))
    );

    let (code, v) = json(&["model", "below-numeral", "poly", "--element", "[0,1]", "--k", "1000"]);
    assert_eq!(code, 0);
    assert!(v["details"]["value"].is_null());

    let (_, v) = json(&["model", "below-numeral", "standard", "--element", "4", "--k", "9"]);
    assert_eq!(v["details"]["value"], "4");
}

#[test]
fn model_usage_errors() {
    assert_eq!(json(&["model", "parity-demo", "standard"]).0, 2);
    assert_eq!(json(&["model", "parity-demo", "rationals"]).0, 2);
    assert_eq!(json(&["model", "below-numeral", "poly", "--element", "[0,1]"]).0, 2);
    assert_eq!(
        json(&["model", "below-numeral", "poly", "--element", "[0,-1]", "--k", "3"]).0,
        2
    );
}

#[test]
fn parse_examples() {
    let ok = temp_file("(forall x (exists y (x < y)))\n");
    let (code, v) = json(&["parse", ok.path().to_str().unwrap()]);
    assert_eq!((code, &v["outcome"]), (0, &Value::from("pass")));
    assert_eq!(v["details"]["round_trip"], true);

    let bad = temp_file("((0 < 1) + 1)");
    let (code, v) = json(&["parse", bad.path().to_str().unwrap()]);
    assert_eq!((code, &v["outcome"]), (2, &Value::from("fail")));
    assert_eq!(v["details"]["offset"], 9);

    let empty = temp_file("");
    let (code, v) = json(&["parse", empty.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(v["details"]["error"]
        .as_str()
        .unwrap()
        .starts_with("unexpected end of input"));

    assert_eq!(json(&["parse", "/nonexistent/formula"]).0, 2);
}

#[test]
fn text_output_without_json() {
    let out = paminus(&["check", "harmonic", "--n", "2", "--k", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("check harmonic: pass"));
    assert!(text.contains("13/12"));
}
