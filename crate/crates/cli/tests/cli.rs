use std::process::{Command, Output};

use serde_json::Value;
use tbchar_core::Polynomial;

fn tbchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tbchar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn poly(s: &str) -> Polynomial {
    s.trim().parse().unwrap()
}

#[test]
fn eta_hopf() {
    let o = tbchar(&["eta", "2", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(poly(&stdout(&o)), poly("x^2 + xp^2 + y^2 + x*xp*y - 4"));
    assert_eq!(stdout(&o), "x*xp*y + x^2 + xp^2 + y^2 - 4\n");
}

#[test]
fn eta_rejects_non_coprime() {
    let o = tbchar(&["eta", "6", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NotCoprime"), "{}", stderr(&o));
    let o = tbchar(&["eta", "5", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NotEven"));
    let o = tbchar(&["eta", "-4", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("OutOfRange"));
}

#[test]
fn eta_json_document() {
    let o = tbchar(&["eta", "6", "5", "--nab", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["link"]["twop"], 6);
    assert_eq!(v["link"]["q"], 5);
    let eta = Polynomial::from_json(&v["eta"]).unwrap();
    let eta_ab = Polynomial::from_json(&v["eta_ab"]).unwrap();
    let eta_nab = Polynomial::from_json(&v["eta_nab"]).unwrap();
    assert_eq!(&eta_ab * &eta_nab, eta);
    assert_eq!(eta_nab, poly("x^2*xp^2 + 2*x*xp*y + y^2 - 1"));
    let checks = v["checks"].as_object().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.values().all(|c| c == &Value::Bool(true)));
}

#[test]
fn eta_nab_text() {
    let o = tbchar(&["eta", "2", "1", "--nab"]);
    let text = stdout(&o);
    assert!(text.contains("eta_nab = 1"), "{text}");
}

#[test]
fn basis_counts() {
    let count = |args: &[&str]| stdout(&tbchar(args)).lines().count();
    assert_eq!(count(&["basis", "2", "1", "--max-degree", "1"]), 4);
    assert_eq!(count(&["basis", "2", "1", "--max-degree", "2"]), 9);
    assert_eq!(count(&["basis", "6", "5", "--max-degree", "2"]), 10);
    let o = tbchar(&["basis", "2", "1", "--max-degree", "1"]);
    assert_eq!(stdout(&o), "1\nx\nxp\ny\n");
    let v: Value = serde_json::from_str(&stdout(&tbchar(&[
        "basis",
        "2",
        "1",
        "--max-degree",
        "2",
        "--json",
    ])))
    .unwrap();
    assert_eq!(v["y_degree_bound"], 1);
    assert_eq!(v["monomials"].as_array().unwrap().len(), 9);
}

#[test]
fn reduce_examples() {
    let o = tbchar(&["reduce", "2", "1", "--poly", "y^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(poly(&stdout(&o)), poly("-x^2 - xp^2 - x*xp*y + 4"));
    let o = tbchar(&["reduce", "2", "1", "--poly", "x"]);
    assert_eq!(stdout(&o), "x\n");
    let o = tbchar(&["reduce", "2", "1", "--poly", "y^^2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("SyntaxError at position 2"),
        "{}",
        stderr(&o)
    );
    let o = tbchar(&["reduce", "2", "1", "--poly", "z"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("UnknownVariable"));
}

#[test]
fn reduce_json_round_trips() {
    let o = tbchar(&["reduce", "4", "1", "--poly", "y^5 + x", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let input = Polynomial::from_json(&v["input"]).unwrap();
    let nf = Polynomial::from_json(&v["normal_form"]).unwrap();
    assert_eq!(input, poly("y^5 + x"));
    assert!(nf.degree_in(tbchar_core::Var::Y).unwrap() <= 2);
}

#[test]
fn check_and_scan() {
    let o = tbchar(&["check", "2", "1", "--samples", "50", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
    let o = tbchar(&["check", "6", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tbchar(&["scan", "--max-p", "8", "--samples", "20", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("scanned 31 links, 0 failures"),
        "{}",
        stdout(&o)
    );
    let o = tbchar(&["scan", "--max-p", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn scan_json_summary() {
    let o = tbchar(&["scan", "--max-p", "3", "--json", "--samples", "5"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total"], 5);
    assert_eq!(v["failures"], 0);
    assert_eq!(v["links"][4]["canonical"]["q"], 5);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "check",
            "8",
            "3",
            "--samples",
            "10",
            "--seed",
            "3",
            "--json",
        ][..],
        &["scan", "--max-p", "4", "--samples", "5", "--seed", "9"][..],
    ] {
        assert_eq!(tbchar(args).stdout, tbchar(args).stdout);
    }
}

#[test]
fn presentation_text_and_json() {
    let o = tbchar(&["presentation", "4", "1"]);
    assert!(stdout(&o).contains("<x, x' | x*x'*x*x' = x'*x*x'*x>"));
    let v: Value =
        serde_json::from_str(&stdout(&tbchar(&["presentation", "6", "5", "--json"]))).unwrap();
    assert_eq!(v["relator_word"], "x'*x^-1*x'*x^-1*x'");
    assert_eq!(v["epsilon"], serde_json::json!([1, -1, 1, -1, 1]));
}

#[test]
fn compare_reports_relation() {
    let o = tbchar(&["compare", "6", "5", "6", "5"]);
    assert!(stdout(&o).contains("Equal"));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn clap_usage_errors_exit_2() {
    assert_eq!(tbchar(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(tbchar(&["reduce", "2", "1"]).status.code(), Some(2));
}
