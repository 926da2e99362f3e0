//! End-to-end checks of the `eqcoh` binary: output text, JSON shape, and
//! exit codes.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_eqcoh"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn coeff_text_output() {
    let (code, out, _) = run(&["coeff", "--n", "6", "--degree", "2 - L2 - L3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "Z/6, generator a{L2} u{L3}-class");
}

#[test]
fn decompose_json_output() {
    let (code, out, _) = run(&[
        "decompose", "--p", "5", "--family", "cp", "--mults", "3,2,4,0,0", "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    assert_eq!(v["p"], 5);
    assert_eq!(v["wedge"]["summands"].as_array().unwrap().len(), 9);
}

#[test]
fn ring_verification_output() {
    let (code, out, _) = run(&["ring", "--p", "2", "--m", "1", "--verify", "rho", "--r", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "OK (residual 0)");
}

#[test]
fn query_mod_p_output() {
    let (code, out, _) = run(&[
        "decompose", "--n", "3", "--family", "regular", "--count", "12", "--query",
        "L1 + 4", "--mode", "modp",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("Z/p*"), "got: {out}");
}

#[test]
fn sector_error_exits_1() {
    let (code, _, err) = run(&["coeff", "--n", "6", "--degree", "2 - L5"]);
    assert_eq!(code, 1);
    assert!(err.contains("sector"), "got: {err}");
}

#[test]
fn domain_error_exits_1() {
    let (code, _, err) = run(&["ring", "--p", "4", "--m", "1", "--verify", "lemma"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn parse_error_exits_2() {
    let (code, _, err) = run(&["coeff", "--n", "6", "--degree", "2 + +"]);
    assert_eq!(code, 2);
    assert!(err.contains("parse error at byte"), "got: {err}");
}
