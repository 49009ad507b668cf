use std::path::PathBuf;
use std::process::Command;

use proptest::prelude::*;
use semistab::certify::{degree_gap, parse_certificate, verify, Certificate, CertifyError, Status, Tables, Verdict};
use serde_json::{json, Value};

const CASES: [&str; 6] = ["2_3", "3_2", "5_2", "7_3", "13_2", "11_2"];

fn path(case: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("certificates/case_{case}.json"))
}

fn raw(case: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path(case)).unwrap()).unwrap()
}

fn cert(v: &Value) -> Result<Certificate, CertifyError> {
    v.to_string().parse()
}

#[test]
fn bundled_certificates_parse() {
    for case in CASES {
        let c = parse_certificate(&path(case)).unwrap();
        assert_eq!(c.case, case);
        assert!(c.claims.iter().all(|cl| !cl.anchor.trim().is_empty()));
    }
    assert!(parse_certificate(&path("13_2")).unwrap().claims.len() >= 8);
}

#[test]
fn undeclared_field_is_named() {
    let mut v = raw("13_2");
    let claims = v["claims"].as_array_mut().unwrap();
    let i = claims.iter().position(|c| c["kind"] == "prime_splitting").unwrap();
    claims[i]["field"] = json!("Nowhere");
    let err = cert(&v).unwrap_err().to_string();
    assert!(err.contains("Nowhere"), "{err}");
    assert!(err.contains("prime_splitting"), "{err}");
}

#[test]
fn unknown_keys_and_missing_anchors_are_rejected() {
    let mut v = raw("2_3");
    v["claims"][0]["extra"] = json!(1);
    assert!(cert(&v).is_err());
    let mut v = raw("2_3");
    v["claims"][0]["anchor"] = json!("  ");
    assert!(cert(&v).is_err());
}

#[test]
fn empty_claim_list_is_vacuously_valid() {
    let mut v = raw("2_3");
    v["claims"] = json!([]);
    let r = verify(&cert(&v).unwrap(), &Tables::bundled());
    assert!(r.claims.is_empty());
    assert_eq!(r.verdict, Verdict::Pass);
}

fn tamper(case: &str, kind: &str, key: &str, value: Value) -> semistab::certify::Report {
    let mut v = raw(case);
    let claims = v["claims"].as_array_mut().unwrap();
    let i = claims.iter().position(|c| c["kind"] == kind).unwrap();
    claims[i][key] = value;
    verify(&cert(&v).unwrap(), &Tables::bundled())
}

#[test]
fn tampered_certificates_fail() {
    let r = tamper("11_2", "ap_value", "expected", json!(-1));
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.count(&Status::Fail), 1);
    let r = tamper("13_2", "residue_unit_order", "expected", json!(1));
    assert_eq!(r.verdict, Verdict::Fail);
    let r = tamper("7_3", "budget_value", "expected", json!("3^3/2 * 7^3/4"));
    assert_eq!(r.verdict, Verdict::Fail);
}

#[test]
fn impossible_degree_gap_is_a_contradiction() {
    assert!(matches!(degree_gap(12, 11), Err(CertifyError::Contradiction { .. })));
    let r = tamper("2_3", "degree_gap", "bound", json!(5));
    assert_eq!(r.verdict, Verdict::Fail);
}

#[test]
fn reports_are_deterministic() {
    let tables = Tables::bundled();
    for case in CASES {
        let c = parse_certificate(&path(case)).unwrap();
        assert_eq!(verify(&c, &tables).to_json(), verify(&c, &tables).to_json(), "{case}");
    }
}

#[test]
fn dropping_a_claim_keeps_a_passing_verdict() {
    let tables = Tables::bundled();
    for case in ["2_3", "7_3", "13_2"] {
        let c = parse_certificate(&path(case)).unwrap();
        assert_eq!(verify(&c, &tables).verdict, Verdict::Pass);
        for i in 0..c.claims.len() {
            let mut d = c.clone();
            d.claims.remove(i);
            assert_eq!(verify(&d, &tables).verdict, Verdict::Pass, "{case} without claim {i}");
        }
    }
}

#[test]
fn heuristic_claims_never_pass_outright() {
    let r = verify(&parse_certificate(&path("11_2")).unwrap(), &Tables::bundled());
    assert_eq!(r.verdict, Verdict::HeuristicPass);
    assert_eq!(r.count(&Status::HeuristicPass), 1);
    assert!(r.accepted(false));
    assert!(!r.accepted(true));
}

#[test]
fn cli_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_semistab");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = path("13_2");
    assert_eq!(run(&["verify", ok.to_str().unwrap()]).status.code(), Some(0));
    let heuristic = path("11_2");
    assert_eq!(run(&["verify", heuristic.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--strict-heuristics", heuristic.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["verify", "/nonexistent.json"]).status.code(), Some(2));
    let json = run(&["verify", "--json", ok.to_str().unwrap()]);
    let v: Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v[0]["verdict"], "PASS");
    assert_eq!(run(&["ext-table", "--max-l", "200", "--p", "3"]).status.code(), Some(0));
}

proptest! {
    #[test]
    fn degree_gap_fits_under_the_bound(base in 1u64..200, bound in 1u64..5000) {
        match degree_gap(base, bound) {
            Ok(n) => {
                prop_assert!(n * base <= bound);
                prop_assert!((n + 1) * base > bound);
            }
            Err(_) => prop_assert!(bound < base),
        }
    }
}
