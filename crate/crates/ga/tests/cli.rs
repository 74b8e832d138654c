//! End-to-end tests of the `ga` binary and of the multivector text form.

use std::collections::BTreeSet;
use std::process::{Command, Output};

use ga_core::{Multivector, Rational, Signature};
use ga_tools::parse::parse_multivector;
use proptest::prelude::*;
use serde_json::Value;

fn ga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ga")).args(args).env_remove("GA_N_MAX").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn keys(v: &Value) -> BTreeSet<&str> {
    v.as_object().expect("object").keys().map(String::as_str).collect()
}

#[test]
fn verify_with_one_generator_covers_three_signatures() {
    let out = ga(&["verify", "--max-n", "1", "--samples", "3"]);
    let report = json(&out);
    let sigs: BTreeSet<&str> = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["check_id"] != "dims")
        .map(|r| r["signature"].as_str().unwrap())
        .collect();
    assert_eq!(sigs, BTreeSet::from(["(1,0,0)", "(0,1,0)", "(0,0,1)"]));
    assert_eq!(keys(&report), BTreeSet::from(["config", "results", "summary", "timing"]));
    assert_eq!(report["config"]["max_n"], 1);
    assert_eq!(report["summary"]["fail"], 0);
    assert!(out.status.success());
}

#[test]
fn verify_is_deterministic_apart_from_timing() {
    let run = || {
        let mut v = json(&ga(&["verify", "--max-n", "2", "--samples", "4", "--seed", "7"]));
        v.as_object_mut().unwrap().remove("timing");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn verify_exit_code_reflects_failures() {
    let strict = ga(&["verify", "--max-n", "2", "--samples", "2", "--checks", "centralizer"]);
    assert_eq!(strict.status.code(), Some(1));
    let report = json(&strict);
    assert_eq!(report["summary"]["fail"], report["summary"]["fail_known_erratum"]);
    let lenient = ga(&["verify", "--max-n", "2", "--samples", "2", "--checks", "centralizer", "--allow-known-errata"]);
    assert_eq!(lenient.status.code(), Some(0));
    let clean = ga(&["verify", "--max-n", "3", "--samples", "2", "--checks", "codomain,kernel"]);
    assert_eq!(clean.status.code(), Some(0));
}

#[test]
fn failing_cases_carry_a_replayable_counterexample() {
    let report = json(&ga(&["verify", "--max-n", "4", "--samples", "30", "--checks", "relations"]));
    let fail = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["status"] == "fail")
        .expect("the even-n coincidence fails somewhere at n = 4");
    let mv = fail["detail"]["counterexample"]["mv"].as_str().unwrap();
    let sig = fail["signature"].as_str().unwrap().trim_matches(|c| c == '(' || c == ')');
    let a = json(&ga(&["member", "--sig", sig, "--group", "Ac12", "--mv", mv]));
    let b = json(&ga(&["member", "--sig", sig, "--group", "A23", "--mv", mv]));
    assert_ne!(a["member"], b["member"]);
    assert_eq!(fail["detail"]["counterexample"]["Ac12"], a["member"]);
}

#[test]
fn member_json_schema() {
    let v = json(&ga(&["member", "--sig", "2,0,1", "--group", "AuxAc", "--mv", "e1"]));
    assert_eq!(
        keys(&v),
        BTreeSet::from(["signature", "group", "mv", "invertible", "member", "stabilizer", "norm", "psi", "chi", "mode_agreement"])
    );
    assert_eq!(v["member"], true);
    assert_eq!(v["psi"], "1");
    let v = json(&ga(&["member", "--sig", "1,0,1", "--group", "AuxAc", "--mv", "e + e1"]));
    assert_eq!(v["member"], false);
    assert_eq!(v["psi"], "2 + 2*e1");
    let v = json(&ga(&["member", "--sig", "1,0,2", "--group", "A01", "--mv", "e1 + e123", "--mode", "stab"]));
    assert_eq!(v["stabilizer"], true);
    assert_eq!(v["norm"], Value::Null);
}

#[test]
fn factor_json_schema() {
    // e1 (e + e123) = e1 + e23 in Cl(1,0,2).
    let v = json(&ga(&["factor", "--sig", "1,0,2", "--group", "A01", "--mv", "e1 + e23"]));
    assert_eq!(keys(&v), BTreeSet::from(["signature", "group", "mv", "t0", "y", "base", "h", "checks"]));
    for check in ["t0_member", "y_in_set", "y_invertible", "product"] {
        assert_eq!(v["checks"][check], true, "{check}");
    }
    let out = ga(&["factor", "--sig", "1,0,2", "--group", "A01", "--mv", "1 + e1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn centralizer_text_lists_blades_and_dimension() {
    let out = ga(&["centralizer", "--sig", "2,0,2", "--target", "Z2capZ3", "--bruteforce", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.last(), Some(&"dim 3"));
    assert!(lines.contains(&"e1234"));
}

#[test]
fn lie_table_csv_has_one_row_per_group_and_signature() {
    let out = ga(&["table", "--lie-dims", "--max-n", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("group,p,q,r,computed_dim,table_dim,formula_dim,span_match,dim_match,match,row"));
    assert_eq!(lines.count(), 9 * 16);
}

#[test]
fn dims_table_matches_everywhere() {
    let v = json(&ga(&["table", "--dims"]));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), (1..=12).map(|n| n + 1).sum::<usize>());
    assert!(rows.iter().all(|r| r["match"] == true));
}

#[test]
fn generator_cap_comes_from_the_environment() {
    let args = ["norms", "--sig", "5,5,0", "--mv", "e1"];
    assert_eq!(ga(&args).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_ga")).args(args).env("GA_N_MAX", "10").output().unwrap();
    assert!(out.status.success());
    assert_eq!(json(&out)["psi"], "1");
    let out = Command::new(env!("CARGO_BIN_EXE_ga")).args(args).env("GA_N_MAX", "13").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(ga(&["member", "--group", "A01", "--mv", "e1"]).status.code(), Some(2));
    assert_eq!(ga(&["member", "--sig", "1,0,0", "--group", "Nope", "--mv", "e1"]).status.code(), Some(2));
    assert_eq!(ga(&["member", "--sig", "1,0,0", "--group", "A01", "--mv", "e2"]).status.code(), Some(2));
    assert_eq!(ga(&["verify", "--max-n", "9"]).status.code(), Some(2));
    assert_eq!(ga(&["member", "--sig", "1,0,0", "--group", "A01", "--mv", "e1", "--format", "csv"]).status.code(), Some(2));
}

fn arb_mv(n: usize) -> impl Strategy<Value = Multivector> {
    let dim = 1usize << n;
    prop::collection::vec((-5i64..=5, 1i64..=4), dim).prop_map(|cs| {
        Multivector::from_terms(cs.into_iter().enumerate().map(|(b, (num, den))| (b as u32, Rational::new(num, den))))
    })
}

proptest! {
    #[test]
    fn text_form_round_trips((p, q, r, x) in (0usize..=4, 0usize..=2, 0usize..=2)
        .prop_filter("at least one generator", |(p, q, r)| p + q + r >= 1)
        .prop_flat_map(|(p, q, r)| (Just(p), Just(q), Just(r), arb_mv(p + q + r)))) {
        let sig = Signature::new(p, q, r).unwrap();
        let text = x.to_string();
        prop_assert_eq!(parse_multivector(&text, &sig).unwrap(), x);
    }

    #[test]
    fn wide_algebras_round_trip_with_braces(x in arb_mv(10).prop_map(|x| x.grade_part(2))) {
        let sig = Signature::with_limit(4, 3, 3, 10).unwrap();
        prop_assert_eq!(parse_multivector(&x.to_string(), &sig).unwrap(), x);
    }
}
