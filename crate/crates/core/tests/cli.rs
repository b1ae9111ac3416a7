use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn twgc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twgc")).args(args).output().expect("twgc runs")
}

fn system(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", "systems", name].iter().collect();
    path.to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn validate_accepts_a_twisted_system() {
    let out = twgc(&["validate", "--system", &system("c2_f3_twisted.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn validate_rejects_a_broken_cocycle() {
    let out = twgc(&["validate", "--system", &system("c3_f3_bad_cocycle.json")]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["valid"], false);
    let kinds: Vec<&str> = v["violations"].as_array().unwrap().iter().map(|x| x["kind"].as_str().unwrap()).collect();
    assert!(kinds.iter().all(|&k| k == "cocycle"), "{kinds:?}");
}

#[test]
fn bound_holds_for_every_principal_ideal_of_s3() {
    let out = twgc(&["bound", "--system", &system("f2_s3.json"), "--all-principal"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["violations"], 0);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 14);
    for r in rows {
        let (d, k) = (r["code"]["d"].as_u64().unwrap(), r["code"]["k"].as_u64().unwrap());
        assert!(d * k >= 6, "{r}");
    }
}

#[test]
fn missing_and_malformed_inputs_exit_2() {
    assert_eq!(twgc(&["distance", "--builtin", "F2[S3]"]).status.code(), Some(2));
    assert_eq!(twgc(&["distance", "--builtin", "no-such-system", "--generator", "1"]).status.code(), Some(2));
    assert_eq!(twgc(&["distance", "--builtin", "F2[S3]", "--generator", "1,0"]).status.code(), Some(2));
    assert_eq!(twgc(&["validate", "--system", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(twgc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(twgc(&["--help"]).status.code(), Some(0));
}

#[test]
fn exhausted_budget_exits_3() {
    let out = twgc(&["distance", "--builtin", "F2[S3]", "--all-principal", "--budget", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn distance_of_the_repetition_code() {
    let out = twgc(&["distance", "--builtin", "F3[C3]", "--generator", "1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["codes"][0]["display"], "[3, 1, 3]");
}

#[test]
fn skew_frobenius_system_from_file() {
    let out = twgc(&["ring-info", "--system", &system("f4_c2_frobenius.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dim_p"], 4);
    assert_eq!(v["twisted_only"], false);
    assert_eq!(v["untwisted"], false);
}

#[test]
fn hat_report_on_a_skew_twisted_ring() {
    let out = twgc(&["hat-report", "--builtin", "F4^a[C4;frob]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["order"], 12);
    assert_eq!(v["powers"]["closed_form_failures"], 0);
    assert_eq!(v["psi"]["surjective"], true);
}

#[test]
fn abelian_reduction_reports_the_quaternion_twist() {
    let ok = twgc(&["abelian", "--builtin", "F2[S3]", "--all-principal", "--verify"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["failures"], 0);

    let stalled = twgc(&["abelian", "--builtin", "F3^a[Klein4]", "--all-principal"]);
    assert_eq!(stalled.status.code(), Some(1));
    let v = json(&stalled);
    for row in v["rows"].as_array().unwrap().iter().filter(|r| r.get("stalled").is_some()) {
        assert_eq!(row["obstruction"]["distance"], 3);
        assert_eq!(row["obstruction"]["best_abelian_distance"], 2);
    }
}

#[test]
fn extremal_construction_round_trips() {
    let out = twgc(&["extremal", "--builtin", "F2[S3]", "--subgroup", "0,1", "--generator", "1,1,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["display"], "[6, 3, 2]");
    assert_eq!(v["decomposition"]["H"], serde_json::json!([0, 1]));
}

#[test]
fn text_output_matches_json_content() {
    let out = twgc(&["distance", "--builtin", "F3[C3]", "--generator", "1,1,1", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("display: [3, 1, 3]"), "{text}");
    assert!(text.contains("system: F3[C3]"), "{text}");
}

#[test]
fn catalog_fails_only_on_the_certified_counterexample() {
    let out = twgc(&["catalog", "--no-stretch", "--jobs", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["uncertified_failures"].as_array().unwrap().len(), 0);
    let failed: Vec<u64> = v["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["gating"] == true && c["passed"] == false)
        .map(|c| c["id"].as_u64().unwrap())
        .collect();
    assert_eq!(failed, vec![9]);
}
