use std::process::{Command, Output};

use serde_json::Value;
use trace_products::encoding::format_element;
use trace_products_core::default_tower;
use trace_products_core::trace_sets::{survey, SurveyMethod};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trace-products")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn solve_member_prints_certificate() {
    let out = run(&["solve", "2", "5", "1", "1", "00001"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["member"], true);
    assert_eq!(v["criterion"], "main-theorem");
    assert_eq!(v["certificate"]["x"].as_str().unwrap().len(), 5);
    assert_eq!(v["config"]["minpoly"].as_array().unwrap().len(), 6);
}

#[test]
fn solve_non_member_exits_one() {
    let t = default_tower(5, 1, 3).unwrap();
    let s = survey(&t, 0, 0, SurveyMethod::Oracle).unwrap();
    let beta = format_element(&t, s.non_members()[0]);
    let out = run(&["solve", "5", "3", "0", "0", &beta]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["member"], false);
}

#[test]
fn malformed_input_exits_two() {
    for args in [
        &["solve", "2", "5", "1", "1", "0002x"][..],
        &["solve", "6", "2", "1", "1", "00"],
        &["solve", "2", "5", "3", "1", "00001"],
        &["solve", "7", "3", "0", "0", "100", "--tower-tag", "pure-quartic"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "th1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"][0]["suite"], "th1");
    let out = run(&["verify", "unknown"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn survey_csv_has_single_non_member() {
    let out = run(&["survey", "3", "4", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("beta,member,criterion"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 81);
    let non: Vec<&&str> = rows.iter().filter(|r| r.contains(",false,")).collect();
    assert_eq!(non, [&"0000,false,zero-product"]);
}

#[test]
fn curve_product_report() {
    let out = run(&["curve", "product", "2", "5", "--alpha", "1", "--a", "1", "--b", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kind"]["curve"], "product");
    assert_eq!(v["genus"], 1);
    assert_eq!(v["within_bound"], true);
    assert!(v["N"].as_u64().unwrap() > 4);
    let out = run(&["curve", "product", "2", "5", "--alpha", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn curve_club_report() {
    let out = run(&["curve", "club", "2", "5", "--coeff", "0", "--coeff", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kind"]["curve"], "club");
    assert!(v["N"].as_u64().unwrap() > 1);
    let out = run(&["curve", "club", "2", "5", "--coeff", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn prescribe_zero_coefficients() {
    let out = run(&["prescribe", "3", "5", "0", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let c = v["leading_order"].as_array().unwrap();
    assert_eq!((c[0].as_u64(), c[3].as_u64()), (Some(0), Some(0)));
    assert_eq!(v["verified"], true);
    assert_eq!(v["guaranteed"], true);
    let v = json(&run(&["prescribe", "3", "5", "1", "1"]));
    assert!(v["guaranteed"] == false || v["found"] == false);
}

#[test]
fn clubs_and_meet() {
    let v = json(&run(&["clubs", "3", "2"]));
    assert_eq!(v["exists"], true);
    assert_eq!(v["witness_verified"], true);
    let v = json(&run(&["clubs", "2", "5", "--meet-degree", "1"]));
    assert_eq!(v["exists"], false);
    assert_eq!(v["meet"]["domain"], "Exhaustive");
    assert_eq!(v["meet"]["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn pn_and_semifield() {
    let out = run(&["pn", "3", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["planar"], v["criterion_planar"]);
    let out = run(&["semifield", "2", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["verify", "curves", "--seed", "5"];
    let a = run(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_trace-products"))
        .args(args)
        .env("TRACE_PRODUCTS_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["config"]["seed"], 5);
    let c = run(&["semifield", "2", "6", "--budget", "100", "--seed", "9"]);
    let d = run(&["semifield", "2", "6", "--budget", "100", "--seed", "9"]);
    assert_eq!(c.stdout, d.stdout);
    assert_eq!(json(&c)["domain"], "Sampled { seed: 9, samples: 10000 }");
}

#[test]
fn field_flags() {
    let v = json(&run(&["solve", "3", "2", "1", "1", "10", "--field", "1,0,1"]));
    assert_eq!(v["config"]["minpoly"], serde_json::json!([1, 0, 1]));
    let v = json(&run(&["solve", "7", "3", "0", "0", "010", "--tower-tag", "pure-cubic"]));
    assert_eq!(v["config"]["tower_tag"], "pure-cubic");
    assert!(v["criterion"].as_str().unwrap().starts_with("pure-cubic"));
}

#[test]
fn other_formats() {
    let out = run(&["solve", "2", "5", "1", "1", "00001", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("member: true"));
    let out = run(&["verify", "deg2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("suite,claim,asserted,passed,description"));
}
