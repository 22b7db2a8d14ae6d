use std::process::{Command, Output};

use serde_json::Value;

fn bmw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmw")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bmw(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&all)).expect("valid JSON")
}

#[test]
fn column_signature_at_q_squared() {
    let out = stdout(&["signature", "--n", "4", "--t", "q^2", "--shape", "1,1,1,1"]);
    assert_eq!(out.trim(), "(1−q⁴T)/(1−q⁻⁴T)");
}

#[test]
fn level_zero_has_only_the_empty_shape() {
    assert_eq!(stdout(&["lambda", "--n", "0"]).trim(), "(∅,0)");
    let v = json(&["lambda", "--n", "0"]);
    assert_eq!(v, serde_json::json!([{"shape": "0", "defect": 0}]));
}

#[test]
fn separation_failure_at_minus_q_inverse() {
    let out = stdout(&["separate", "--n", "2", "--t", "-q^-1"]);
    assert!(out.contains("2 classes"), "{out}");
    assert!(out.contains("witness: ((2),0)~(∅,1)"), "{out}");

    let v = json(&["separate", "--n", "2", "--t", "-q^-1"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
    assert_eq!(v["separates"], Value::Bool(false));
    assert_eq!(v["witnesses"][0][0]["shape"], "2");
    assert_eq!(v["witnesses"][0][1]["defect"], 1);
}

#[test]
fn generic_separation_at_level_four() {
    let v = json(&["separate", "--n", "4"]);
    assert_eq!(v["separates"], Value::Bool(true));
    assert_eq!(v["classes"].as_array().unwrap().len(), 8);
}

#[test]
fn level_inferred_from_shape_and_defect() {
    let a = stdout(&["signature", "--shape", "2", "--defect", "1"]);
    let b = stdout(&["signature", "--shape", "2", "--n", "4"]);
    assert_eq!(a, b);
}

#[test]
fn domain_errors_exit_with_one() {
    let out = bmw(&["signature", "--n", "3", "--shape", "2,2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: ShapeLevelMismatch:"), "{err}");

    let out = bmw(&["verify-blocks", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("RegimeMismatch"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(bmw(&["signature", "--n", "3"]).status.code(), Some(2));
    assert_eq!(bmw(&["lambda", "--n", "3", "--t", "bogus"]).status.code(), Some(2));
    assert_eq!(bmw(&["lambda"]).status.code(), Some(2));
    assert_eq!(bmw(&["lambda", "--n", "2", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(bmw(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["separate", "--n", "5", "--t", "q^2"][..],
        &["blocks", "--n", "4", "--t", "q^2", "--parallel"][..],
        &["family", "--n", "3"][..],
        &["graph", "--n", "3", "--format", "dot"][..],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
    let serial = json(&["blocks", "--n", "5", "--t", "q^4"]);
    let parallel = json(&["blocks", "--n", "5", "--t", "q^4", "--parallel"]);
    assert_eq!(serial, parallel);
}

#[test]
fn json_shapes_round_trip_through_the_parser() {
    let v = json(&["lambda", "--n", "4"]);
    for entry in v.as_array().unwrap() {
        let shape = entry["shape"].as_str().unwrap();
        let defect = entry["defect"].as_u64().unwrap().to_string();
        let out = json(&["signature", "--shape", shape, "--defect", &defect]);
        assert_eq!(out["lambda"], *entry);
        assert_eq!(out["n"], 4);
    }
}

#[test]
fn signature_comparison_with_a_second_shape() {
    let v = json(&["signature", "--n", "2", "--t", "-q^-1", "--shape", "2", "--shape2", "0"]);
    assert_eq!(v["equal"], Value::Bool(true));
    let v = json(&["signature", "--n", "2", "--shape", "2", "--shape2", "0"]);
    assert_eq!(v["equal"], Value::Bool(false));
}

#[test]
fn pairing_example() {
    let out = stdout(&["pairs", "--shape", "2,1,1,1,1,1,1,1", "--t", "q^8"]);
    assert!(out.contains("{-7,-6,-5,-4,-3,-2,-1}"), "{out}");
    assert!(out.contains("W = (1−q⁻⁸T)(1−q⁻¹⁰T)/((1−q⁸T)(1−q¹⁰T))"), "{out}");
}

#[test]
fn block_pair_check() {
    let v = json(&["blocks", "--n", "10", "--t", "q^2", "--shape", "4,2,2", "--shape2", "4"]);
    assert!(v["equivalent"].is_boolean());
    assert_eq!(v["mu"]["defect"], 3);
}

#[test]
fn idempotent_selects_one_path() {
    let v = json(&["idempotent", "--n", "3", "--shape", "1,1,1"]);
    assert_eq!(v["all_zero_elsewhere"], Value::Bool(true));
    assert_eq!(v["selected_path"].as_array().unwrap().last().unwrap(), "1,1,1");
}

#[test]
fn matrix_rank_reaches_column_count() {
    let v = json(&["matrix", "--n", "4"]);
    assert_eq!(v["rank"], 8);
    assert_eq!(v["columns"].as_array().unwrap().len(), 8);
}

#[test]
fn non_semisimple_regime_makes_no_claim() {
    let out = stdout(&["semisimple", "--n", "4", "--t", "q"]);
    assert!(out.contains("not semisimple"));
    assert!(out.contains("open conjecture"));
    let v = json(&["semisimple", "--n", "4", "--t", "q"]);
    assert!(v["center_is_wheel_predicate"].is_null());
}

#[test]
fn selfcheck_passes() {
    let v = json(&["selfcheck", "--n", "4"]);
    assert_eq!(v["passed"], Value::Bool(true));
}

#[test]
fn graph_dot_output() {
    let out = stdout(&["graph", "--n", "2", "--format", "dot"]);
    assert!(out.starts_with("digraph"));
    let v = json(&["graph", "--n", "2"]);
    assert_eq!(v["levels"].as_array().unwrap().len(), 3);
}
