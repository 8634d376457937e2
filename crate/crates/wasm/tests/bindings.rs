use lexideal_wasm::{decompose_json, explore_json, invariants_json, MAX_VARS};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn decompose_reports_agreement() {
    let doc = parse(decompose_json("Li(x2x3)", 4).unwrap());
    assert_eq!(doc["agrees"], true);
    assert_eq!(doc["oracle"], serde_json::json!(["(x1,x2)", "(x1,x3)", "(x2,x3,x4)"]));
}

#[test]
fn invariants_match_formula() {
    let doc = parse(invariants_json("Lf(x1x3)", 4).unwrap());
    assert_eq!(doc["dim"], 2);
    assert_eq!(doc["depth"], 1);
    assert_eq!(doc["formula"]["multiplicity"], doc["multiplicity"]);
}

#[test]
fn explore_marks_segment() {
    let doc = parse(explore_json("x1x3", "x2x3", 4).unwrap());
    let inside: Vec<&str> = doc["stratum"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["in"] == true)
        .map(|c| c["m"].as_str().unwrap())
        .collect();
    assert_eq!(inside, ["x1x3", "x1x4", "x2x3"]);
    assert_eq!(doc["completely"], true);
}

#[test]
fn errors_are_messages() {
    assert!(decompose_json("L(x1, x2x3)", 4).unwrap_err().contains("degree"));
    assert!(explore_json("x2x3", "x1x3", 4).is_err());
    assert!(invariants_json("Inq(2)", MAX_VARS + 1).is_err());
}
