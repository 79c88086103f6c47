use rs_cycles_web::{coloring_json, insertion_json, shape_set_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn insertion_reports_tableaux_and_steps() {
    let v = parse(insertion_json("(3,5,4,7)(1,2,6)").unwrap());
    assert_eq!(v["oneLine"], serde_json::json!([2, 6, 5, 7, 4, 1, 3]));
    assert_eq!(v["shape"], serde_json::json!([3, 2, 1, 1]));
    assert_eq!(v["cycleType"], serde_json::json!([4, 3]));
    assert_eq!(v["p"], serde_json::json!([[1, 3, 7], [2, 4], [5], [6]]));
    assert_eq!(v["steps"].as_array().unwrap().len(), 7);
    assert_eq!(v["steps"][6]["q"], v["q"]);
}

#[test]
fn coloring_for_constructed_and_unattainable_shapes() {
    let v = parse(coloring_json("8,7", "5,3,3,3,1").unwrap());
    assert_eq!(v["kind"], "coloring");
    assert_eq!(v["colors"].as_array().unwrap().len(), 5);
    assert_eq!(v["qUp"][0], serde_json::json!([5, 9, 13, 14, 15]));
    let v = parse(coloring_json("4,2", "2,2,2").unwrap());
    assert_eq!(v["kind"], "unattainable");
    assert!(v["sigma"].is_null());
}

#[test]
fn shape_set_small_and_large() {
    let v = parse(shape_set_json("4,2").unwrap());
    assert_eq!(v["method"], "brute-force");
    assert_eq!(v["missing"], serde_json::json!([[2, 2, 2]]));
    assert_eq!(v["bAlpha"].as_array().unwrap().len(), 8);
    let total: u64 = v["histogram"].as_array().unwrap().iter().map(|e| e[1].as_u64().unwrap()).sum();
    assert_eq!(total, 90);
    let v = parse(shape_set_json("10,10").unwrap());
    assert_eq!(v["method"], "constructive");
    assert!(shape_set_json("5,4,3,2,1").is_err());
}

#[test]
fn bad_input_is_an_error() {
    assert!(insertion_json("bogus").is_err());
    assert!(coloring_json("4,2", "3,3,1").is_err());
    assert!(shape_set_json("").is_err());
}
