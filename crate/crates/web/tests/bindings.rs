use mgcm_web::{check_session, line_bundle_table, rees_invariants};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn projective_line_table() {
    let v = parse(&line_bundle_table("1", 2));
    let rows = v["entries"][0]["rows"].as_array().unwrap();
    let h = |i: i64, n: &str| rows.iter().find(|r| r["i"] == i && r["degree"] == n).unwrap()["value"].clone();
    assert_eq!(h(0, "(2)"), "3");
    assert_eq!(h(1, "(-2)"), "1");
    assert_eq!(h(1, "(0)"), "0");
    assert!(parse(&line_bundle_table("1,x", 1))["errors"].is_array());
}

#[test]
fn rees_and_sessions() {
    let v = parse(&rees_invariants("a\na, b"));
    let lem = &v["entries"][0];
    assert_eq!(lem["verdict"], "pass");
    let a = lem["rows"].as_array().unwrap().iter().find(|r| r["check"] == "a").unwrap();
    assert_eq!(a["value"], "(-1|-1)");
    let bad = parse(&check_session("ideal I = (a, );"));
    assert!(bad["errors"][0].as_str().unwrap().contains("empty generator at line 1"));
}
