use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const TWO_TYPES: &str = "Dx^2*Dy + Dx*Dy^2 + (x - y)*(Dx + Dy)";
const FIRST_TRIPLE: &str = "(Dx + Dy + x) * (Dx*Dy + y*Dx + y^2*Dy + y^3)";

fn lpdo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpdo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = lpdo(&full);
    let doc = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (doc, out.status.code().unwrap())
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn two_type_sweep() {
    let (doc, code) = json(&["types", TWO_TYPES]);
    assert_eq!(code, 0);
    assert_eq!(doc["command"], "types");
    assert_eq!(doc["result"]["holding"], serde_json::json!(["(S)(XY)", "(XY)(S)"]));
    let residuals = doc["residuals"].as_array().unwrap();
    assert_eq!(residuals.len(), 12);
    assert_eq!(residuals.iter().filter(|r| r["holds"] == false).count(), 10);
}

#[test]
fn single_type_sets_exit_status() {
    assert_eq!(lpdo(&["types", "--type", "(XY)(S)", TWO_TYPES]).status.code(), Some(0));
    assert_eq!(lpdo(&["types", "--type", "(x)(sy)", TWO_TYPES]).status.code(), Some(1));
    assert_eq!(lpdo(&["types", "--type", "(Q)", TWO_TYPES]).status.code(), Some(2));
}

#[test]
fn first_triple_middle_factor() {
    let (doc, code) = json(&["triple", "--left", "Dx+Dy+x", "--right", "Dy+y", FIRST_TRIPLE]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["middle"], "Dx + y^2");
    assert_eq!(
        doc["result"]["factors"],
        serde_json::json!(["Dx + Dy + x", "Dx + y^2", "Dy + y"])
    );
}

#[test]
fn invariants_of_first_triple() {
    let (doc, code) = json(&["invariants", FIRST_TRIPLE]);
    assert_eq!(code, 0);
    let r = &doc["result"];
    let got: Vec<&str> = ["q", "I1", "I2", "I3", "I4", "I5"]
        .iter()
        .map(|k| r[k].as_str().unwrap())
        .collect();
    assert_eq!(got, ["1", "y^2 - x + y", "-2*y", "-2*y + 1", "2*y - 1", "0"]);
}

#[test]
fn reducibility_verdicts() {
    let (doc, code) = json(&["reducible", "--right", "Dx", "--right", "Dy", "--right", "Dx+Dy", "Dx*Dy*(Dx+Dy)"]);
    assert_eq!((doc["verdict"].as_str(), code), (Some("CompletelyReducible"), 0));
    assert_eq!(doc["result"]["group"], "I");
    let (doc, code) = json(&["reducible", "--right", "Dx", "--right", "Dy", "Dx*Dy*(Dx+Dy)"]);
    assert_eq!((doc["verdict"].as_str(), code), (Some("NotByTheseFactors"), 1));
    assert_eq!(doc["result"]["lcm_matches"], false);
}

#[test]
fn order2_factor_exit_codes() {
    let (doc, code) = json(&["order2-factor", "--left", "Dx", "--right", "Dy", "Dx*Dy + y*Dx + y^2*Dy + y^3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["factors"], serde_json::json!(["Dx + y^2", "Dy + y"]));
    let (doc, code) = json(&["order2-factor", "--left", "Dx", "--right", "Dy", "Dx*Dy + 1"]);
    assert_eq!(code, 1);
    assert!(doc["result"]["factors"].is_null());
}

#[test]
fn groups_report() {
    let (doc, code) = json(&["groups", "--group", "III.c", TWO_TYPES]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["holding"], serde_json::json!(["III.c"]));
    assert_eq!(lpdo(&["groups", "--group", "VII", TWO_TYPES]).status.code(), Some(2));
    assert_eq!(lpdo(&["groups", "Dx^2*Dy + 2*Dx*Dy^2"]).status.code(), Some(3));
}

#[test]
fn algebra_commands() {
    let (doc, _) = json(&["gauge", "--g", "x^2 + 1", "Dx"]);
    assert_eq!(doc["result"]["gauged"], "Dx + 2*x/(x^2 + 1)");
    let (doc, _) = json(&["compose", "Dx", "x"]);
    assert_eq!(doc["result"]["product"], "x*Dx + 1");
    let (doc, _) = json(&["symbol", TWO_TYPES]);
    assert_eq!(doc["result"]["symbol"], "X^2*Y + X*Y^2");
    let (doc, _) = json(&["divide-right", "--right", "Dx + 1", "Dx^2 + 2*Dx + 1"]);
    assert_eq!((doc["result"]["quotient"].as_str(), doc["result"]["exact"].as_bool()), (Some("Dx + 1"), Some(true)));
    let (doc, _) = json(&["divide-left", "--left", "Dx", "Dy"]);
    assert_eq!(doc["result"]["remainder"], "Dy");
}

#[test]
fn errors_map_to_exit_codes() {
    let out = lpdo(&["echo", "Dx / y"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("column 4"));
    assert_eq!(lpdo(&["echo", "x^-1"]).status.code(), Some(2));
    assert_eq!(lpdo(&["invariants", "Dx^3"]).status.code(), Some(3));
    assert_eq!(lpdo(&["frobnicate"]).status.code(), Some(2));
    let (doc, code) = json(&["triple", "--left", "Dx+1", "--right", "Dy", "Dx^2*Dy"]);
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["kind"], "check_failed");
}

#[test]
fn reads_operator_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lpdo"))
        .arg("echo")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"(Dx + 1) * (Dx + 1)\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("operator: Dx^2 + 2*Dx + 1\n"));
}

#[test]
fn printed_operators_parse_back() {
    for src in [TWO_TYPES, FIRST_TRIPLE, "Dx^3 + x*Dx^2*Dy + 2*Dx^2 + (2*x+2)*Dx*Dy + Dx + (2+x)*Dy", "(1/(x - y))*Dx + y/x"] {
        let (doc, _) = json(&["echo", src]);
        let printed = doc["normalized_operator"].as_str().unwrap();
        let (again, _) = json(&["echo", printed]);
        assert_eq!(again["normalized_operator"], printed);
    }
}

#[test]
fn json_output_is_deterministic() {
    let a = lpdo(&["--json", "types", FIRST_TRIPLE]);
    let b = lpdo(&["--json", "types", FIRST_TRIPLE]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn corpus_reports_every_item() {
    let (doc, code) = json(&["examples"]);
    let items = doc["result"]["items"].as_array().unwrap();
    let names: Vec<&str> = items.iter().map(|i| i["name"].as_str().unwrap()).collect();
    assert_eq!(
        names,
        ["Landau operator", "triple with left factor Dx + Dy + x", "triple with left factor Dx + x", "triple with left factor Dy + x", "two-type operator", "order-4 operator", "Dx*Dy*(Dx + Dy)"]
    );
    for item in items {
        if item["name"] == "order-4 operator" {
            // the inner factor satisfies the (XS)(Y) conditions; only that check fails
            let failing: Vec<&str> = item["checks"]
                .as_array()
                .unwrap()
                .iter()
                .filter(|c| c["pass"] == false)
                .map(|c| c["check"].as_str().unwrap())
                .collect();
            assert_eq!(failing.len(), 1);
            assert!(failing[0].contains("(XS)(Y)"));
        } else {
            assert_eq!(item["pass"], true, "{}", item["name"]);
        }
    }
    assert_eq!(code, 1);
}
