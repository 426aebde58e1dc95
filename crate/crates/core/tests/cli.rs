use std::process::Command;

use serde_json::Value as Json;

use scottper::cli::cmd_eval;
use scottper::instances::{random_instances, InstanceConfig};

fn run(args: &[&str]) -> (i32, Json, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_scottper"))
        .args(args)
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Json::Null);
    (
        out.status.code().unwrap(),
        json,
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn eval_examples() {
    let (code, v, _) = run(&["eval", "x^3-1", "y^3+1"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"]["num"], "-3");
    assert_eq!(v["value"]["den"], "8");

    let (code, v, _) = run(&["eval", "x^3-1", "y^6+y^3+1", "--method", "theorem1"]);
    assert_eq!(code, 0);
    assert_eq!(
        (v["value"]["num"].as_str(), v["value"]["den"].as_str()),
        (Some("6"), Some("1"))
    );

    let (code, _, err) = run(&["eval", "x^2-1", "y^2-1"]);
    assert_eq!(code, 2);
    assert_eq!(
        serde_json::from_str::<Json>(&err).unwrap()["error"],
        "SharedRoot"
    );

    let (code, _, err) = run(&["eval", "x^2 +* 1", "y"]);
    assert_eq!(code, 3);
    assert_eq!(serde_json::from_str::<Json>(&err).unwrap()["position"], 5);

    let (code, _, _) = run(&["eval", "x^2+3", "y^2+1", "--method", "closed:cor19"]);
    assert_eq!(code, 4);
}

#[test]
fn oracle_value_is_complex() {
    let (code, v, _) = run(&["eval", "[1, 0, 1]", "y^3 - 2", "--method", "oracle"]);
    assert_eq!(code, 0);
    assert!(v["value"]["re"].is_f64() && v["value"]["im"].is_f64());
}

#[test]
fn verify_and_catalog() {
    let (code, v, _) = run(&["verify", "x^3-1", "y^4+1"]);
    assert_eq!(code, 0);
    assert_eq!(v["all_agree"], true);
    let n = v["routes"].as_array().unwrap().len();
    assert_eq!(v["agreement"].as_array().unwrap().len(), n);

    let (code, v, _) = run(&["verify", "x^11-1", "y^11+2", "--max-n", "8"]);
    assert_eq!(code, 0);
    assert!(v["routes"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["route"] != "oracle"));

    let (code, v, _) = run(&["catalog", "--id", "cor19"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["domain"], "a ≠ −2");

    let (_, v, _) = run(&["catalog", "--filter", "prop"]);
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn bench_csv_and_json() {
    let out = Command::new(env!("CARGO_BIN_EXE_scottper"))
        .args(["bench", "2..4", "--seed", "3"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "n,m,oracle_ms,theorem1_ms,agree");
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));

    let (code, v, _) = run(&["bench", "3", "2..3", "--json", "--max-n", "2"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows[0]["oracle_ms"].is_null());
}

#[test]
fn theorem1_matches_oracle_on_random_family() {
    for inst in random_instances(11, 60, &InstanceConfig::default()) {
        let (p, q) = (inst.p.to_string(), inst.q.to_string());
        let exact: Json = serde_json::from_str(&cmd_eval(&p, &q, "theorem1").stdout).unwrap();
        let approx: Json = serde_json::from_str(&cmd_eval(&p, &q, "oracle").stdout).unwrap();
        let num: f64 = exact["value"]["num"].as_str().unwrap().parse().unwrap();
        let den: f64 = exact["value"]["den"].as_str().unwrap().parse().unwrap();
        let (re, im) = (
            approx["value"]["re"].as_f64().unwrap(),
            approx["value"]["im"].as_f64().unwrap(),
        );
        let v = num / den;
        let scale = v.abs().max(re.hypot(im)).max(1.0);
        assert!(
            (v - re).hypot(im) <= 1e-6 * scale,
            "{p} / {q}: {v} vs {re}+{im}i"
        );
    }
}
