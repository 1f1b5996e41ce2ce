//! End-to-end checks of the `starlike` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn starlike(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starlike"))
        .args(args)
        .env_remove("STARLIKE_TOL")
        .output()
        .expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("not JSON ({e}): {l}")))
        .collect()
}

fn schema() -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/records.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema exists")).expect("schema parses")
}

/// The schema branch whose `record` const or enum names `kind`.
fn branch<'a>(schema: &'a Value, kind: &str) -> &'a Value {
    schema["oneOf"]
        .as_array()
        .expect("oneOf")
        .iter()
        .find(|b| {
            let r = &b["properties"]["record"];
            r["const"] == kind || r["enum"].as_array().is_some_and(|e| e.iter().any(|v| v == kind))
        })
        .unwrap_or_else(|| panic!("no schema branch for record kind {kind}"))
}

fn assert_conforms(rec: &Value) {
    let schema = schema();
    let kind = rec["record"].as_str().expect("record kind is a string");
    let b = branch(&schema, kind);
    for field in b["required"].as_array().expect("required list") {
        let f = field.as_str().unwrap();
        assert!(rec.get(f).is_some(), "{kind} record lacks {f}: {rec}");
    }
    for (name, spec) in b["properties"].as_object().unwrap() {
        let (Some(v), Some(ty)) = (rec.get(name), spec.get("type")) else { continue };
        let types: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => continue,
        };
        let ok = types.iter().any(|t| match *t {
            "number" => v.is_number(),
            "integer" => v.is_u64() || v.is_i64(),
            "string" => v.is_string(),
            "boolean" => v.is_boolean(),
            "null" => v.is_null(),
            "object" => v.is_object(),
            "array" => v.is_array(),
            _ => false,
        });
        assert!(ok, "{kind}.{name} has the wrong type: {v}");
    }
}

#[test]
fn success_records_follow_schema() {
    let cases: &[&[&str]] = &[
        &["targets", "catalog"],
        &["targets", "inradius", "--target", "sine"],
        &["targets", "eval", "--target", "cardioid", "--re", "0.5", "--im", "-0.2"],
        &["targets", "convexity", "--target", "cardioid"],
        &["targets", "disk", "--target", "cardioid", "--center", "1.2"],
        &["--samples", "64", "targets", "boundary", "--target", "exp"],
        &["radii", "majorization"],
        &["radii", "convolution", "--target", "sine"],
        &["radii", "operator", "--op", "alexander", "--target", "cardioid"],
        &["radii", "special", "--family", "legendre", "--n", "2", "--target", "cardioid"],
        &["radii", "s-alpha-beta", "--alpha", "0.5", "--beta", "1.5", "--target", "cardioid"],
        &["radii", "tilted", "--lambda", "0.3", "--target", "exp"],
        &["subord", "threshold", "--n", "1", "--direction", "hfixed", "--q", "exp"],
        &["subord", "verify", "--n", "1", "--direction", "hfixed", "--q", "exp", "--beta", "2"],
        &["subord", "admissibility", "--n", "1", "--direction", "hfixed", "--q", "exp", "--beta", "2"],
        &["coeffcond", "reciprocal", "--coeffs", "0.1,0.05:0.02", "--target", "cardioid"],
        &["coeffcond", "power", "--n", "1", "--k", "2", "--target", "cardioid"],
        &["coeffcond", "polynomial", "--r", "3", "--target", "cardioid", "--search"],
        &["extremal", "eval", "--target", "cardioid", "--re", "0.3"],
        &["extremal", "bound", "--target", "cardioid", "--trials", "8"],
    ];
    for args in cases {
        let out = starlike(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let recs = records(&out);
        assert!(!recs.is_empty(), "{args:?} printed nothing");
        recs.iter().for_each(assert_conforms);
    }
}

#[test]
fn boundary_honours_samples() {
    let out = starlike(&["--samples", "100", "targets", "boundary", "--target", "cardioid"]);
    // Closed polyline: the first point repeats at theta = 2 pi.
    let recs = records(&out);
    assert_eq!(recs.len(), 101);
    let w = |k: usize, j: usize| recs[k]["w"][j].as_f64().unwrap();
    assert!((w(0, 0) - w(100, 0)).abs() < 1e-12 && (w(0, 1) - w(100, 1)).abs() < 1e-12);
}

fn expect_error(args: &[&str], code: i32, kind: &str) {
    let out = starlike(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    let recs = records(&out);
    assert_eq!(recs.len(), 1, "{args:?}");
    assert_eq!(recs[0]["record"], "error");
    assert_eq!(recs[0]["kind"], kind);
    assert_conforms(&recs[0]);
    assert!(!out.stderr.is_empty(), "{args:?} wrote nothing to stderr");
}

#[test]
fn validation_failures_exit_2() {
    expect_error(&["targets", "eval", "--target", "cardioid", "--re", "2"], 2, "validation");
    expect_error(&["radii", "tilted", "--lambda", "5", "--target", "cardioid"], 2, "validation");
    expect_error(&["--tol", "1", "targets", "catalog"], 2, "validation");
    expect_error(&["--samples", "8", "targets", "catalog"], 2, "validation");
    expect_error(&["targets", "inradius", "--target", "nonsense"], 2, "validation");
    expect_error(&["no-such-module"], 2, "validation");
    expect_error(&["coeffcond", "reciprocal", "--coeffs", "0.9,0.5", "--target", "cardioid"], 2, "validation");
    expect_error(&["subord", "threshold", "--n", "1", "--direction", "hfixed"], 2, "validation");
}

#[test]
fn numerical_failures_exit_3() {
    expect_error(&["radii", "special", "--family", "bessel", "--beta", "50", "--target", "exp"], 3, "numerical");
}

#[test]
fn tolerance_from_environment() {
    let bad = Command::new(env!("CARGO_BIN_EXE_starlike"))
        .args(["targets", "catalog"])
        .env("STARLIKE_TOL", "0.5")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let overridden = Command::new(env!("CARGO_BIN_EXE_starlike"))
        .args(["--tol", "1e-6", "targets", "catalog"])
        .env("STARLIKE_TOL", "0.5")
        .output()
        .unwrap();
    assert_eq!(overridden.status.code(), Some(0));
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(starlike(&["--help"]).status.code(), Some(0));
    assert_eq!(starlike(&["--version"]).status.code(), Some(0));
    assert_eq!(starlike(&["radii", "--help"]).status.code(), Some(0));
}

#[test]
fn csv_output_has_header() {
    let out = starlike(&["--output", "csv", "targets", "catalog"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("record,id,inradius,convexity_radius"));
}

#[test]
fn coefficient_csv_input() {
    let path = std::env::temp_dir().join(format!("starlike-coeffs-{}.csv", std::process::id()));
    std::fs::write(&path, "k,re,im\n1,0.1,0\n2,0.05,0.02\n").unwrap();
    let from_file = starlike(&["coeffcond", "reciprocal", "--csv", path.to_str().unwrap(), "--target", "cardioid"]);
    let inline = starlike(&["coeffcond", "reciprocal", "--coeffs", "0.1,0.05:0.02", "--target", "cardioid"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(records(&from_file), records(&inline));
}

#[test]
fn reproduce_all_is_deterministic() {
    let a = starlike(&["paper", "reproduce-all"]);
    let b = starlike(&["paper", "reproduce-all"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let mut reader = csv::Reader::from_reader(a.stdout.as_slice());
    assert_eq!(
        reader.headers().unwrap().iter().collect::<Vec<_>>(),
        ["label", "paper_value", "computed", "abs_err"]
    );
    let labels: Vec<String> = reader.records().map(|r| r.unwrap()[0].to_string()).collect();
    assert!(labels.len() > 60);
    assert!(labels.windows(2).all(|w| w[0] < w[1]), "rows sorted by unique label");
}
