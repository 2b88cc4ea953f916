use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn qdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdist")).args(args).env_remove("QDIST_JOBS").output().unwrap()
}

fn qdist_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qdist"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("{e}: {l}"))).collect()
}

const BASE: &str = "https://qdist.example/schema/";

fn load(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn validator(name: &str) -> jsonschema::Validator {
    let mut opts = jsonschema::options();
    for dep in ["family_spec.json", "theorem_report.json"] {
        opts = opts.with_resource(format!("{BASE}{dep}"), jsonschema::Resource::from_contents(load(dep)).unwrap());
    }
    opts.build(&load(name)).unwrap()
}

fn assert_valid(schema: &str, values: &[Value]) {
    assert!(!values.is_empty(), "no output to check against {schema}");
    let v = validator(schema);
    for value in values {
        let errors: Vec<String> = v.iter_errors(value).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{schema}: {value} {errors:?}");
    }
}

#[test]
fn family_prints_graph6() {
    let o = qdist(&["family", "--kind", "gndt", "--n", "9", "--d", "3", "--t", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "Hhzn^^n");
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.starts_with("# qdist family --kind gndt"), "{err}");
}

#[test]
fn count_on_c5() {
    let o = qdist(&["count", "--graph6", "Dhc", "--interval", "[0,1)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "2");
    // symbolic endpoints follow the order of each input
    let o = qdist(&["count", "--kind", "complete", "--n", "6", "--interval", "[0,n-2)"]);
    assert_eq!(stdout(&o).trim(), "0");
    let o = qdist(&["count", "--kind", "complete-minus-edge", "--n", "6", "--interval", "[0,n-2)"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn batch_input_from_stdin() {
    let o = qdist_stdin(&["count", "--interval", "[0,1)"], "# cycles\nDhc\n\nBw\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2\n0\n");
    let o = qdist_stdin(&["count", "--interval", "[0,1)"], "not graph6 at all\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["count", "--graph6", "Dhc", "--interval", "[3,1)"][..],
        &["count", "--graph6", "Dhc", "--interval", "0,1"],
        &["verify", "--theorem", "no_such_theorem", "--exhaustive", "3"],
        &["family", "--kind", "gndt", "--n", "9"],
        &["frobnicate"],
    ] {
        let o = qdist(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_sweep_exit_codes() {
    let o = qdist(&["--format", "csv", "verify", "--theorem", "diameter-main,delta2", "--exhaustive", "5"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("theorem_id,n,mode,checked,passed,failed,not_applicable"));
    assert!(out.contains("delta2,5,exhaustive,1024,"));
    assert!(out.lines().skip(1).all(|l| l.split(',').nth(5) == Some("0")));
    // C5 is the excluded case of the strengthened matching bound
    let o = qdist(&["verify", "--theorem", "delta2", "--graph6", "Dhc"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("N/A delta2 Dhc"));
    let o = qdist(&["search", "--theorem", "delta2", "--n-min", "1", "--n-max", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0 failures");
}

#[test]
fn sampled_runs_are_reproducible() {
    let args = ["--format", "json", "verify", "--theorem", "alpha-sandwich", "--sample", "200", "--order", "10", "--seed", "7"];
    let (a, b) = (qdist(&args), qdist(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let err = String::from_utf8(a.stderr).unwrap();
    assert!(err.contains("--seed 7"));
}

#[test]
fn json_outputs_match_schemas() {
    let json = |args: &[&str]| lines(&qdist(&[&["--format", "json"][..], args].concat()));
    assert_valid("family.json", &json(&["family", "--kind", "gndra", "--n", "9", "--d", "3", "--r", "2", "--a", "1"]));
    assert_valid("family.json", &json(&["family", "--kind", "k-copies", "--base", "cycle", "--n", "5", "--k", "2"]));
    assert_valid("spectrum.json", &json(&["spectrum", "--graph6", "Dhc", "--threshold", "1/2"]));
    assert_valid("spectrum.json", &json(&["spectrum", "--graph6", "Dhc", "--laplacian"]));
    assert_valid("count.json", &json(&["count", "--kind", "path", "--n", "6", "--interval", "[0,2)"]));
    assert_valid("invariants.json", &json(&["invariants", "--graph6", "Dhc", "--graph6", "C?"]));
    assert_valid(
        "quotient.json",
        &json(&["quotient", "--kind", "complete-bipartite", "--a", "2", "--b", "3", "--partition", "0,1|2,3,4"]),
    );
    assert_valid("theorem_report.json", &json(&["verify", "--theorem", "all", "--graph6", "Dhc", "--timings"]));
    assert_valid("theorem_report.json", &json(&["verify", "--theorem", "gn32a-spectrum,laplacian-remark", "--n-min", "10", "--n-max", "10"]));
    assert_valid("theorem_report.json", &json(&["verify", "--theorem", "cycle-matching", "--n-min", "3", "--n-max", "8"]));
    assert_valid("sweep_summary.json", &json(&["verify", "--theorem", "delta2,edge-interlacing", "--exhaustive", "5"]));
    assert_valid("sweep_summary.json", &json(&["verify", "--theorem", "delta2", "--sample", "50", "--order", "9"]));
    assert_valid("theorem_report.json", &json(&["verify", "--theorem", "gndt-bound", "--n-min", "7", "--n-max", "7"]));
}

#[test]
fn schemas_reject_malformed_output() {
    let v = validator("count.json");
    let good = serde_json::json!({
        "graph6": "Dhc", "family": null, "matrix": "Q", "interval": "[0,1)", "resolved": "[0,1)", "count": 2
    });
    assert!(v.is_valid(&good));
    let mut bad = good.clone();
    bad["count"] = serde_json::json!(-1);
    assert!(!v.is_valid(&bad));
    bad = good.clone();
    bad.as_object_mut().unwrap().remove("resolved");
    assert!(!v.is_valid(&bad));
    let r = validator("theorem_report.json");
    assert!(!r.is_valid(&serde_json::json!({
        "theorem_id": "made_up", "instance": {"graph6": "Dhc"}, "status": "pass", "passed": true, "witness": {}
    })));
}
