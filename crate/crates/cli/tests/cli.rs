use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycover")).args(args).output().expect("binary runs")
}

fn machine(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "machine"]);
    let out = run(&all);
    let report = serde_json::from_slice(&out.stdout).expect("machine output is JSON");
    (out.status.code().unwrap(), report)
}

#[test]
fn tropical_degree() {
    let (code, report) = machine(&["cover", "degree", "--morphism", "FIX-TROP", "--index", "FIX-TROP-M"]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "pass");
    assert_eq!(report["output"]["degree"], 3);
}

#[test]
fn extension_conflict_exits_one() {
    let (code, report) = machine(&["extend", "--morphism", "FIX-IDREAD", "--index", "FIX-IDREAD-M"]);
    assert_eq!(code, 1);
    assert_eq!(report["verdict"], "fail");
    let w = &report["witnesses"][0];
    assert_eq!(
        (&w["element"], &w["first_target"], &w["second_target"], &w["first_sum"], &w["second_sum"]),
        (&"Õ1".into(), &"B".into(), &"C".into(), &2.into(), &1.into())
    );
    assert_eq!(report["output"]["values"]["O1"], 3);
}

#[test]
fn missing_file_exits_two() {
    let out = run(&["poset", "validate", "missing.file"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.file"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["cover", "degree", "--morphism", "FIX-TROP"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn failures_carry_witnesses() {
    let cases: [&[&str]; 7] = [
        &["cover", "balanced", "--morphism", "FIX-CE2", "--index", "FIX-CE2-M"],
        &["cover", "ibc-oracle", "--morphism", "FIX-CE1", "--index", "FIX-CE1-M"],
        &["morphism", "check", "--morphism", "FIX-OPEN"],
        &["cover", "search", "--morphism", "FIX-OPEN", "--bound", "4"],
        &["connect", "strong", "FIX-IDREAD:target"],
        &["lift", "path", "--morphism", "FIX-LIFT", "--index", "FIX-LIFT-M", "--from", "β1", "--path", "β,B"],
        &["graph", "sample", "--morphism", "FIX-GRAPH", "--point", "t:1"],
    ];
    for args in cases {
        let (code, report) = machine(args);
        assert_eq!(code, 1, "{args:?}");
        assert_eq!(report["verdict"], "fail");
        assert!(!report["witnesses"].as_array().unwrap().is_empty(), "{args:?}");
    }
    let (_, report) = machine(cases[0]);
    let w = &report["witnesses"][0];
    assert_eq!((&w["element"], &w["target"], &w["value"], &w["sum"]), (&"A1".into(), &"B".into(), &2.into(), &3.into()));
    let (_, report) = machine(cases[5]);
    assert_eq!(report["witnesses"][0]["element"], "β1");
}

#[test]
fn machine_output_is_deterministic() {
    let args = ["fixtures", "run", "--format", "machine"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let report: Value = serde_json::from_slice(&a.stdout).unwrap();
    let names: Vec<&String> = report["output"].as_object().unwrap().keys().collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), 7);
    assert_eq!(report["output"]["FIX-TROP"]["degree"], 3);
}

#[test]
fn refinement_and_sampling() {
    let (code, report) = machine(&["graph", "refine", "--morphism", "FIX-GRAPH"]);
    assert_eq!(code, 0);
    assert_eq!(report["output"]["new_target_vertices"], serde_json::json!(["t@2"]));
    assert_eq!(report["output"]["new_source_vertices"], serde_json::json!(["f@2"]));
    let (code, report) = machine(&["graph", "sample", "--morphism", "FIX-GRAPH", "--refine", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(report["output"]["samples"], 100);
}

#[test]
fn stellar_counts() {
    let (code, report) = machine(&["subdivide", "stellar", "--simplex", "1,2,3,4", "--face", "1,2,3"]);
    assert_eq!(code, 0);
    assert_eq!(report["output"]["added_by_dim"], serde_json::json!([1, 4, 6, 3]));
    assert_eq!(report["output"]["faces_after"], 27);
}

#[test]
fn dot_export_of_morphism() {
    let out = run(&["export", "dot", "--morphism", "FIX-CE1", "--kind", "covering"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let nodes = text.lines().filter(|l| l.contains("[label=")).count();
    let mapping = text.lines().filter(|l| l.contains("style=dashed")).count();
    let covers = text.lines().filter(|l| l.contains(" -> ") && !l.contains("dashed")).count();
    assert_eq!((nodes, covers, mapping), (5, 3, 3));
}

#[test]
fn reads_json_documents() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("target.json"), r#"{"elements": ["A", "B"], "covers": [["A", "B"]]}"#).unwrap();
    let morphism = r#"{
        "source": {"elements": ["A1", "A2", "B1"], "covers": [["A1", "B1"], ["A2", "B1"]]},
        "target": "target.json",
        "map": {"A1": "A", "A2": "A", "B1": "B"}
    }"#;
    fs::write(dir.path().join("phi.json"), morphism).unwrap();
    fs::write(dir.path().join("m.json"), r#"{"values": {"A1": 1, "A2": 1, "B1": 1}}"#).unwrap();
    let phi = dir.path().join("phi.json");
    let m = dir.path().join("m.json");
    let (code, report) = machine(&["cover", "balanced", "--morphism", phi.to_str().unwrap(), "--index", m.to_str().unwrap()]);
    assert_eq!(code, 0, "{report}");
    let (code, report) = machine(&["morphism", "check", "--morphism", phi.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(report["witnesses"][0]["element"], "B1");
    let target = dir.path().join("target.json");
    let (code, report) = machine(&["poset", "stats", target.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["output"]["dimension"], 1);
}
