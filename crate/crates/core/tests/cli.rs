use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use bhk_mirror::verify::recompute_table_verdicts;
use bhk_mirror::Status;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str], input: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bhk-mirror"))
        .args(args)
        .arg(fixture(input))
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_passes_with_exit_zero() {
    for f in ["elliptic_cubic.json", "quadric_pair.json"] {
        let out = run(&["verify"], f);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{f}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn verify_report_schema_and_recomputation() {
    let out = run(&["verify", "--json"], "elliptic_cubic.json");
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["summary", "tables", "verdicts", "anomalies"]);
    let tables: Vec<&str> = v["tables"]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(
        tables,
        ["A", "B", "A_dual", "B_dual", "oracle_B", "oracle_B_dual"]
    );
    assert_eq!(
        v["tables"]["B"]["entries"],
        serde_json::json!({"0/0": 1, "0/1": 1, "1/0": 1, "1/1": 1})
    );
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 5);
    assert!(verdicts.iter().all(|x| x["status"] == "PASS"));
    let recomputed = recompute_table_verdicts(&v).unwrap();
    assert_eq!(recomputed.len(), 4);
    assert!(recomputed.iter().all(|(_, s)| *s == Status::Pass));
}

#[test]
fn reports_are_byte_deterministic() {
    let a = run(
        &["verify", "--json", "--threads", "1"],
        "elliptic_cubic.json",
    );
    let b = run(
        &["verify", "--json", "--threads", "3"],
        "elliptic_cubic.json",
    );
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["check-unified", "--json"], "bb_cubic.json");
    let b = run(&["check-unified", "--json"], "bb_cubic.json");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_errors_exit_two() {
    for f in [
        "singular_matrix.json",
        "cubic_trivial_group.json",
        "does_not_exist.json",
    ] {
        let out = run(&["verify"], f);
        assert_eq!(out.status.code(), Some(2), "{f}");
        assert!(
            String::from_utf8_lossy(&out.stderr).starts_with("error:"),
            "{f}"
        );
    }
    let out = run(&["verify"], "cubic_trivial_group.json");
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("deg^v in N = false"), "{err}");
    let out = run(&["check-unified", "--degree-bound", "x/y"], "bb_cubic.json");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oversized_groups_exit_three() {
    let out = run(&["verify"], "group_cap.json");
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the cap"));
}

#[test]
fn check_unified_statuses() {
    let out = run(&["check-unified", "--json"], "bb_cubic.json");
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["primal"]["status"], "PASS");
    assert_eq!(v["dual"]["status"], "PASS");

    let out = run(&["check-unified", "--json"], "bb_cubic_bound0.json");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["status"], "FAIL-UNKNOWN");
    // the command-line bound overrides the document's
    let out = run(
        &["check-unified", "--degree-bound", "6"],
        "bb_cubic_bound0.json",
    );
    assert_eq!(out.status.code(), Some(0));
    let out = run(
        &["check-unified", "--degree-bound", "0"],
        "elliptic_cubic.json",
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn rings_sides_and_engines() {
    let b = run(
        &["rings", "--json", "--engine", "complex"],
        "elliptic_cubic.json",
    );
    let o = run(
        &["rings", "--json", "--engine", "orbifold-only"],
        "elliptic_cubic.json",
    );
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(b.stdout, o.stdout);
    let a = run(&["rings", "--side", "A"], "elliptic_cubic.json");
    assert!(String::from_utf8_lossy(&a.stdout).contains("Q-\\Q+"));
}

#[test]
fn dual_is_an_input_document() {
    let out = run(&["dual"], "elliptic_cubic.json");
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    let dual = bhk_mirror::verify::InputSpec::parse(&doc.to_string()).unwrap();
    let report = bhk_mirror::verify::run_analyze(&dual).unwrap();
    assert_eq!(report["group"]["order"], 9);
    assert_eq!(report["dual_group"]["order"], 3);
}

#[test]
fn analyze_reports_the_datum() {
    let out = run(&["analyze"], "elliptic_cubic.json");
    let v = json_of(&out);
    assert_eq!(v["weights"], serde_json::json!(["1/3", "1/3", "1/3"]));
    assert_eq!(v["central_charge"], "1");
}
