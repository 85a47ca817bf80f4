//! End-to-end runs of the binary on the documented example files.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn example(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "examples", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn tvarih(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tvarih"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn error_object(o: &Output) -> Value {
    serde_json::from_slice(&o.stderr).expect("stderr is a JSON error object")
}

fn scratch(name: &str, contents: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn quadric_poincare() {
    let o = tvarih(&["poincare", &example("quadric.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t^6 + t^4 + t^2 + 1\n");
}

#[test]
fn quadric_json_diagnostics() {
    let o = tvarih(&["--json", "poincare", "--closed-form-check", &example("quadric.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["poincare"], serde_json::json!([1, 0, 1, 0, 1, 0, 1]));
    assert_eq!(v["diagnostics"]["tail_rays"], 4);
    assert_eq!(v["diagnostics"]["fiber_rays"]["0"], 7);
    assert_eq!(v["diagnostics"]["fiber_rays"]["1"], 7);
    assert_eq!(v["diagnostics"]["fiber_rays"]["inf"], 6);
    assert_eq!(v["closed_form"]["agrees"], true);
    let betti: Vec<i64> = v["betti"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["dim"].as_i64().unwrap())
        .collect();
    assert_eq!(betti, vec![1, 0, 1, 0, 1, 0, 1]);
}

#[test]
fn projective_plane_with_trace() {
    let o = tvarih(&["--json", "poincare", "--trace", &example("p2-surface.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["pretty"], "t^4 + t^2 + 1");
    assert_eq!(v["diagnostics"]["orbits"], 2);
    assert_eq!(v["trace"]["orbits"].as_array().unwrap().len(), 2);
}

#[test]
fn output_is_deterministic() {
    let a = tvarih(&["--json", "poincare", "--trace", &example("quadric.json")]);
    let b = tvarih(&["--json", "poincare", "--trace", &example("quadric.json")]);
    assert_eq!(a.stdout, b.stdout);
    let a = tvarih(&["orbits", &example("quadric.json")]);
    let b = tvarih(&["orbits", &example("quadric.json")]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn toric_kernel_commands() {
    let o = tvarih(&["toric-g", &example("square-cone.json")]);
    assert_eq!(stdout(&o), "1 + t^2\n");
    let o = tvarih(&["toric-h", &example("p2-fan.json")]);
    assert_eq!(stdout(&o), "1 + t^2 + t^4\n");
    let o = tvarih(&["--json", "toric-h", &example("p2-fan.json")]);
    assert_eq!(json(&o)["coefficients"], serde_json::json!([1, 0, 1, 0, 1]));
}

#[test]
fn validate_complete_and_affine_inputs() {
    let o = tvarih(&["validate", &example("quadric.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("valid"));
    let o = tvarih(&["--json", "validate", &example("affine-threefold-cone.json")]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["valid"], true);
    assert_eq!(v["complete"], false);
}

#[test]
fn incomplete_input_is_a_mathematical_failure() {
    let o = tvarih(&["--json", "poincare", &example("affine-threefold-cone.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(error_object(&o)["error"], "incomplete");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let o = tvarih(&["--json", "poincare", "/nonexistent/input.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_object(&o)["error"], "usage");
    let bad = scratch("truncated.json", "{\"schema_version\": 1, \"curve\": ");
    let o = tvarih(&["--json", "poincare", &bad]);
    assert_eq!(o.status.code(), Some(2));
    let e = error_object(&o);
    assert_eq!(e["error"], "parse");
    assert!(e["message"].as_str().unwrap().contains("line"));
    let o = tvarih(&["poincare"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tvarih(&["--policy", "sometimes", "poincare", &example("quadric.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dangling_label_is_reported_with_its_path() {
    let doc = r#"{
      "curve": { "genus": 0, "points": ["0", "inf"] },
      "lattice_rank": 1,
      "divisors": [
        { "tail": { "rays": [[1]] }, "locus": "complete",
          "coefficients": { "7": { "vertices": [[0]], "rays": [[1]] } } }
      ]
    }"#;
    let o = tvarih(&["--json", "validate", &scratch("dangling.json", doc)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(error_object(&o)["message"].as_str().unwrap().contains("divisors[0]"));
}

#[test]
fn downgrade_round_trips_through_poincare() {
    let o = tvarih(&[
        "downgrade",
        &example("affine-threefold-cone.json"),
        "--divisor",
        "0",
        "--u",
        "1,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let path = scratch("downgraded.json", &stdout(&o));
    let o = tvarih(&["--json", "poincare", &path]);
    assert_eq!(o.status.code(), Some(0));
    // the downgrade of the affine cone is the projective surface t^4 + 3t^2 + 1
    assert_eq!(json(&o)["poincare"], serde_json::json!([1, 0, 3, 0, 1]));
    let o = tvarih(&[
        "downgrade",
        &example("affine-threefold-cone.json"),
        "--divisor",
        "0",
        "--u",
        "1,-1",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn orbit_graph() {
    let o = tvarih(&["orbits", "--dot", &example("p2-surface.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("digraph orbits {"));
}

#[test]
fn selfcheck_passes() {
    let o = tvarih(&["--json", "selfcheck"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["ok"], true);
}
