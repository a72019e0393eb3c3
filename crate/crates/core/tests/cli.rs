use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conjcoarse")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn free_abelian_discrete_exits_zero() {
    let out = run(&["--spec", r#"{"family":"zk","params":{"k":2}}"#, "--check", "is_discrete"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["status"], "holds");
    assert_eq!(r["check"], "is_discrete");
    assert_eq!(r["budget"]["radius"], 8);
    assert_eq!(r["elapsed_ms"], 0);
}

#[test]
fn infinite_dihedral_translation_exits_one() {
    let out = run(&[
        "--spec",
        r#"{"family":"dinf"}"#,
        "--check",
        "is_discrete",
        "--conjugators",
        "[0,1]",
        "--radius",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert!(r["witnesses"].as_array().unwrap().len() >= 10);
}

#[test]
fn heisenberg_cellularity_exits_one() {
    let out = run(&["--spec", r#"{"family":"heisenberg"}"#, "--check", "cellularity_criterion", "--subgroup", "g0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["certificate"]["orbit_lower_bounds"].as_array().is_some());
}

#[test]
fn unknown_exits_two() {
    // at the default radius every reflection ball lies inside the skipped prefix
    let out = run(&["--spec", r#"{"family":"dinf"}"#, "--check", "is_discrete", "--conjugators", "[0,1]", "--witnesses", "1000"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn errors_exit_three() {
    let out = run(&["--spec", r#"{"family":"zk","params":{"k":2}}"#, "--check", "frobnicate"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown check"));
    let out = run(&["--spec", "{broken", "--check", "is_discrete"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["--spec", "/nonexistent/spec.json", "--check", "is_discrete"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn spec_from_file_and_text_format() {
    let dir = std::env::temp_dir().join(format!("conjcoarse-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("q8.json");
    std::fs::write(&path, r#"{"family":"quaternion"}"#).unwrap();
    let out = run(&["--spec", path.to_str().unwrap(), "--check", "classify", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("status:     completed"));
    assert!(text.contains("\"dedekind\": true"));
}

#[test]
fn suites_are_byte_identical_across_runs() {
    let a = run(&["--check", "entourage-algebra", "--seed", "3"]);
    let b = run(&["--check", "suite", "--suite", "entourage-algebra", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bergman_and_stabilizer_checks() {
    let out = run(&["--spec", r#"{"family":"bergman","params":{"level":2}}"#, "--check", "commuting_conjugates"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["certificate"]["violations"], 0);
    let out = run(&["--spec", r#"{"family":"symmetric","params":{"n":3}}"#, "--check", "stabilizer_map_check"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["certificate"]["pairs_checked"], 18);
}

#[test]
fn saturation_trace_is_reported() {
    let out = run(&["--spec", r#"{"family":"quaternion"}"#, "--check", "fg_conjugacy_class", "--element", "g0"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(r["certificate"]["terminated"].as_bool().unwrap());
    assert_eq!(r["certificate"]["rounds"][0].as_array().unwrap().len(), 2);
}
