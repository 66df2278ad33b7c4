use std::process::Command;

use serde_json::Value;

fn triality(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_triality")).args(args).output().expect("binary runs")
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = triality(&["verify", "--suite", "galois"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(triality(&["verify", "--seed", "minus"]).status.code(), Some(64));
    assert_eq!(triality(&["frobnicate"]).status.code(), Some(64));
}

#[test]
fn weyl_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("weyl.json");
    let out = triality(&["verify", "--suite", "weyl", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["seed"], 7);
    assert_eq!(report["suites"].as_array().unwrap().len(), 1);
    for check in report["suites"][0]["checks"].as_array().unwrap() {
        assert_eq!(check["status"], "pass", "{check}");
        assert!(check["provenance"].is_string());
    }
}

#[test]
fn mismatches_alone_exit_two() {
    let out = triality(&["verify", "--suite", "lie", "--samples", "5", "--format", "md"]);
    assert_eq!(out.status.code(), Some(2));
    let md = String::from_utf8_lossy(&out.stdout);
    assert!(md.contains("| s3_commutant_dim | paper_mismatch | 8 | 6 |"));
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        triality(&["verify", "--suite", "all", "--seed", "11", "--samples", "10", "--out", path.to_str().unwrap()]);
        std::fs::read(path).unwrap()
    };
    assert_eq!(run("a.json"), run("b.json"));
}

#[test]
fn dtheta_dump_is_a_28_square_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let out = triality(&["compute", "dtheta", "--dump", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!((m["rows"].as_u64(), m["cols"].as_u64()), (Some(28), Some(28)));
    assert_eq!(m["entries"].as_array().unwrap().len(), 28 * 28);
}

#[test]
fn shape_enumeration_writes_every_shape() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("shapes.json");
    let out = triality(&["enumerate", "shapes", "--total", "8", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["count"], 893);
    assert_eq!(doc["shapes"].as_array().unwrap().len(), 893);
}
