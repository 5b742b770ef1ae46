use std::process::{Command, Output};

use serde_json::Value;

fn trigva(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigva"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    let v: Value = serde_json::from_slice(&out.stdout).expect("json report");
    v.as_array().expect("array of records").clone()
}

#[test]
fn iso_passes_with_five_records() {
    let out = trigva(&["verify", "iso", "--no-timing"]);
    assert!(out.status.success());
    let recs = records(&out);
    assert_eq!(recs.len(), 5);
    for r in &recs {
        assert_eq!(r["status"], "pass");
        assert_eq!(r["elapsed_ms"], 0);
        assert!(r["witness"].is_null());
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 6);
    }
}

#[test]
fn fault_gives_nonzero_exit_and_witnesses() {
    let out = trigva(&[
        "verify",
        "iso",
        "--box",
        "2",
        "--perturb",
        "character-square",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let recs = records(&out);
    assert!(recs
        .iter()
        .all(|r| r["status"] == "fail" && r["witness"].is_string()));
    assert!(String::from_utf8_lossy(&out.stderr).contains("iso/A failed"));
}

#[test]
fn flags_reach_the_configuration() {
    let out = trigva(&[
        "verify",
        "dims",
        "--interval",
        "0..2",
        "--level",
        "1",
        "--q-spec",
        "3/2",
        "--q-spec",
        "5/3",
        "--no-timing",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let recs = records(&out);
    let l = recs
        .iter()
        .find(|r| r["check_id"] == "dims/L/l1/I=[0,2]")
        .expect("L record");
    assert_eq!(l["params"]["q_specs"], serde_json::json!(["3/2", "5/3"]));
    let out = trigva(&[
        "verify",
        "jacobi",
        "--seed",
        "7",
        "--triples",
        "5",
        "--jacobi-box",
        "2",
        "--no-timing",
    ]);
    assert!(out.status.success());
    let recs = records(&out);
    let t = recs
        .iter()
        .find(|r| r["check_id"] == "jacobi/trig-A")
        .unwrap();
    assert_eq!(t["params"]["seed"], 7);
    assert_eq!(t["params"]["triples"], 5);
    assert_eq!(t["params"]["box"], 2);
}

#[test]
fn fock_truncation_flags() {
    let out = trigva(&[
        "verify",
        "weights",
        "--vars",
        "5",
        "--deg",
        "4",
        "--order",
        "2",
        "--no-timing",
    ]);
    assert!(out.status.success());
    let recs = records(&out);
    assert_eq!(
        recs[0]["params"]["trunc"],
        serde_json::json!({"K": 5, "D": 4, "N": 2})
    );
}

#[test]
fn markdown_and_output_file() {
    let dir = std::env::temp_dir().join(format!("trigva-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.md");
    let out = trigva(&[
        "verify",
        "singular",
        "--level",
        "1",
        "--format",
        "md",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("## singular"));
    assert!(text.contains("4/4 checks passed"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = trigva(&["verify", "jacobi", "--triples", "20", "--no-timing"]);
    let b = trigva(&["verify", "jacobi", "--triples", "20", "--no-timing"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_arguments_are_usage_errors() {
    for args in [
        &["verify", "nonsense"][..],
        &["verify", "iso", "--perturb", "nonsense"],
        &["verify", "iso", "--interval", "3"],
        &["verify", "iso", "--format", "xml"],
    ] {
        let out = trigva(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    // rejected by configuration validation rather than parsing
    let out = trigva(&["verify", "dims", "--q-spec", "7/5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("two q specializations"));
}
