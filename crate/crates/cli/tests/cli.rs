use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn algebra(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/algebras")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hallbridge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn read_json(p: &std::path::Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn verify_a2_passes_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let input = algebra("a2_f2.json");
    let mut reports = Vec::new();
    for (i, workers) in ["1", "1", "4"].iter().enumerate() {
        let out = dir.path().join(format!("r{i}.json"));
        let o = run(&[
            "verify",
            input.to_str().unwrap(),
            "--max-dim",
            "2",
            "--workers",
            workers,
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
        reports.push(std::fs::read(&out).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[0], reports[2]);
    let v: Value = serde_json::from_slice(&reports[0]).unwrap();
    assert_eq!(v["q"], 2);
    assert_eq!(v["passed"], true);
    assert_eq!(v["gldim"]["value"], 1);
    assert_eq!(v["checks"].as_array().unwrap().len(), 10);
    assert_eq!(v["algebra_fingerprint"].as_str().unwrap().len(), 64);
    assert!(v.get("timings_ms").is_none());
}

#[test]
fn verify_two_cycle_reports_gldim_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&[
        "verify",
        algebra("two_cycle_f2.json").to_str().unwrap(),
        "--max-dim",
        "2",
        "--checks",
        "main,reduced,structure",
        "--timings",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = read_json(&out);
    assert_eq!(v["gldim"]["value"], 2);
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);
    assert!(v["timings_ms"]["setup"].is_u64());
}

#[test]
fn infinite_dimensional_algebra_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&[
        "verify",
        algebra("one_loop_f2.json").to_str().unwrap(),
        "--max-dim",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not finite dimensional"));
}

#[test]
fn bad_arguments_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let input = algebra("a2_f2.json");
    let o = run(&[
        "verify",
        input.to_str().unwrap(),
        "--max-dim",
        "1",
        "--checks",
        "bogus",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "verify",
        "/nonexistent.json",
        "--max-dim",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["table", input.to_str().unwrap(), "--max-dim", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tiny_budget_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&[
        "verify",
        algebra("a2_f2.json").to_str().unwrap(),
        "--max-dim",
        "3",
        "--budget",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(read_json(&out)["error"]
        .as_str()
        .unwrap()
        .contains("budget"));
}

#[test]
fn hall_table_has_the_s1_s2_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let o = run(&[
        "table",
        algebra("a2_f2.json").to_str().unwrap(),
        "--max-dim",
        "2",
        "--which",
        "hall",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = read_json(&out);
    let entries = v["entries"].as_array().unwrap();
    let row = entries
        .iter()
        .find(|e| e["left"] == "(1,0)[]" && e["right"] == "(0,1)[]")
        .expect("S1*S2 row");
    let terms = row["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    // t^{-1} = t/2
    for t in terms {
        assert_eq!(t["coeff"]["a_num"], 0);
        assert_eq!(t["coeff"]["b_num"], 1);
        assert_eq!(t["coeff"]["b_den"], 2);
    }
}

#[test]
fn tables_at_small_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let input = algebra("a2_f2.json");
    let out = dir.path().join("t0.json");
    let o = run(&[
        "table",
        input.to_str().unwrap(),
        "--max-dim",
        "0",
        "--which",
        "hall",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = read_json(&out);
    assert_eq!(v["entries"].as_array().unwrap().len(), 1);

    let out = dir.path().join("t1.json");
    let o = run(&[
        "table",
        input.to_str().unwrap(),
        "--max-dim",
        "1",
        "--which",
        "dh",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = read_json(&out);
    let entries = v["entries"].as_array().unwrap();
    assert!(entries
        .iter()
        .any(|e| e["left"] == "E(1,0)[]" && e["right"] == "E(0,0)[]"));
    assert_eq!(v["which"], "dh");
}

#[test]
fn enumerate_counts_a2_classes() {
    let o = run(&[
        "enumerate",
        algebra("a2_f2.json").to_str().unwrap(),
        "--max-dim",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    // 0; S1, S2; S1+S1, S2+S2, S1+S2, P1
    assert_eq!(v["classes"].as_array().unwrap().len(), 7);
    assert_eq!(v["gldim"]["value"], 1);
}
