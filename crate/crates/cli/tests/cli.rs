//! End-to-end runs of the `sniep` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn sniep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sniep")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is json")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sniep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn third_eigenvalue_failure_is_named() {
    let o = sniep(&["check", "1,0.7,0.7,-0.9,-0.9", "--emit", "json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["kind"], "not_realizable");
    assert_eq!(v["failed_condition"], "lambda3");
}

#[test]
fn counterexample_spectrum_is_out_of_region() {
    let o = sniep(&["check", "1, 0.35, 0.34, -0.72, -0.72", "--emit", "json"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["kind"], "out_of_region");
}

#[test]
fn realize_emits_a_certificate() {
    let o = sniep(&["realize", "3/2 1 1/4 -1 -1/2", "--emit", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["kind"], "realizable");
    let m = v["certificate"]["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 5);
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.as_array().unwrap().iter().enumerate() {
            let x = x.as_f64().unwrap();
            assert!(x >= -1e-12);
            assert_eq!(x, m[j][i].as_f64().unwrap());
        }
    }
    assert!(v["certificate"]["residual"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn malformed_input_exits_3() {
    for args in [
        &["check", "1,2"][..],
        &["check", "1,x,0,0,0"],
        &["realize"],
        &["frobnicate"],
        &["roots", "1,2", "--digits", "0"],
        &["roots", "0"],
        &["sample", "--count", "0"],
    ] {
        let o = sniep(args);
        assert_eq!(code(&o), 3, "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(code(&sniep(&["--help"])), 0);
}

#[test]
fn table_replay_verifies() {
    let o = sniep(&["verify", "appendix-d", "--emit", "json"]);
    assert_eq!(code(&o), 0);
    let steps = json(&o)["steps"].as_array().unwrap().clone();
    let p_steps: Vec<_> = steps.iter().filter(|s| s["claim"].as_str().unwrap().starts_with("P_Bmin(1)")).collect();
    assert_eq!(p_steps.len(), 19);
    assert!(steps.iter().all(|s| s["status"] == "pass"));
}

#[test]
fn every_report_passes() {
    for target in ["appendix-a", "appendix-b", "appendix-c", "identities", "identities-h", "identities-c"] {
        let o = sniep(&["verify", target, "--emit", "csv"]);
        assert_eq!(code(&o), 0, "{target}");
        let text = String::from_utf8(o.stdout).unwrap();
        assert!(text.starts_with("step,status,claim,detail\n"));
        assert!(!text.contains(",fail,"), "{target}");
    }
}

#[test]
fn roots_take_ascending_coefficients() {
    let o = sniep(&["roots", "-3,78,12,-24", "--emit", "json"]);
    assert_eq!(code(&o), 0);
    let roots: Vec<String> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(roots.len(), 3);
    for r in &roots {
        let x: f64 = r.parse().unwrap();
        let value = -3.0 + 78.0 * x + 12.0 * x * x - 24.0 * x * x * x;
        assert!(value.abs() < 1e-7, "{r}");
        assert_eq!(r.split('.').nth(1).unwrap().len(), 10);
    }
}

#[test]
fn tables_csv_has_one_block_per_case_and_table() {
    let o = sniep(&["tables", "--emit", "csv"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.split("\n\n").count(), 4 * 6);
    let p_values: Vec<&str> = text.lines().filter_map(|l| l.strip_prefix("P_Bmin(1),")).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(p_values.len(), 19);
    assert!(p_values.iter().all(|p| p.starts_with('-')));
    assert!(p_values.contains(&"-2089397/31250000"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tables", "--emit", "json"][..],
        &["realize", "1, 1/2, 0, -1/3, -1/2", "--emit", "json"],
        &["sample", "--count", "500", "--seed", "4", "--emit", "csv"],
    ] {
        assert_eq!(sniep(args).stdout, sniep(args).stdout, "{args:?}");
    }
}

#[test]
fn sample_does_not_depend_on_jobs() {
    let one = sniep(&["sample", "--family", "h", "--count", "400", "--jobs", "1", "--emit", "json"]);
    let four = sniep(&["sample", "--family", "h", "--count", "400", "--jobs", "4", "--emit", "json"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(json(&one)["violations"], 0);
}

#[test]
fn out_flag_writes_the_file() {
    let path = scratch("verdict.json");
    let o = sniep(&["check", "1,1,1,-1,-1", "--emit", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["kind"], "realizable");
}

#[test]
fn batch_file_reports_the_worst_code() {
    let path = scratch("batch.txt");
    std::fs::write(&path, "# spectra\n1,1,1,-1,-1\n\n1,0.7,0.7,-0.9,-0.9\n").unwrap();
    let o = sniep(&["check", "--file", path.to_str().unwrap(), "--emit", "csv"]);
    assert_eq!(code(&o), 1);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains(",not_realizable,lambda3,"));
}
