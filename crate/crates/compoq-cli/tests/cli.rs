//! End-to-end tests of the compoq binary: output shapes, exit codes, and
//! determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compoq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn series_rr_matches_printed_expansion() {
    let out = run(&["series", "rr", "--order", "30"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let coeffs: Vec<&str> = value["coeffs"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    let expected = [
        "1", "-1", "0", "0", "-1", "1", "-1", "1", "0", "-1", "2", "-2", "1", "1", "-2", "3",
        "-3", "2", "0", "-3", "5", "-5", "3", "1", "-5", "7", "-7", "4", "1", "-7", "11",
    ];
    assert_eq!(coeffs, expected);
}

#[test]
fn verify_even_k_reports_and_passes() {
    let out = run(&["verify", "even-k", "--k", "6", "--max-n", "40"]);
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["pass"], serde_json::json!(true));
    assert_eq!(value["params"]["k"], serde_json::json!(6));
    let cells = value["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 41);
    assert!(cells.iter().all(|c| c["pass"] == serde_json::json!(true)));
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify", "all", "--max-n", "16", "--brute-max-n", "10"]);
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["pass"], serde_json::json!(true));
    assert_eq!(value["reports"].as_array().unwrap().len(), 18);
}

#[test]
fn mu_agreement_column() {
    let out = run(&["mu", "--max-n", "100"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,mu_compositions,mu_trial,ok"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 100);
    assert!(rows.iter().all(|r| r.ends_with(",ok")));
}

#[test]
fn zeta_within_bound() {
    let out = run(&["zeta", "--set", "n-star", "--z", "1", "--s", "4", "--bound", "5000"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["within_bound"], serde_json::json!(true));
}

#[test]
fn compositions_listing() {
    let out = run(&["compositions", "--set", "p3", "--n", "4"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["count"], serde_json::json!(3));
    assert_eq!(value["compositions"][0], serde_json::json!([1, 1, 1, 1]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["series", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "even-k"]).status.code(), Some(2)); // missing --k
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2)); // clap usage error
}

#[test]
fn infeasible_exits_three() {
    assert_eq!(run(&["table", "p", "--max-n", "200000"]).status.code(), Some(3));
    assert_eq!(
        run(&["compositions", "--set", "naturals", "--n", "40"]).status.code(),
        Some(3)
    );
}

#[test]
fn order_env_variable_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_compoq"))
        .args(["series", "psi"])
        .env("COMPOQ_ORDER", "10")
        .output()
        .unwrap();
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["order"], serde_json::json!(10));
    assert_eq!(value["coeffs"].as_array().unwrap().len(), 11);
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "rr", "--max-n", "20"]);
    let b = run(&["verify", "rr", "--max-n", "20"]);
    assert_eq!(stdout(&a), stdout(&b));
    let c = run(&["asymptotic", "p3", "--n", "100,200"]);
    let d = run(&["asymptotic", "p3", "--n", "100,200"]);
    assert_eq!(stdout(&c), stdout(&d));
}

#[test]
fn seed_corpus_writes_fixtures() {
    let dir = std::env::temp_dir().join(format!("compoq-corpus-{}", std::process::id()));
    let out = run(&["--seed-corpus", dir.to_str().unwrap()]);
    assert!(out.status.success(), "exit {:?}", out.status.code());
    for file in [
        "series_rr_product_30.json",
        "series_partition_50.json",
        "series_psi_50.json",
        "verify_all.json",
        "table_pod_60.csv",
    ] {
        assert!(dir.join(file).exists(), "{file} missing");
    }
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("verify_all.json")).unwrap())
            .unwrap();
    assert_eq!(report["pass"], serde_json::json!(true));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn table_csv_values() {
    let out = run(&["table", "p3", "--max-n", "5"]);
    let text = stdout(&out);
    assert!(text.trim_end().ends_with("5,108"), "{text}");
}
