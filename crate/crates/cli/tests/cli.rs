use std::process::{Command, Output};

use serde_json::Value;

fn pinperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pinperm"))
        .args(args)
        .env_remove("PINPERM_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn alpha_words() {
    let out = pinperm(&["alpha", "--spec", "1", "--i", "4"]);
    assert_eq!(stdout(&out), "0110100110010110\n");
    let out = pinperm(&["alpha", "--spec", "2,1", "--i", "2"]);
    assert_eq!(stdout(&out), "01011010\n");
    let out = pinperm(&["alpha", "--spec", "2,1", "--i", "3", "--format", "json"]);
    assert_eq!(json(&out)["word"], "0101101010100101");
}

#[test]
fn alpha_rejects_index_zero() {
    let out = pinperm(&["alpha", "--spec", "1", "--i", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn language_slices() {
    let out = pinperm(&["lang", "--spec", "2,1", "--n", "4"]);
    assert_eq!(stdout(&out).lines().count(), 8);
    let out = pinperm(&["lang", "--spec", "1", "--n", "0", "--format", "json"]);
    assert_eq!(json(&out), serde_json::json!([""]));
    let out = pinperm(&["lang", "--spec", "1", "--n", "4", "--format", "json"]);
    let words = json(&out);
    assert_eq!(words.as_array().unwrap().len(), 10);
    assert!(words.as_array().unwrap().contains(&Value::from("0011")));
}

#[test]
fn class_slice_json() {
    let out = pinperm(&["class", "--spec", "1", "--n", "4", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["spec"], "1");
    assert_eq!(v["n"], 4);
    assert_eq!(v["count"], 22);
    assert_eq!(v["members"].as_array().unwrap().len(), 22);
    assert_eq!(v["members"][0], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn counts_rows() {
    let out = pinperm(&["counts", "--spec", "1", "--n-max", "7"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert_eq!(text.lines().last(), Some("7,948"));
    let out = pinperm(&["counts", "--spec", "1", "--n-max", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,count\n1,1\n2,2\n3,6\n");
}

#[test]
fn cost_guard() {
    let out = pinperm(&["counts", "--spec", "1", "--n-max", "11"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_pinperm"))
        .args(["class", "--spec", "1", "--n", "5"])
        .env("PINPERM_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = pinperm(&["class", "--spec", "1", "--n", "5", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sadic_complexity() {
    assert_eq!(
        stdout(&pinperm(&["sadic", "--spec", "2,1", "--n", "4"])),
        "8\n"
    );
    assert_eq!(
        stdout(&pinperm(&["sadic", "--directive", "0", "--n", "4"])),
        "10\n"
    );
    let out = pinperm(&["sadic", "--spec", "3", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn growth_table() {
    let out = pinperm(&["growth", "--spec", "1", "--n-max", "6", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["counts"], serde_json::json!([1, 2, 6, 22, 80, 276]));
    assert_eq!(v["supermultiplicativity_violations"], serde_json::json!([]));
}

/// The separation length 2M - 1 = 7 does not separate these two classes:
/// the report says so and the command exits with the check-failure code.
#[test]
fn diverge_reports_the_worked_pair() {
    let out = pinperm(&["diverge", "--s", "1", "--t", "2,1"]);
    let text = stdout(&out);
    assert!(text.contains("orientation: as given"));
    assert!(text.contains("M=4"));
    assert!(text.contains("N=7"));
    assert!(text.contains("witness: 3146275"));
    assert!(text.contains("first strict length: 8"));
    assert_eq!(out.status.code(), Some(1));

    let swapped = pinperm(&["diverge", "--s", "2,1", "--t", "1", "--format", "json"]);
    let v = json(&swapped);
    assert_eq!(v["outputs"]["orientation"], "swapped");
    assert_eq!(v["outputs"]["divergence"]["m"], 4);
    assert_eq!(
        v["outputs"]["divergence"]["witness"]
            .as_array()
            .unwrap()
            .len(),
        7
    );
    assert_eq!(v["passed"], false);

    let same = pinperm(&["diverge", "--s", "1", "--t", "1"]);
    assert_eq!(same.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    for suite in ["words", "pins", "perm", "sadic"] {
        let out = pinperm(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", stdout(&out));
    }
    let out = pinperm(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_report() {
    let out = pinperm(&["verify", "--suite", "ALL", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["inputs"]["suite"], "ALL");
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() > 150);
    let failed: Vec<&Value> = checks.iter().filter(|c| c["passed"] == false).collect();
    assert_eq!(v["passed"], failed.is_empty());
    for c in &failed {
        assert_eq!(c["suite"], "classes");
        assert!(!c["anchor"].as_str().unwrap().is_empty());
        assert_ne!(c["expected"], c["actual"]);
    }
    assert_eq!(
        out.status.code(),
        Some(if failed.is_empty() { 0 } else { 1 })
    );
    assert!(v.get("duration_ms").is_none());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--suite", "ALL", "--format", "json"][..],
        &["class", "--spec", "2,1", "--n", "6", "--format", "csv"][..],
        &["diverge", "--s", "1", "--t", "2,1"][..],
    ] {
        assert_eq!(pinperm(args).stdout, pinperm(args).stdout, "{args:?}");
    }
}
