//! End-to-end tests of the `adjres` binary.

use std::process::Command;

fn adjres(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_adjres"))
        .args(args)
        .env_remove("ADJRES_CACHE")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn roots_prints_exponents() {
    let (code, out, _) = adjres(&["roots", "E6"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "exponents 1 4 5 7 8 11"));
    assert!(out.contains("weyl group order 51840"));
}

#[test]
fn e8_is_excluded() {
    let (code, out, err) = adjres(&["resolve", "E8"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("computation excluded at desk scale"));
}

#[test]
fn e7_needs_opt_in() {
    let (code, _, err) = adjres(&["cohom", "E7", "--wedge", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("--allow-e7"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(adjres(&["frobnicate", "A2"]).0, 2);
    assert_eq!(adjres(&["resolve", "A2", "--sheaf", "tangent"]).0, 2);
    assert_eq!(adjres(&["bbw", "A2", "--weight", "1,2,3"]).0, 2);
    assert_eq!(adjres(&["cohom", "A2", "--wedge", "9"]).0, 2);
    assert_eq!(adjres(&["kernel-check", "sl3", "--max-degree", "9"]).0, 2);
}

#[test]
fn json_is_versioned_and_deterministic() {
    let args = ["resolve", "G2", "--sheaf", "structure", "--format", "json"];
    let (code, first, _) = adjres(&args);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["type"], "G2");
    assert_eq!(v["terms"][1]["entries"][0]["twist"], -6);
    assert_eq!(adjres(&args).1, first);
}

#[test]
fn threads_do_not_change_output() {
    let one = adjres(&["cohom", "C3", "--threads", "1"]);
    let four = adjres(&["cohom", "C3", "--threads", "4"]);
    assert_eq!(one.0, 0);
    assert_eq!(one, four);
}

#[test]
fn resolve_reports_mismatch_with_exit_one() {
    let (code, out, _) = adjres(&["resolve", "B3", "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["matches_prediction"], false);
    assert_eq!(v["computed_j"], 2);
    assert_eq!(v["matches_computed_j"], true);
    assert_eq!(adjres(&["resolve", "C3"]).0, 0);
}

#[test]
fn symbolic_verbs() {
    let (code, out, _) = adjres(&["kernel-check", "A2", "--max-degree", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("t=3 kernel 9 predicted 9"));
    let (code, out, _) = adjres(&["saito", "B2"]);
    assert_eq!(code, 0);
    assert!(out.contains("quotient -8"));
}

#[test]
fn cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("adjres-cache-{}", std::process::id()));
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_adjres"))
            .args(["verify", "A2", "--format", "json"])
            .env("ADJRES_CACHE", &dir)
            .output()
            .unwrap()
    };
    let first = run();
    let files: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}
