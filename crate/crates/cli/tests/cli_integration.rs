//! End-to-end runs of the binary: exit codes, round trips and JSON
//! determinism through the filesystem.

use std::path::Path;
use std::process::{Command, Output};

fn quadcheck(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadcheck"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn catalog_then_analyze_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let out = quadcheck(&["catalog", "--family", "padic", "--p", "3", "--n", "6", "--out", "."], dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    let pcp = dir.path().join("padic_3_6.pcp");
    assert!(pcp.exists());

    let out = quadcheck(&["analyze", "padic_3_6.pcp", "--format", "json"], dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["order_log"], 6);
    assert_eq!(json["class"], 5);
    assert_eq!(json["is_maximal_class"], true);
    assert_eq!(json["degree_of_commutativity"], 3);
    assert_eq!(json["exceptional"], false);
    assert_eq!(json["omega1_g1_order_log"], 2);
    assert_eq!(json["covered"], true);
    assert_eq!(json["lower_orders"], serde_json::json!([729, 81, 27, 9, 3, 1]));
}

#[test]
fn analyze_text_output_mentions_profile_fields() {
    let dir = tempfile::tempdir().unwrap();
    quadcheck(&["catalog", "--family", "heisenberg", "--p", "3", "--n", "3", "--out", "."], dir.path());
    let out = quadcheck(&["analyze", "heisenberg_3_3.pcp"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order: 3^3 = 27"), "{text}");
    assert!(text.contains("degree of commutativity: 0"), "{text}");
    assert!(text.contains("proved scope: true"), "{text}");
}

#[test]
fn module_checks_on_the_natural_module() {
    let dir = tempfile::tempdir().unwrap();
    quadcheck(&["catalog", "--family", "heisenberg", "--p", "3", "--n", "3", "--out", "."], dir.path());
    let out = quadcheck(
        &[
            "module",
            "heisenberg_3_3.pcp",
            "heisenberg_3_3_natural.mat",
            "--check",
            "offenders",
            "--format",
            "json",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["fmodule"], true);
    assert_eq!(json["j0_exponent"], 1);
    assert_eq!(json["offenders"].as_array().unwrap().len(), 11);

    let out = quadcheck(
        &["module", "heisenberg_3_3.pcp", "heisenberg_3_3_natural.mat", "--check", "quadratic", "--format", "json"],
        dir.path(),
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["checks"][0]["verdict"]["status"], "witness");
    assert_eq!(json["checks"][0]["verdict"]["witness"][0], serde_json::json!([0, 0, 1]));
}

#[test]
fn mismatched_prime_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    quadcheck(&["catalog", "--family", "heisenberg", "--p", "3", "--n", "3", "--out", "."], dir.path());
    quadcheck(&["catalog", "--family", "heisenberg", "--p", "5", "--n", "3", "--out", "."], dir.path());
    let out = quadcheck(
        &["module", "heisenberg_3_3.pcp", "heisenberg_5_3_natural.mat", "--check", "faithful"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
    assert!(stderr(&out).contains("does not match"), "{}", stderr(&out));
}

#[test]
fn inconsistent_file_exits_with_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.pcp");
    std::fs::write(
        &path,
        "3 4\ncomm 2 1: 0 0 1 0\ncomm 3 1: 0 0 0 2\ncomm 3 2: 0 0 0 1\npow 3: 0 0 0 1\n",
    )
    .unwrap();
    let out = quadcheck(&["analyze", "bad.pcp"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("overlap"), "{}", stderr(&out));
}

#[test]
fn weight_violation_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.pcp");
    std::fs::write(&path, "3 2\ncomm 2 1: 0 1\n").unwrap();
    let out = quadcheck(&["analyze", "w.pcp"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("weight"), "{}", stderr(&out));
}

#[test]
fn cap_exceeded_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    quadcheck(&["catalog", "--family", "padic", "--p", "3", "--n", "5", "--out", "."], dir.path());
    let out = quadcheck(&["analyze", "padic_3_5.pcp", "--max-elements", "10"], dir.path());
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
}

#[test]
fn unsupported_catalog_combinations_fail() {
    let dir = tempfile::tempdir().unwrap();
    let out = quadcheck(&["catalog", "--family", "heisenberg", "--p", "3", "--n", "4", "--out", "."], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = quadcheck(&["catalog", "--family", "nope", "--p", "3", "--n", "4", "--out", "."], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = quadcheck(&["catalog", "--family", "padic", "--p", "4", "--n", "4", "--out", "."], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn suite_json_is_byte_identical_for_fixed_seed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["suite", "--p", "3", "--max-n", "4", "--seed", "9", "--out", "report"];
    let mut first = args.to_vec();
    first[8] = "a.json";
    let out = quadcheck(&first, dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    let mut second = args.to_vec();
    second[8] = "b.json";
    let out = quadcheck(&second, dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    let a = std::fs::read(dir.path().join("a.json")).unwrap();
    let b = std::fs::read(dir.path().join("b.json")).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);

    let json: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert!(json["tool_version"].is_string());
    assert!(json["config"].is_object());
    assert!(json["instances"].is_array());
    assert_eq!(json["summary"]["failures"], 0);
}

#[test]
fn suite_skips_groups_over_the_cap_and_reports_them() {
    let dir = tempfile::tempdir().unwrap();
    // order 3^13 exceeds the default element cap; emission still works since
    // the catalog construction never enumerates elements
    quadcheck(&["catalog", "--family", "padic", "--p", "3", "--n", "13", "--out", "."], dir.path());
    let out = quadcheck(
        &["suite", "--p", "3", "--max-n", "3", "--include", "padic_3_13.pcp", "--format", "json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let skipped = json["instances"]
        .as_array()
        .unwrap()
        .iter()
        .find(|i| i["group"] == "padic_3_13")
        .expect("skipped instance is reported");
    assert_eq!(skipped["checks"][0]["name"], "resource-cap");
    assert!(skipped["checks"][0]["verdict"]["reason"]
        .as_str()
        .unwrap()
        .contains("skipped"));
}

#[test]
fn suite_ingests_extra_pcp_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cyclic9.pcp");
    std::fs::write(&path, "3 2\npow 1: 0 1\n").unwrap();
    let out = quadcheck(
        &["suite", "--p", "3", "--max-n", "3", "--include", "cyclic9.pcp", "--format", "json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let groups: Vec<&str> = json["instances"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| i["group"].as_str().unwrap())
        .collect();
    assert!(groups.contains(&"cyclic9"), "{groups:?}");
}
