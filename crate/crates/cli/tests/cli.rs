//! End-to-end tests of the binary: exit-code contract, document
//! ingestion, and byte-identical report replay.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_rbcm")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn catalog_lists_entries() {
    let out = run(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("s3-conj-inverse"));
    assert!(text.contains("negative control"));
}

#[test]
fn exit_zero_for_passing_suite() {
    let out = run(&["ybe-cat", "--catalog", "s3-conj-inverse"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout_of(&out).contains("[PASS]"));
}

#[test]
fn exit_one_with_witness_for_negative_control() {
    let out = run(&["rb-check", "--catalog", "s3-conj-identitymap"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("[FAIL]"));
    assert!(
        text.contains("a=(12), b=(123)"),
        "missing witness in: {text}"
    );
}

#[test]
fn exit_two_for_unknown_key_and_malformed_input() {
    let out = run(&["rb-check", "--catalog", "no-such-entry"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = std::env::temp_dir().join("rbcm-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = run(&["validate", "--group", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_three_for_unsupported_registry_name() {
    let dir = std::env::temp_dir().join("rbcm-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let op = dir.join("unknown-op.json");
    std::fs::write(
        &op,
        r#"{"kind":"rb-operator","map":{"named":"frobnicate"}}"#,
    )
    .unwrap();
    let out = run(&[
        "ybe-set",
        "--group",
        data("s3.json").to_str().unwrap(),
        "--rb",
        op.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(3),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn validates_document_groups_and_reports_corruption() {
    let out = run(&["validate", "--group", data("s3.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&[
        "validate",
        "--group",
        data("s3-corrupt.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("associativity"));
}

#[test]
fn full_pair_suite_from_documents() {
    let out = run(&[
        "rb-check",
        "--cm",
        data("s3-conj-cm.json").to_str().unwrap(),
        "--pair",
        data("inverse-pair.json").to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout_of(&out);
    assert!(text.contains("comparison"));
}

#[test]
fn set_solution_from_documents_passes_braid() {
    let out = run(&[
        "ybe-set",
        "--group",
        data("s3.json").to_str().unwrap(),
        "--rb",
        data("inverse-op.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn matrix_operator_from_documents() {
    let out = run(&[
        "ybe-set",
        "--group",
        data("heisenberg.json").to_str().unwrap(),
        "--rb",
        data("factorization-op.json").to_str().unwrap(),
        "--budget",
        "64",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn algebra_suite_from_documents() {
    let out = run(&[
        "algebra",
        "--acm",
        data("h3-ad-acm.json").to_str().unwrap(),
        "--pair",
        data("projection-pair.json").to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout_of(&out).contains("connection compatibility"));
}

#[test]
fn validates_matrix_crossed_module_document() {
    let out = run(&[
        "validate",
        "--cm",
        data("heis-conj-cm.json").to_str().unwrap(),
        "--budget",
        "80",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn pair_check_on_matrix_documents() {
    let out = run(&[
        "rb-check",
        "--cm",
        data("heis-conj-cm.json").to_str().unwrap(),
        "--pair",
        data("inverse-pair.json").to_str().unwrap(),
        "--budget",
        "80",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn lie_suite_passes_on_matrix_catalog() {
    let out = run(&[
        "lie",
        "--catalog",
        "heis-conj-factorization",
        "--budget",
        "64",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn order_four_scheme_through_the_cli() {
    let out = run(&[
        "lie",
        "--catalog",
        "heis-conj-inverse",
        "--fd-step",
        "1e-4",
        "--fd-scheme",
        "4",
        "--budget",
        "64",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn algebra_entry_through_group_command_is_structural() {
    let out = run(&["rb-check", "--catalog", "h3-projection"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("algebra"));
}

#[test]
fn reports_replay_byte_identically() {
    let dir = std::env::temp_dir().join("rbcm-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let first = dir.join("replay-1.json");
    let second = dir.join("replay-2.json");
    for (path, _) in [(&first, 0), (&second, 1)] {
        let out = run(&[
            "lie",
            "--catalog",
            "heis-conj-inverse",
            "--seed",
            "314",
            "--budget",
            "80",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert_eq!(a, b, "same seed must reproduce the identical report");

    // the embedded config echoes the run parameters verbatim
    let parsed: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(parsed["config"]["seed"], 314);
    assert_eq!(parsed["config"]["budget"], 80);
    assert!(parsed["passed"].as_bool().unwrap());
}

#[test]
fn different_seeds_still_pass_but_differ_in_echo() {
    let dir = std::env::temp_dir().join("rbcm-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seeded.json");
    let out = run(&[
        "rb-check",
        "--catalog",
        "heis-conj-inverse",
        "--seed",
        "1001",
        "--budget",
        "50",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(parsed["config"]["seed"], 1001);
}
