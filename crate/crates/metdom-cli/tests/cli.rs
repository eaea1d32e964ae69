//! End-to-end checks of the binary: flags, formats, exit codes, and
//! determinism of the emitted reports.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_metdom"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn corpus_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../metdom/data/corpus-n6.g6")
}

#[test]
fn compute_family_spec() {
    let out = run(&["compute", "path:5", "--gamma-emd"]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("gamma_emd"), "{text}");
    assert!(text.contains("2"), "{text}");
}

#[test]
fn compute_json_is_deterministic() {
    let a = run(&["compute", "cycle:8", "--all", "--format", "json"]);
    let b = run(&["compute", "cycle:8", "--all", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let params = doc["params"].as_array().unwrap();
    let emd = params.iter().find(|p| p["name"] == "gamma_emd").unwrap();
    assert_eq!(emd["value"], 3);
    assert_eq!(emd["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn compute_rejects_bad_input() {
    let out = run(&["compute", "pentagon:5"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");

    let dir = std::env::temp_dir().join("metdom-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("disconnected.txt");
    std::fs::write(&file, "4 2\n0 1\n2 3\n").unwrap();
    let out = run(&["compute", file.to_str().unwrap(), "--beta"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("disconnected"), "{err}");
}

#[test]
fn compute_reads_edge_list_and_graph6_files() {
    let dir = std::env::temp_dir().join("metdom-cli-test");
    std::fs::create_dir_all(&dir).unwrap();

    let file = dir.join("p3.txt");
    std::fs::write(&file, "3 2\n0 1\n1 2\n").unwrap();
    let out = run(&["compute", file.to_str().unwrap(), "--beta-e"]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("beta_e"));

    let file = dir.join("k3.g6");
    std::fs::write(&file, "Bw\n").unwrap();
    let out = run(&[
        "compute",
        file.to_str().unwrap(),
        "--gamma-emd",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "{out:?}");
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 3);
    assert_eq!(doc["params"][0]["value"], 2);
}

#[test]
fn family_sweep_statuses() {
    let out = run(&["family", "prism2", "4..6", "--beta-e"]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert_eq!(text.matches("match").count(), 3, "{text}");

    // grid2:3 is a known discrepancy: the sweep reports it and exits 1.
    let out = run(&["family", "grid2", "3..3", "--gamma-emd"]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    assert!(stdout(&out).contains("mismatch"));

    let out = run(&["family", "path", "2..5", "--gamma"]);
    assert!(out.status.success(), "{out:?}");
}

#[test]
fn verify_fixture_suite_reports_known_findings() {
    let out = run(&["verify", "--suite", "fixtures"]);
    assert_eq!(
        out.status.code(),
        Some(1),
        "fixture suite has two known findings"
    );
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["summary"]["mismatch"], 2);
    let mismatched: Vec<&str> = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "mismatch")
        .map(|c| c["theorem_id"].as_str().unwrap())
        .collect();
    assert_eq!(
        mismatched,
        ["fixture-omega-beta-e", "fixture-omega-gamma-emd"]
    );
}

#[test]
fn verify_is_byte_deterministic() {
    let a = run(&["verify", "--suite", "fixtures,comparison", "--seed", "7"]);
    let b = run(&["verify", "--suite", "fixtures,comparison", "--seed", "7"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn scan_corpus() {
    let corpus = corpus_path();
    let corpus = corpus.to_str().unwrap();

    // The definitionally-true sandwich bounds never fail on the corpus.
    let out = run(&[
        "scan",
        corpus,
        "--bounds",
        "md-sandwich-lower,md-sandwich-upper,emd-sandwich-lower,emd-sandwich-upper",
    ]);
    assert!(out.status.success(), "{out:?}");
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["summary"]["mismatch"], 0);
    assert_eq!(doc["summary"]["match"], 4 * 142);

    // The order floor holds on the corpus; the probe reports that verdict.
    let out = run(&["scan", corpus, "--bounds", "emd-lower-order"]);
    assert!(out.status.success(), "{out:?}");

    // A full scan surfaces the stated-bound findings and exits 1.
    let out = run(&["scan", corpus, "--bounds", "all"]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");

    let out = run(&["scan", corpus, "--bounds", "no-such-bound"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn scan_survives_corrupted_lines() {
    let dir = std::env::temp_dir().join("metdom-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("corrupted.g6");
    std::fs::write(&file, "Bw\nbad line!\nCr\n").unwrap();
    let out = run(&[
        "scan",
        file.to_str().unwrap(),
        "--bounds",
        "emd-sandwich-lower",
    ]);
    // Scan continues past the bad line, reports it, and flags input error.
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("line 2"), "{err}");
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["summary"]["match"], 2);
}
