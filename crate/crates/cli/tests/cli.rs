use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hamlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn check_reports_predicates_for_k4() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = dir.path().join("report.json");
    let o = hamlab(&["check", &input, "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let report = read_json(&out);
    assert_eq!(report["schema_version"], 1);
    let row = &report["result"]["graphs"][0];
    for key in [
        "claw_free",
        "claw_o_heavy",
        "claw_f_heavy",
        "p6_free",
        "p6_gamma1_heavy",
        "dirac",
        "ore",
    ] {
        assert_eq!(row[key], true, "{key}");
    }
}

#[test]
fn generated_families_round_trip_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let p333 = dir.path().join("p333.txt");
    assert!(hamlab(&[
        "generate",
        "brousek",
        "--params",
        "3,3,3",
        "--out",
        p333.to_str().unwrap()
    ])
    .status
    .success());
    let labels = read_json(&dir.path().join("p333.labels.json"));
    assert_eq!(labels["labels"].as_array().unwrap().len(), 9);
    let out = dir.path().join("p333.json");
    assert!(
        hamlab(&["check", p333.to_str().unwrap(), "--out", out.to_str().unwrap()])
            .status
            .success()
    );
    let row = &read_json(&out)["result"]["graphs"][0];
    assert_eq!(row["claw_free"], true);
    assert_eq!(row["p6_free"], false);
    assert_eq!(row["ore"], false);

    let g1 = dir.path().join("g1.txt");
    assert!(
        hamlab(&["generate", "g1", "--params", "7", "--out", g1.to_str().unwrap()])
            .status
            .success()
    );
    let out = dir.path().join("g1.json");
    assert!(hamlab(&["check", g1.to_str().unwrap(), "--out", out.to_str().unwrap()])
        .status
        .success());
    let row = &read_json(&out)["result"]["graphs"][0];
    assert_eq!(row["n"], 16);
    assert_eq!(row["claw_o_heavy"], true);
    assert_eq!(row["claw_free"], false);
}

#[test]
fn classify_gamma_examples() {
    assert!(stdout(&hamlab(&["classify-gamma", "13,46"])).contains("guaranteed (⊆ γ3)"));
    assert!(stdout(&hamlab(&["classify-gamma", "12,13,46,56"])).contains("not guaranteed"));
    let o = hamlab(&["classify-gamma", "12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not symmetrical"));
}

#[test]
fn enumerate_gamma_census() {
    let o = hamlab(&["enumerate-gamma"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("4096 symmetrical patterns: 120 guaranteed, 3976 not guaranteed"));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.txt", "3 2\n0 1\n1 1\n");
    let o = hamlab(&["check", &input]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn ham_decides_petersen_and_cycles() {
    let dir = tempfile::tempdir().unwrap();
    // Petersen graph in graph6, then C5
    let input = write(dir.path(), "corpus.g6", "IheA@GUAo\nDhc\n");
    let out = dir.path().join("ham.json");
    let o = hamlab(&["ham", &input, "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    let graphs = &read_json(&out)["result"]["graphs"];
    assert_eq!(graphs[0]["decision"]["verdict"], "non_hamiltonian");
    assert_eq!(graphs[1]["decision"]["verdict"], "hamiltonian");
    let o = hamlab(&["ham", &input, "--budget", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn find_bad_p6_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    assert!(hamlab(&[
        "generate",
        "brousek",
        "--params",
        "3,3,3",
        "--out",
        path.to_str().unwrap()
    ])
    .status
    .success());
    let path = path.to_str().unwrap();
    assert_eq!(hamlab(&["find-bad-p6", path, "--gamma", "34"]).status.code(), Some(1));
    assert_eq!(hamlab(&["find-bad-p6", path]).status.code(), Some(2));
}

#[test]
fn closure_and_regions_commands() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    assert!(hamlab(&[
        "generate",
        "brousek",
        "--params",
        "3,3,3",
        "--out",
        path.to_str().unwrap()
    ])
    .status
    .success());
    let path = path.to_str().unwrap();
    assert!(hamlab(&["closure", path]).status.success());
    let o = hamlab(&["regions", path]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("8 regions"));
}

#[test]
fn if_campaign_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let mut docs = Vec::new();
    for name in ["a.json", "b.json"] {
        let out = dir.path().join(name);
        let o = hamlab(&[
            "verify-theorem9-if",
            "--trials",
            "300",
            "--nmax",
            "9",
            "--seed",
            "7",
            "--jobs",
            "2",
            "--gamma",
            "13,46",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", stdout(&o));
        let mut doc = read_json(&out);
        assert_eq!(doc["config"]["seed"], 7);
        doc["timestamp"] = Value::Null;
        doc["config"]["out"] = Value::Null;
        docs.push(doc);
    }
    assert_eq!(docs[0], docs[1]);
    assert_eq!(docs[0]["result"]["graphs"], 300);
    assert!(hamlab(&["verify-theorem9-if", "--nmax", "15"]).status.code() == Some(2));
}

#[test]
fn only_if_campaign_covers_every_pattern() {
    let o = hamlab(&["verify-theorem9-onlyif"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("3976 non-guaranteed patterns, 3976 covered by their routed witness, 0 uncovered"));
}

#[test]
fn lemma_campaign_small_run() {
    let o = hamlab(&["verify-lemmas", "--trials", "60", "--nmax", "10"]);
    assert!(o.status.success(), "{}", stdout(&o));
}
