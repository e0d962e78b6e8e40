use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hammock_core::{corpus, io};
use serde_json::Value;

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn fixture(name: &str) -> String {
    corpus_dir().join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hammock-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let code = out.status.code().expect("exit code");
    let v =
        serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (code, v)
}

fn verdict(report: &Value, name: &str) -> bool {
    report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["name"] == name)
        .unwrap_or_else(|| panic!("no verdict {name}"))["pass"]
        .as_bool()
        .unwrap()
}

#[test]
fn model_check_accepts_the_trivial_structure() {
    let (code, r) = run_json(&["model-check", &fixture("chain3-trivial.json")]);
    assert_eq!(code, 0);
    assert!(verdict(&r, "model_axioms"));
    assert_eq!(r["verdicts"][0]["strength"], "exact");
}

#[test]
fn model_check_rejects_a_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let c = &corpus::corruptions()[0];
    let path = dir.path().join("bad.json");
    std::fs::write(&path, io::model_to_json(&c.structure).unwrap()).unwrap();
    let (code, r) = run_json(&["model-check", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(!verdict(&r, "model_axioms"));
    let failed: Vec<&str> = r["artifacts"]["failed_axioms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| a.as_str().unwrap())
        .collect();
    assert!(failed.contains(&c.axiom.code()), "{failed:?}");
}

#[test]
fn compare_agrees_at_pi0() {
    let (code, r) = run_json(&["compare", &fixture("chain3-trivial.json"), "--A", "0", "--B", "2"]);
    assert_eq!(code, 0);
    assert!(verdict(&r, "pi0_agree") && verdict(&r, "pi0_matches_ho_hom"));
    let spaces = r["artifacts"]["comparison"]["spaces"].as_array().unwrap();
    assert_eq!(spaces.len(), 4);
    assert!(spaces.iter().all(|s| s["pi0"] == 1));
}

#[test]
fn homology_of_the_nerve_of_z2() {
    let (code, r) = run_json(&["homology", &fixture("nerve-z2.json"), "--degree", "1"]);
    assert_eq!(code, 0);
    let h1 = &r["artifacts"]["homology"][1];
    assert_eq!(h1["free_rank"], 0);
    assert_eq!(h1["torsion"], serde_json::json!([2]));
}

#[test]
fn parse_errors_exit_with_two_and_give_a_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    std::fs::write(
        &path,
        "{\"format\": \"hammock-lab/1\", \"objects\": [],\n \"colour\": 1}",
    )
    .unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(
        run(&["hammock-hom", &fixture("I2-a.json"), "--A", "7", "--B", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["model-check"]).status.code(), Some(2));
}

#[test]
fn strict_turns_exhausted_bounds_into_exit_three() {
    let args = [
        "loc-hom",
        &fixture("Z2-all.json"),
        "--A",
        "*",
        "--B",
        "*",
        "--level",
        "2",
        "--word-bound",
        "3",
    ];
    let (code, r) = run_json(&args);
    assert_eq!(code, 0);
    assert_eq!(r["bound_exhausted"], true);
    assert_eq!(r["verdicts"][0]["strength"], "bound-limited");
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(run(&strict).status.code(), Some(3));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["compare", "chain3-coarse.json", "--A", "1", "--B", "2"],
        vec!["hammock-hom", "I2-a.json", "--A", "1", "--B", "0"],
        vec!["bk-colim", "diagram-chain3-over-I2.json", "--k", "2"],
    ] {
        let mut args: Vec<String> = args.into_iter().map(String::from).collect();
        args[1] = fixture(&args[1]);
        let refs: Vec<&str> = args.iter().map(String::as_str).chain(["--format", "json"]).collect();
        let (a, b) = (run(&refs), run(&refs));
        assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn corpus_directory_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_hammock-lab"))
        .args(["model-check", "square-poset-coarse.json"])
        .env("HAMMOCKLAB_CORPUS", corpus_dir())
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn repository_corpus_matches_the_bundled_export() {
    let out = Command::new(env!("CARGO_BIN_EXE_hammock-lab"))
        .args(["corpus", "--verify", "--format", "json"])
        .env("HAMMOCKLAB_CORPUS", corpus_dir())
        .output()
        .unwrap();
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["artifacts"]["mismatched"], serde_json::json!([]));
    assert!(out.status.success());
    assert!(r["artifacts"]["inventory"].as_array().unwrap().len() >= 6);
}

#[test]
fn exported_corpus_verifies() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["corpus", "--export", dir.path().to_str().unwrap()])
        .status
        .success());
    let out = Command::new(env!("CARGO_BIN_EXE_hammock-lab"))
        .args(["corpus", "--verify"])
        .env("HAMMOCKLAB_CORPUS", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn every_command_runs_on_the_corpus() {
    let cases: &[&[&str]] = &[
        &["validate", "functor-square-rank.json"],
        &["nerve", "walking-iso.json"],
        &["bk-colim", "bk-point-over-chain3.json"],
        &["grothendieck", "diagram-z2-over-pt.json", "--degree", "1"],
        &["aspherical", "functor-chain3-onto-I2.json"],
        &["special-hammocks", "chain3-trivial.json", "--A", "0", "--B", "2"],
        &["resolve", "square-poset-coarse.json", "--A", "01"],
        &["derived-hom", "chain3-trivial.json", "--A", "1", "--B", "2"],
        &["loc-hom", "I2-a.json", "--A", "1", "--B", "0", "--compare"],
        &["presheaf-check", "presheaf-nerve-z2-over-I2-a.json"],
    ];
    for case in cases {
        let mut args: Vec<String> = case.iter().map(|s| s.to_string()).collect();
        args[1] = fixture(&args[1]);
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, r) = run_json(&refs);
        assert_eq!(code, 0, "{case:?}: {r}");
        assert_eq!(r["command"], case[0]);
    }
}
