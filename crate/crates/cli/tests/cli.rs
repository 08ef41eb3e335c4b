use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(format!("{name}.json"))
}

fn autinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_autinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn flag_line(text: &str, name: &str) -> String {
    text.lines()
        .find(|l| l.trim_start().starts_with(name))
        .unwrap_or_else(|| panic!("no line for {name} in\n{text}"))
        .split_whitespace()
        .last()
        .unwrap()
        .to_string()
}

#[test]
fn check_first_example_with_json_record() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("m.json");
    let file = corpus("ex_3_1");
    let o = autinv(&[
        "check",
        file.to_str().unwrap(),
        "--module",
        "M",
        "--report",
        "socle",
        "--json",
        json.to_str().unwrap(),
        "--oracle",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert_eq!(flag_line(&out, "automorphism-invariant"), "yes");
    assert_eq!(flag_line(&out, "quasi-injective"), "no");
    assert!(out.contains("report: passed"));
    let record: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(record["automorphism_invariant"], Value::Bool(true));
    assert_eq!(record["quasi_injective"], Value::Bool(false));
    assert_eq!(record["pseudo_injective"], Value::Bool(true));
    assert_eq!(record["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn check_second_and_dual_examples() {
    let o = autinv(&["check", corpus("ex_3_2").to_str().unwrap(), "--module", "M"]);
    let out = stdout(&o);
    assert_eq!(flag_line(&out, "automorphism-invariant"), "yes");
    assert_eq!(flag_line(&out, "quasi-injective"), "no");
    let o = autinv(&[
        "check",
        corpus("ex_5_1").to_str().unwrap(),
        "--module",
        "DM",
        "--report",
        "dual",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(flag_line(&out, "automorphism-coinvariant"), "yes");
    assert_eq!(flag_line(&out, "quasi-projective"), "no");
}

#[test]
fn report_on_a_quasi_injective_module_is_a_validation_error() {
    let o = autinv(&[
        "check",
        corpus("f2_dual_numbers").to_str().unwrap(),
        "--module",
        "R",
        "--report",
        "indecomposable",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("precondition"));
}

#[test]
fn search_is_deterministic_across_kernels_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let file = corpus("ex_3_1");
    let mut outputs = Vec::new();
    for extra in [
        &["--kernel", "packed"][..],
        &["--kernel", "generic"],
        &["--sequential"],
    ] {
        let out = dir.path().join(format!("{}.json", outputs.len()));
        let mut args = vec![
            "search",
            file.to_str().unwrap(),
            "--max-dim",
            "4",
            "--out",
            out.to_str().unwrap(),
        ];
        args.extend_from_slice(extra);
        let o = autinv(&args);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        outputs.push(std::fs::read_to_string(&out).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
    let records: Vec<Value> = serde_json::from_str(&outputs[0]).unwrap();
    let ids: Vec<&str> = records.iter().map(|r| r["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    assert!(records
        .iter()
        .any(|r| r["automorphism_invariant"] == Value::Bool(true)
            && r["quasi_injective"] == Value::Bool(false)));
}

#[test]
fn commutative_search_has_no_gap() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    let o = autinv(&[
        "search",
        corpus("f2_x3").to_str().unwrap(),
        "--max-dim",
        "5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains(", 0 automorphism-invariant but not quasi-injective"));
}

#[test]
fn truncated_file_reports_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(corpus("ex_3_1")).unwrap();
    let cut = dir.path().join("cut.json");
    std::fs::write(&cut, &text[..text.len() / 2]).unwrap();
    let o = autinv(&["check", cut.to_str().unwrap(), "--module", "M"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
}

#[test]
fn tampered_module_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let mut file: Value =
        serde_json::from_str(&std::fs::read_to_string(corpus("ex_3_1")).unwrap()).unwrap();
    // make e12 act on M like the identity, breaking the module axioms
    file["modules"][0]["action"][1] = serde_json::json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    let path = dir.path().join("bad.json");
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
    let o = autinv(&["check", path.to_str().unwrap(), "--module", "M"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("module \"M\""));
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(autinv(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(autinv(&["check"]).status.code(), Some(1));
    let o = autinv(&[
        "check",
        corpus("ex_3_1").to_str().unwrap(),
        "--module",
        "nope",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reproduce_passes_identically_under_both_kernels() {
    let packed = autinv(&["reproduce", "--kernel", "packed"]);
    let generic = autinv(&["reproduce", "--kernel", "generic"]);
    assert!(packed.status.success(), "{}", stdout(&packed));
    let text = stdout(&packed);
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 12);
    assert_eq!(text, stdout(&generic));
}
