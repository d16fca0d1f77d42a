use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_l1modal"))
        .args(args)
        .env_remove("L1MODAL_NODE_BUDGET")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let v: Value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}: {}", String::from_utf8_lossy(&out.stdout)));
    assert_eq!(v["schema_version"], 1);
    (out.status.code().unwrap(), v)
}

fn proofs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/proofs")
}

#[test]
fn prove_exit_codes() {
    let (code, v) = json(&["prove", "[]p -> p", "--logic", "kt"]);
    assert_eq!((code, &v["result"]["valid"]), (0, &Value::Bool(true)));
    let (code, v) = json(&["prove", "[]p -> p", "--logic", "k"]);
    assert_eq!(code, 1);
    assert_eq!(v["ok"], false);
    assert_eq!(v["result"]["countermodel"]["model"]["worlds"], 1);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["prove", "[]p ->", "--logic", "k"][..],
        &["translate", "eps(a)", "--kind", "i"],
        &["prove", "p", "--logic", "s5"],
        &["soundness-suite", "--vars", "3", "--size", "11"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = run(&["--budget", "2", "l1-decide", "eps(a,b) & eps(b,c) -> eps(a,c)"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn translate_prints_the_image() {
    let out = run(&["translate", "eps(a,b)", "--kind", "i"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "p_a & [](p_a <-> p_b)");
}

#[test]
fn countermodel_round_trips_through_eval_model() {
    let (code, v) = json(&["countermodel", "p -> []<>p", "--logic", "kt"]);
    assert_eq!(code, 1);
    let cm = &v["result"]["countermodel"];
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("model.json");
    std::fs::write(&path, cm["model"].to_string()).unwrap();
    let world = cm["world"].to_string();
    let (code, v) = json(&["eval-model", "p -> []<>p", "--model", path.to_str().unwrap(), "--world", &world]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["value"], false);
}

#[test]
fn check_proof_files() {
    let good = proofs().join("ax3_then_ax1.l1proof");
    let (code, v) = json(&["check-proof", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["theorem"], "eps(a,b) & eps(b,c) -> eps(b,b)");
    let bad = proofs().join("bad_mp_non_implication.l1proof");
    let (code, v) = json(&["check-proof", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["line"], 3);
}

#[test]
fn l1_decide() {
    let (code, _) = json(&["l1-decide", "eps(a,b) -> eps(a,a)"]);
    assert_eq!(code, 0);
    let (code, v) = json(&["l1-decide", "eps(a,b) -> eps(b,a)"]);
    assert_eq!(code, 1);
    assert!(v["result"]["countermodel"].is_object());
}

#[test]
fn replay_reports_the_failing_steps() {
    let (code, v) = json(&["replay-theorem31"]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = v["result"]["steps"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["passed"] == false)
        .map(|s| s["id"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["2.10", "3.7", "3.15"]);
}

#[test]
fn counterexample_and_search() {
    let (code, v) = json(&["reproduce-counterexample"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["i_valid_in_k"], true);
    let (code, v) = json(&["search-faithfulness", "--kind", "i", "--logic", "k", "--vars", "3", "--size", "5", "--jobs", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["reverified"], true);
    let (code, v) = json(&["search-faithfulness", "--kind", "b", "--logic", "k", "--vars", "2", "--size", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["candidates"].as_array().unwrap().len(), 0);
}

#[test]
fn soundness_suite_small() {
    let (code, v) = json(&["soundness-suite", "--vars", "1", "--size", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["violations"], 0);
    let (code, _) = json(&["soundness-suite", "--vars", "2", "--size", "5"]);
    assert_eq!(code, 1);
}
