//! End-to-end tests of the command-line interface: exit codes, report
//! formats, determinism, and the fault-injection paths.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rs-verify"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_of(out)).expect("stdout is JSON")
}

/// Removes the only nondeterministic field from a report.
fn strip_elapsed(mut v: serde_json::Value) -> serde_json::Value {
    if let Some(checks) = v.get_mut("checks").and_then(|c| c.as_array_mut()) {
        for c in checks {
            if let Some(obj) = c.as_object_mut() {
                obj.remove("elapsedMs");
            }
        }
    }
    v
}

#[test]
fn passing_check_exits_zero_with_text_tally() {
    let out = run(&["check", "lr-closed-form"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("lr-closed-form"));
    assert!(text.contains("pass"));
    assert!(text.contains("all 1 checks passed"));
}

#[test]
fn unknown_check_exits_two() {
    let out = run(&["check", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("unknown check: no-such-check"));
}

#[test]
fn all_cannot_be_mixed_with_names() {
    let out = run(&["check", "all", "lr-closed-form"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn comparator_fault_exits_one_with_located_discrepancy() {
    let out = run(&[
        "check",
        "inner-integrals",
        "--trials",
        "2",
        "--format",
        "json",
        "--inject-fault",
        "comparator",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    let check = &v["checks"][0];
    assert_eq!(check["status"], "fail");
    let d = &check["discrepancy"];
    assert!(d["location"].as_str().unwrap().contains("valuation"));
    assert_ne!(d["lhs"], d["rhs"]);
}

#[test]
fn table_fault_exits_three_before_running_checks() {
    let out = run(&["check", "lr-closed-form", "--inject-fault", "subst-table"]);
    assert_eq!(out.status.code(), Some(3));
    let err = stderr_of(&out);
    assert!(err.contains("internal inconsistency"));
    assert!(err.contains("monomial induces argument"));
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn json_reports_are_deterministic_modulo_elapsed() {
    let args = [
        "check",
        "thm-2-1",
        "prop-3-1",
        "--degree",
        "4",
        "--trials",
        "2",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let a = strip_elapsed(json_of(&run(&args)));
    let b = strip_elapsed(json_of(&run(&args)));
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
    // A different seed samples different points.
    let mut other: Vec<&str> = args.to_vec();
    other[6] = "8";
    let c = strip_elapsed(json_of(&run(&other)));
    assert_ne!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&c).unwrap()
    );
}

#[test]
fn json_params_record_the_sampled_points() {
    let out = run(&[
        "check", "thm-2-1", "--degree", "3", "--trials", "2", "--seed", "5", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["seed"], 5);
    let params = &v["checks"][0]["params"];
    assert_eq!(params["degree"], "3");
    assert_eq!(params["trials"], "2");
    let sample = params["sample.00"].as_str().unwrap();
    assert!(sample.contains("alpha=("));
    assert!(sample.contains("q="));
}

#[test]
fn reports_come_back_ordered_by_name() {
    let out = run(&[
        "check",
        "prop-3-1",
        "inner-integrals",
        "lr-closed-form",
        "--trials",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, vec!["inner-integrals", "lr-closed-form", "prop-3-1"]);
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join("rs-verify-cli-test-report.json");
    let _ = std::fs::remove_file(&path);
    let out = run(&[
        "check",
        "lr-closed-form",
        "--format",
        "json",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).is_empty());
    let contents = std::fs::read_to_string(&path).expect("report written");
    let v: serde_json::Value = serde_json::from_str(&contents).expect("valid JSON");
    assert_eq!(v["checks"][0]["name"], "lr-closed-form");
    let _ = std::fs::remove_file(&path);
}

#[test]
fn list_prints_the_registry_in_order() {
    let out = run(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let names: Vec<&str> = text
        .lines()
        .filter_map(|l| l.split_whitespace().next())
        .collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), 14);
    for required in [
        "lemma-2-2",
        "thm-2-1",
        "bfg-identity",
        "gu4-cosets",
        "thm-3-2-split",
    ] {
        assert!(names.contains(&required), "missing {required}");
    }
}

#[test]
fn thread_cap_does_not_change_the_report() {
    let args = [
        "check",
        "inner-integrals",
        "char-oracles",
        "--trials",
        "2",
        "--seed",
        "11",
        "--format",
        "json",
    ];
    let single = bin()
        .args(args)
        .env("RS_VERIFY_THREADS", "1")
        .output()
        .expect("binary runs");
    let multi = bin()
        .args(args)
        .env("RS_VERIFY_THREADS", "4")
        .output()
        .expect("binary runs");
    assert_eq!(single.status.code(), Some(0));
    assert_eq!(multi.status.code(), Some(0));
    let a = strip_elapsed(json_of(&single));
    let b = strip_elapsed(json_of(&multi));
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}
