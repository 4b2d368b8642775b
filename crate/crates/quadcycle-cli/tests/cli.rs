//! End-to-end tests for the `quadcycle` binary: exit codes, output
//! formats, and determinism.

use std::process::{Command, Output};

fn quadcycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadcycle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn analyze_reports_no_cycles_above_threshold() {
    let output = quadcycle(&["analyze", "-1"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("regime A"), "{text}");
    assert!(text.contains("3-cycles: none"), "{text}");
}

#[test]
fn analyze_json_is_schema_versioned_and_round_trips() {
    let output = quadcycle(&["analyze", "-2", "--json"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let json: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(json["schema"], 1);
    assert_eq!(json["regime"], "D");
    let cycles = json["cycles"].as_array().expect("cycles array");
    assert_eq!(cycles.len(), 2);
    let mut multipliers: Vec<f64> =
        cycles.iter().map(|c| c["multiplier"].as_f64().unwrap()).collect();
    multipliers.sort_by(f64::total_cmp);
    assert!((multipliers[0] + 8.0).abs() <= 1e-9, "{multipliers:?}");
    assert!((multipliers[1] - 8.0).abs() <= 1e-9, "{multipliers:?}");
    for cycle in cycles {
        assert_eq!(cycle["stability"], "unstable");
    }

    let report = quadcycle::AnalysisReport::from_json(text.trim_end()).expect("parses");
    assert_eq!(report.to_json(), text.trim_end());
}

#[test]
fn analyze_boundary_has_one_nonhyperbolic_cycle() {
    let output = quadcycle(&["analyze", "-1.75", "--json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(json["regime"], "B");
    assert_eq!(json["cycles"].as_array().unwrap().len(), 1);
    assert_eq!(json["cycles"][0]["stability"], "non-hyperbolic-unstable");
}

#[test]
fn analyze_rejects_non_numeric_and_non_finite_input() {
    assert_eq!(quadcycle(&["analyze", "abc"]).status.code(), Some(2));
    assert_eq!(quadcycle(&["analyze", "nan"]).status.code(), Some(2));
    assert_eq!(quadcycle(&["analyze", "inf"]).status.code(), Some(2));
}

#[test]
fn cycle_solves_integer_case() {
    let output = quadcycle(&["cycle", "-2", "doubletilde"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("x^3 + (0)x^2 + (-3)x + (1)"), "{text}");
    assert!(text.contains("multiplier: -8"), "{text}");
}

#[test]
fn cycle_below_threshold_exits_3_citing_bound() {
    let output = quadcycle(&["cycle", "-1", "tilde"]);
    assert_eq!(output.status.code(), Some(3));
    assert!(stderr(&output).contains("-7/4"), "{}", stderr(&output));
}

#[test]
fn cycle_rejects_unknown_branch() {
    assert_eq!(quadcycle(&["cycle", "-2", "spiral"]).status.code(), Some(2));
}

#[test]
fn logistic_reports_stable_cycle() {
    let output = quadcycle(&["logistic", "3.83"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("conjugate c = -1.752225"), "{text}");
    assert!(text.contains("asymptotically-stable"), "{text}");
    assert!(text.contains("0.156149315684"), "{text}");
}

#[test]
fn logistic_above_threshold_has_no_cycles() {
    let output = quadcycle(&["logistic", "3.5"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("3-cycles: none"));
}

#[test]
fn logistic_zero_exits_3() {
    assert_eq!(quadcycle(&["logistic", "0"]).status.code(), Some(3));
}

#[test]
fn bifurcation_writes_deterministic_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path_a = dir.path().join("a.csv");
    let path_b = dir.path().join("b.csv");
    let args = |p: &std::path::Path| {
        vec![
            "bifurcation".to_owned(),
            "--samples".to_owned(),
            "64".to_owned(),
            "--keep".to_owned(),
            "10".to_owned(),
            "--out".to_owned(),
            p.display().to_string(),
        ]
    };
    for path in [&path_a, &path_b] {
        let output = Command::new(env!("CARGO_BIN_EXE_quadcycle"))
            .args(args(path))
            .output()
            .unwrap();
        assert!(output.status.success());
    }
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("c,x\n"));
    assert!(!text.contains('\r'));
}

#[test]
fn bifurcation_streams_to_stdout_without_out_flag() {
    let output = quadcycle(&["bifurcation", "--samples", "8", "--keep", "2", "--transient", "50"]);
    assert!(output.status.success());
    assert!(stdout(&output).starts_with("c,x\n"));
}

#[test]
fn bifurcation_rejects_empty_range() {
    let output = quadcycle(&["bifurcation", "--c-min", "1", "--c-max", "0"]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn bifurcation_unwritable_path_exits_4() {
    let output = quadcycle(&["bifurcation", "--samples", "4", "--out", "/nonexistent/deep/x.csv"]);
    assert_eq!(output.status.code(), Some(4));
}

#[test]
fn verify_passes_with_flag_and_positional_forms() {
    for args in [vec!["verify", "--seed", "42", "--trials", "5"], vec!["verify", "7", "1"]] {
        let output = quadcycle(&args);
        assert!(output.status.success(), "{:?}: {}", args, stdout(&output));
        assert!(stdout(&output).contains("suites passed"));
    }
}

#[test]
fn verify_injected_fault_exits_1() {
    let output = Command::new(env!("CARGO_BIN_EXE_quadcycle"))
        .args(["verify", "--trials", "1"])
        .env("QUADCYCLE_VERIFY_FAULT", "1")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("FAIL fault-injection"));
}
