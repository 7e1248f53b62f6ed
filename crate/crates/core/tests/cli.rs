//! End-to-end runs of the `qtheta` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn qtheta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtheta")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("{name}-{}", std::process::id()))
}

#[test]
fn expand_eta_lists_pentagonal_terms() {
    let o = qtheta(&["expand", "eta(1)", "order", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1/24: 1, 25/24: -1, 49/24: -1");
}

#[test]
fn expand_e2_gives_divisor_sums() {
    let o = qtheta(&["expand", "E2(1)", "--order", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0: 1, 1: -24, 2: -72, 3: -96");
}

#[test]
fn expand_phi_squared_counts_two_squares() {
    let o = qtheta(&["expand", "phi^2", "--order", "5", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let text = v.to_string();
    for (e, c) in [("0", "1"), ("1", "4"), ("2", "4"), ("4", "4"), ("5", "8")] {
        assert!(text.contains(&format!("\"{e}\"")) && text.contains(&format!("\"{c}\"")), "{text}");
    }
    let plain = stdout(&qtheta(&["expand", "phi^2", "5"]));
    assert_eq!(plain.trim(), "0: 1, 1: 4, 2: 4, 4: 4, 5: 8");
}

#[test]
fn expand_quartic_combination_vanishes() {
    let o = qtheta(&["expand", "theta2(1)^4 + theta4(1)^4 - theta3(1)^4", "--order", "50"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn syntax_errors_report_the_offset() {
    let o = qtheta(&["expand", "eta(1/5", "--order", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains('8'));
}

#[test]
fn theta1_vanishes_at_the_origin() {
    let o = qtheta(&["eval", "theta1", "--z", "0", "--tau", "1.0i"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn eval_rejects_the_lower_half_plane() {
    let o = qtheta(&["eval", "theta3", "--tau", "-0.5i"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn rrcf_closed_form_at_i() {
    let o = qtheta(&["rrcf", "--tau", "i", "--closed-form"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let value = |label: &str| -> f64 {
        let line = out.lines().find(|l| l.starts_with(label)).expect(label);
        line[label.len()..].trim().parse().unwrap()
    };
    let want = ((5.0 + 5f64.sqrt()) / 2.0).sqrt() - (1.0 + 5f64.sqrt()) / 2.0;
    assert!((value("product:") - want).abs() < 1e-10);
    assert!((value("closed form:") - want).abs() < 1e-10);
    assert!(value("difference:").abs() <= 1e-10);
}

#[test]
fn verify_single_record_at_high_order() {
    let o = qtheta(&["verify", "euler_pentagonal", "--order", "100"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass"));
}

#[test]
fn unknown_identity_is_a_usage_error() {
    let o = qtheta(&["verify", "no_such_id"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no_such_id"));
}

#[test]
fn verify_without_selection_is_a_usage_error() {
    assert_eq!(qtheta(&["verify"]).status.code(), Some(2));
    assert_eq!(qtheta(&["verify", "--all", "two_square"]).status.code(), Some(2));
}

#[test]
fn mutated_run_exits_one() {
    let o = qtheta(&["verify", "two_square", "--mutate"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fail"));
}

#[test]
fn full_report_is_byte_stable() {
    let (a, b) = (scratch("first.json"), scratch("second.json"));
    for path in [&a, &b] {
        let o = qtheta(&["verify", "--all", "--seed", "42", "--json", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let report: serde_json::Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(report["seed"], 42);
    let rows = report["results"].as_array().unwrap();
    assert!(rows.len() >= 100);
    for row in rows {
        let want = if row["id"] == "conjecture_log" { "evidence" } else { "pass" };
        assert_eq!(row["status"], want, "{}", row["id"]);
        assert_eq!(row["elapsed_ms"], 0);
    }
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn list_filters_by_section_index_and_mode() {
    let by_index = stdout(&qtheta(&["list", "--section", "3"]));
    let by_slug = stdout(&qtheta(&["list", "--section", "quintuple"]));
    assert_eq!(by_index, by_slug);
    assert!(by_index.contains("triple_product"));
    let arithmetic = stdout(&qtheta(&["list", "--mode", "arithmetic"]));
    assert!(arithmetic.lines().all(|l| l.contains("arithmetic")));
    assert!(arithmetic.contains("r2_counts"));
}
