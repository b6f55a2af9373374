use std::process::Command;

use glmn_casimir::cli::run;
use serde_json::Value;

fn glmn(args: &[&str]) -> (i32, String, String) {
    let mut full = vec!["glmn"];
    full.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = glmn(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn casimir_text_output() {
    assert_eq!(ok(&["casimir", "--m", "1", "--n", "1", "--family", "psi", "--k", "1"]), "1 * E[1,1] + 1 * E[2,2]\n");
}

#[test]
fn berezinian_order_zero_is_one() {
    assert_eq!(ok(&["berezinian", "--m", "1", "--n", "1", "--order", "0"]), "1\n");
}

#[test]
fn berezinian_methods_agree() {
    for dims in [["1", "1"], ["2", "1"], ["1", "2"]] {
        let base = ["berezinian", "--m", dims[0], "--n", dims[1], "--order", "3", "--method"];
        let mut direct = base.to_vec();
        direct.push("direct");
        let mut factored = base.to_vec();
        factored.push("factored");
        assert_eq!(ok(&direct), ok(&factored));
    }
}

#[test]
fn hc_shifted_lambda() {
    let out = ok(&["hc", "--m", "1", "--n", "1", "--family", "lambda", "--k", "2", "--shifted"]);
    assert_eq!(out, "1 * x1*y1 + 1 * y1^2\n");
}

#[test]
fn ncsf_methods_agree_on_formal_matrix() {
    let series = ok(&["ncsf", "--matrix", "formal", "--size", "2", "--i", "1", "--kind", "phi", "--method", "series", "--order", "3"]);
    let paths = ok(&["ncsf", "--matrix", "formal", "--size", "2", "--i", "1", "--kind", "phi", "--method", "paths", "--k", "3"]);
    assert!(!paths.trim().is_empty());
    assert!(series.contains(paths.trim()), "{series} vs {paths}");
}

#[test]
fn json_outputs_parse() {
    let v: Value = serde_json::from_str(&ok(&["--format", "json", "casimir", "--m", "2", "--n", "1", "--family", "s", "--k", "2"])).unwrap();
    assert!(v["terms"].as_array().is_some_and(|t| !t.is_empty()));
    let v: Value = serde_json::from_str(&ok(&["--format", "json", "berezinian", "--m", "1", "--n", "1", "--order", "2"])).unwrap();
    assert_eq!(v["order"], 2);
    assert_eq!(v["coeffs"].as_array().unwrap().len(), 3);
    let v: Value = serde_json::from_str(&ok(&["--format", "json", "verify", "psi-eq-phi", "--m", "1", "--n", "1"])).unwrap();
    assert!(v.as_array().unwrap().iter().all(|l| l["passed"] == true));
}

#[test]
fn verify_reports_pass_lines() {
    let out = ok(&["verify", "decomposition", "--m", "1", "--n", "1", "--order", "3"]);
    assert_eq!(out, "PASS decomposition m=1 n=1 K=3\n");
    let out = ok(&["verify", "centrality", "--m", "1", "--n", "2", "--order", "2"]);
    assert!(out.lines().all(|l| l.starts_with("PASS centrality m=1 n=2")));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["casimir", "--m", "0", "--n", "1", "--family", "psi", "--k", "1"],
        vec!["casimir", "--m", "1", "--n", "1", "--family", "bogus", "--k", "1"],
        vec!["casimir", "--m", "1", "--n", "1", "--family", "psi", "--k", "0"],
        vec!["berezinian", "--m", "1"],
        vec!["frobnicate"],
        vec!["--threads", "0", "verify", "decomposition", "--m", "1", "--n", "1"],
    ] {
        let (code, out, err) = glmn(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn output_is_independent_of_thread_count() {
    let args = ["verify", "hc-images", "--m", "2", "--n", "1", "--order", "3"];
    let reference = ok(&args);
    for t in ["1", "2", "4"] {
        let mut with = vec!["--threads", t];
        with.extend_from_slice(&args);
        assert_eq!(ok(&with), reference);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_glmn");
    let status = Command::new(bin).args(["verify", "psi-eq-phi", "--m", "1", "--n", "1"]).output().unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&status.stdout).starts_with("PASS psi-eq-phi"));
    let status = Command::new(bin).args(["casimir", "--m", "0", "--n", "1", "--family", "psi", "--k", "1"]).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
}

#[test]
fn hc_accepts_of_as_family() {
    let a = ok(&["hc", "--m", "2", "--n", "1", "--of", "psi", "--k", "2"]);
    assert_eq!(a, ok(&["hc", "--m", "2", "--n", "1", "--family", "psi", "--k", "2"]));
}
