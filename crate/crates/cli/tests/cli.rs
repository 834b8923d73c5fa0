use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const KOSZUL: &str = r#"{"p":2,"n":2,"kind":"code","matrix":[["D1","D2"]]}"#;
const NON_REDUCED: &str =
    r#"{"p":2,"n":1,"kind":"complex","matrices":[[["D1 + 1","D1"],["D1","D1"]]]}"#;

fn mdcc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mdcc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad report {e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn resolve_koszul() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k.json", KOSZUL);
    let out = mdcc(&["resolve", &f, "--hilbert-max", "4"]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["sizes"]["q"], 1);
    assert_eq!(r["sizes"]["p"], serde_json::json!([2, 1]));
    assert_eq!(
        r["degree_table"]["forney"],
        serde_json::json!([[1, 1], [2]])
    );
    assert_eq!(r["memory"], 1);
    assert_eq!(r["homological_dimension"], 2);
    assert_eq!(r["rate"]["numerators"], serde_json::json!([1, 2]));
    assert_eq!(r["hilbert"]["values"], serde_json::json!([0, 2, 5, 9, 14]));
}

#[test]
fn hilbert_with_oracle() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k.json", KOSZUL);
    let r = json(&mdcc(&[
        "hilbert", &f, "--max-d", "4", "--oracle", "--strict",
    ]));
    assert_eq!(r["values"], serde_json::json!([0, 2, 5, 9, 14]));
    assert_eq!(r["oracle"]["values"], r["values"]);
    assert_eq!(r["oracle"]["agrees"], true);
}

#[test]
fn check_pd_reports_witness_and_strict_exit() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "g.json", NON_REDUCED);
    let out = mdcc(&["check", "pd", &f]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["pd"], false);
    assert_eq!(r["witness_column"], serde_json::json!(["1", "1"]));
    assert_eq!(
        mdcc(&["check", "pd", &f, "--strict"]).status.code(),
        Some(1)
    );
    assert_eq!(
        mdcc(&["check", "resolution", &f, "--strict"]).status.code(),
        Some(0)
    );
    // Minimality is undefined for a non-reduced complex.
    assert_eq!(mdcc(&["check", "minimal", &f]).status.code(), Some(2));
}

#[test]
fn resolve_report_round_trips_as_a_complex() {
    let dir = TempDir::new().unwrap();
    let codes = [
        KOSZUL,
        r#"{"p":3,"n":3,"kind":"code","matrix":[["D1*D2","D2*D3","D1*D3 + 1"],["D3","0","D1"]]}"#,
        r#"{"p":101,"n":2,"kind":"code","matrix":[["D1^2 - D2","D1*D2"],["D2","D1 + 3"]]}"#,
    ];
    for (i, code) in codes.iter().enumerate() {
        let f = write(&dir, &format!("c{i}.json"), code);
        let report = dir.path().join(format!("r{i}.json"));
        let out = mdcc(&["resolve", &f, "--out", report.to_str().unwrap()]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(out.stdout.is_empty());
        let r: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
        let complex = write(&dir, &format!("g{i}.json"), &r["complex"].to_string());
        for prop in ["pd", "reduced", "minimal", "resolution"] {
            let out = mdcc(&["check", prop, &complex, "--strict"]);
            assert_eq!(out.status.code(), Some(0), "{prop} on {code}");
            assert_eq!(json(&out)[prop], true);
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "c.json",
        r#"{"p":3,"n":2,"kind":"code","matrix":[["D1^2","D1*D2","D2^2"],["1","D2","0"]]}"#,
    );
    for args in [
        vec!["resolve", &f, "--hilbert-max", "5"],
        vec!["observable", &f],
        vec!["oracle-verify", &f, "--max-d", "3"],
    ] {
        let a = mdcc(&args);
        let b = mdcc(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn observability_reports() {
    let dir = TempDir::new().unwrap();
    let ideal = write(&dir, "i.json", KOSZUL);
    let r = json(&mdcc(&["observable", &ideal]));
    assert_eq!(r["observable"], false);
    assert_eq!(r["witness"]["element"], serde_json::json!(["1"]));
    assert_eq!(
        mdcc(&["observable", &ideal, "--strict"]).status.code(),
        Some(1)
    );
    // The per-irreducible test needs n = 1.
    assert_eq!(
        mdcc(&["observable", &ideal, "--prop3-bound", "2"])
            .status
            .code(),
        Some(2)
    );
    let free = write(
        &dir,
        "f.json",
        r#"{"p":2,"n":1,"kind":"code","matrix":[["D1"],["1"]]}"#,
    );
    let r = json(&mdcc(&[
        "observable",
        &free,
        "--prop3-bound",
        "2",
        "--strict",
    ]));
    assert_eq!(r["observable"], true);
    assert_eq!(r["prop3"]["exact_for_all"], true);
    assert_eq!(r["parity_check"]["rows"], 1);
}

#[test]
fn oracle_verify_on_both_kinds() {
    let dir = TempDir::new().unwrap();
    let code = write(&dir, "k.json", KOSZUL);
    let r = json(&mdcc(&["oracle-verify", &code, "--max-d", "4", "--strict"]));
    assert_eq!(r["verified"], true);
    let complex = write(&dir, "g.json", NON_REDUCED);
    let r = json(&mdcc(&[
        "oracle-verify",
        &complex,
        "--max-d",
        "3",
        "--strict",
    ]));
    assert_eq!(r["pd"], false);
    assert_eq!(r["agrees"], true);
}

fn stderr_of(args: &[&str]) -> (Option<i32>, String) {
    let out = mdcc(args);
    (
        out.status.code(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let cases = [
        (
            r#"{"p":4,"n":1,"kind":"code","matrix":[["D1"]]}"#,
            "p must be prime",
        ),
        (
            r#"{"p":2,"n":2,"kind":"code","matrix":[["D1 + D7"]]}"#,
            "$.matrix[0][0], column 6",
        ),
        (
            r#"{"p":2,"n":1,"kind":"code","matrix":[["D1","0"]]}"#,
            "zero column",
        ),
        (
            r#"{"p":2,"n":1,"kind":"code","matrix":[["D1"],["1","1"]]}"#,
            "dimension mismatch",
        ),
        ("{\"p\":2,\n\"n\":1,,}", "line 2"),
        (
            r#"{"p":2,"n":2,"kind":"complex","matrix":[["D1","D2"]]}"#,
            "$.matrix",
        ),
    ];
    for (i, (text, needle)) in cases.iter().enumerate() {
        let f = write(&dir, &format!("bad{i}.json"), text);
        let (code, err) = stderr_of(&["resolve", &f]);
        assert_eq!(code, Some(2), "{text}");
        assert!(err.contains(needle), "{err} lacks {needle}");
    }
    let complex = write(&dir, "g.json", NON_REDUCED);
    assert_eq!(stderr_of(&["resolve", &complex]).0, Some(2));
    let code = write(&dir, "k.json", KOSZUL);
    assert_eq!(stderr_of(&["check", "pd", &code]).0, Some(2));
    assert_eq!(
        stderr_of(&[
            "resolve",
            Path::new("/nonexistent/x.json").to_str().unwrap()
        ])
        .0,
        Some(2)
    );
    assert_eq!(stderr_of(&["frobnicate"]).0, Some(2));
}
