//! End-to-end tests of the `rignewton` binary: golden commands, report
//! round trips, determinism, and exit codes.

use std::process::{Command, Output};

use rignewton::cli::{parse_report, ReportBody};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rignewton"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn centralizer_golden_g2() {
    let out = run(&[
        "centralizer",
        "--datum",
        "G2:sc",
        "--nu",
        "1/2,0",
        "--action",
        "inversion",
    ]);
    assert!(out.status.success());
    let report = parse_report(&stdout(&out)).unwrap();
    match report.body {
        ReportBody::Centralizer { report, datum, .. } => {
            assert_eq!(datum, "G2:sc");
            assert_eq!(report.type_gamma.to_string(), "A1xA1");
            assert!(!report.is_levi_regular);
            assert!(report.is_cyclic_witness);
        }
        other => panic!("wrong report kind: {other:?}"),
    }
}

#[test]
fn tn_group_golden_norm_one() {
    let out = run(&[
        "tn-group",
        "--datum",
        "torus:1",
        "--action",
        "inversion",
        "--level",
        "2",
    ]);
    assert!(out.status.success());
    let report = parse_report(&stdout(&out)).unwrap();
    match report.body {
        ReportBody::TnGroup {
            invariant_factors,
            order,
            ..
        } => {
            assert_eq!(invariant_factors, vec![4]);
            assert_eq!(order, 4);
        }
        other => panic!("wrong report kind: {other:?}"),
    }
}

#[test]
fn casebook_all_passes() {
    let out = run(&["casebook", "run", "--all"]);
    assert!(out.status.success());
    let report = parse_report(&stdout(&out)).unwrap();
    match report.body {
        ReportBody::Casebook {
            cases,
            passed,
            total,
        } => {
            assert_eq!(cases.len(), total);
            assert_eq!(passed, total);
            assert_eq!(total, 9);
        }
        other => panic!("wrong report kind: {other:?}"),
    }
    let list = run(&["casebook", "list"]);
    assert!(list.status.success());

    // single-case invocation and the unknown-case error path
    let single = run(&["casebook", "run", "g2-nonadm"]);
    assert!(single.status.success());
    let report = parse_report(&stdout(&single)).unwrap();
    match report.body {
        ReportBody::Casebook { total, passed, .. } => assert_eq!((total, passed), (1, 1)),
        other => panic!("wrong report kind: {other:?}"),
    }
    let missing = run(&["casebook", "run", "nope"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "levi-suitable",
        "--datum",
        "A1:sc",
        "--action",
        "inversion",
        "--level",
        "4",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(
        a.stdout, b.stdout,
        "identical inputs must produce byte-identical reports"
    );
}

#[test]
fn reports_reparse_through_own_reader() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["alcove", "--datum", "A1:sc", "--nu", "raw:5/2"],
        vec!["facet", "--datum", "A1:sc", "--nu", "raw:1/2"],
        vec![
            "band-image",
            "--datum",
            "torus:1",
            "--action",
            "inversion",
            "--nu",
            "3/4",
        ],
        vec![
            "realize-levi",
            "--datum",
            "G2:sc",
            "--action",
            "inversion",
            "--lambda",
            "0,1",
        ],
        vec![
            "relative-weyl",
            "--datum",
            "A1:sc",
            "--action",
            "inversion",
            "--sub",
            "empty",
        ],
    ];
    for args in commands {
        let out = run(&args);
        assert!(
            out.status.success(),
            "command {args:?} failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let text = stdout(&out);
        let report = parse_report(&text).expect("re-parse");
        // serializing the parsed report reproduces the original bytes
        let re = serde_json::to_string_pretty(&report).unwrap();
        assert_eq!(re.trim(), text.trim());
    }
}

#[test]
fn validation_errors_exit_2() {
    let out = run(&[
        "centralizer",
        "--datum",
        "G2:sc",
        "--nu",
        "1/2",
        "--action",
        "inversion",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("error:"),
        "diagnostic names the problem: {err}"
    );

    let out = run(&[
        "centralizer",
        "--datum",
        "Q9:sc",
        "--nu",
        "1/2",
        "--action",
        "inversion",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // a non-Levi subsystem is a validation error, not a crash
    let out = run(&[
        "relative-weyl",
        "--datum",
        "G2:sc",
        "--action",
        "inversion",
        "--sub",
        "2,5,6,9",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Levi"));
}

#[test]
fn input_file_with_explicit_datum() {
    let spec = serde_json::json!({
        "schema": 1,
        "datum": {
            "rank": 2,
            "roots": [[1,-1],[-1,1],[1,2],[-1,-2],[2,1],[-2,-1]],
            "coroots": [[1,-1],[-1,1],[0,1],[0,-1],[1,0],[-1,0]],
            "label": "sl3-res"
        },
        "action": [[[0,1],[1,0]]],
        "lambda": [1,-1]
    });
    let path = std::env::temp_dir().join(format!("rignewton-cli-test-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&spec).unwrap()).unwrap();
    let out = run(&["realize-levi", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report = parse_report(&stdout(&out)).unwrap();
    match report.body {
        ReportBody::RealizeLevi { report, datum, .. } => {
            assert_eq!(datum, "sl3-res");
            assert!(report.gamma_centralizer.root_indices.is_empty());
        }
        other => panic!("wrong report kind: {other:?}"),
    }
}

#[test]
fn schema_mismatch_rejected() {
    let path =
        std::env::temp_dir().join(format!("rignewton-cli-schema-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"schema": 2, "datum": "A1:sc"}"#).unwrap();
    let out = run(&[
        "alcove",
        "--nu",
        "raw:1/2",
        "--input",
        path.to_str().unwrap(),
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
}
