//! End-to-end runs of the `liestruct` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_liestruct"))
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn liestruct")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn stderr_line(out: &Output) -> String {
    let text = String::from_utf8(out.stderr.clone()).unwrap();
    assert_eq!(text.lines().count(), 1, "diagnostic must be one line: {text:?}");
    text.trim_end().to_string()
}

#[test]
fn frattini_goldens() {
    for name in ["heisenberg_gf3", "abelian_gf2_3"] {
        let input = golden(&format!("{name}.lie"));
        let got = stdout(&["--no-timing", "frattini", input.to_str().unwrap()]);
        let want = fs::read_to_string(golden(&format!("{name}.frattini"))).unwrap();
        assert_eq!(got, want, "{name}");
    }
}

#[test]
fn timing_field_only_when_enabled() {
    let input = golden("heisenberg_gf3.lie");
    let timed = stdout(&["frattini", input.to_str().unwrap()]);
    assert!(timed.lines().last().unwrap().contains(" elapsed_ms="));
    let plain = stdout(&["--no-timing", "frattini", input.to_str().unwrap()]);
    assert!(!plain.contains("elapsed_ms"));
}

#[test]
fn catalog_output_feeds_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.lie");
    let p = path.to_str().unwrap();
    stdout(&[
        "catalog",
        "ev_type_a",
        "--param",
        "p=3",
        "--param",
        "alpha=1",
        "--param",
        "field=GF(3)",
        "-o",
        p,
    ]);
    let report = stdout(&["--no-timing", "check", p]);
    let check = report.lines().find(|l| l.starts_with("record=check")).unwrap();
    for want in ["solvable=true", "strongly_solvable=false", "supersolvable=false"] {
        assert!(check.split(' ').any(|kv| kv == want), "{want} missing from {check}");
    }
    let listed = stdout(&["catalog", "--list"]);
    assert!(listed.lines().any(|l| l == "witt"));
}

#[test]
fn exit_codes_and_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.lie");
    fs::write(&bad, "lie-sc v1\nfield Q\ndim 3\nbasis a b c\n[b,a] = 1*c\n").unwrap();
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_line(&out).starts_with("error kind=UpperTriangleViolation line=5 message="));

    let jacobi = dir.path().join("jacobi.lie");
    fs::write(&jacobi, "lie-sc v1\nfield Q\ndim 3\n[e0,e1] = 1*e0\n[e0,e2] = 1*e2\n").unwrap();
    let out = run(&["check", jacobi.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_line(&out).contains("kind=JacobiViolation"));

    let out = run(&["check", dir.path().join("missing.lie").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_line(&out).starts_with("error kind=Io"));

    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_line(&out).starts_with("error kind=Usage"));

    let h = golden("heisenberg_gf3.lie");
    let out = run(&["check", "--props", "shiny", h.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_line(&out).starts_with("error kind=UnknownProperty"));

    let big = dir.path().join("big.lie");
    fs::write(&big, "lie-sc v1\nfield GF(7)\ndim 6\n").unwrap();
    let out = run(&["subalgebras", big.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_line(&out).starts_with("error kind=CapExceeded"));

    let q = dir.path().join("q.lie");
    fs::write(&q, "lie-sc v1\nfield Q\ndim 2\n[e0,e1] = 1*e1\n").unwrap();
    let out = run(&["frattini", q.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_line(&out).starts_with("error kind=Unsupported"));
}

#[test]
fn reports_parse_back() {
    let h = golden("heisenberg_gf3.lie");
    let text = stdout(&["--no-timing", "theorems", "--suite", "lemmas", h.to_str().unwrap()]);
    let records = liestruct::report::parse_report(&text).unwrap();
    assert_eq!(records[0].kind(), "algebra");
    assert!(records[1..]
        .iter()
        .all(|r| r.kind() == "harness" && r.get("conclusion") != Some("failed")));
}

#[test]
fn worker_count_does_not_change_output() {
    let h = golden("heisenberg_gf3.lie");
    let h = h.to_str().unwrap();
    for args in [
        vec!["subalgebras", h],
        vec!["twogen", "--property", "nilpotent", h],
        vec!["twogen", "--samples", "40", "--seed", "9", h],
        vec!["theorems", "--suite", "star", h],
        vec![
            "hunt",
            "--field",
            "GF(3)",
            "--dim-max",
            "3",
            "--samples",
            "600",
            "--seed",
            "5",
        ],
    ] {
        let one = stdout(&[&["--no-timing", "--workers", "1"], &args[..]].concat());
        let four = stdout(&[&["--no-timing", "--workers", "4"], &args[..]].concat());
        assert_eq!(one, four, "{args:?}");
    }
}
