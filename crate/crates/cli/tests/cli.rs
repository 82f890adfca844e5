//! End-to-end tests for the `gorenstein-lab` binary: exit codes, golden
//! output, and byte-stability of emitted reports.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gorenstein-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 stdout")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn vanishing_test_passes_with_exit_zero() {
    let o = run(&["sgp", "--algebra", "preset:kx3", "--module", "simple:1", "--bound", "10"]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    assert_eq!(
        stdout(&o),
        "sgp holds up to bound 10: Ext^i(M, A) = 0 for i = 1..10\n"
    );
}

#[test]
fn vanishing_test_failure_reports_the_witness() {
    let o = run(&["sgp", "--algebra", "preset:rad2", "--module", "simple:1", "--bound", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "sgp fails: Ext^1(M, A) has dimension 3\n");
}

#[test]
fn projective_input_is_rejected_as_unreduced() {
    let o = run(&["main-complex", "--algebra", "preset:kx3", "--module", "projective:1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not reduced"), "stderr: {}", stderr(&o));
}

#[test]
fn main_complex_diagram_is_golden() {
    let o = run(&[
        "main-complex",
        "--algebra",
        "preset:kxy",
        "--module",
        "simple:1",
        "--bound",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    let expected = "\
main complex of S1 over kxy (window degrees -3..3):
 3       2       1          0              -1         -2      -3
A^4 --> A^3 --> A^2 -->     A      -->     A      --> A^2 --> A^3
                        ker(phi)=0     cok(phi)=0
homology: ker(phi) dimension 0 at degree 0, cok(phi) dimension 0 at degree -1; zero elsewhere
";
    assert_eq!(stdout(&o), expected);
}

#[test]
fn quiet_mode_prints_nothing() {
    let o = run(&[
        "sgp", "--algebra", "preset:kx3", "--module", "simple:1", "--bound", "4", "--quiet",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
}

#[test]
fn json_reports_are_byte_stable() {
    let args = [
        "gp", "--algebra", "preset:kxy", "--module", "simple:1", "--bound", "4", "--json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("\"status\": \"Holds\""));
}

#[test]
fn audit_of_a_self_injective_algebra_is_clean() {
    let o = run(&[
        "audit", "--algebra", "preset:kxy", "--max-dim", "2", "--bound", "4", "--verify",
    ]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("total candidates: 0"));
}

#[test]
fn search_reports_are_reproducible_byte_for_byte() {
    let dir = std::env::temp_dir().join(format!("gorenstein-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p1 = dir.join("s1.json");
    let p2 = dir.join("s2.json");
    for p in [&p1, &p2] {
        let o = run(&[
            "search",
            "--sample-local",
            "3,2,1",
            "--trials",
            "6",
            "--seed",
            "9",
            "--bound",
            "3",
            "--max-dim",
            "12",
            "--quiet",
            "--emit",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    }
    let a = std::fs::read(&p1).unwrap();
    let b = std::fs::read(&p2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn emitted_extension_algebra_loads_back() {
    let dir = std::env::temp_dir().join(format!("gorenstein-cli-ext-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ext.json");
    let o = run(&[
        "one-point-ext",
        "--algebra",
        "preset:k",
        "--module",
        "regular",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("dimension 3 with 2 vertices"));
    let check = run(&["check-algebra", "--algebra", path.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0), "stderr: {}", stderr(&check));
    assert!(stdout(&check).contains("dimension 3, 2 simple(s)"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bad_specs_exit_with_usage_errors() {
    let o = run(&["sgp", "--algebra", "preset:nope", "--module", "simple:1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["sgp", "--algebra", "preset:kx3", "--module", "simple:9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["window", "--algebra", "preset:kx3", "--module", "simple:1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("right"));
}
