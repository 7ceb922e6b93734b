//! End-to-end checks of the `orthocurve` binary: exit codes, the build /
//! check round trip through the JSON interchange format, and report
//! determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthocurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn build_then_check_round_trip() {
    let dir = std::env::temp_dir().join("orthocurve-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("nc4.json");
    let built = run(&[
        "build",
        "--family",
        "ncp",
        "--n",
        "4",
        "-o",
        file.to_str().unwrap(),
    ]);
    assert!(built.status.success(), "{built:?}");
    let checked = run(&[
        "check",
        "--input",
        file.to_str().unwrap(),
        "--checks",
        "validate,lattice,spindles,cat0",
    ]);
    assert!(checked.status.success(), "{checked:?}");
    let text = stdout(&checked);
    assert!(text.contains("lattice: yes"), "{text}");
    assert!(text.contains("cat0: Cat0"), "{text}");
    std::fs::remove_file(&file).ok();
}

/// A negative verdict is still a successful run: only operational failures
/// may change the exit code.
#[test]
fn not_cat0_exits_zero() {
    let out = run(&[
        "check", "--family", "ncw", "--type", "D4", "--checks", "cat0", "--json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"schema\": \"orthocurve/1\""), "{text}");
    assert!(text.contains("NotCat0"), "{text}");
    assert!(text.contains("Spindle"), "{text}");
}

#[test]
fn json_reports_are_deterministic() {
    let args = [
        "check",
        "--family",
        "boolean",
        "--n",
        "4",
        "--checks",
        "validate,lattice,modular,spindles,cat0",
        "--json",
    ];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn operational_failures_exit_nonzero() {
    let missing = run(&["check", "--input", "/nonexistent/poset.json"]);
    assert!(!missing.status.success());
    let bad_family = run(&["build", "--family", "simplex", "--n", "3"]);
    assert!(!bad_family.status.success());
    let missing_param = run(&["build", "--family", "subspace", "--n", "3"]);
    assert!(!missing_param.status.success());
    let bad_type = run(&["check", "--family", "ncw", "--type", "E8"]);
    assert!(!bad_type.status.success());
}

#[test]
fn check_accepts_inline_families() {
    let out = run(&[
        "check",
        "--family",
        "subspace",
        "--n",
        "3",
        "--q",
        "2",
        "--checks",
        "validate,modular,spindles",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("modular: true"), "{text}");
    assert!(text.contains("0 short"), "{text}");
}
