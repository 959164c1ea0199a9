use std::path::PathBuf;
use std::process::{Command, Output};

fn hhc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hhc")).args(args).output().expect("hhc runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn invalid_workspaces_exit_1_with_a_witness() {
    for (file, needle) in [
        ("broken_associativity.json", "x(xx^2)"),
        ("false_cocommutative.json", "cocommutativity fails"),
        ("conjugation_violation.json", "involution compatibility fails"),
    ] {
        let o = hhc(&["validate", &fixture(file)]);
        assert_eq!(o.status.code(), Some(1), "{file}");
        assert!(stderr(&o).contains(needle), "{file}: {}", stderr(&o));
    }
}

#[test]
fn valid_workspace_validates() {
    let o = hhc(&["validate", &fixture("conjugation_undeclared.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all valid"));
}

#[test]
fn oversized_computation_exits_3() {
    let o = hhc(&["compute", "hh", "--algebra", "m2", "--max-degree", "9"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn usage_and_name_errors_exit_1() {
    assert_eq!(hhc(&["verify", "--suite", "no-such-suite"]).status.code(), Some(1));
    assert_eq!(hhc(&["compute", "hh", "--algebra", "nope"]).status.code(), Some(1));
    assert_eq!(hhc(&["compute", "hh", "--algebra", "Q", "--format", "xml"]).status.code(), Some(1));
    assert_eq!(hhc(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(hhc(&["--help"]).status.code(), Some(0));
}

#[test]
fn alias_and_measuring_alias_verify_cleanly() {
    let o = hhc(&["verify", "--suite", "thm3.2", "--measuring", "idOnDualnum"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("| star-product-measuring | thm3.2 |"));
}

#[test]
fn undeclared_involution_fails_verification_with_exit_2() {
    let ws = fixture("conjugation_undeclared.json");
    let o = hhc(&["--workspace", &ws, "verify", "--suite", "prop7.2", "--measuring", "undeclared"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("## Failures"));
}

#[test]
fn compute_renders_csv() {
    let o = hhc(&["compute", "hh", "--algebra", "dualnum", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,dim C_n,dim HH_n\n0,2,2\n1,4,1\n2,8,1\n3,16,1\n");
}

#[test]
fn report_writes_the_requested_file() {
    let out = std::env::temp_dir().join(format!("hhc-report-{}.csv", std::process::id()));
    let o = hhc(&["report", "--format", "csv", "--out", &out.display().to_string(), "--suite", "forms-eps-pi", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    std::fs::remove_file(&out).ok();
    assert!(text.starts_with("suite,statement,subjects,check,degrees,status,witness\n"));
    assert!(text.lines().skip(1).all(|l| l.starts_with("forms-eps-pi,")));
}
