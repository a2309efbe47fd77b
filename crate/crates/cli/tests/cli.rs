use std::path::PathBuf;
use std::process::{Command, Output};

use elemdiv_cli::execute;
use elemdiv_cli::matrix_file::{parse_matrix, print_matrix};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_elemdiv"))
        .args(args)
        .current_dir(data_dir())
        .output()
        .unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

#[test]
fn print_parse_print_is_a_fixed_point() {
    for entry in std::fs::read_dir(data_dir()).unwrap() {
        let path = entry.unwrap().path();
        let m = parse_matrix(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let printed = print_matrix(&m);
        let again = parse_matrix(&printed).unwrap();
        assert_eq!(again, m, "{}", path.display());
        assert_eq!(print_matrix(&again), printed);
    }
}

#[test]
fn jordan_over_gf2_is_refused() {
    let o = run(&["jordan", "gf2_quadratic.txt"]);
    assert_eq!(o.status.code(), Some(2));
    let err = text(&o.stderr);
    assert!(err.contains("λ² + λ + 1"), "{err}");
    assert!(err.contains("primary"), "{err}");
}

#[test]
fn primary_over_gf2_succeeds() {
    let o = run(&["primary", "gf2_quadratic.txt"]);
    assert_eq!(o.status.code(), Some(0), "{}", text(&o.stderr));
}

#[test]
fn singular_pencil_is_refused() {
    let o = run(&["pencil-eldiv", "pencil_p.txt", "pencil_p.txt"]);
    assert_eq!(o.status.code(), Some(2), "{}", text(&o.stdout));
}

#[test]
fn parse_errors_exit_with_one() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let bad = dir.join("bad_matrix.txt");
    std::fs::write(&bad, "FIELD Q\nROWS 2 COLS 2\n1 2\n3 x\n").unwrap();
    let o = run(&["eldiv", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(text(&o.stderr).contains("line 4, column 3"), "{}", text(&o.stderr));
    let o = run(&["eldiv", "no_such_file.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn unverified_identity_exits_with_one() {
    let o = run(&["kron-form", "--kind", "I", "--size", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(text(&o.stdout).contains("identity: negated"));
    let o = run(&["kron-form", "--kind", "I", "--size", "4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn kron_form_argument_checks() {
    let o = run(&["kron-form", "--kind", "III", "--size", "4", "--a", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["kron-form", "--kind", "ii", "--size", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["kron-form", "--kind", "III", "--size", "3", "--a", "2", "--b", "-1"]);
    assert_eq!(o.status.code(), Some(0), "{}", text(&o.stderr));
    assert!(text(&o.stdout).contains("det(uM + vMᵀ) = 0"));
}

#[test]
fn no_transform_drops_transforms() {
    let o = run(&["--json", "--no-transform", "jordan", "sym3.txt"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["transforms"].as_object().unwrap().is_empty());
    assert_eq!(v["invariants"]["form"][2][2], "3");
}

#[test]
fn help_and_version_exit_cleanly() {
    assert_eq!(execute(["elemdiv", "--help"]).code, 0);
    assert_eq!(execute(["elemdiv", "--version"]).code, 0);
    assert_eq!(execute(["elemdiv", "frobnicate"]).code, 1);
}

#[test]
fn similar_emits_witness_for_conjugates() {
    let o = run(&["similar", "sym3.txt", "sym3_conj.txt"]);
    let out = text(&o.stdout);
    assert_eq!(o.status.code(), Some(0));
    assert!(out.starts_with("SIMILAR\n"), "{out}");
    assert!(out.contains("T ="));
}
