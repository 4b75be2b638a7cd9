use std::path::PathBuf;
use std::process::{Command, Output};

fn hardy() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/hardy.json").to_string()
}

fn basis4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_basis4")).args(args).env_remove("BASIS4_OUTPUT").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Compare with `tests/golden/<name>`; `BASIS4_UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("BASIS4_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

#[test]
fn classify_real_plane() {
    let o = basis4(&["classify", "(0,1,-1,0)", "(1,0,0,1)", "--field", "real"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(1,1)\n");
}

#[test]
fn default_field_is_complex() {
    let o = basis4(&["classify", "(1,0,0,1)", "(0,1,1,0)"]);
    assert_eq!(stdout(&o), "(1,1)\n");
    let o = basis4(&["classify", "(1,0,0,1)", "(0,1,1,0)", "--field", "real"]);
    assert_eq!(stdout(&o), "(1,-1)\n");
}

#[test]
fn infeasible_policy_exits_one() {
    let o = basis4(&["complete", "(1,0,0,0)", "(0,1,0,0)", "--policy", "indecomposable"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("type (0,0)"), "{}", stdout(&o));
}

#[test]
fn decomposable_completion_of_standard_pair() {
    let o = basis4(&["complete", "(1,0,0,0)", "(0,1,0,0)", "--policy", "decomposable", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["vectors"], serde_json::json!(["(1,0,0,0)", "(0,1,0,0)", "(0,0,1,0)", "(0,0,0,1)"]));
}

#[test]
fn malformed_literal_exits_two_with_position() {
    let o = basis4(&["classify", "(0,1,x,0)", "(1,0,0,1)"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("position 5"), "{err}");
    assert!(err.contains("\n       ^"), "{err}");
}

#[test]
fn imaginary_literal_in_real_field() {
    let o = basis4(&["factorize", "(1,i,0,0)", "--field", "real"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dependent_vectors_are_an_input_error() {
    let o = basis4(&["classify", "(1,2,3,4)", "(2,4,6,8)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn factorize_outcomes() {
    let o = basis4(&["factorize", "(1,2,3,6)"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "(1,3) ⊗ (1,2)\n".to_string()));
    let o = basis4(&["factorize", "(1,0,0,1)"]);
    assert_eq!(o.status.code(), Some(1));
    let o = basis4(&["factorize", "(0,0,0,0)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tetrahedron_counts() {
    let o = basis4(&["tetrahedron", "(1,1)", "(1,0)", "(1,2)", "(0,1)", "--field", "real"]);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.ends_with("(0,0)")).count(), 4);
    assert_eq!(out.lines().filter(|l| l.ends_with("(1,-1)")).count(), 2);
}

#[test]
fn verify_reports_violations() {
    let o = basis4(&["verify", "(1,0,0,0)", "(0,1,0,0)", "(0,0,1,0)", "(0,0,1,1)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("<v3|v4> = 1\n"));
    let o = basis4(&["verify", "(1,1,0,0)", "(1,-1,0,0)", "(0,0,1,0)", "(0,0,0,1)", "--mode", "float"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn environment_overrides_output_flag() {
    let o = Command::new(env!("CARGO_BIN_EXE_basis4"))
        .args(["classify", "(0,1,-1,0)", "(1,0,0,1)", "--output", "human"])
        .env("BASIS4_OUTPUT", "json")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["type"], "(1,1)");
}

#[test]
fn hardy_analysis_lists_six_positive_definite_planes() {
    let o = basis4(&["hypergraph", "analyze", &hardy()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 6);
    assert!(out.lines().all(|l| l.contains("missing plane type (1,1)")), "{out}");
}

#[test]
fn hardy_completion_exit_codes() {
    let o = basis4(&["hypergraph", "complete", &hardy(), "--policy", "indecomposable"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("faithful\n"));
    let o = basis4(&["hypergraph", "complete", &hardy(), "--policy", "decomposable"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn partially_labeled_check_is_an_input_error() {
    let o = basis4(&["hypergraph", "check", &hardy()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not labeled"));
}

#[test]
fn hypergraph_literal_errors_name_the_field() {
    let dir = std::env::temp_dir().join(format!("basis4-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"field":"complex","vertices":[{"id":"a","vector":"(1,2/0,0,0)"}]}"#).unwrap();
    let o = basis4(&["hypergraph", "check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("vertices[0].vector: zero denominator at position 5"), "{}", stderr(&o));
}

#[test]
fn golden_hardy_analyze() {
    golden("hardy_analyze.json", &stdout(&basis4(&["hypergraph", "analyze", &hardy(), "--output", "json"])));
}

#[test]
fn golden_hardy_complete() {
    let o = basis4(&["hypergraph", "complete", &hardy(), "--policy", "indecomposable", "--output", "json"]);
    golden("hardy_complete_indecomposable.json", &stdout(&o));
    let o = basis4(&["hypergraph", "complete", &hardy(), "--policy", "decomposable", "--output", "json"]);
    golden("hardy_complete_decomposable.json", &stdout(&o));
}

#[test]
fn golden_steer() {
    let args = ["steer", "(0,1,-1,0)", "(1,0,0,1)", "--seed", "42", "--output", "json"];
    golden("steer_seed42.json", &stdout(&basis4(&args)));
}

#[test]
fn same_seed_same_bytes() {
    for mode in ["exact", "float"] {
        let args = ["steer", "(1,2,0,1)", "(0,1,-2,0)", "--seed", "9", "--mode", mode, "--output", "json"];
        let (x, y) = (basis4(&args), basis4(&args));
        assert_eq!(x.stdout, y.stdout);
    }
    let a = basis4(&["hypergraph", "complete", &hardy(), "--mode", "float", "--output", "json"]);
    let b = basis4(&["hypergraph", "complete", &hardy(), "--mode", "float", "--output", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
