//! End-to-end tests of the command-line surface: subcommands, flags, and the
//! documented exit codes (0 ok, 2 validation, 3 hypothesis, 4 internal).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_specseq"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn validate_accepts_a_valid_instance() {
    let out = run(&["validate", fixture("bicomplex_gf2.json").to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("ok: 2-complex over GF(2)"));
}

#[test]
fn validate_rejects_axiom_violations_with_exit_code_two() {
    let out = run(&["validate", fixture("broken_axiom.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("(1, 2, (0,0))"), "stderr: {err}");
}

#[test]
fn missing_file_is_an_io_error() {
    let out = run(&["validate", "no/such/file.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cohomology_prints_a_dimension_table() {
    let out = run(&["cohomology", fixture("bicomplex_gf2.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("H^0"));
    assert!(text.contains("H^2"));
}

#[test]
fn total_lists_summands_lexicographically() {
    let out = run(&["total", fixture("bicomplex_gf2.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("T^1"), "got {text}");
    let line = text.lines().find(|l| l.starts_with("T^1")).unwrap();
    let zero_one = line.find("(0,1)").expect("summand (0,1) listed");
    let one_zero = line.find("(1,0)").expect("summand (1,0) listed");
    assert!(zero_one < one_zero, "ascending lexicographic order");
}

#[test]
fn pages_require_a_filtration_choice() {
    let out = run(&["pages", fixture("bicomplex_gf2.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "pages",
        fixture("bicomplex_gf2.json").to_str().unwrap(),
        "--indices",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("E_0 page"));
    assert!(text.contains("verdict: converged"));
}

#[test]
fn pages_uses_the_file_filtration_when_no_indices_given() {
    let out = run(&["pages", fixture("filtered_complex.json").to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verdict: converged"));
}

#[test]
fn pages_render_csv_and_tikz() {
    let file = fixture("bicomplex_gf2.json");
    let csv = run(&["pages", file.to_str().unwrap(), "--indices", "2", "--format", "csv"]);
    assert!(csv.status.success());
    assert!(stdout(&csv).starts_with("r,p,q,dim,d_rank"));

    let tikz = run(&["pages", file.to_str().unwrap(), "--indices", "2", "--format", "tikz"]);
    assert!(tikz.status.success());
    let text = stdout(&tikz);
    assert!(text.contains("\\begin{tikzpicture}"));
    assert!(text.contains("\\documentclass{standalone}"));
}

#[test]
fn converge_reports_the_verdict() {
    let out = run(&[
        "converge",
        fixture("bicomplex_gf2.json").to_str().unwrap(),
        "--indices",
        "1,2",
    ]);
    // {1,2} is not a proper subset for k = 2
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "converge",
        fixture("bicomplex_gf2.json").to_str().unwrap(),
        "--indices",
        "2",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verdict: converged"));
}

#[test]
fn edge_requires_canonical_boundedness() {
    // the custom filtration fixture is bounded but not canonically: level 1
    // is still nonzero in degree 0 while level 2 vanishes
    let out = run(&["edge", fixture("filtered_complex.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3), "hypothesis failures exit 3");

    let out = run(&[
        "edge",
        fixture("bicomplex_gf2.json").to_str().unwrap(),
        "--indices",
        "1",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("-> E_2^(0,0)"));
}

#[test]
fn morphism_prints_cell_ranks_for_nested_subsets() {
    let out = run(&[
        "morphism",
        "--seed",
        "6",
        "--k",
        "3",
        "--from",
        "1",
        "--to",
        "1,2",
        "--page",
        "1",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("f_1 cell ranks:"));

    let out = run(&[
        "morphism",
        "--seed",
        "6",
        "--k",
        "3",
        "--from",
        "1,2",
        "--to",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3), "reversed nesting is a hypothesis failure");
}

#[test]
fn snake_extracts_the_six_term_sequence() {
    let out = run(&["snake", fixture("snake_q.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ker g (1)"));
    assert!(text.contains("coker a (1)"));
    assert!(text.contains("exact at all six spots: verified"));
}

#[test]
fn list_filtrations_prints_the_menu() {
    let out = run(&["list-filtrations", "--seed", "5", "--k", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("6 canonical filtrations"));
    assert!(text.contains("--indices 2,3"));
}

#[test]
fn seeded_runs_are_reproducible() {
    let first = run(&["pages", "--seed", "42", "--indices", "1"]);
    let second = run(&["pages", "--seed", "42", "--indices", "1"]);
    assert!(first.status.success());
    assert_eq!(stdout(&first), stdout(&second));
}
