//! Golden-file tests for the `relsize` binary. Set `UPDATE_GOLDEN=1` to rewrite the expected files.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn fixture(name: &str) -> String {
    dir("fixtures").join(name).display().to_string()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn relsize(args: &[&str]) -> Run {
    relsize_env(args, &[])
}

fn relsize_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_relsize"));
    cmd.args(args).env_remove("WORKBENCH_MAX_N");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("spawn relsize");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn golden(name: &str, actual: &str) {
    let path = dir("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

#[test]
fn gen_chain() {
    let r = relsize(&["gen", "meet-semilattice-chain", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    golden("gen_sl3.json", &r.stdout);
}

#[test]
fn gen_unknown_kind_is_usage_error() {
    assert_eq!(relsize(&["gen", "free-monoid", "3"]).code, 2);
}

#[test]
fn analyze_chain_all_ops() {
    let sl3 = fixture("sl3.json");
    let r = relsize(&[
        "analyze", &sl3, "--op", "flags", "--op", "mesh", "--op", "syn", "--op", "thick", "--op", "ps", "--op", "hypotheses",
        "--op", "kernel", "--op", "idempotents", "--op", "central", "--op", "extremal", "--op", "derived", "--set", "[1]",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    golden("analyze_sl3.json", &r.stdout);
}

#[test]
fn analyze_relative_to_a_principal_filter() {
    let sl3 = fixture("sl3.json");
    let up1 = fixture("up1.json");
    let r = relsize(&["analyze", &sl3, "--filter", &up1, "--op", "kernel", "--op", "syn", "--op", "central", "--format", "text"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    golden("analyze_sl3_up1.txt", &r.stdout);
}

#[test]
fn analyze_left_zero_syndetic_and_thick() {
    let lz2 = fixture("lz2.json");
    let r = relsize(&["analyze", &lz2, "--op", "syn", "--op", "thick", "--op", "product", "-c", "[]", "-c", "[[0],[0,1]]"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    golden("analyze_lz2.json", &r.stdout);
}

#[test]
fn analyze_rejects_bad_input() {
    let bad = relsize(&["analyze", &fixture("not_associative.json"), "--op", "syn"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("not_associative.json"), "{}", bad.stderr);

    let truncated = relsize(&["analyze", &fixture("truncated.json"), "--op", "syn"]);
    assert_eq!(truncated.code, 2);
    assert!(truncated.stderr.contains("line 2"), "{}", truncated.stderr);

    let out_of_range = relsize(&["analyze", &fixture("sl3.json"), "--filter", "[[3]]", "--op", "kernel"]);
    assert_eq!(out_of_range.code, 2);

    let not_filter = relsize(&["analyze", &fixture("sl3.json"), "--filter", "[[0],[1]]", "--op", "kernel"]);
    assert_eq!(not_filter.code, 2);

    let missing = relsize(&["analyze", "/nonexistent/table.json", "--op", "syn"]);
    assert_eq!(missing.code, 2);
}

#[test]
fn check_small_suite_text() {
    let r = relsize(&[
        "check", "--roster", "small", "--law", "sg-associativity", "--law", "prop-mesh-operator", "--law",
        "thm-relative-kernel", "--law", "selftest-syn-is-filter", "--format", "text", "--no-timing",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    golden("check_small.txt", &r.stdout);
}

#[test]
fn check_json_is_deterministic() {
    let args = ["check", "--size", "3", "--law", "cor-derived-set-a-i", "--law", "prop-stack-a", "--seed", "11", "--no-timing"];
    let a = relsize(&args);
    let b = relsize(&args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    golden("check_upto3.jsonl", &a.stdout);
}

#[test]
fn check_with_explicit_semigroup_file() {
    let r = relsize(&["check", "--semigroup", &fixture("lz2.json"), "--law", "thm-relative-syndetic-thick", "--no-timing"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("\"verdict\":\"pass\""), "{}", r.stdout);
}

#[test]
fn check_unknown_law_is_usage_error() {
    let r = relsize(&["check", "--law", "no-such-law"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("no-such-law"));
}

#[test]
fn hunt_finds_stack_counterexample_on_z2() {
    let r = relsize(&[
        "hunt", "prop-derived-set-a-i-equality", "--weaken", "filter-F", "--semigroup", &fixture("z2.json"), "--format",
        "text", "--no-timing",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    golden("hunt_z2.txt", &r.stdout);
}

#[test]
fn hunt_unknown_hypothesis_is_usage_error() {
    let r = relsize(&["hunt", "prop-derived-set-a-i-equality", "--weaken", "bogus"]);
    assert_eq!(r.code, 2);
}

#[test]
fn laws_listing() {
    let r = relsize(&["laws", "--format", "text"]);
    assert_eq!(r.code, 0);
    golden("laws.txt", &r.stdout);
}

#[test]
fn max_n_environment_variable() {
    let ok = relsize_env(&["gen", "cyclic-group", "4"], &[("WORKBENCH_MAX_N", "4")]);
    assert_eq!(ok.code, 0, "{}", ok.stderr);
    let garbage = relsize_env(&["gen", "cyclic-group", "4"], &[("WORKBENCH_MAX_N", "lots")]);
    assert_eq!(garbage.code, 2);
    let too_big = relsize_env(&["gen", "cyclic-group", "4"], &[("WORKBENCH_MAX_N", "100000")]);
    assert_eq!(too_big.code, 2);
}
