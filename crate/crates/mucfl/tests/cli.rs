//! End-to-end tests of the command-line interface.

mod common;

use std::io::Write;
use std::process::{Command, Output};

use common::BALANCED_GRAMMAR;

fn mucfl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mucfl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn grammar_file(contents: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(contents.as_bytes()).expect("write grammar");
    file
}

#[test]
fn equiv_reports_equality_with_exit_zero() {
    let out = mucfl(&["equiv", "-k", "4", "mu x. 1 + a x", "mu x. 1 + x a"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "equal up to 4\n");
}

#[test]
fn equiv_reports_counterexamples_with_exit_one() {
    let out = mucfl(&["equiv", "-k", "2", "a", "a a"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "counterexample: a (in left only)\n");

    let out = mucfl(&["equiv", "-k", "2", "a a", "a"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "counterexample: a (in right only)\n");
}

#[test]
fn eval_lists_words_shortest_first() {
    let out = mucfl(&[
        "eval",
        "-k",
        "2",
        "mu S. 1 + a (mu B. b S + a B B) + b (mu A. a S + b A A)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "eps\nab\nba\n");
}

#[test]
fn eval_reads_terms_from_files() {
    let file = grammar_file("mu x. 1 + a x");
    let arg = format!("@{}", file.path().display());
    let out = mucfl(&["eval", "-k", "2", &arg]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "eps\na\naa\n");
}

#[test]
fn approx_prints_unsimplified_approximants() {
    let out = mucfl(&["approx", "-n", "0", "-x", "x", "1 + a x"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n");

    let out = mucfl(&["approx", "-n", "2", "-x", "x", "1 + a x"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 + a (1 + a 0)\n");
}

#[test]
fn to_grammar_prints_the_flattened_grammar() {
    let out = mucfl(&["to-grammar", "a b"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "S -> a b\n");

    let out = mucfl(&["to-grammar", "mu x. 1 + a x"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "x -> eps | a x\n");
}

#[test]
fn from_grammar_solves_for_the_start_symbol() {
    let file = grammar_file("S -> eps | a S\n");
    let out = mucfl(&["from-grammar", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "mu S. 1 + a S\n");
}

#[test]
fn from_grammar_solves_other_nonterminals() {
    let file = grammar_file(BALANCED_GRAMMAR);
    let out = mucfl(&["from-grammar", "-v", "A", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("mu A."));

    let out = mucfl(&["from-grammar", "-v", "Q", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lang_prints_grammar_languages() {
    let file = grammar_file(BALANCED_GRAMMAR);
    let out = mucfl(&["lang", "-k", "2", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "eps\nab\nba\n");

    let out = mucfl(&["lang", "-k", "2", file.path().to_str().unwrap(), "-v", "A"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "a\n");
}

#[test]
fn parse_errors_exit_with_two() {
    let out = mucfl(&["eval", "-k", "2", "mu. x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let file = grammar_file("S -> a eps b\n");
    let out = mucfl(&["lang", "-k", "2", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    let out = mucfl(&["eval"]);
    assert_eq!(out.status.code(), Some(2));

    let out = mucfl(&["check", "--cases", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = mucfl(&["check", "--law", "no-such-law"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_prints_report_lines_and_succeeds() {
    let out = mucfl(&["check", "-k", "3", "--seed", "7", "--cases", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 24);
    assert!(lines.iter().all(|l| l.starts_with("LAW=") && l.contains("VERDICT=pass")));
    assert!(lines[0].contains("SEED=7"));
    assert!(lines[0].contains("K=3"));
}

#[test]
fn check_can_isolate_one_law() {
    let out = mucfl(&["check", "-k", "3", "--seed", "7", "--cases", "2", "--law", "samelists"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().all(|l| l.starts_with("LAW=samelists")));

    let full = mucfl(&["check", "-k", "3", "--seed", "7", "--cases", "2"]);
    let full_text = stdout(&full);
    let samelists: Vec<&str> =
        full_text.lines().filter(|l| l.starts_with("LAW=samelists")).collect();
    assert_eq!(samelists.join("\n"), text.trim_end());
}

#[test]
fn check_is_deterministic() {
    let first = mucfl(&["check", "-k", "3", "--seed", "11", "--cases", "3"]);
    let second = mucfl(&["check", "-k", "3", "--seed", "11", "--cases", "3"]);
    assert_eq!(stdout(&first), stdout(&second));
}
