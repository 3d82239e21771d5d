//! Helpers shared by the integration suites: small constructors and the
//! brute-force oracle for the equal-counts language.

#![allow(dead_code)]

use std::collections::BTreeSet;

use mucfl::{full_language, TruncatedLang, Var, Word};

pub fn v(name: &str) -> Var {
    Var::new(name)
}

pub fn w(s: &str) -> Word {
    Word::new(s.chars().map(|c| Var::new(c.to_string())))
}

pub fn lang(bound: usize, words: &[&str]) -> TruncatedLang {
    TruncatedLang::from_words(bound, words.iter().map(|s| w(s)))
}

pub const BALANCED_GRAMMAR: &str = "S -> eps | a B | b A\nA -> a S | b A A\nB -> b S | a B B\n";

pub const BALANCED_TERM: &str = "mu S. 1 + a (mu B. b S + a B B) + b (mu A. a S + b A A)";

/// Brute force: enumerate every word over {a, b} of length at most `k`
/// and keep those with equally many a's and b's. Independent of the
/// fixpoint evaluator, which it is used to check.
pub fn balanced_words(k: usize) -> TruncatedLang {
    let alphabet = BTreeSet::from([v("a"), v("b")]);
    let filtered = full_language(&alphabet, k)
        .words()
        .iter()
        .filter(|word| {
            let a_count = word.symbols().iter().filter(|s| s.name() == "a").count();
            2 * a_count == word.len()
        })
        .cloned()
        .collect::<Vec<_>>();
    TruncatedLang::from_words(k, filtered)
}
