//! The truncated-language model: sets of words of length at most `k`,
//! with union and length-truncated concatenation.
//!
//! On this finite algebra every least fixpoint is computed exactly by
//! Kleene iteration from the empty set, so `eval` returns precisely the
//! words of length `<= k` of the language a term denotes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::syntax::{Term, Var};

/// A finite word over alphabet symbols; the empty word is epsilon.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<Var>);

impl Word {
    pub fn epsilon() -> Word {
        Word(Vec::new())
    }

    pub fn new(symbols: impl IntoIterator<Item = Var>) -> Word {
        Word(symbols.into_iter().collect())
    }

    pub fn letter(v: Var) -> Word {
        Word(vec![v])
    }

    pub fn symbols(&self) -> &[Var] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.0.len() + other.0.len());
        symbols.extend(self.0.iter().cloned());
        symbols.extend(other.0.iter().cloned());
        Word(symbols)
    }
}

/// Shortest first, ties broken lexicographically by symbol name.
impl Ord for Word {
    fn cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("eps")
        } else {
            for v in &self.0 {
                f.write_str(v.name())?;
            }
            Ok(())
        }
    }
}

/// A set of words, all of length at most `bound`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedLang {
    bound: usize,
    words: BTreeSet<Word>,
}

impl TruncatedLang {
    pub fn empty(bound: usize) -> TruncatedLang {
        TruncatedLang { bound, words: BTreeSet::new() }
    }

    /// The language `{eps}`.
    pub fn epsilon(bound: usize) -> TruncatedLang {
        let mut words = BTreeSet::new();
        words.insert(Word::epsilon());
        TruncatedLang { bound, words }
    }

    /// The singleton one-letter language `{v}`, empty when `bound` is 0.
    pub fn letter(v: &Var, bound: usize) -> TruncatedLang {
        let mut words = BTreeSet::new();
        if bound >= 1 {
            words.insert(Word::letter(v.clone()));
        }
        TruncatedLang { bound, words }
    }

    /// Collects `words`, dropping any longer than `bound`.
    pub fn from_words(bound: usize, words: impl IntoIterator<Item = Word>) -> TruncatedLang {
        TruncatedLang {
            bound,
            words: words.into_iter().filter(|w| w.len() <= bound).collect(),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn union(&self, other: &TruncatedLang) -> TruncatedLang {
        assert_eq!(self.bound, other.bound, "union of languages with different bounds");
        TruncatedLang {
            bound: self.bound,
            words: self.words.union(&other.words).cloned().collect(),
        }
    }

    pub fn is_subset(&self, other: &TruncatedLang) -> bool {
        self.words.is_subset(&other.words)
    }

    /// Re-truncates to a (usually smaller) bound `k`.
    pub fn restrict(&self, k: usize) -> TruncatedLang {
        TruncatedLang {
            bound: k,
            words: self.words.iter().filter(|w| w.len() <= k).cloned().collect(),
        }
    }
}

/// `{ xy : x in a, y in b, |xy| <= k }` with bound `k`.
pub fn trunc_product(a: &TruncatedLang, b: &TruncatedLang, k: usize) -> TruncatedLang {
    let mut words = BTreeSet::new();
    for x in &a.words {
        if x.len() > k {
            continue;
        }
        for y in &b.words {
            if x.len() + y.len() <= k {
                words.insert(x.concat(y));
            }
        }
    }
    TruncatedLang { bound: k, words }
}

/// Every word of length at most `k` over `alphabet`.
pub fn full_language(alphabet: &BTreeSet<Var>, k: usize) -> TruncatedLang {
    let mut words = BTreeSet::new();
    let mut level = vec![Word::epsilon()];
    words.insert(Word::epsilon());
    for _ in 0..k {
        let mut next = Vec::new();
        for w in &level {
            for v in alphabet {
                let longer = w.concat(&Word::letter(v.clone()));
                words.insert(longer.clone());
                next.push(longer);
            }
        }
        level = next;
    }
    TruncatedLang { bound: k, words }
}

/// An assignment of truncated languages to variables, all at one bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Valuation {
    bound: usize,
    map: BTreeMap<Var, TruncatedLang>,
}

impl Valuation {
    pub fn new(bound: usize) -> Valuation {
        Valuation { bound, map: BTreeMap::new() }
    }

    /// The canonical valuation: each variable denotes its own one-letter word.
    pub fn canonical(vars: impl IntoIterator<Item = Var>, bound: usize) -> Valuation {
        let mut val = Valuation::new(bound);
        for v in vars {
            let lang = TruncatedLang::letter(&v, bound);
            val.map.insert(v, lang);
        }
        val
    }

    pub fn bind(mut self, v: Var, lang: TruncatedLang) -> Valuation {
        assert_eq!(lang.bound(), self.bound, "binding with mismatched bound");
        self.map.insert(v, lang);
        self
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn get(&self, v: &Var) -> Option<&TruncatedLang> {
        self.map.get(v)
    }
}

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum EvalError {
    #[error("unbound variable `{0}` in valuation")]
    UnboundVar(Var),
    #[error("valuation bound {valuation} does not match evaluation bound {requested}")]
    BoundMismatch { valuation: usize, requested: usize },
}

/// Evaluates `t` under `sigma`, returning exactly the words of length
/// `<= k` of the denoted language.
///
/// `mu x. t` is the least fixpoint of the body, computed by iteration
/// from the empty language until two successive iterates agree. Each
/// pre-stabilization step strictly adds words from a finite universe,
/// so the iteration count never exceeds the final size plus one; this
/// is asserted.
pub fn eval(t: &Term, sigma: &Valuation, k: usize) -> Result<TruncatedLang, EvalError> {
    if sigma.bound != k {
        return Err(EvalError::BoundMismatch { valuation: sigma.bound, requested: k });
    }
    let mut env = sigma.map.clone();
    eval_rec(t, &mut env, k)
}

fn eval_rec(
    t: &Term,
    env: &mut BTreeMap<Var, TruncatedLang>,
    k: usize,
) -> Result<TruncatedLang, EvalError> {
    match t {
        Term::Zero => Ok(TruncatedLang::empty(k)),
        Term::One => Ok(TruncatedLang::epsilon(k)),
        Term::Var(v) => env.get(v).cloned().ok_or_else(|| EvalError::UnboundVar(v.clone())),
        Term::Sum(l, r) => {
            let a = eval_rec(l, env, k)?;
            let b = eval_rec(r, env, k)?;
            Ok(a.union(&b))
        }
        Term::Prod(l, r) => {
            let a = eval_rec(l, env, k)?;
            let b = eval_rec(r, env, k)?;
            Ok(trunc_product(&a, &b, k))
        }
        Term::Mu(x, body) => {
            let saved = env.get(x).cloned();
            let mut current = TruncatedLang::empty(k);
            let mut iterations = 0usize;
            loop {
                env.insert(x.clone(), current.clone());
                let next = eval_rec(body, env, k)?;
                iterations += 1;
                assert!(
                    current.is_subset(&next),
                    "fixpoint iteration is not monotone at `{}`",
                    x
                );
                if next == current {
                    break;
                }
                current = next;
            }
            // Strict growth before stabilization bounds the count by the
            // fixpoint size plus one, itself at most |alphabet^{<=k}| + 1.
            assert!(
                iterations <= current.len() + 1,
                "fixpoint iteration exceeded its bound at `{}`",
                x
            );
            match saved {
                Some(lang) => {
                    env.insert(x.clone(), lang);
                }
                None => {
                    env.remove(x);
                }
            }
            Ok(current)
        }
    }
}

/// `eval` under the canonical valuation over the term's free variables.
pub fn canonical_eval(t: &Term, k: usize) -> TruncatedLang {
    let sigma = Valuation::canonical(t.free_vars(), k);
    eval(t, &sigma, k).expect("canonical valuation covers every free variable")
}

/// The values of the approximants of `mu x. t` under `sigma`, from
/// `n = 0` up to and including the first one equal to the fixpoint.
pub fn approximant_chain(
    x: &Var,
    t: &Term,
    sigma: &Valuation,
    k: usize,
) -> Result<Vec<TruncatedLang>, EvalError> {
    let target = eval(&Term::mu(x.clone(), t.clone()), sigma, k)?;
    let mut chain = Vec::new();
    let mut approx = Term::Zero;
    let mut n = 0usize;
    loop {
        let value = eval(&approx, sigma, k)?;
        chain.push(value.clone());
        if value == target {
            return Ok(chain);
        }
        assert!(
            n <= target.len() + 1,
            "approximant chain failed to stabilize at the fixpoint"
        );
        approx = t.subst(x, &approx);
        n += 1;
    }
}

/// Outcome of a bounded equivalence test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EquivResult {
    Equal { bound: usize },
    /// A shortest word (ties broken lexicographically) in exactly one of
    /// the two languages; `in_left` records which.
    Counterexample { word: Word, in_left: bool },
}

/// Compares the canonical bounded languages of `s` and `t`.
pub fn equiv_upto(s: &Term, t: &Term, k: usize) -> EquivResult {
    let left = canonical_eval(s, k);
    let right = canonical_eval(t, k);
    if left == right {
        return EquivResult::Equal { bound: k };
    }
    let word = left
        .words()
        .symmetric_difference(right.words())
        .min()
        .expect("unequal languages have a symmetric difference")
        .clone();
    let in_left = left.contains(&word);
    EquivResult::Counterexample { word, in_left }
}
