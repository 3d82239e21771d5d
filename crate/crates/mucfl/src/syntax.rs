//! Terms of the mu-regular-expression language: `0`, `1`, variables, sums,
//! products, and the least-fixpoint binder `mu x. t`.
//!
//! Everything here is binding-aware: free variables, alpha-equivalence,
//! capture-avoiding substitution, and the syntactic approximants
//! `0 x. t = 0`, `(n+1) x. t = t[n x. t / x]`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A variable (or alphabet symbol) name.
///
/// Names are nonempty, start with a letter, and continue with letters,
/// digits, `_` or `'`. The keyword `mu` is not a valid name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(Arc<str>);

impl Var {
    /// Creates a variable, panicking on names that the concrete syntax
    /// could not round-trip.
    pub fn new(name: impl AsRef<str>) -> Var {
        let name = name.as_ref();
        assert!(is_valid_name(name), "invalid variable name: {name:?}");
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Var({})", self.0)
    }
}

/// True for identifiers the parser would accept: a letter followed by
/// letters, digits, underscores or apostrophes. `mu` is reserved.
pub fn is_valid_name(s: &str) -> bool {
    if s == "mu" {
        return false;
    }
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Abstract syntax of mu-expressions.
///
/// Sums and products are binary; n-ary views are a convenience of the
/// printer only. Structural equality (`==`) distinguishes bound-variable
/// names; use [`Term::alpha_eq`] for equality up to renaming.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Term {
    Zero,
    One,
    Var(Var),
    Sum(Arc<Term>, Arc<Term>),
    Prod(Arc<Term>, Arc<Term>),
    Mu(Var, Arc<Term>),
}

impl Term {
    pub fn var(name: impl AsRef<str>) -> Term {
        Term::Var(Var::new(name))
    }

    pub fn sum(l: Term, r: Term) -> Term {
        Term::Sum(Arc::new(l), Arc::new(r))
    }

    pub fn prod(l: Term, r: Term) -> Term {
        Term::Prod(Arc::new(l), Arc::new(r))
    }

    pub fn mu(binder: Var, body: Term) -> Term {
        Term::Mu(binder, Arc::new(body))
    }

    /// Left-associated sum of `terms`; `0` when empty.
    pub fn sum_of(terms: impl IntoIterator<Item = Term>) -> Term {
        let mut iter = terms.into_iter();
        match iter.next() {
            None => Term::Zero,
            Some(first) => iter.fold(first, Term::sum),
        }
    }

    /// Left-associated product of `terms`; `1` when empty.
    pub fn prod_of(terms: impl IntoIterator<Item = Term>) -> Term {
        let mut iter = terms.into_iter();
        match iter.next() {
            None => Term::One,
            Some(first) => iter.fold(first, Term::prod),
        }
    }

    /// The set of variables with at least one free occurrence.
    pub fn free_vars(&self) -> BTreeSet<Var> {
        fn go(t: &Term, bound: &mut Vec<Var>, out: &mut BTreeSet<Var>) {
            match t {
                Term::Zero | Term::One => {}
                Term::Var(v) => {
                    if !bound.contains(v) {
                        out.insert(v.clone());
                    }
                }
                Term::Sum(l, r) | Term::Prod(l, r) => {
                    go(l, bound, out);
                    go(r, bound, out);
                }
                Term::Mu(x, body) => {
                    bound.push(x.clone());
                    go(body, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    /// Every name that occurs as a `mu` binder somewhere in the term.
    pub fn bound_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        fn go(t: &Term, out: &mut BTreeSet<Var>) {
            match t {
                Term::Zero | Term::One | Term::Var(_) => {}
                Term::Sum(l, r) | Term::Prod(l, r) => {
                    go(l, out);
                    go(r, out);
                }
                Term::Mu(x, body) => {
                    out.insert(x.clone());
                    go(body, out);
                }
            }
        }
        go(self, &mut out);
        out
    }

    /// True iff `x` has a free occurrence.
    pub fn has_free(&self, x: &Var) -> bool {
        match self {
            Term::Zero | Term::One => false,
            Term::Var(v) => v == x,
            Term::Sum(l, r) | Term::Prod(l, r) => l.has_free(x) || r.has_free(x),
            Term::Mu(y, body) => y != x && body.has_free(x),
        }
    }

    /// Capture-avoiding substitution of `u` for every free occurrence of `x`.
    ///
    /// Binders that would capture a free variable of `u` are renamed with
    /// the smallest numeric suffix (`y` becomes `y1`, `y2`, ...) that is
    /// neither free nor bound in either operand.
    pub fn subst(&self, x: &Var, u: &Term) -> Term {
        match self {
            Term::Zero | Term::One => self.clone(),
            Term::Var(v) => {
                if v == x {
                    u.clone()
                } else {
                    self.clone()
                }
            }
            Term::Sum(l, r) => Term::sum(l.subst(x, u), r.subst(x, u)),
            Term::Prod(l, r) => Term::prod(l.subst(x, u), r.subst(x, u)),
            Term::Mu(y, body) => {
                if y == x || !body.has_free(x) {
                    return self.clone();
                }
                if u.has_free(y) {
                    // Renaming the binder keeps u's occurrence of y free.
                    let mut avoid = self.free_vars();
                    avoid.extend(self.bound_vars());
                    avoid.extend(u.free_vars());
                    avoid.extend(u.bound_vars());
                    avoid.insert(x.clone());
                    let fresh = fresh_var(y, &avoid);
                    let renamed = body.subst(y, &Term::Var(fresh.clone()));
                    Term::Mu(fresh, Arc::new(renamed.subst(x, u)))
                } else {
                    Term::Mu(y.clone(), Arc::new(body.subst(x, u)))
                }
            }
        }
    }

    /// Equality up to consistent renaming of bound variables.
    pub fn alpha_eq(&self, other: &Term) -> bool {
        fn go(s: &Term, t: &Term, env_s: &mut Vec<Var>, env_t: &mut Vec<Var>) -> bool {
            match (s, t) {
                (Term::Zero, Term::Zero) | (Term::One, Term::One) => true,
                (Term::Var(a), Term::Var(b)) => {
                    // Innermost binder wins on both sides.
                    let ia = env_s.iter().rposition(|v| v == a);
                    let ib = env_t.iter().rposition(|v| v == b);
                    match (ia, ib) {
                        (Some(i), Some(j)) => i == j,
                        (None, None) => a == b,
                        _ => false,
                    }
                }
                (Term::Sum(l1, r1), Term::Sum(l2, r2))
                | (Term::Prod(l1, r1), Term::Prod(l2, r2)) => {
                    go(l1, l2, env_s, env_t) && go(r1, r2, env_s, env_t)
                }
                (Term::Mu(x, b1), Term::Mu(y, b2)) => {
                    env_s.push(x.clone());
                    env_t.push(y.clone());
                    let eq = go(b1, b2, env_s, env_t);
                    env_s.pop();
                    env_t.pop();
                    eq
                }
                _ => false,
            }
        }
        go(self, other, &mut Vec::new(), &mut Vec::new())
    }
}

/// The smallest `base`-with-numeric-suffix name not in `avoid`.
pub fn fresh_var(base: &Var, avoid: &BTreeSet<Var>) -> Var {
    for i in 1u64.. {
        let candidate = Var::new(format!("{}{}", base.name(), i));
        if !avoid.contains(&candidate) {
            return candidate;
        }
    }
    unreachable!("ran out of fresh-name suffixes")
}

/// The n-th syntactic approximant of `mu x. t`, built by the recursion
/// `0 x. t = 0`, `(n+1) x. t = t[n x. t / x]` with no simplification.
///
/// `x` is never free in the result.
pub fn approximant(n: usize, x: &Var, t: &Term) -> Term {
    let mut acc = Term::Zero;
    for _ in 0..n {
        acc = t.subst(x, &acc);
    }
    acc
}

/// Configuration for the deterministic term generator.
#[derive(Clone, Debug)]
pub struct GenConfig {
    /// Free symbols the generated term may mention.
    pub alphabet: Vec<Var>,
    /// Maximum tree height; 1 forces an atom.
    pub max_depth: usize,
    /// Maximum number of nested `mu` binders.
    pub max_mu_nesting: usize,
    pub seed: u64,
}

impl GenConfig {
    pub fn new(alphabet: Vec<Var>, max_depth: usize, max_mu_nesting: usize, seed: u64) -> GenConfig {
        assert!(!alphabet.is_empty(), "generator alphabet must be nonempty");
        assert!(max_depth >= 1, "generator depth must be at least 1");
        GenConfig { alphabet, max_depth, max_mu_nesting, seed }
    }
}

/// Draws a term from `cfg`, deterministically in `cfg.seed`.
///
/// Every variable reference is either an alphabet symbol or bound by an
/// enclosing binder, so the result is closed under the reading that
/// alphabet symbols are terminals. Generated binders are fresh names
/// (`v1`, `v2`, ...) disjoint from the alphabet.
pub fn random_term(cfg: &GenConfig) -> Term {
    assert!(!cfg.alphabet.is_empty(), "generator alphabet must be nonempty");
    assert!(cfg.max_depth >= 1, "generator depth must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut counter = 0u64;
    gen_term(&mut rng, cfg, cfg.max_depth, cfg.max_mu_nesting, &mut Vec::new(), &mut counter)
}

fn gen_term(
    rng: &mut ChaCha8Rng,
    cfg: &GenConfig,
    depth: usize,
    mu_left: usize,
    scope: &mut Vec<Var>,
    counter: &mut u64,
) -> Term {
    if depth <= 1 {
        return gen_atom(rng, cfg, scope);
    }
    // Weights: atom 2, sum 3, prod 3, mu 2 (when nesting budget remains).
    let total = if mu_left > 0 { 10 } else { 8 };
    match rng.gen_range(0..total) {
        0..=1 => gen_atom(rng, cfg, scope),
        2..=4 => {
            let l = gen_term(rng, cfg, depth - 1, mu_left, scope, counter);
            let r = gen_term(rng, cfg, depth - 1, mu_left, scope, counter);
            Term::sum(l, r)
        }
        5..=7 => {
            let l = gen_term(rng, cfg, depth - 1, mu_left, scope, counter);
            let r = gen_term(rng, cfg, depth - 1, mu_left, scope, counter);
            Term::prod(l, r)
        }
        _ => {
            let binder = loop {
                *counter += 1;
                let candidate = Var::new(format!("v{counter}"));
                if !cfg.alphabet.contains(&candidate) {
                    break candidate;
                }
            };
            scope.push(binder.clone());
            let body = gen_term(rng, cfg, depth - 1, mu_left - 1, scope, counter);
            scope.pop();
            Term::mu(binder, body)
        }
    }
}

fn gen_atom(rng: &mut ChaCha8Rng, cfg: &GenConfig, scope: &[Var]) -> Term {
    match rng.gen_range(0..8u32) {
        0 => Term::Zero,
        1..=2 => Term::One,
        _ => {
            let n = cfg.alphabet.len() + scope.len();
            let i = rng.gen_range(0..n);
            let v = if i < cfg.alphabet.len() {
                cfg.alphabet[i].clone()
            } else {
                scope[i - cfg.alphabet.len()].clone()
            };
            Term::Var(v)
        }
    }
}

/// Convenience handle used in tests and the law suite.
pub fn seeded_rng(seed: u64) -> impl RngCore {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Var {
        Var::new(name)
    }

    /// mu S. 1 + a (mu B. b S + a B B) + b (mu A. a S + b A A)
    fn balanced_term() -> Term {
        let inner_b = Term::mu(
            v("B"),
            Term::sum(
                Term::prod(Term::var("b"), Term::var("S")),
                Term::prod(Term::prod(Term::var("a"), Term::var("B")), Term::var("B")),
            ),
        );
        let inner_a = Term::mu(
            v("A"),
            Term::sum(
                Term::prod(Term::var("a"), Term::var("S")),
                Term::prod(Term::prod(Term::var("b"), Term::var("A")), Term::var("A")),
            ),
        );
        Term::mu(
            v("S"),
            Term::sum(
                Term::sum(Term::One, Term::prod(Term::var("a"), inner_b)),
                Term::prod(Term::var("b"), inner_a),
            ),
        )
    }

    #[test]
    fn free_vars_of_balanced_term() {
        let fv = balanced_term().free_vars();
        assert_eq!(fv, BTreeSet::from([v("a"), v("b")]));
    }

    #[test]
    fn free_vars_trivia() {
        assert!(Term::Zero.free_vars().is_empty());
        let t = Term::mu(v("x"), Term::sum(Term::var("x"), Term::var("y")));
        assert_eq!(t.free_vars(), BTreeSet::from([v("y")]));
    }

    #[test]
    fn subst_renames_to_avoid_capture() {
        // (mu x. x + y)[x / y] must not capture the substituted x.
        let t = Term::mu(v("x"), Term::sum(Term::var("x"), Term::var("y")));
        let got = t.subst(&v("y"), &Term::var("x"));
        let expected = Term::mu(v("z"), Term::sum(Term::var("z"), Term::var("x")));
        assert!(got.alpha_eq(&expected), "got {got:?}");
        // The deterministic fresh name is the smallest x-with-suffix.
        assert_eq!(got, Term::mu(v("x1"), Term::sum(Term::var("x1"), Term::var("x"))));
    }

    #[test]
    fn subst_direct_replacement() {
        let t = Term::prod(Term::prod(Term::var("a"), Term::var("x")), Term::var("b"));
        let got = t.subst(&v("x"), &Term::One);
        assert_eq!(
            got,
            Term::prod(Term::prod(Term::var("a"), Term::One), Term::var("b"))
        );
    }

    #[test]
    fn subst_ignores_bound_occurrences() {
        let t = Term::mu(v("x"), Term::sum(Term::var("x"), Term::var("y")));
        assert_eq!(t.subst(&v("x"), &Term::Zero), t);
    }

    #[test]
    fn alpha_eq_examples() {
        let s = Term::mu(v("x"), Term::prod(Term::var("a"), Term::var("x")));
        let t = Term::mu(v("y"), Term::prod(Term::var("a"), Term::var("y")));
        assert!(s.alpha_eq(&t));

        let u = Term::mu(v("x"), Term::prod(Term::var("x"), Term::var("a")));
        assert!(!s.alpha_eq(&u));

        assert!(!Term::var("x").alpha_eq(&Term::var("y")));
    }

    #[test]
    fn alpha_eq_shadowing() {
        // mu x. mu x. x  ==  mu x. mu y. y  (innermost binder wins)
        let s = Term::mu(v("x"), Term::mu(v("x"), Term::var("x")));
        let t = Term::mu(v("x"), Term::mu(v("y"), Term::var("y")));
        assert!(s.alpha_eq(&t));
        let u = Term::mu(v("x"), Term::mu(v("y"), Term::var("x")));
        assert!(!s.alpha_eq(&u));
    }

    #[test]
    fn approximant_base_case_is_zero() {
        let body = Term::sum(Term::One, Term::prod(Term::var("a"), Term::var("x")));
        assert_eq!(approximant(0, &v("x"), &body), Term::Zero);
    }

    #[test]
    fn approximant_unfolds_without_simplification() {
        let body = Term::sum(Term::One, Term::prod(Term::var("a"), Term::var("x")));
        // 2x.(1 + a x) = 1 + a (1 + a 0)
        let expected = Term::sum(
            Term::One,
            Term::prod(
                Term::var("a"),
                Term::sum(Term::One, Term::prod(Term::var("a"), Term::Zero)),
            ),
        );
        assert_eq!(approximant(2, &v("x"), &body), expected);
    }

    #[test]
    fn approximant_of_square() {
        let body = Term::prod(Term::var("x"), Term::var("x"));
        assert_eq!(
            approximant(1, &v("x"), &body),
            Term::prod(Term::Zero, Term::Zero)
        );
    }

    #[test]
    fn approximant_eliminates_the_variable() {
        let body = Term::sum(Term::var("x"), Term::prod(Term::var("a"), Term::var("x")));
        for n in 0..5 {
            let t = approximant(n, &v("x"), &body);
            assert!(!t.free_vars().contains(&v("x")), "x free in {n}-th approximant");
        }
    }

    #[test]
    fn fresh_var_picks_smallest_suffix() {
        let avoid = BTreeSet::from([v("x1"), v("x2")]);
        assert_eq!(fresh_var(&v("x"), &avoid), v("x3"));
        assert_eq!(fresh_var(&v("y"), &avoid), v("y1"));
    }

    #[test]
    #[should_panic(expected = "invalid variable name")]
    fn mu_is_not_a_variable_name() {
        Var::new("mu");
    }

    fn cfg(depth: usize, nesting: usize, seed: u64) -> GenConfig {
        GenConfig::new(vec![v("a"), v("b")], depth, nesting, seed)
    }

    #[test]
    fn random_term_is_deterministic() {
        let a = random_term(&cfg(3, 1, 42));
        let b = random_term(&cfg(3, 1, 42));
        assert_eq!(a, b);
    }

    #[test]
    fn random_term_depth_one_is_an_atom() {
        for seed in 0..50 {
            match random_term(&cfg(1, 0, seed)) {
                Term::Zero | Term::One => {}
                Term::Var(x) => assert!(x == v("a") || x == v("b")),
                other => panic!("depth-1 draw produced {other:?}"),
            }
        }
    }

    #[test]
    fn random_term_varies_with_seed() {
        let mut distinct = BTreeSet::new();
        for seed in 0..100 {
            distinct.insert(format!("{:?}", random_term(&cfg(4, 2, seed))));
        }
        assert!(distinct.len() >= 2, "only {} distinct terms", distinct.len());
    }

    #[test]
    fn random_term_binders_avoid_the_alphabet() {
        for seed in 0..50 {
            let t = random_term(&cfg(4, 2, seed));
            let binders = t.bound_vars();
            assert!(binders.iter().all(|x| x != &v("a") && x != &v("b")));
        }
    }
}
