//! Context-free grammars as systems of inequalities `p_i <= x_i`, with
//! bounded evaluation, an independent derivation oracle, and conversion
//! to and from mu-terms.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use thiserror::Error;

use crate::semantics::{trunc_product, TruncatedLang, Word};
use crate::syntax::{fresh_var, Term, Var};

/// One production alternative: a sequence of symbols, empty for epsilon.
pub type Alt = Vec<Var>;

/// A grammar over declared nonterminals; any other symbol occurring in an
/// alternative is a terminal.
///
/// Nonterminal order is the declaration order with the start symbol
/// normalized to the front; Bekic elimination and printing both use it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grammar {
    start: Var,
    nonterminals: Vec<Var>,
    productions: BTreeMap<Var, Vec<Alt>>,
}

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum GrammarError {
    #[error("start symbol `{0}` has no productions")]
    UndeclaredStart(Var),
    #[error("nonterminal `{0}` has no alternatives")]
    EmptyAlternatives(Var),
    #[error("`{0}` is not a nonterminal of the grammar")]
    UnknownNonterminal(Var),
}

impl Grammar {
    /// Builds a grammar from declarations in order. Repeated declarations
    /// of one nonterminal merge; repeated alternatives are dropped.
    pub fn new(
        start: Var,
        decls: impl IntoIterator<Item = (Var, Vec<Alt>)>,
    ) -> Result<Grammar, GrammarError> {
        let mut order: Vec<Var> = Vec::new();
        let mut productions: BTreeMap<Var, Vec<Alt>> = BTreeMap::new();
        for (nt, alts) in decls {
            let entry = productions.entry(nt.clone()).or_insert_with(|| {
                order.push(nt.clone());
                Vec::new()
            });
            for alt in alts {
                if !entry.contains(&alt) {
                    entry.push(alt);
                }
            }
        }
        if !productions.contains_key(&start) {
            return Err(GrammarError::UndeclaredStart(start));
        }
        for (nt, alts) in &productions {
            if alts.is_empty() {
                return Err(GrammarError::EmptyAlternatives(nt.clone()));
            }
        }
        let mut nonterminals = vec![start.clone()];
        nonterminals.extend(order.into_iter().filter(|nt| nt != &start));
        Ok(Grammar { start, nonterminals, productions })
    }

    pub fn start(&self) -> &Var {
        &self.start
    }

    pub fn nonterminals(&self) -> &[Var] {
        &self.nonterminals
    }

    pub fn alternatives(&self, nt: &Var) -> Option<&[Alt]> {
        self.productions.get(nt).map(|alts| alts.as_slice())
    }

    pub fn is_nonterminal(&self, v: &Var) -> bool {
        self.productions.contains_key(v)
    }

    /// Symbols appearing in alternatives that are not nonterminals.
    pub fn terminals(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        for alts in self.productions.values() {
            for alt in alts {
                for sym in alt {
                    if !self.is_nonterminal(sym) {
                        out.insert(sym.clone());
                    }
                }
            }
        }
        out
    }
}

/// Flattens a term into a grammar: one nonterminal per binder (keeping
/// the binder's name when possible), plus a start nonterminal for the
/// root when the root is not itself a binder.
///
/// Free variables of the term become the grammar's terminals. Each body
/// contributes its sum-of-monomials alternatives; summands containing
/// `0` are dropped and a nonterminal denoting the empty language keeps a
/// self-loop alternative so the grammar stays printable.
pub fn to_grammar(t: &Term) -> Grammar {
    struct Ctx {
        used: BTreeSet<Var>,
        order: Vec<Var>,
        prods: BTreeMap<Var, Vec<Alt>>,
    }

    impl Ctx {
        fn assign(&mut self, base: &Var) -> Var {
            let name = if self.used.contains(base) {
                fresh_var(base, &self.used)
            } else {
                base.clone()
            };
            self.used.insert(name.clone());
            name
        }

        fn set_alternatives(&mut self, name: &Var, mut alts: Vec<Alt>) {
            if alts.is_empty() {
                alts.push(vec![name.clone()]);
            }
            let mut seen = BTreeSet::new();
            alts.retain(|alt| seen.insert(alt.clone()));
            self.prods.insert(name.clone(), alts);
        }
    }

    fn mu_nonterminal(binder: &Var, body: &Term, env: &BTreeMap<Var, Var>, ctx: &mut Ctx) -> Var {
        let name = ctx.assign(binder);
        // Declaration order is outermost-first: record the name before
        // recursing into the body.
        ctx.order.push(name.clone());
        let mut inner = env.clone();
        inner.insert(binder.clone(), name.clone());
        let alts = monomials(body, &inner, ctx);
        ctx.set_alternatives(&name, alts);
        name
    }

    fn monomials(t: &Term, env: &BTreeMap<Var, Var>, ctx: &mut Ctx) -> Vec<Alt> {
        match t {
            Term::Zero => Vec::new(),
            Term::One => vec![Vec::new()],
            Term::Var(v) => vec![vec![env.get(v).cloned().unwrap_or_else(|| v.clone())]],
            Term::Sum(l, r) => {
                let mut alts = monomials(l, env, ctx);
                alts.extend(monomials(r, env, ctx));
                alts
            }
            Term::Prod(l, r) => {
                let left = monomials(l, env, ctx);
                let right = monomials(r, env, ctx);
                let mut alts = Vec::new();
                for lm in &left {
                    for rm in &right {
                        let mut m = lm.clone();
                        m.extend(rm.iter().cloned());
                        alts.push(m);
                    }
                }
                alts
            }
            Term::Mu(x, body) => vec![vec![mu_nonterminal(x, body, env, ctx)]],
        }
    }

    let mut used = t.free_vars();
    // `eps` is a keyword of the grammar syntax, never a nonterminal name.
    used.insert(Var::new("eps"));
    let mut ctx = Ctx { used, order: Vec::new(), prods: BTreeMap::new() };
    let env = BTreeMap::new();

    let start = match t {
        Term::Mu(x, body) => mu_nonterminal(x, body, &env, &mut ctx),
        _ => {
            let start = ctx.assign(&Var::new("S"));
            ctx.order.push(start.clone());
            let alts = monomials(t, &env, &mut ctx);
            ctx.set_alternatives(&start, alts);
            start
        }
    };

    let decls = ctx
        .order
        .iter()
        .map(|nt| (nt.clone(), ctx.prods[nt].clone()))
        .collect::<Vec<_>>();
    Grammar::new(start, decls).expect("flattening produced a well-formed grammar")
}

fn alternative_term(alt: &Alt) -> Term {
    Term::prod_of(alt.iter().map(|v| Term::Var(v.clone())))
}

fn rhs_term(g: &Grammar, nt: &Var) -> Term {
    let alts = g.alternatives(nt).expect("nonterminal has productions");
    Term::sum_of(alts.iter().map(alternative_term))
}

/// A closed mu-term denoting the least-solution component for `v`,
/// by block elimination: the first nonterminal is solved as a one-variable
/// fixpoint over the rest, which are then solved recursively and
/// substituted back (last nonterminal solved innermost).
pub fn bekic_term(g: &Grammar, v: &Var) -> Result<Term, GrammarError> {
    if !g.is_nonterminal(v) {
        return Err(GrammarError::UnknownNonterminal(v.clone()));
    }

    fn solve(vars: &[Var], eqs: &BTreeMap<Var, Term>) -> BTreeMap<Var, Term> {
        let Some((head, rest)) = vars.split_first() else {
            return BTreeMap::new();
        };
        let head_solution_open = Term::mu(head.clone(), eqs[head].clone());
        let rest_eqs = rest
            .iter()
            .map(|nt| (nt.clone(), eqs[nt].subst(head, &head_solution_open)))
            .collect::<BTreeMap<_, _>>();
        let mut solutions = solve(rest, &rest_eqs);
        let head_solution = rest.iter().fold(head_solution_open, |acc, nt| {
            acc.subst(nt, &solutions[nt])
        });
        solutions.insert(head.clone(), head_solution);
        solutions
    }

    let eqs = g
        .nonterminals
        .iter()
        .map(|nt| (nt.clone(), rhs_term(g, nt)))
        .collect::<BTreeMap<_, _>>();
    let solutions = solve(&g.nonterminals, &eqs);
    Ok(solutions[v].clone())
}

/// The least simultaneous solution of the grammar in the truncated
/// algebra: joint Kleene iteration from all-empty until no component
/// changes.
pub fn grammar_eval(g: &Grammar, k: usize) -> BTreeMap<Var, TruncatedLang> {
    let mut current: BTreeMap<Var, TruncatedLang> = g
        .nonterminals
        .iter()
        .map(|nt| (nt.clone(), TruncatedLang::empty(k)))
        .collect();
    let mut rounds = 0usize;
    loop {
        let mut next = BTreeMap::new();
        for nt in &g.nonterminals {
            let mut lang = TruncatedLang::empty(k);
            for alt in g.alternatives(nt).expect("declared nonterminal") {
                lang = lang.union(&eval_alt(alt, &current, k));
            }
            assert!(
                current[nt].is_subset(&lang),
                "grammar iteration is not monotone at `{nt}`"
            );
            next.insert(nt.clone(), lang);
        }
        rounds += 1;
        if next == current {
            break;
        }
        current = next;
    }
    let total: usize = current.values().map(TruncatedLang::len).sum();
    assert!(rounds <= total + 1, "grammar iteration exceeded its bound");
    current
}

fn eval_alt(alt: &Alt, env: &BTreeMap<Var, TruncatedLang>, k: usize) -> TruncatedLang {
    // `env` holds every nonterminal, so a miss means a terminal symbol.
    let mut acc = TruncatedLang::epsilon(k);
    for sym in alt {
        let lang = match env.get(sym) {
            Some(lang) => lang.clone(),
            None => TruncatedLang::letter(sym, k),
        };
        acc = trunc_product(&acc, &lang, k);
        if acc.is_empty() {
            break;
        }
    }
    acc
}

/// The same map as [`grammar_eval`], computed by breadth-first expansion
/// of sentential forms.
///
/// A form is pruned when its minimum terminal yield (terminals count one,
/// nonterminals their minimum derivable length) already exceeds `k`, and
/// — as a completeness assumption that keeps epsilon-cyclic grammars
/// terminating, validated against `grammar_eval` in the tests — when it
/// grows longer than `k` plus the number of nonterminals times the
/// longest alternative.
pub fn derive_oracle(g: &Grammar, k: usize) -> BTreeMap<Var, TruncatedLang> {
    let min_len = min_terminal_yield(g);
    let max_alt = g
        .nonterminals
        .iter()
        .flat_map(|nt| g.alternatives(nt).unwrap_or(&[]))
        .map(Vec::len)
        .max()
        .unwrap_or(1)
        .max(1);
    let cap = k + g.nonterminals.len() * max_alt;

    let yield_of = |form: &[Var]| -> usize {
        form.iter()
            .map(|sym| match min_len.get(sym) {
                Some(n) => *n,
                None => 1,
            })
            .fold(0usize, usize::saturating_add)
    };

    let mut result = BTreeMap::new();
    for nt in &g.nonterminals {
        let mut words: BTreeSet<Word> = BTreeSet::new();
        let mut queue: VecDeque<Vec<Var>> = VecDeque::new();
        let mut visited: HashSet<Vec<Var>> = HashSet::new();
        let initial = vec![nt.clone()];
        visited.insert(initial.clone());
        queue.push_back(initial);
        while let Some(form) = queue.pop_front() {
            let Some(i) = form.iter().position(|sym| g.is_nonterminal(sym)) else {
                if form.len() <= k {
                    words.insert(Word::new(form));
                }
                continue;
            };
            for alt in g.alternatives(&form[i]).expect("declared nonterminal") {
                let mut next = Vec::with_capacity(form.len() + alt.len());
                next.extend(form[..i].iter().cloned());
                next.extend(alt.iter().cloned());
                next.extend(form[i + 1..].iter().cloned());
                if yield_of(&next) > k || next.len() > cap {
                    continue;
                }
                if visited.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        result.insert(nt.clone(), TruncatedLang::from_words(k, words));
    }
    result
}

/// Minimum terminal length derivable from each nonterminal;
/// `usize::MAX` marks nonterminals that derive no terminal word.
fn min_terminal_yield(g: &Grammar) -> BTreeMap<Var, usize> {
    let mut min_len: BTreeMap<Var, usize> =
        g.nonterminals.iter().map(|nt| (nt.clone(), usize::MAX)).collect();
    loop {
        let mut changed = false;
        for nt in &g.nonterminals {
            for alt in g.alternatives(nt).expect("declared nonterminal") {
                let total = alt
                    .iter()
                    .map(|sym| min_len.get(sym).copied().unwrap_or(1))
                    .fold(0usize, usize::saturating_add);
                if total < min_len[nt] {
                    min_len.insert(nt.clone(), total);
                    changed = true;
                }
            }
        }
        if !changed {
            return min_len;
        }
    }
}
