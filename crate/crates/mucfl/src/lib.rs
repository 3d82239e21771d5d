//! Mu-regular expressions and context-free grammars with exact
//! bounded-language semantics.
//!
//! Terms extend regular expressions with a least-fixpoint binder
//! `mu x. t` and denote context-free languages over their free
//! variables. Working in the algebra of word sets truncated to a length
//! bound `k` makes every fixpoint exactly computable, which supports:
//!
//! - evaluation of terms and grammars up to `k` ([`canonical_eval`],
//!   [`grammar_eval`]);
//! - equivalence refutation with shortest counterexamples
//!   ([`equiv_upto`]);
//! - conversion between grammars and terms in both directions
//!   ([`to_grammar`], [`bekic_term`]);
//! - executable checks of the algebraic laws the model satisfies
//!   ([`axioms`]).

pub mod axioms;
pub mod grammar;
pub mod io;
pub mod semantics;
pub mod syntax;

pub use axioms::{
    check_identity, check_mu_continuity, check_park, run_law_cases, run_suite, AxiomError,
    CheckReport, LawName, SuiteConfig, Verdict,
};
pub use grammar::{bekic_term, derive_oracle, grammar_eval, to_grammar, Alt, Grammar, GrammarError};
pub use io::{parse_grammar, parse_term, print_grammar, print_term, ParseError, SourcePos};
pub use semantics::{
    approximant_chain, canonical_eval, equiv_upto, eval, full_language, trunc_product, EquivResult,
    EvalError, TruncatedLang, Valuation, Word,
};
pub use syntax::{approximant, fresh_var, random_term, GenConfig, Term, Var};
