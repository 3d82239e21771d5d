//! Command-line front end: evaluation, equivalence refutation,
//! approximants, grammar conversion, and the law suite.
//!
//! Exit codes: 0 on success (equal / all laws pass), 1 when an
//! equivalence is refuted or some law check fails, 2 on usage or parse
//! errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mucfl::{
    bekic_term, canonical_eval, equiv_upto, grammar_eval, parse_grammar, parse_term, print_grammar,
    print_term, run_law_cases, run_suite, syntax::is_valid_name, to_grammar, EquivResult, Grammar,
    LawName, SuiteConfig, Term, TruncatedLang, Var,
};

#[derive(Parser)]
#[command(name = "mucfl", version, about = "Mu-regular expressions and context-free grammars")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the words of a term's language up to length k, one per line
    Eval {
        #[arg(short, default_value_t = 6)]
        k: usize,
        /// Term text, or @path to read it from a file
        term: String,
    },
    /// Decide equality of two terms' languages up to length k
    Equiv {
        #[arg(short, default_value_t = 6)]
        k: usize,
        term1: String,
        term2: String,
    },
    /// Print the unsimplified n-th approximant of a term body
    Approx {
        #[arg(short)]
        n: usize,
        /// The variable being unfolded
        #[arg(short)]
        x: String,
        term: String,
    },
    /// Flatten a term into a context-free grammar
    ToGrammar { term: String },
    /// Solve a grammar file into a single mu-term
    FromGrammar {
        /// Nonterminal to solve for (default: the start symbol)
        #[arg(short)]
        v: Option<String>,
        file: PathBuf,
    },
    /// Run the algebraic-law suite and print one report line per check
    Check {
        #[arg(short, default_value_t = 6)]
        k: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Restrict to a single law
        #[arg(long)]
        law: Option<String>,
    },
    /// Print the bounded language of a grammar file's nonterminal
    Lang {
        #[arg(short, default_value_t = 6)]
        k: usize,
        file: PathBuf,
        /// Nonterminal to print (default: the start symbol)
        #[arg(short)]
        v: Option<String>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("{message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Eval { k, term } => {
            let term = term_argument(&term)?;
            print_language(&canonical_eval(&term, k));
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv { k, term1, term2 } => {
            let left = term_argument(&term1)?;
            let right = term_argument(&term2)?;
            match equiv_upto(&left, &right, k) {
                EquivResult::Equal { bound } => {
                    println!("equal up to {bound}");
                    Ok(ExitCode::SUCCESS)
                }
                EquivResult::Counterexample { word, in_left } => {
                    let side = if in_left { "left" } else { "right" };
                    println!("counterexample: {word} (in {side} only)");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Approx { n, x, term } => {
            if !is_valid_name(&x) {
                return Err(format!("invalid variable name `{x}`"));
            }
            let term = term_argument(&term)?;
            let result = mucfl::approximant(n, &Var::new(x), &term);
            println!("{}", print_term(&result));
            Ok(ExitCode::SUCCESS)
        }
        Command::ToGrammar { term } => {
            let term = term_argument(&term)?;
            print!("{}", print_grammar(&to_grammar(&term)));
            Ok(ExitCode::SUCCESS)
        }
        Command::FromGrammar { v, file } => {
            let grammar = grammar_file(&file)?;
            let target = nonterminal_argument(&grammar, v)?;
            let term = bekic_term(&grammar, &target).map_err(|e| e.to_string())?;
            println!("{}", print_term(&term));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { k, seed, cases, law } => {
            if cases == 0 {
                return Err("--cases must be at least 1".to_string());
            }
            let cfg = SuiteConfig::new(seed, cases, k);
            let reports = match law {
                Some(name) => {
                    let law: LawName = name.parse()?;
                    run_law_cases(&cfg, law)
                }
                None => run_suite(&cfg),
            };
            for report in &reports {
                println!("{}", report.to_line(seed));
            }
            if reports.iter().all(|r| !matches!(r.verdict, mucfl::Verdict::Fail)) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Lang { k, file, v } => {
            let grammar = grammar_file(&file)?;
            let target = nonterminal_argument(&grammar, v)?;
            let langs = grammar_eval(&grammar, k);
            print_language(&langs[&target]);
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// A term argument is the term text itself, or `@path` naming a file.
fn term_argument(arg: &str) -> Result<Term, String> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read `{path}`: {e}"))?,
        None => arg.to_string(),
    };
    parse_term(&text).map_err(|e| e.to_string())
}

fn grammar_file(path: &PathBuf) -> Result<Grammar, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read `{}`: {e}", path.display()))?;
    parse_grammar(&text).map_err(|e| e.to_string())
}

fn nonterminal_argument(grammar: &Grammar, v: Option<String>) -> Result<Var, String> {
    match v {
        None => Ok(grammar.start().clone()),
        Some(name) => {
            if !is_valid_name(&name) {
                return Err(format!("invalid nonterminal name `{name}`"));
            }
            let var = Var::new(name);
            if grammar.is_nonterminal(&var) {
                Ok(var)
            } else {
                Err(format!("`{var}` is not a nonterminal of the grammar"))
            }
        }
    }
}

fn print_language(lang: &TruncatedLang) {
    for word in lang.words() {
        println!("{word}");
    }
}
