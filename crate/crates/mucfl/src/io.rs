//! Concrete syntax.
//!
//! Terms: atoms `0`, `1` and identifiers; product by juxtaposition or `.`
//! (binds tightest, left-associative); sum with `+` (left-associative);
//! `mu x. t` whose body extends as far right as possible; parentheses
//! group. Grammar files: one `N -> alt | alt | ...` line per nonterminal,
//! `eps` for the empty word, `#` comments, first left-hand side is the
//! start symbol.

use std::fmt;

use thiserror::Error;

use crate::grammar::{Alt, Grammar};
use crate::syntax::{is_valid_name, Term, Var};

/// 1-based position in the parsed text.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SourcePos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for SourcePos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Error, Clone, PartialEq, Eq, Debug)]
#[error("{pos}: {message}")]
pub struct ParseError {
    pub pos: SourcePos,
    pub message: String,
}

impl ParseError {
    fn new(pos: SourcePos, message: impl Into<String>) -> ParseError {
        ParseError { pos, message: message.into() }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Zero,
    One,
    Mu,
    Ident(String),
    Plus,
    Dot,
    LParen,
    RParen,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: SourcePos,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Lexer<'a> {
        Lexer { chars: text.chars().peekable(), pos: SourcePos { line: 1, column: 1 } }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn tokens(mut self) -> Result<(Vec<(Tok, SourcePos)>, SourcePos), ParseError> {
        let mut out = Vec::new();
        loop {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let start = self.pos;
            let Some(&c) = self.chars.peek() else {
                return Ok((out, start));
            };
            let tok = match c {
                '0' => {
                    self.bump();
                    Tok::Zero
                }
                '1' => {
                    self.bump();
                    Tok::One
                }
                '+' => {
                    self.bump();
                    Tok::Plus
                }
                '.' => {
                    self.bump();
                    Tok::Dot
                }
                '(' => {
                    self.bump();
                    Tok::LParen
                }
                ')' => {
                    self.bump();
                    Tok::RParen
                }
                c if c.is_ascii_alphabetic() => {
                    let mut name = String::new();
                    while matches!(self.chars.peek(),
                        Some(c) if c.is_ascii_alphanumeric() || *c == '_' || *c == '\'')
                    {
                        name.push(self.bump().unwrap());
                    }
                    if name == "mu" {
                        Tok::Mu
                    } else {
                        Tok::Ident(name)
                    }
                }
                other => {
                    return Err(ParseError::new(start, format!("unexpected character `{other}`")));
                }
            };
            out.push((tok, start));
        }
    }
}

struct TermParser {
    tokens: Vec<(Tok, SourcePos)>,
    index: usize,
    end: SourcePos,
}

impl TermParser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.index).map(|(t, _)| t)
    }

    fn pos(&self) -> SourcePos {
        self.tokens.get(self.index).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let tok = self.tokens.get(self.index).map(|(t, _)| t.clone());
        if tok.is_some() {
            self.index += 1;
        }
        tok
    }

    fn sum(&mut self) -> Result<Term, ParseError> {
        let mut term = self.product()?;
        while self.peek() == Some(&Tok::Plus) {
            self.bump();
            let rhs = self.product()?;
            term = Term::sum(term, rhs);
        }
        Ok(term)
    }

    fn product(&mut self) -> Result<Term, ParseError> {
        if self.peek() == Some(&Tok::Mu) {
            return self.mu();
        }
        let mut term = match self.atom()? {
            Some(t) => t,
            None => {
                return Err(ParseError::new(self.pos(), "expected a term"));
            }
        };
        loop {
            match self.peek() {
                Some(Tok::Dot) => {
                    self.bump();
                    if self.peek() == Some(&Tok::Mu) {
                        let m = self.mu()?;
                        return Ok(Term::prod(term, m));
                    }
                    match self.atom()? {
                        Some(t) => term = Term::prod(term, t),
                        None => {
                            return Err(ParseError::new(self.pos(), "expected a factor after `.`"));
                        }
                    }
                }
                Some(Tok::Mu) => {
                    // A trailing binder swallows the rest of the group.
                    let m = self.mu()?;
                    return Ok(Term::prod(term, m));
                }
                _ => match self.atom()? {
                    Some(t) => term = Term::prod(term, t),
                    None => return Ok(term),
                },
            }
        }
    }

    fn mu(&mut self) -> Result<Term, ParseError> {
        self.bump(); // the `mu` keyword
        let binder = match self.peek() {
            Some(Tok::Ident(name)) => {
                let name = name.clone();
                self.bump();
                Var::new(name)
            }
            _ => return Err(ParseError::new(self.pos(), "expected a binder name after `mu`")),
        };
        match self.peek() {
            Some(Tok::Dot) => {
                self.bump();
            }
            _ => return Err(ParseError::new(self.pos(), "expected `.` after the binder name")),
        }
        let body = self.sum()?;
        Ok(Term::mu(binder, body))
    }

    fn atom(&mut self) -> Result<Option<Term>, ParseError> {
        match self.peek() {
            Some(Tok::Zero) => {
                self.bump();
                Ok(Some(Term::Zero))
            }
            Some(Tok::One) => {
                self.bump();
                Ok(Some(Term::One))
            }
            Some(Tok::Ident(_)) => {
                let Some(Tok::Ident(name)) = self.bump() else { unreachable!() };
                Ok(Some(Term::Var(Var::new(name))))
            }
            Some(Tok::LParen) => {
                self.bump();
                let term = self.sum()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.bump();
                        Ok(Some(term))
                    }
                    _ => Err(ParseError::new(self.pos(), "expected `)`")),
                }
            }
            _ => Ok(None),
        }
    }
}

/// Parses one term from `text`.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let (tokens, end) = Lexer::new(text).tokens()?;
    let mut parser = TermParser { tokens, index: 0, end };
    let term = parser.sum()?;
    if parser.peek().is_some() {
        return Err(ParseError::new(parser.pos(), "unexpected input after the term"));
    }
    Ok(term)
}

const PREC_TOP: u8 = 0;
const PREC_SUM: u8 = 1;
const PREC_PROD: u8 = 2;
const PREC_ATOM: u8 = 3;

/// Prints a term with minimal parentheses; the output reparses to an
/// alpha-equivalent term (bound names are kept as they are).
pub fn print_term(t: &Term) -> String {
    let mut out = String::new();
    render(t, &mut out, PREC_TOP, true);
    out
}

/// `tail` records whether the term is the last thing in its group, which
/// is the one place a `mu` may appear unparenthesized.
fn render(t: &Term, out: &mut String, min_prec: u8, tail: bool) {
    match t {
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Var(v) => out.push_str(v.name()),
        Term::Sum(l, r) => {
            if min_prec > PREC_SUM {
                parenthesize(t, out);
                return;
            }
            render(l, out, PREC_SUM, false);
            out.push_str(" + ");
            render(r, out, PREC_PROD, tail);
        }
        Term::Prod(l, r) => {
            if min_prec > PREC_PROD {
                parenthesize(t, out);
                return;
            }
            render(l, out, PREC_PROD, false);
            out.push(' ');
            render(r, out, PREC_ATOM, tail);
        }
        Term::Mu(x, body) => {
            if !tail {
                parenthesize(t, out);
                return;
            }
            out.push_str("mu ");
            out.push_str(x.name());
            out.push_str(". ");
            render(body, out, PREC_TOP, true);
        }
    }
}

fn parenthesize(t: &Term, out: &mut String) {
    out.push('(');
    render(t, out, PREC_TOP, true);
    out.push(')');
}

/// Parses a grammar file: `N -> alt | alt | ...` lines, `eps` alternatives,
/// `#` comments, blank lines ignored. The first left-hand side is the
/// start symbol; a symbol is a nonterminal iff it occurs on some
/// left-hand side.
pub fn parse_grammar(text: &str) -> Result<Grammar, ParseError> {
    let mut decls: Vec<(Var, Vec<Alt>)> = Vec::new();
    for (line_index, raw_line) in text.lines().enumerate() {
        let line_no = line_index + 1;
        let line = match raw_line.find('#') {
            Some(i) => &raw_line[..i],
            None => raw_line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let words = grammar_line_words(line, line_no)?;
        let mut iter = words.into_iter();
        let (lhs, lhs_pos) = iter.next().expect("nonblank line has a first word");
        if lhs == "->" || lhs == "|" || lhs == "eps" {
            return Err(ParseError::new(lhs_pos, "expected a nonterminal name"));
        }
        if !is_valid_name(&lhs) {
            return Err(ParseError::new(lhs_pos, format!("invalid symbol `{lhs}`")));
        }
        match iter.next() {
            Some((arrow, _)) if arrow == "->" => {}
            Some((_, pos)) => return Err(ParseError::new(pos, "expected `->`")),
            None => {
                return Err(ParseError::new(lhs_pos, "expected `->` after the nonterminal"));
            }
        }
        let mut alts: Vec<Alt> = Vec::new();
        let mut current: Vec<(String, SourcePos)> = Vec::new();
        let mut last_pos = lhs_pos;
        let mut pending = true;
        for (word, pos) in iter {
            last_pos = pos;
            if word == "|" {
                alts.push(finish_alternative(&current, pos)?);
                current.clear();
                pending = true;
            } else {
                if !is_valid_name(&word) && word != "eps" {
                    return Err(ParseError::new(pos, format!("invalid symbol `{word}`")));
                }
                current.push((word, pos));
                pending = false;
            }
        }
        if pending {
            return Err(ParseError::new(last_pos, "empty alternative"));
        }
        alts.push(finish_alternative(&current, last_pos)?);
        decls.push((Var::new(lhs), alts));
    }
    let Some((start, _)) = decls.first() else {
        return Err(ParseError::new(SourcePos { line: 1, column: 1 }, "empty grammar"));
    };
    let start = start.clone();
    Grammar::new(start, decls)
        .map_err(|e| ParseError::new(SourcePos { line: 1, column: 1 }, e.to_string()))
}

fn finish_alternative(
    symbols: &[(String, SourcePos)],
    at: SourcePos,
) -> Result<Alt, ParseError> {
    if symbols.is_empty() {
        return Err(ParseError::new(at, "empty alternative"));
    }
    if let Some((_, pos)) = symbols.iter().find(|(w, _)| w == "eps") {
        if symbols.len() > 1 {
            return Err(ParseError::new(*pos, "`eps` must stand alone in an alternative"));
        }
        return Ok(Vec::new());
    }
    Ok(symbols.iter().map(|(w, _)| Var::new(w)).collect())
}

fn grammar_line_words(
    line: &str,
    line_no: usize,
) -> Result<Vec<(String, SourcePos)>, ParseError> {
    let mut words = Vec::new();
    let mut chars = line.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let pos = SourcePos { line: line_no, column: i + 1 };
        if c.is_whitespace() {
            chars.next();
        } else if c == '|' {
            chars.next();
            words.push(("|".to_string(), pos));
        } else if c == '-' {
            chars.next();
            match chars.peek() {
                Some(&(_, '>')) => {
                    chars.next();
                    words.push(("->".to_string(), pos));
                }
                _ => return Err(ParseError::new(pos, "expected `->`")),
            }
        } else if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
            let mut word = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                    word.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            words.push((word, pos));
        } else {
            return Err(ParseError::new(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(words)
}

/// Prints a grammar in the line format accepted by [`parse_grammar`]:
/// the start symbol first, remaining nonterminals in declaration order.
///
/// A grammar whose symbols shadow the `eps` keyword cannot be printed
/// faithfully; parsed grammars never contain such symbols.
pub fn print_grammar(g: &Grammar) -> String {
    let mut out = String::new();
    for nt in g.nonterminals() {
        out.push_str(nt.name());
        out.push_str(" ->");
        let alts = g.alternatives(nt).expect("declared nonterminal");
        for (i, alt) in alts.iter().enumerate() {
            if i > 0 {
                out.push_str(" |");
            }
            if alt.is_empty() {
                out.push_str(" eps");
            } else {
                for sym in alt {
                    out.push(' ');
                    out.push_str(sym.name());
                }
            }
        }
        out.push('\n');
    }
    out
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_term(self))
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_grammar(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Var {
        Var::new(name)
    }

    #[test]
    fn parses_precedence() {
        let t = parse_term("mu x. 1 + a x").unwrap();
        let expected = Term::mu(
            v("x"),
            Term::sum(Term::One, Term::prod(Term::var("a"), Term::var("x"))),
        );
        assert_eq!(t, expected);
    }

    #[test]
    fn product_binds_tighter_than_sum() {
        let t = parse_term("a + b c").unwrap();
        let expected = Term::sum(Term::var("a"), Term::prod(Term::var("b"), Term::var("c")));
        assert_eq!(t, expected);
    }

    #[test]
    fn missing_binder_name_is_an_error() {
        let err = parse_term("mu. x").unwrap_err();
        assert_eq!(err.pos, SourcePos { line: 1, column: 3 });
        assert!(err.message.contains("binder"), "{}", err.message);
    }

    #[test]
    fn dot_and_juxtaposition_agree() {
        assert_eq!(parse_term("a . b").unwrap(), parse_term("a b").unwrap());
        assert_eq!(
            parse_term("a.b.c").unwrap(),
            Term::prod(Term::prod(Term::var("a"), Term::var("b")), Term::var("c"))
        );
    }

    #[test]
    fn mu_body_extends_maximally_right() {
        let t = parse_term("a mu x. x b + 1").unwrap();
        let expected = Term::prod(
            Term::var("a"),
            Term::mu(v("x"), Term::sum(Term::prod(Term::var("x"), Term::var("b")), Term::One)),
        );
        assert_eq!(t, expected);
    }

    #[test]
    fn parenthesized_mu_can_be_multiplied() {
        let t = parse_term("(mu x. a x) b").unwrap();
        let expected = Term::prod(
            Term::mu(v("x"), Term::prod(Term::var("a"), Term::var("x"))),
            Term::var("b"),
        );
        assert_eq!(t, expected);
    }

    #[test]
    fn multi_letter_identifiers_are_single_symbols() {
        let t = parse_term("ab").unwrap();
        assert_eq!(t, Term::var("ab"));
        let t = parse_term("a b").unwrap();
        assert_eq!(t, Term::prod(Term::var("a"), Term::var("b")));
    }

    #[test]
    fn rejects_stray_characters() {
        let err = parse_term("a ? b").unwrap_err();
        assert_eq!(err.pos, SourcePos { line: 1, column: 3 });
    }

    #[test]
    fn rejects_trailing_input() {
        let err = parse_term("a )").unwrap_err();
        assert_eq!(err.pos, SourcePos { line: 1, column: 3 });
    }

    #[test]
    fn positions_track_lines() {
        let err = parse_term("a +\n+ b").unwrap_err();
        assert_eq!(err.pos.line, 2);
    }

    #[test]
    fn prints_the_loop_example() {
        let t = Term::mu(
            v("x"),
            Term::sum(Term::One, Term::prod(Term::var("a"), Term::var("x"))),
        );
        assert_eq!(print_term(&t), "mu x. 1 + a x");
    }

    #[test]
    fn prints_forced_parentheses() {
        let t = Term::prod(Term::sum(Term::var("a"), Term::var("b")), Term::var("c"));
        assert_eq!(print_term(&t), "(a + b) c");
    }

    #[test]
    fn prints_constants() {
        assert_eq!(print_term(&Term::Zero), "0");
        assert_eq!(print_term(&Term::One), "1");
    }

    #[test]
    fn prints_mu_in_nontail_positions_with_parens() {
        let m = Term::mu(v("x"), Term::prod(Term::var("a"), Term::var("x")));
        let t = Term::sum(m.clone(), Term::var("b"));
        assert_eq!(print_term(&t), "(mu x. a x) + b");
        let t = Term::prod(m.clone(), Term::var("b"));
        assert_eq!(print_term(&t), "(mu x. a x) b");
        let t = Term::prod(Term::var("b"), m);
        assert_eq!(print_term(&t), "b mu x. a x");
    }

    #[test]
    fn print_parse_round_trips_structurally() {
        let cases = [
            "0",
            "1 + a",
            "a b c",
            "a (b c)",
            "(a + b) (c + d)",
            "mu x. 1 + a x",
            "mu x. mu y. x y + 1",
            "a mu x. x",
            "(mu x. a x) + b",
            "a + (mu x. 1 + x) b",
        ];
        for text in cases {
            let t = parse_term(text).unwrap();
            let reparsed = parse_term(&print_term(&t)).unwrap();
            assert_eq!(t, reparsed, "case `{text}` printed as `{}`", print_term(&t));
        }
    }

    const BALANCED: &str = "S -> eps | a B | b A\nA -> a S | b A A\nB -> b S | a B B\n";

    #[test]
    fn parses_the_balanced_grammar() {
        let g = parse_grammar(BALANCED).unwrap();
        assert_eq!(g.start(), &v("S"));
        assert_eq!(g.nonterminals(), &[v("S"), v("A"), v("B")]);
        assert_eq!(
            g.alternatives(&v("S")).unwrap(),
            &[vec![], vec![v("a"), v("B")], vec![v("b"), v("A")]]
        );
        assert_eq!(
            g.alternatives(&v("B")).unwrap(),
            &[vec![v("b"), v("S")], vec![v("a"), v("B"), v("B")]]
        );
    }

    #[test]
    fn grammar_round_trips_exactly() {
        let g = parse_grammar(BALANCED).unwrap();
        let printed = print_grammar(&g);
        assert_eq!(printed, BALANCED);
        assert_eq!(parse_grammar(&printed).unwrap(), g);
    }

    #[test]
    fn parses_a_nonproductive_grammar() {
        let g = parse_grammar("S -> a S").unwrap();
        assert_eq!(g.nonterminals(), &[v("S")]);
        assert_eq!(g.alternatives(&v("S")).unwrap(), &[vec![v("a"), v("S")]]);
    }

    #[test]
    fn eps_must_stand_alone() {
        let err = parse_grammar("S -> a eps b").unwrap_err();
        assert_eq!(err.pos, SourcePos { line: 1, column: 8 });
        assert!(err.message.contains("eps"));
    }

    #[test]
    fn prints_eps_alternatives() {
        let g = parse_grammar("S -> eps").unwrap();
        assert_eq!(print_grammar(&g), "S -> eps\n");
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let g = parse_grammar("# a comment\n\nS -> a # trailing\n\nS -> b\n").unwrap();
        assert_eq!(g.alternatives(&v("S")).unwrap(), &[vec![v("a")], vec![v("b")]]);
    }

    #[test]
    fn duplicate_alternatives_collapse() {
        let g = parse_grammar("S -> a | a | b").unwrap();
        assert_eq!(g.alternatives(&v("S")).unwrap(), &[vec![v("a")], vec![v("b")]]);
    }

    #[test]
    fn grammar_errors_have_positions() {
        let err = parse_grammar("S -> a |\n").unwrap_err();
        assert_eq!(err.pos.line, 1);
        assert!(err.message.contains("empty alternative"));

        let err = parse_grammar("S a b\n").unwrap_err();
        assert_eq!(err.pos, SourcePos { line: 1, column: 3 });

        let err = parse_grammar("S -> a\nT - b\n").unwrap_err();
        assert_eq!(err.pos, SourcePos { line: 2, column: 3 });

        let err = parse_grammar("").unwrap_err();
        assert!(err.message.contains("empty grammar"));
    }

    #[test]
    fn second_line_can_extend_the_start_symbol() {
        let g = parse_grammar("S -> a\nT -> b\nS -> c\n").unwrap();
        assert_eq!(g.nonterminals(), &[v("S"), v("T")]);
        assert_eq!(g.alternatives(&v("S")).unwrap(), &[vec![v("a")], vec![v("c")]]);
    }
}
