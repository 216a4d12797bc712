//! The ARI s-expression format for first-order rewrite systems.
//!
//! ```text
//! ; comment
//! (format TRS)
//! (fun p 1) (fun s 1)
//! (rule (p (s x)) x)
//! ```
//!
//! Identifiers not declared with `fun` are variables. `meta-info` entries
//! are skipped. Errors carry the 1-based line and column of the offending
//! token and a kind with a stable code.

use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind};
use crate::term::{Symbol, Term};
use crate::trs::{Rule, Signature, Trs};

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Debug)]
enum Sexp {
    Atom(String, Pos),
    List(Vec<Sexp>, Pos),
}

impl Sexp {
    fn pos(&self) -> Pos {
        match self {
            Sexp::Atom(_, p) | Sexp::List(_, p) => *p,
        }
    }

    fn atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom(a, _) => Some(a),
            Sexp::List(..) => None,
        }
    }
}

fn err(kind: ParseErrorKind, pos: Pos, msg: impl Into<String>) -> ParseError {
    ParseError::new(kind, pos.line, pos.col, msg)
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl Lexer<'_> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == ';' {
                while self.chars.peek().is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    /// Reads one s-expression, or `None` at end of input.
    fn sexp(&mut self) -> PResult<Option<Sexp>> {
        self.skip_trivia();
        let start = self.pos;
        match self.chars.peek() {
            None => Ok(None),
            Some(')') => Err(err(ParseErrorKind::Syntax, start, "unexpected ')'")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.chars.peek() {
                        None => return Err(err(ParseErrorKind::Syntax, start, "unclosed '('")),
                        Some(')') => {
                            self.bump();
                            return Ok(Some(Sexp::List(items, start)));
                        }
                        Some(_) => items.push(self.sexp()?.expect("input is not exhausted")),
                    }
                }
            }
            Some('"') => {
                // Strings only occur inside meta-info; keep them as atoms.
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        None => return Err(err(ParseErrorKind::Syntax, start, "unterminated string")),
                        Some('"') => return Ok(Some(Sexp::Atom(s, start))),
                        Some(c) => s.push(c),
                    }
                }
            }
            Some(_) => {
                let mut s = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || matches!(c, '(' | ')' | ';' | '"') {
                        break;
                    }
                    s.push(c);
                    self.bump();
                }
                Ok(Some(Sexp::Atom(s, start)))
            }
        }
    }
}

fn is_reserved(name: &str) -> bool {
    name.contains(['#', '!', ',']) || matches!(name, "fun" | "rule" | "format")
}

fn term(sig: &Signature, e: &Sexp) -> PResult<Term> {
    match e {
        Sexp::Atom(name, pos) => match sig.get(name) {
            Some(f) if f.arity() == 0 => Ok(Term::constant(f.clone())),
            Some(f) => Err(err(
                ParseErrorKind::ArityMismatch,
                *pos,
                format!("{name} expects {} arguments, got 0", f.arity()),
            )),
            None if is_reserved(name) => Err(err(
                ParseErrorKind::ReservedName,
                *pos,
                format!("reserved name {name} used as a variable"),
            )),
            None => Ok(Term::var(name.as_str())),
        },
        Sexp::List(items, pos) => {
            let Some((head, args)) = items.split_first() else {
                return Err(err(ParseErrorKind::Syntax, *pos, "empty application"));
            };
            let Some(name) = head.atom() else {
                return Err(err(ParseErrorKind::Syntax, head.pos(), "expected a function symbol"));
            };
            let Some(f) = sig.get(name) else {
                return Err(err(
                    ParseErrorKind::UndeclaredSymbol,
                    head.pos(),
                    format!("undeclared function symbol {name}"),
                ));
            };
            if f.arity() != args.len() {
                return Err(err(
                    ParseErrorKind::ArityMismatch,
                    head.pos(),
                    format!("{name} expects {} arguments, got {}", f.arity(), args.len()),
                ));
            }
            let args = args.iter().map(|a| term(sig, a)).collect::<PResult<Vec<_>>>()?;
            Ok(Term::app(f.clone(), args))
        }
    }
}

/// Parses an ARI problem file.
pub fn parse_ari(text: &str) -> PResult<Trs> {
    let mut lx = Lexer {
        chars: text.chars().peekable(),
        pos: Pos { line: 1, col: 1 },
    };
    let mut sig = Signature::new();
    let mut rules = Vec::new();
    let mut seen_format = false;
    while let Some(e) = lx.sexp()? {
        let Sexp::List(items, pos) = &e else {
            return Err(err(ParseErrorKind::Syntax, e.pos(), "expected '('"));
        };
        let keyword = items.first().and_then(Sexp::atom);
        match keyword {
            Some("format") => {
                if seen_format {
                    return Err(err(ParseErrorKind::Syntax, *pos, "duplicate format header"));
                }
                if items.get(1).and_then(Sexp::atom) != Some("TRS") {
                    return Err(err(ParseErrorKind::Syntax, *pos, "only (format TRS) is supported"));
                }
                seen_format = true;
            }
            _ if !seen_format => {
                return Err(err(ParseErrorKind::Syntax, *pos, "expected (format TRS) header"));
            }
            Some("meta-info") => {}
            Some("fun") => {
                let [_, name, arity] = items.as_slice() else {
                    return Err(err(ParseErrorKind::Syntax, *pos, "expected (fun <name> <arity>)"));
                };
                let (Some(n), Some(a)) = (name.atom(), arity.atom()) else {
                    return Err(err(ParseErrorKind::Syntax, *pos, "expected (fun <name> <arity>)"));
                };
                let Ok(a) = a.parse::<usize>() else {
                    return Err(err(ParseErrorKind::Syntax, arity.pos(), "arity must be a natural number"));
                };
                if is_reserved(n) {
                    return Err(err(ParseErrorKind::ReservedName, name.pos(), format!("reserved name {n}")));
                }
                sig.declare(Symbol::new(n, a))
                    .map_err(|m| err(ParseErrorKind::DuplicateSymbol, name.pos(), m))?;
            }
            Some("rule") => {
                let [_, l, r] = items.as_slice() else {
                    return Err(err(ParseErrorKind::Syntax, *pos, "expected (rule <lhs> <rhs>)"));
                };
                let (lhs, rhs) = (term(&sig, l)?, term(&sig, r)?);
                let rule = Rule::new(lhs, rhs).map_err(|k| {
                    let msg = match k {
                        ParseErrorKind::VariableLhs => "left-hand side is a variable",
                        _ => "right-hand side has a variable not in the left-hand side",
                    };
                    err(k, if k == ParseErrorKind::VariableLhs { l.pos() } else { r.pos() }, msg)
                })?;
                rules.push(rule);
            }
            _ => {
                return Err(err(ParseErrorKind::Syntax, *pos, "expected fun, rule or meta-info entry"));
            }
        }
    }
    if !seen_format {
        return Err(err(ParseErrorKind::Syntax, lx.pos, "expected (format TRS) header"));
    }
    Ok(Trs::new(sig, rules))
}

fn write_term(out: &mut String, t: &Term) {
    match t.root() {
        None => out.push_str(&t.to_string()),
        Some(f) if f.arity() == 0 => out.push_str(f.name()),
        Some(f) => {
            out.push('(');
            out.push_str(f.name());
            for a in t.args() {
                out.push(' ');
                write_term(out, a);
            }
            out.push(')');
        }
    }
}

/// Renders a term as an ARI s-expression.
pub fn term_to_ari(t: &Term) -> String {
    let mut s = String::new();
    write_term(&mut s, t);
    s
}

/// Prints a system in the ARI format accepted by [`parse_ari`].
pub fn print_ari(trs: &Trs) -> String {
    let mut out = String::from("(format TRS)\n");
    for f in trs.signature.symbols() {
        let _ = writeln!(out, "(fun {} {})", f.name(), f.arity());
    }
    for r in &trs.rules {
        let _ = writeln!(out, "(rule {} {})", term_to_ari(&r.lhs), term_to_ari(&r.rhs));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(text: &str) -> ParseErrorKind {
        parse_ari(text).unwrap_err().kind
    }

    #[test]
    fn parses_predecessor_rule() {
        let trs = parse_ari("(format TRS)(fun p 1)(fun s 1)(rule (p (s x)) x)").unwrap();
        assert_eq!(trs.rules.len(), 1);
        assert_eq!(trs.rules[0].to_string(), "p(s(x)) -> x");
    }

    #[test]
    fn error_kinds_are_distinct() {
        assert_eq!(kind("(format TRS)(fun f 1)(rule x (f x))"), ParseErrorKind::VariableLhs);
        assert_eq!(kind("(format TRS)(fun f 2)(rule (f x) x)"), ParseErrorKind::ArityMismatch);
        assert_eq!(kind("(format TRS)(fun f 1)(rule (f x) y)"), ParseErrorKind::FreshRhsVariable);
        assert_eq!(kind("(format TRS)(rule (g x) x)"), ParseErrorKind::UndeclaredSymbol);
        assert_eq!(kind("(format TRS)(fun f 1)(fun f 2)"), ParseErrorKind::DuplicateSymbol);
        assert_eq!(kind("(format TRS)(fun f# 1)"), ParseErrorKind::ReservedName);
        assert_eq!(kind("(format TRS)(fun f 1"), ParseErrorKind::Syntax);
        assert_eq!(kind("(fun f 1)"), ParseErrorKind::Syntax);
    }

    #[test]
    fn errors_report_line_and_column() {
        let e = parse_ari("(format TRS)\n(fun f 2)\n  (rule (f x) x)").unwrap_err();
        assert_eq!((e.line, e.col), (3, 10));
        assert!(e.to_string().starts_with("E-ARITY: 3:10:"), "{e}");
    }

    #[test]
    fn comments_and_meta_info_are_skipped() {
        let text = "; header\n(format TRS)\n(meta-info (origin \"x y\"))\n(fun a 0)\n(rule a a) ; trailing\n";
        let trs = parse_ari(text).unwrap();
        assert_eq!(trs.rules[0].to_string(), "a -> a");
    }

    #[test]
    fn round_trip() {
        let text = "(format TRS)(fun f 2)(fun a 0)(fun b 0)\
                    (rule (f a (f b (f a x))) (f a (f b (f b (f a x)))))";
        let trs = parse_ari(text).unwrap();
        let printed = print_ari(&trs);
        assert_eq!(parse_ari(&printed).unwrap(), trs);
        assert_eq!(print_ari(&parse_ari(&printed).unwrap()), printed);
    }
}
