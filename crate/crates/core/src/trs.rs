//! Signatures, rewrite rules, term rewrite systems and dependency pairs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::term::{Symbol, Term};

/// Declared function symbols in declaration order.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Signature {
    symbols: Vec<Symbol>,
    by_name: BTreeMap<String, usize>,
}

impl Signature {
    pub fn new() -> Self {
        Signature::default()
    }

    pub fn from_symbols(symbols: impl IntoIterator<Item = (&'static str, usize)>) -> Self {
        let mut sig = Signature::new();
        for (name, arity) in symbols {
            sig.declare(Symbol::new(name, arity))
                .expect("duplicate symbol in literal signature");
        }
        sig
    }

    pub fn declare(&mut self, sym: Symbol) -> Result<(), String> {
        if self.by_name.contains_key(sym.name()) {
            return Err(format!("symbol {} declared twice", sym.name()));
        }
        self.by_name.insert(sym.name().to_string(), self.symbols.len());
        self.symbols.push(sym);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Symbol> {
        self.by_name.get(name).map(|&i| &self.symbols[i])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn constants(&self) -> impl Iterator<Item = &Symbol> {
        self.symbols.iter().filter(|s| s.arity() == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Resolves a rendered name (`f`, `f#`, `f!`, `f#!`) against the
    /// declared plain symbols.
    pub fn resolve(&self, rendered: &str) -> Option<Symbol> {
        let base = rendered.trim_end_matches(['#', '!']);
        let plain = self.get(base)?;
        Symbol::from_rendered(rendered, plain.arity())
    }

    /// Parses a term in functional notation, e.g. `f(s(x),a)` or `f#(a,x)`.
    /// Identifiers that do not resolve to a declared symbol are variables.
    pub fn parse_term(&self, text: &str) -> Result<Term> {
        let mut p = FnParser {
            sig: self,
            src: text.as_bytes(),
            text,
            pos: 0,
        };
        let t = p.term()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error(ParseErrorKind::Syntax, "trailing input"));
        }
        Ok(t)
    }
}

struct FnParser<'a> {
    sig: &'a Signature,
    src: &'a [u8],
    text: &'a str,
    pos: usize,
}

impl FnParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn error(&self, kind: ParseErrorKind, msg: &str) -> Error {
        ParseError::new(kind, 1, self.pos + 1, msg).into()
    }

    fn ident(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            if c.is_ascii_whitespace() || matches!(c, b'(' | b')' | b',') {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(ParseErrorKind::Syntax, "expected identifier"));
        }
        Ok(&self.text[start..self.pos])
    }

    fn term(&mut self) -> Result<Term> {
        let name = self.ident()?.to_string();
        self.skip_ws();
        let has_args = self.src.get(self.pos) == Some(&b'(');
        let mut args = Vec::new();
        if has_args {
            self.pos += 1;
            loop {
                args.push(self.term()?);
                self.skip_ws();
                match self.src.get(self.pos) {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error(ParseErrorKind::Syntax, "expected ',' or ')'")),
                }
            }
        }
        match self.sig.resolve(&name) {
            Some(sym) => {
                if sym.arity() != args.len() {
                    return Err(self.error(
                        ParseErrorKind::ArityMismatch,
                        &format!("{} expects {} arguments, got {}", name, sym.arity(), args.len()),
                    ));
                }
                Ok(Term::app(sym, args))
            }
            None if has_args => Err(self.error(
                ParseErrorKind::UndeclaredSymbol,
                &format!("undeclared function symbol {name}"),
            )),
            None if name.contains(['#', '!']) => Err(self.error(
                ParseErrorKind::ReservedName,
                &format!("reserved character in variable {name}"),
            )),
            None => Ok(Term::var(name)),
        }
    }
}

/// A rewrite rule `lhs -> rhs`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    pub lhs: Term,
    pub rhs: Term,
}

impl Rule {
    /// Builds a rule after checking that `lhs` is not a variable and that
    /// `rhs` introduces no fresh variables.
    pub fn new(lhs: Term, rhs: Term) -> Result<Rule, ParseErrorKind> {
        if lhs.is_var() {
            return Err(ParseErrorKind::VariableLhs);
        }
        if !rhs.vars().is_subset(&lhs.vars()) {
            return Err(ParseErrorKind::FreshRhsVariable);
        }
        Ok(Rule { lhs, rhs })
    }

    /// Builds a rule without validation; used for dependency pairs and tests.
    pub fn unchecked(lhs: Term, rhs: Term) -> Rule {
        Rule { lhs, rhs }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Trs {
    pub signature: Signature,
    pub rules: Vec<Rule>,
}

impl Trs {
    pub fn new(signature: Signature, rules: Vec<Rule>) -> Self {
        Trs { signature, rules }
    }

    /// Convenience constructor from functional-notation rule strings.
    pub fn parse(signature: Signature, rules: &[(&str, &str)]) -> Result<Trs> {
        let mut out = Vec::new();
        for (l, r) in rules {
            let lhs = signature.parse_term(l)?;
            let rhs = signature.parse_term(r)?;
            let rule = Rule::new(lhs, rhs)
                .map_err(|k| ParseError::new(k, 1, 1, format!("invalid rule {l} -> {r}")))?;
            out.push(rule);
        }
        Ok(Trs::new(signature, out))
    }

    /// Root symbols of left-hand sides.
    pub fn defined_symbols(&self) -> BTreeSet<Symbol> {
        self.rules
            .iter()
            .filter_map(|r| r.lhs.root().cloned())
            .collect()
    }

    /// Dependency pairs: for every rule `l -> r` and every subterm `u` of `r`
    /// with a defined root that is not a proper subterm of `l`, the pair
    /// `l# -> u#`. Ordered by rule, then leftmost-outermost in `r`;
    /// duplicates are dropped.
    pub fn dependency_pairs(&self) -> Vec<Rule> {
        let defined = self.defined_symbols();
        let mut out: Vec<Rule> = Vec::new();
        for rule in &self.rules {
            let lhs_marked = rule.lhs.mark_root().expect("rule lhs is never a variable");
            for (_, u) in rule.rhs.subterms() {
                let Some(root) = u.root() else { continue };
                if !defined.contains(root) || u.is_proper_subterm_of(&rule.lhs) {
                    continue;
                }
                let pair = Rule::unchecked(lhs_marked.clone(), u.mark_root().expect("application"));
                if !out.contains(&pair) {
                    out.push(pair);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{pred_trs, z08_trs};

    fn names(set: &BTreeSet<Symbol>) -> Vec<String> {
        set.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn defined_symbols_examples() {
        assert_eq!(names(&pred_trs().defined_symbols()), ["f", "p"]);
        assert!(Trs::default().defined_symbols().is_empty());
        assert_eq!(names(&z08_trs().defined_symbols()), ["f"]);
    }

    #[test]
    fn dependency_pairs_of_z08_trs() {
        let dps: Vec<String> = z08_trs().dependency_pairs().iter().map(|r| r.to_string()).collect();
        assert_eq!(
            dps,
            [
                "f#(a,f(b,f(a,x))) -> f#(a,f(b,f(b,f(a,x))))",
                "f#(a,f(b,f(a,x))) -> f#(b,f(b,f(a,x)))",
            ]
        );
    }

    #[test]
    fn dependency_pairs_of_pred_trs() {
        let dps: Vec<String> = pred_trs()
            .dependency_pairs()
            .iter()
            .map(|r| r.to_string())
            .collect();
        assert_eq!(dps, ["f#(s(x)) -> f#(p(s(x)))", "f#(s(x)) -> p#(s(x))"]);
    }

    #[test]
    fn collapsing_rule_has_no_pairs() {
        let sig = Signature::from_symbols([("p", 1), ("s", 1)]);
        let trs = Trs::parse(sig, &[("p(s(x))", "x")]).unwrap();
        assert!(trs.dependency_pairs().is_empty());
    }

    #[test]
    fn dependency_pairs_marked_only_at_root() {
        for trs in [pred_trs(), z08_trs()] {
            for dp in trs.dependency_pairs() {
                for side in [&dp.lhs, &dp.rhs] {
                    assert!(side.root().unwrap().is_tuple());
                    for (_, sub) in side.proper_subterms() {
                        assert!(sub.root().is_none_or(|f| f.is_plain()));
                    }
                }
            }
        }
    }

    #[test]
    fn rule_validation() {
        let sig = Signature::from_symbols([("f", 1)]);
        let x = sig.parse_term("x").unwrap();
        let fx = sig.parse_term("f(x)").unwrap();
        let fy = sig.parse_term("f(y)").unwrap();
        assert_eq!(Rule::new(x, fx.clone()), Err(ParseErrorKind::VariableLhs));
        assert_eq!(Rule::new(fx, fy), Err(ParseErrorKind::FreshRhsVariable));
    }

    #[test]
    fn functional_notation_parser() {
        let sig = Signature::from_symbols([("f", 2), ("a", 0)]);
        assert_eq!(sig.parse_term(" f( a , x ) ").unwrap().to_string(), "f(a,x)");
        assert_eq!(sig.parse_term("f#(a,f!(x,a))").unwrap().to_string(), "f#(a,f!(x,a))");
        assert!(sig.parse_term("f(a)").is_err());
        assert!(sig.parse_term("g(a)").is_err());
        assert!(sig.parse_term("f(a,x").is_err());
        assert!(sig.parse_term("x#").is_err());
    }
}
