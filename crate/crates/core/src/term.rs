//! First-order terms, positions and substitutions.
//!
//! Terms are immutable and reference counted, so cloning is cheap and values
//! can be shared across threads.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A function symbol.
///
/// Besides the plain symbols declared in a problem file there are two kinds
/// of generated symbols: tuple symbols `f#` introduced by dependency pairs,
/// and bang symbols `f!` used by the marked reduction triple. Both flags can
/// be set at once (`f#!`). The suffixes cannot be written in input files.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Symbol {
    name: Arc<str>,
    arity: usize,
    tuple: bool,
    bang: bool,
}

impl Symbol {
    pub fn new(name: impl Into<Arc<str>>, arity: usize) -> Self {
        Symbol {
            name: name.into(),
            arity,
            tuple: false,
            bang: false,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_tuple(&self) -> bool {
        self.tuple
    }

    pub fn is_bang(&self) -> bool {
        self.bang
    }

    pub fn is_plain(&self) -> bool {
        !self.tuple && !self.bang
    }

    /// The dependency-pair tuple symbol of this symbol.
    pub fn to_tuple(&self) -> Symbol {
        Symbol {
            tuple: true,
            ..self.clone()
        }
    }

    /// The fresh symbol `f!` used when marking a term for the marked triple.
    pub fn to_bang(&self) -> Symbol {
        Symbol {
            bang: true,
            ..self.clone()
        }
    }

    /// Parses a rendered symbol name such as `f`, `f#`, `f!` or `f#!`.
    pub fn from_rendered(rendered: &str, arity: usize) -> Option<Symbol> {
        let (rest, bang) = match rendered.strip_suffix('!') {
            Some(r) => (r, true),
            None => (rendered, false),
        };
        let (base, tuple) = match rest.strip_suffix('#') {
            Some(r) => (r, true),
            None => (rest, false),
        };
        if base.is_empty() || base.contains(['#', '!']) {
            return None;
        }
        Some(Symbol {
            name: base.into(),
            arity,
            tuple,
            bang,
        })
    }

    /// Canonical ordering key used by the search: arity first, then name.
    pub fn canonical_key(&self) -> (usize, &str, bool, bool) {
        (self.arity, &self.name, self.tuple, self.bang)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if self.tuple {
            f.write_str("#")?;
        }
        if self.bang {
            f.write_str("!")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: impl Into<Arc<str>>) -> Self {
        Var(name.into())
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

#[derive(PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct App {
    sym: Symbol,
    args: Vec<Term>,
}

/// A first-order term: a variable or a symbol applied to exactly `arity`
/// arguments.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Var),
    App(Arc<App>),
}

impl Term {
    pub fn var(name: impl Into<Arc<str>>) -> Term {
        Term::Var(Var::new(name))
    }

    /// Builds an application, panicking if the argument count does not match
    /// the arity. Use [`Term::try_app`] for unchecked input.
    pub fn app(sym: Symbol, args: Vec<Term>) -> Term {
        assert_eq!(
            sym.arity,
            args.len(),
            "arity mismatch for symbol {}",
            sym
        );
        Term::App(Arc::new(App { sym, args }))
    }

    pub fn try_app(sym: Symbol, args: Vec<Term>) -> Result<Term> {
        if sym.arity != args.len() {
            return Err(Error::ArityMismatch {
                symbol: sym.to_string(),
                expected: sym.arity,
                found: args.len(),
            });
        }
        Ok(Term::App(Arc::new(App { sym, args })))
    }

    pub fn constant(sym: Symbol) -> Term {
        Term::app(sym, Vec::new())
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    pub fn as_var(&self) -> Option<&Var> {
        match self {
            Term::Var(v) => Some(v),
            Term::App(_) => None,
        }
    }

    pub fn root(&self) -> Option<&Symbol> {
        match self {
            Term::Var(_) => None,
            Term::App(app) => Some(&app.sym),
        }
    }

    /// Arguments of an application; empty for variables.
    pub fn args(&self) -> &[Term] {
        match self {
            Term::Var(_) => &[],
            Term::App(app) => &app.args,
        }
    }

    /// Number of symbol and variable occurrences.
    pub fn size(&self) -> usize {
        1 + self.args().iter().map(Term::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.args().iter().map(Term::depth).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::App(app) => app.args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        self.visit(&mut |t| {
            if let Some(f) = t.root() {
                out.insert(f.clone());
            }
        });
        out
    }

    /// Pre-order traversal (leftmost-outermost) including the term itself.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Term)) {
        f(self);
        for a in self.args() {
            a.visit(f);
        }
    }

    /// All subterms with their positions, root first, leftmost-outermost.
    pub fn subterms(&self) -> Vec<(Position, &Term)> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.collect_subterms(&mut path, &mut out);
        out
    }

    fn collect_subterms<'a>(&'a self, path: &mut Vec<usize>, out: &mut Vec<(Position, &'a Term)>) {
        out.push((Position(path.clone()), self));
        for (i, a) in self.args().iter().enumerate() {
            path.push(i + 1);
            a.collect_subterms(path, out);
            path.pop();
        }
    }

    /// Subterms at non-root positions, leftmost-outermost.
    pub fn proper_subterms(&self) -> Vec<(Position, &Term)> {
        let mut all = self.subterms();
        all.remove(0);
        all
    }

    pub fn is_proper_subterm_of(&self, other: &Term) -> bool {
        other.args().iter().any(|a| a == self || self.is_proper_subterm_of(a))
    }

    pub fn subterm_at(&self, p: &Position) -> Option<&Term> {
        let mut cur = self;
        for &i in &p.0 {
            cur = cur.args().get(i.checked_sub(1)?)?;
        }
        Some(cur)
    }

    /// Replaces the subterm at `p` by `u`.
    pub fn replace_at(&self, p: &Position, u: Term) -> Result<Term> {
        self.replace_rec(&p.0, u)
            .ok_or_else(|| Error::InvalidPosition(p.to_string(), self.to_string()))
    }

    fn replace_rec(&self, path: &[usize], u: Term) -> Option<Term> {
        let Some((&i, rest)) = path.split_first() else {
            return Some(u);
        };
        let Term::App(app) = self else { return None };
        let idx = i.checked_sub(1)?;
        let child = app.args.get(idx)?.replace_rec(rest, u)?;
        let mut args = app.args.clone();
        args[idx] = child;
        Some(Term::app(app.sym.clone(), args))
    }

    pub fn apply(&self, sigma: &Substitution) -> Term {
        match self {
            Term::Var(v) => sigma.get(v).cloned().unwrap_or_else(|| self.clone()),
            Term::App(app) => {
                if app.args.is_empty() {
                    return self.clone();
                }
                Term::app(
                    app.sym.clone(),
                    app.args.iter().map(|a| a.apply(sigma)).collect(),
                )
            }
        }
    }

    /// Replaces the root symbol by its tuple symbol: `f(t..)` becomes `f#(t..)`.
    pub fn mark_root(&self) -> Result<Term> {
        match self {
            Term::Var(v) => Err(Error::MarkVariable(v.to_string())),
            Term::App(app) => Ok(Term::app(app.sym.to_tuple(), app.args.clone())),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::App(app) => {
                write!(f, "{}", app.sym)?;
                if !app.args.is_empty() {
                    f.write_str("(")?;
                    for (i, a) in app.args.iter().enumerate() {
                        if i > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{a}")?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A path of 1-based argument indices; the empty path is the root.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Position(pub Vec<usize>);

impl Position {
    pub fn root() -> Self {
        Position(Vec::new())
    }
}

impl From<Vec<usize>> for Position {
    fn from(v: Vec<usize>) -> Self {
        Position(v)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Substitution(BTreeMap<Var, Term>);

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    pub fn insert(&mut self, v: Var, t: Term) -> &mut Self {
        self.0.insert(v, t);
        self
    }

    pub fn with(mut self, v: &str, t: Term) -> Self {
        self.0.insert(Var::new(v), t);
        self
    }

    pub fn get(&self, v: &Var) -> Option<&Term> {
        self.0.get(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &Term)> {
        self.0.iter()
    }
}

impl FromIterator<(Var, Term)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (Var, Term)>>(iter: I) -> Self {
        Substitution(iter.into_iter().collect())
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, t)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v} -> {t}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Symbol {
        Symbol::new("f", 2)
    }
    fn g1() -> Symbol {
        Symbol::new("g", 1)
    }
    fn c(name: &str) -> Term {
        Term::constant(Symbol::new(name, 0))
    }

    #[test]
    fn substitution_examples() {
        let s = Symbol::new("s", 1);
        let p = Symbol::new("p", 1);
        let x = Term::var("x");
        let sigma = Substitution::new().with("x", Term::app(s.clone(), vec![Term::var("y")]));
        assert_eq!(x.apply(&sigma).to_string(), "s(y)");

        let fxx = Term::app(f2(), vec![x.clone(), x.clone()]);
        let sigma = Substitution::new().with("x", c("a"));
        assert_eq!(fxx.apply(&sigma).to_string(), "f(a,a)");

        let t = Term::app(p.clone(), vec![Term::app(s, vec![x])]);
        let sigma = Substitution::new().with("x", Term::app(p, vec![Term::var("z")]));
        assert_eq!(t.apply(&sigma).to_string(), "p(s(p(z)))");
    }

    #[test]
    fn proper_subterm_examples() {
        assert!(Term::var("x").proper_subterms().is_empty());

        let t = Term::app(f2(), vec![c("a"), Term::var("x")]);
        let subs: Vec<String> = t
            .proper_subterms()
            .iter()
            .map(|(p, s)| format!("{p}:{s}"))
            .collect();
        assert_eq!(subs, ["1:a", "2:x"]);

        let t = Term::app(f2(), vec![Term::app(g1(), vec![Term::var("x")]), Term::var("y")]);
        let subs: Vec<String> = t
            .proper_subterms()
            .iter()
            .map(|(p, s)| format!("{p}:{s}"))
            .collect();
        assert_eq!(subs, ["1:g(x)", "1.1:x", "2:y"]);
    }

    #[test]
    fn replace_at_examples() {
        let t = Term::app(f2(), vec![c("a"), c("b")]);
        assert_eq!(t.replace_at(&vec![1].into(), c("c")).unwrap().to_string(), "f(c,b)");
        assert_eq!(
            Term::var("x")
                .replace_at(&Position::root(), Term::var("y"))
                .unwrap()
                .to_string(),
            "y"
        );
        let t = Term::app(Symbol::new("f", 1), vec![Term::app(g1(), vec![c("a")])]);
        assert_eq!(
            t.replace_at(&vec![1, 1].into(), Term::var("x")).unwrap().to_string(),
            "f(g(x))"
        );
    }

    #[test]
    fn replace_at_invalid_position() {
        let t = Term::app(f2(), vec![c("a"), c("b")]);
        assert!(t.replace_at(&vec![3].into(), c("c")).is_err());
        assert!(t.replace_at(&vec![1, 1].into(), c("c")).is_err());
        assert!(t.replace_at(&vec![0].into(), c("c")).is_err());
    }

    #[test]
    fn mark_root_examples() {
        let t = Term::app(f2(), vec![c("b"), Term::app(f2(), vec![c("a"), Term::var("x")])]);
        assert_eq!(t.mark_root().unwrap().to_string(), "f#(b,f(a,x))");
        assert_eq!(c("a").mark_root().unwrap().to_string(), "a#");
        assert!(matches!(
            Term::var("x").mark_root(),
            Err(Error::MarkVariable(_))
        ));
    }

    #[test]
    fn rendered_symbols_round_trip() {
        for s in ["f", "f#", "f!", "f#!"] {
            assert_eq!(Symbol::from_rendered(s, 2).unwrap().to_string(), s);
        }
        assert!(Symbol::from_rendered("#", 0).is_none());
        assert!(Symbol::from_rendered("f!#", 0).is_none());
    }

    #[test]
    fn arity_is_checked() {
        assert!(Term::try_app(f2(), vec![c("a")]).is_err());
    }
}
