//! Order pairs and reduction triples `(≥, ⊒, ⊐)`.
//!
//! Every construction here is a decision procedure on terms. The algebraic
//! ones compare symbolic abstractions, so on open terms they are sound but
//! not complete.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Interpretation, SymbolicValue};
use crate::error::{Error, Result};
use crate::oracle::enum_terms;
use crate::term::{Symbol, Term};
use crate::trs::Signature;

/// Outcome of one base comparison: `s ⊒ t` and `s ⊐ t`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Cmp {
    pub weak: bool,
    pub strict: bool,
}

impl Cmp {
    pub const NONE: Cmp = Cmp {
        weak: false,
        strict: false,
    };
    pub const WEAK: Cmp = Cmp {
        weak: true,
        strict: false,
    };
    pub const STRICT: Cmp = Cmp {
        weak: true,
        strict: true,
    };
}

/// A pair of relations `(⊒, ⊐)` decided together.
pub trait OrderPair: Send + Sync {
    fn compare(&self, s: &Term, t: &Term) -> Cmp;

    fn weak(&self, s: &Term, t: &Term) -> bool {
        self.compare(s, t).weak
    }

    fn strict(&self, s: &Term, t: &Term) -> bool {
        self.compare(s, t).strict
    }
}

/// An order pair together with a rewrite preorder `≥`.
pub trait ReductionTriple: OrderPair {
    fn preorder(&self, s: &Term, t: &Term) -> bool;
}

impl<T: OrderPair + ?Sized> OrderPair for &T {
    fn compare(&self, s: &Term, t: &Term) -> Cmp {
        (**self).compare(s, t)
    }
}

impl<T: ReductionTriple + ?Sized> ReductionTriple for &T {
    fn preorder(&self, s: &Term, t: &Term) -> bool {
        (**self).preorder(s, t)
    }
}

impl<T: OrderPair + ?Sized> OrderPair for Box<T> {
    fn compare(&self, s: &Term, t: &Term) -> Cmp {
        (**self).compare(s, t)
    }
}

impl<T: ReductionTriple + ?Sized> ReductionTriple for Box<T> {
    fn preorder(&self, s: &Term, t: &Term) -> bool {
        (**self).preorder(s, t)
    }
}

fn abstraction(interp: &Interpretation, t: &Term) -> SymbolicValue {
    interp
        .abstract_term(t)
        .unwrap_or_else(|e| panic!("comparing {t}: {e}"))
}

fn marked_abstraction(interp: &Interpretation, t: &Term) -> SymbolicValue {
    interp
        .abstract_marked(t)
        .unwrap_or_else(|e| panic!("comparing {t}: {e}"))
}

/// `(≥_A, ≥_A, >_A)` for a weakly monotone algebra.
///
/// Comparisons panic on symbols the interpretation does not cover; callers
/// check coverage up front with [`Interpretation::require`].
#[derive(Clone, Debug)]
pub struct AlgebraTriple {
    interp: Interpretation,
}

impl AlgebraTriple {
    pub fn new(interp: Interpretation) -> Result<Self> {
        if !interp.check_weak_monotone() {
            return Err(Error::InvalidInterpretation("not weakly monotone".into()));
        }
        Ok(AlgebraTriple { interp })
    }

    pub fn interpretation(&self) -> &Interpretation {
        &self.interp
    }
}

impl OrderPair for AlgebraTriple {
    fn compare(&self, s: &Term, t: &Term) -> Cmp {
        let (u, v) = (abstraction(&self.interp, s), abstraction(&self.interp, t));
        Cmp {
            weak: u.weakly_exceeds(&v),
            strict: u.strictly_exceeds(&v),
        }
    }
}

impl ReductionTriple for AlgebraTriple {
    fn preorder(&self, s: &Term, t: &Term) -> bool {
        abstraction(&self.interp, s).weakly_exceeds(&abstraction(&self.interp, t))
    }
}

/// A total precedence given by natural ranks.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Precedence {
    ranks: BTreeMap<Symbol, u32>,
}

impl Precedence {
    pub fn new() -> Self {
        Precedence::default()
    }

    pub fn with(mut self, f: Symbol, rank: u32) -> Self {
        self.ranks.insert(f, rank);
        self
    }

    pub fn set(&mut self, f: Symbol, rank: u32) {
        self.ranks.insert(f, rank);
    }

    pub fn rank(&self, f: &Symbol) -> Option<u32> {
        self.ranks.get(f).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Symbol, &u32)> {
        self.ranks.iter()
    }

    pub fn require(&self, symbols: impl IntoIterator<Item = Symbol>) -> Result<()> {
        for s in symbols {
            if !self.ranks.contains_key(&s) {
                return Err(Error::Certificate(format!("no precedence rank for {s}")));
            }
        }
        Ok(())
    }

    fn rank_of(&self, f: &Symbol) -> u32 {
        self.rank(f)
            .unwrap_or_else(|| panic!("no precedence rank for {f}"))
    }
}

impl fmt::Display for Precedence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ranks.iter().map(|(s, r)| format!("{s}={r}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `(T × T, ⊒, ⊐)` comparing head symbols by precedence. Variables have no
/// head symbol and are never related.
#[derive(Clone, Debug)]
pub struct PrecedenceTriple {
    prec: Precedence,
}

impl PrecedenceTriple {
    pub fn new(prec: Precedence) -> Self {
        PrecedenceTriple { prec }
    }

    pub fn precedence(&self) -> &Precedence {
        &self.prec
    }
}

impl OrderPair for PrecedenceTriple {
    fn compare(&self, s: &Term, t: &Term) -> Cmp {
        match (s.root(), t.root()) {
            (Some(f), Some(g)) => {
                let (rf, rg) = (self.prec.rank_of(f), self.prec.rank_of(g));
                Cmp {
                    weak: rf >= rg,
                    strict: rf > rg,
                }
            }
            _ => Cmp::NONE,
        }
    }
}

impl ReductionTriple for PrecedenceTriple {
    fn preorder(&self, _: &Term, _: &Term) -> bool {
        true
    }
}

/// `(≥, ≥, >)` from a reduction pair `(≥, >)`.
#[derive(Clone, Debug)]
pub struct PairTriple<P>(pub P);

impl<P: OrderPair> OrderPair for PairTriple<P> {
    fn compare(&self, s: &Term, t: &Term) -> Cmp {
        self.0.compare(s, t)
    }
}

impl<P: OrderPair> ReductionTriple for PairTriple<P> {
    fn preorder(&self, s: &Term, t: &Term) -> bool {
        self.0.weak(s, t)
    }
}

pub fn triple_from_reduction_pair<P: OrderPair>(pair: P) -> PairTriple<P> {
    PairTriple(pair)
}

/// `(T × T, T × T, ∅)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct TrivialTriple;

impl OrderPair for TrivialTriple {
    fn compare(&self, _: &Term, _: &Term) -> Cmp {
        Cmp::WEAK
    }
}

impl ReductionTriple for TrivialTriple {
    fn preorder(&self, _: &Term, _: &Term) -> bool {
        true
    }
}

/// `(≥_A, ⊒_A, ⊐_A)` where the order pair compares `s!` and `t!`, the terms
/// with their roots replaced by fresh bang symbols.
#[derive(Clone, Debug)]
pub struct MarkedTriple {
    interp: Interpretation,
}

impl MarkedTriple {
    pub fn new(interp: Interpretation) -> Result<Self> {
        if !interp.check_weak_monotone() {
            return Err(Error::InvalidInterpretation("not weakly monotone".into()));
        }
        Ok(MarkedTriple { interp })
    }

    pub fn interpretation(&self) -> &Interpretation {
        &self.interp
    }
}

impl OrderPair for MarkedTriple {
    fn compare(&self, s: &Term, t: &Term) -> Cmp {
        match (s, t) {
            (Term::Var(x), Term::Var(y)) if x == y => Cmp::WEAK,
            (Term::App(_), Term::App(_)) => {
                let u = marked_abstraction(&self.interp, s);
                let v = marked_abstraction(&self.interp, t);
                Cmp {
                    weak: u.weakly_exceeds(&v),
                    strict: u.strictly_exceeds(&v),
                }
            }
            _ => Cmp::NONE,
        }
    }
}

impl ReductionTriple for MarkedTriple {
    fn preorder(&self, s: &Term, t: &Term) -> bool {
        abstraction(&self.interp, s).weakly_exceeds(&abstraction(&self.interp, t))
    }
}

/// Lexicographic combination of two order pairs:
/// `⊐ = ⊐_A ∪ (⊒_A ∩ ⊐_B)` and `⊒ = ⊐_A ∪ (⊒_A ∩ ⊒_B)`.
///
/// As a triple its preorder is `≥_A ∩ ≥_B`.
#[derive(Clone, Debug)]
pub struct LexCombined<A, B> {
    pub a: A,
    pub b: B,
}

pub fn lex_combine<A: OrderPair, B: OrderPair>(a: A, b: B) -> LexCombined<A, B> {
    LexCombined { a, b }
}

impl<A: OrderPair, B: OrderPair> OrderPair for LexCombined<A, B> {
    fn compare(&self, s: &Term, t: &Term) -> Cmp {
        let first = self.a.compare(s, t);
        if first.strict {
            Cmp::STRICT
        } else if first.weak {
            self.b.compare(s, t)
        } else {
            Cmp::NONE
        }
    }
}

impl<A: ReductionTriple, B: ReductionTriple> ReductionTriple for LexCombined<A, B> {
    fn preorder(&self, s: &Term, t: &Term) -> bool {
        self.a.preorder(s, t) && self.b.preorder(s, t)
    }
}

/// A harmony violation: `tᵢ ≥ u` but `f(..tᵢ..) ⋣ f(..u..)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonyViolation {
    pub left: Term,
    pub right: Term,
    pub position: usize,
}

impl fmt::Display for HarmonyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "argument {} decreases weakly but {} is not weakly above {}",
            self.position, self.left, self.right
        )
    }
}

/// Checks harmony on enumerated terms of size ≤ 3 over `sig` and two
/// variables, stopping after `budget` lifted comparisons. Remaining argument
/// slots are filled by cycling through the enumerated terms.
pub fn sample_harmony<T: ReductionTriple + ?Sized>(
    triple: &T,
    sig: &Signature,
    budget: usize,
) -> Result<(), HarmonyViolation> {
    let universe = enum_terms(sig, &["x", "y"], 3);
    if universe.is_empty() {
        return Ok(());
    }
    let mut checked = 0;
    let mut filler = 0usize;
    for ti in &universe {
        for u in &universe {
            if !triple.preorder(ti, u) {
                continue;
            }
            for f in sig.symbols().iter().filter(|f| f.arity() > 0) {
                for i in 0..f.arity() {
                    let mut left = Vec::with_capacity(f.arity());
                    for j in 0..f.arity() {
                        if j == i {
                            left.push(ti.clone());
                        } else {
                            left.push(universe[filler % universe.len()].clone());
                            filler += 1;
                        }
                    }
                    let mut right = left.clone();
                    right[i] = u.clone();
                    let (l, r) = (Term::app(f.clone(), left), Term::app(f.clone(), right));
                    if !triple.weak(&l, &r) {
                        return Err(HarmonyViolation {
                            left: l,
                            right: r,
                            position: i + 1,
                        });
                    }
                    checked += 1;
                    if checked >= budget {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{pred_weights, pred_measure, pred_signature, z08_marked_weights, z08_signature};
    use crate::algebra::SymbolInterp;

    struct Broken;

    impl OrderPair for Broken {
        fn compare(&self, s: &Term, t: &Term) -> Cmp {
            if s == t {
                Cmp::WEAK
            } else {
                Cmp::NONE
            }
        }
    }

    impl ReductionTriple for Broken {
        fn preorder(&self, _: &Term, _: &Term) -> bool {
            true
        }
    }

    fn t(sig: &Signature, s: &str) -> Term {
        sig.parse_term(s).unwrap()
    }

    #[test]
    fn algebra_triple_examples() {
        let sig = pred_signature();
        let a = AlgebraTriple::new(pred_weights()).unwrap();
        assert!(a.strict(&t(&sig, "p(s(x))"), &t(&sig, "x")));
        let fsx = t(&sig, "f(s(x))");
        assert!(a.preorder(&fsx, &fsx));
        let b = AlgebraTriple::new(pred_measure()).unwrap();
        assert!(b.strict(&fsx, &t(&sig, "f(p(s(x)))")));
    }

    #[test]
    fn precedence_triple_examples() {
        let f = Symbol::new("f", 1);
        let g = Symbol::new("g", 1);
        let p = PrecedenceTriple::new(Precedence::new().with(f.clone(), 1).with(g.clone(), 0));
        let fx = Term::app(f, vec![Term::var("x")]);
        let gy = Term::app(g, vec![Term::var("y")]);
        assert!(p.strict(&fx, &gy));
        assert!(!p.weak(&Term::var("x"), &Term::var("y")));
        assert!(!p.weak(&Term::var("x"), &Term::var("x")));
        assert!(p.preorder(&Term::var("x"), &fx));
    }

    #[test]
    fn pair_and_trivial_triples() {
        let sig = pred_signature();
        let alg = AlgebraTriple::new(pred_weights()).unwrap();
        let pt = triple_from_reduction_pair(alg.clone());
        for (l, r) in [("p(s(x))", "x"), ("x", "s(x)"), ("f(x)", "f(x)")] {
            let (l, r) = (t(&sig, l), t(&sig, r));
            assert_eq!(pt.compare(&l, &r), alg.compare(&l, &r));
            assert_eq!(pt.preorder(&l, &r), alg.preorder(&l, &r));
        }
        let s = t(&sig, "s(x)");
        assert!(pt.preorder(&s, &s));
        assert!(!pt.strict(&s, &s));

        let (x, y) = (Term::var("x"), Term::var("y"));
        assert!(TrivialTriple.preorder(&x, &y));
        assert!(!TrivialTriple.strict(&s, &x));
        assert!(TrivialTriple.weak(&s, &s));
    }

    #[test]
    fn marked_triple_examples() {
        let sig = z08_signature();
        let m = MarkedTriple::new(z08_marked_weights()).unwrap();
        assert!(m.strict(&t(&sig, "f(b,f(a,x))"), &t(&sig, "f(b,f(b,f(a,x)))")));
        let (x, y) = (Term::var("x"), Term::var("y"));
        assert!(m.weak(&x, &x));
        assert!(!m.weak(&x, &y));
        assert!(!m.strict(&x, &x));
        assert!(!m.weak(&x, &t(&sig, "a")));
    }

    #[test]
    fn lex_combination_examples() {
        let sig = pred_signature();
        let a = AlgebraTriple::new(pred_weights()).unwrap();
        let b = AlgebraTriple::new(pred_measure()).unwrap();
        let ab = lex_combine(&a, &b);
        let (l, r) = (t(&sig, "f(s(x))"), t(&sig, "f(p(s(x)))"));
        // A ties at x + 1, B decreases from x + 2 to x + 1.
        assert!(a.weak(&l, &r) && !a.strict(&l, &r));
        assert!(ab.strict(&l, &r));
        let s = t(&sig, "p(s(x))");
        assert!(ab.strict(&s, &Term::var("x")));
        assert!(ab.weak(&s, &s));
        assert!(ab.preorder(&l, &r));
    }

    #[test]
    fn harmony_sampling() {
        let sig = Signature::from_symbols([("f", 1), ("g", 2), ("a", 0), ("b", 0)]);
        let interp = Interpretation::new()
            .with(sig.get("f").unwrap().clone(), SymbolInterp::linear(1, vec![1]))
            .with(sig.get("g").unwrap().clone(), SymbolInterp::max_plus(0, vec![Some(-1), Some(1)]))
            .with(sig.get("a").unwrap().clone(), SymbolInterp::linear(2, vec![]))
            .with(sig.get("b").unwrap().clone(), SymbolInterp::linear(0, vec![]));
        assert!(sample_harmony(&AlgebraTriple::new(interp.clone()).unwrap(), &sig, 5000).is_ok());
        assert!(sample_harmony(&TrivialTriple, &sig, 5000).is_ok());

        let unary = Signature::from_symbols([("f", 1), ("a", 0), ("b", 0)]);
        let violation = sample_harmony(&Broken, &unary, 5000).unwrap_err();
        assert_eq!(violation.position, 1);
        assert_ne!(violation.left, violation.right);
    }
}
