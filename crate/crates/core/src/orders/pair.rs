//! Path orders as reduction pairs `(≥, >)` with partial statuses.

use super::lex::pair_lex_at;
use super::{follow, key, BaseCache, ComparisonStats, Key, Memo, Step, Trace};
use crate::status::Status;
use crate::term::Term;
use crate::triples::{Cmp, OrderPair, ReductionTriple};

/// `(≥_G, >_G)` induced by a status and order pairs A and B.
///
/// `s ≥_G t` holds by `1` `s ⊐_A t`, or `s ⊒_A t` together with one of:
/// `2a` some selected argument of `s` is `≥_G t`;
/// `2b(i)` both are applications, `s >_G` every selected argument of `t`, and `s ⊐_B t`;
/// `2b(ii)` as 2b(i) but `s ⊒_B t` and the selected arguments decrease
/// weakly in the lexicographic extension;
/// `2c` `s` is a variable equal to `t`.
/// The strict relation uses cases 1, 2a (still with `≥_G` on the argument)
/// and 2b with the strict lexicographic extension.
pub struct GwpoPairEngine<'p> {
    a: BaseCache<'p>,
    b: BaseCache<'p>,
    status: &'p Status,
    memo: Memo,
    pub stats: ComparisonStats,
}

impl<'p> GwpoPairEngine<'p> {
    pub fn new(status: &'p Status, a: &'p dyn OrderPair, b: &'p dyn OrderPair) -> Self {
        GwpoPairEngine {
            a: BaseCache::new(a),
            b: BaseCache::new(b),
            status,
            memo: Memo::new(),
            stats: ComparisonStats::default(),
        }
    }

    pub fn compare(&mut self, s: &Term, t: &Term) -> Cmp {
        self.memo.clear();
        self.a.clear();
        self.b.clear();
        let strict = self.rec(true, s, t);
        let weak = self.rec(false, s, t);
        Cmp { weak, strict }
    }

    /// Decides one component and returns its case chain when it holds.
    pub fn traced(&mut self, strict: bool, s: &Term, t: &Term) -> Option<Trace> {
        let c = self.compare(s, t);
        let holds = if strict { c.strict } else { c.weak };
        holds.then(|| follow(&self.memo, (strict, key(s, t))))
    }

    fn rec(&mut self, strict: bool, s: &Term, t: &Term) -> bool {
        let k = key(s, t);
        if let Some(r) = self.memo.get(&(strict, k)) {
            return r.is_some();
        }
        let r = self.case(strict, s, t);
        self.memo.insert((strict, k), r);
        r.is_some()
    }

    fn case(&mut self, strict: bool, s: &Term, t: &Term) -> Option<Step> {
        let ca = self.a.cmp(s, t, &mut self.stats.a_calls);
        if ca.strict {
            return Some(Step::leaf("1"));
        }
        if !ca.weak {
            return None;
        }
        if let Some(step) = self.subterm_case(s, t, "2a") {
            return Some(step);
        }
        if let Some(step) = self.head_case(strict, s, t, "2b(i)", "2b(ii)") {
            return Some(step);
        }
        (!strict && s.is_var() && s == t).then(|| Step::leaf("2c"))
    }

    fn subterm_case(&mut self, s: &Term, t: &Term, label: &'static str) -> Option<Step> {
        for si in self.status.project(s) {
            if self.rec(false, si, t) {
                return Some(Step::to(label, false, key(si, t)));
            }
        }
        None
    }

    fn head_case(
        &mut self,
        strict: bool,
        s: &Term,
        t: &Term,
        strict_label: &'static str,
        lex_label: &'static str,
    ) -> Option<Step> {
        if s.is_var() || t.is_var() {
            return None;
        }
        let ys = self.status.project(t);
        for &tj in &ys {
            if !self.rec(true, s, tj) {
                return None;
            }
        }
        let cb = self.b.cmp(s, t, &mut self.stats.b_calls);
        if cb.strict {
            return Some(Step::leaf(strict_label));
        }
        if !cb.weak {
            return None;
        }
        let xs = self.status.project(s);
        lex_step(
            strict,
            &xs,
            &ys,
            lex_label,
            &mut |st: bool, x: &Term, y: &Term| self.rec(st, x, y),
        )
    }
}

/// Runs one component of the pair lexicographic extension and records the
/// deciding position as the next step.
fn lex_step(
    strict: bool,
    xs: &[&Term],
    ys: &[&Term],
    label: &'static str,
    rel: &mut impl FnMut(bool, &Term, &Term) -> bool,
) -> Option<Step> {
    let cell = std::cell::RefCell::new(rel);
    let at = pair_lex_at(
        xs,
        ys,
        strict,
        &mut |x: &&Term, y: &&Term| (cell.borrow_mut())(false, x, y),
        &mut |x: &&Term, y: &&Term| (cell.borrow_mut())(true, x, y),
    )?;
    Some(match at {
        Some(k) => Step::to(label, true, key(xs[k], ys[k])),
        None => Step::leaf(label),
    })
}

/// `(≥_S, >_S)` induced by a status and a single order pair.
///
/// `s ≥_S t` holds by `1` some selected argument of `s` is `≥_S t`;
/// `2a` both are applications, `s >_S` every selected argument of `t`, and
/// `s ⊐ t`; `2b` as 2a but `s ⊒ t` and the selected arguments decrease
/// weakly lexicographically; `3` `s` is a variable equal to `t`.
/// The strict relation uses cases 1, 2a and 2b with the strict extension.
pub struct SpoPairEngine<'p> {
    base: BaseCache<'p>,
    status: &'p Status,
    memo: Memo,
    pub stats: ComparisonStats,
}

impl<'p> SpoPairEngine<'p> {
    pub fn new(status: &'p Status, pair: &'p dyn OrderPair) -> Self {
        SpoPairEngine {
            base: BaseCache::new(pair),
            status,
            memo: Memo::new(),
            stats: ComparisonStats::default(),
        }
    }

    pub fn compare(&mut self, s: &Term, t: &Term) -> Cmp {
        self.memo.clear();
        self.base.clear();
        let strict = self.rec(true, s, t);
        let weak = self.rec(false, s, t);
        Cmp { weak, strict }
    }

    pub fn traced(&mut self, strict: bool, s: &Term, t: &Term) -> Option<Trace> {
        let c = self.compare(s, t);
        let holds = if strict { c.strict } else { c.weak };
        holds.then(|| follow(&self.memo, (strict, key(s, t))))
    }

    fn rec(&mut self, strict: bool, s: &Term, t: &Term) -> bool {
        let k: Key = key(s, t);
        if let Some(r) = self.memo.get(&(strict, k)) {
            return r.is_some();
        }
        let r = self.case(strict, s, t);
        self.memo.insert((strict, k), r);
        r.is_some()
    }

    fn case(&mut self, strict: bool, s: &Term, t: &Term) -> Option<Step> {
        for si in self.status.project(s) {
            if self.rec(false, si, t) {
                return Some(Step::to("1", false, key(si, t)));
            }
        }
        if !s.is_var() && !t.is_var() {
            if let Some(step) = self.head_case(strict, s, t) {
                return Some(step);
            }
        }
        (!strict && s.is_var() && s == t).then(|| Step::leaf("3"))
    }

    fn head_case(&mut self, strict: bool, s: &Term, t: &Term) -> Option<Step> {
        let ys = self.status.project(t);
        for &tj in &ys {
            if !self.rec(true, s, tj) {
                return None;
            }
        }
        let c = self.base.cmp(s, t, &mut self.stats.b_calls);
        if c.strict {
            return Some(Step::leaf("2a"));
        }
        if !c.weak {
            return None;
        }
        let xs = self.status.project(s);
        lex_step(
            strict,
            &xs,
            &ys,
            "2b",
            &mut |st: bool, x: &Term, y: &Term| self.rec(st, x, y),
        )
    }
}

pub fn gwpo_pair(s: &Term, t: &Term, status: &Status, a: &dyn OrderPair, b: &dyn OrderPair) -> Cmp {
    GwpoPairEngine::new(status, a, b).compare(s, t)
}

pub fn spo_pair(s: &Term, t: &Term, status: &Status, pair: &dyn OrderPair) -> Cmp {
    SpoPairEngine::new(status, pair).compare(s, t)
}

/// `(≥_MG, >_G)`: the weak component is intersected with `≥_A` and `≥_B`.
pub fn mgwpo_pair(
    s: &Term,
    t: &Term,
    status: &Status,
    ta: &dyn ReductionTriple,
    tb: &dyn ReductionTriple,
) -> Cmp {
    let c = gwpo_pair(s, t, status, ta as &dyn OrderPair, tb as &dyn OrderPair);
    Cmp {
        weak: c.weak && ta.preorder(s, t) && tb.preorder(s, t),
        strict: c.strict,
    }
}

/// `(≥_MS, >_S)`: the weak component is intersected with `≥`.
pub fn mspo_pair(s: &Term, t: &Term, status: &Status, triple: &dyn ReductionTriple) -> Cmp {
    let c = spo_pair(s, t, status, triple as &dyn OrderPair);
    Cmp {
        weak: c.weak && triple.preorder(s, t),
        strict: c.strict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{z08_marked_weights, z08_signature};
    use crate::algebra::{Interpretation, SymbolInterp};
    use crate::orders::lex::pair_lex;
    use crate::term::Symbol;
    use crate::triples::{MarkedTriple, Precedence, PrecedenceTriple, TrivialTriple};
    use crate::trs::Signature;

    fn ex37_status(sig: &Signature) -> Status {
        let f = sig.get("f").unwrap().clone();
        let a = sig.get("a").unwrap().clone();
        let b = sig.get("b").unwrap().clone();
        Status::total()
            .with(f.to_tuple(), vec![2])
            .unwrap()
            .with(f, vec![])
            .unwrap()
            .with(a, vec![])
            .unwrap()
            .with(b, vec![])
            .unwrap()
    }

    #[test]
    fn marked_projection_chains() {
        let sig = z08_signature();
        let pi = ex37_status(&sig);
        let m = MarkedTriple::new(z08_marked_weights()).unwrap();
        let mut e = SpoPairEngine::new(&pi, &m);
        let l = sig.parse_term("f#(a,f(b,f(a,x)))").unwrap();
        let r = sig.parse_term("f#(a,f(b,f(b,f(a,x))))").unwrap();
        assert_eq!(e.traced(true, &l, &r).unwrap().to_string(), "2b > 2a");
        let (u, v) = (
            sig.parse_term("f(b,f(a,x))").unwrap(),
            sig.parse_term("f(b,f(b,f(a,x)))").unwrap(),
        );
        assert_eq!(e.traced(true, &u, &v).unwrap().to_string(), "2a");
        // The lexicographic step on the selected arguments.
        let mut st = SpoPairEngine::new(&pi, &m);
        let (w, s) = pair_lex(&[&u], &[&v], |x, y| st.compare(x, y).weak, |_, _| true);
        assert!(w && s);
    }

    #[test]
    fn empty_status_blocks_path_cases() {
        let f = Symbol::new("f", 1);
        let pi = Status::total().with(f.clone(), vec![]).unwrap();
        let interp = Interpretation::new().with(f.clone(), SymbolInterp::linear(1, vec![1]));
        let a = crate::triples::AlgebraTriple::new(interp).unwrap();
        let b = PrecedenceTriple::new(Precedence::new().with(f.clone(), 0));
        let x = Term::var("x");
        let fx = Term::app(f, vec![x.clone()]);
        assert_eq!(gwpo_pair(&fx, &x, &pi, &a, &b), Cmp::STRICT);
        assert_eq!(spo_pair(&fx, &x, &pi, &b), Cmp::NONE);
        assert_eq!(spo_pair(&fx, &x, &pi, &TrivialTriple), Cmp::NONE);
        assert_eq!(gwpo_pair(&x, &x, &pi, &a, &b), Cmp::WEAK);
        assert_eq!(gwpo_pair(&x, &Term::var("y"), &pi, &a, &b), Cmp::NONE);
        assert_eq!(mgwpo_pair(&fx, &fx, &pi, &a, &b).weak, true);
    }
}
