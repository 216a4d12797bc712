//! The generalized weighted path order as a reduction order, its
//! monotonic intersection, and the flat KBO-like comparator.

use super::lex::lex_strict_at;
use super::{follow, key, BaseCache, ComparisonStats, Memo, Step, Trace};
use crate::term::Term;
use crate::triples::{OrderPair, ReductionTriple};

/// `s >_G t` induced by order pairs A and B.
///
/// Cases, tried in this order:
/// `1` `s ⊐_A t`;
/// `2a` `s = f(..)`, `s ⊒_A t`, and some argument equals `t` or is above it;
/// `2b(i)` additionally `t = g(..)`, `s` is above every argument of `t`, and `s ⊐_B t`;
/// `2b(ii)` as 2b(i) but `s ⊒_B t` and the arguments decrease lexicographically.
///
/// The fast variant assumes `⊐_A` and `⊒_A` have the subterm property and
/// drops the subterm case and the all-arguments premise; its labels are
/// `1`, `2(i)` and `2(ii)`.
pub struct GwpoEngine<'p> {
    a: BaseCache<'p>,
    b: BaseCache<'p>,
    fast: bool,
    memo: Memo,
    pub stats: ComparisonStats,
}

impl<'p> GwpoEngine<'p> {
    pub fn new(a: &'p dyn OrderPair, b: &'p dyn OrderPair) -> Self {
        GwpoEngine {
            a: BaseCache::new(a),
            b: BaseCache::new(b),
            fast: false,
            memo: Memo::new(),
            stats: ComparisonStats::default(),
        }
    }

    pub fn fast(a: &'p dyn OrderPair, b: &'p dyn OrderPair) -> Self {
        GwpoEngine {
            fast: true,
            ..GwpoEngine::new(a, b)
        }
    }

    fn reset(&mut self) {
        self.memo.clear();
        self.a.clear();
        self.b.clear();
    }

    pub fn gt(&mut self, s: &Term, t: &Term) -> bool {
        self.reset();
        self.rec(s, t)
    }

    /// Decides `s >_G t` and returns the case chain when it holds.
    pub fn gt_traced(&mut self, s: &Term, t: &Term) -> Option<Trace> {
        self.gt(s, t).then(|| follow(&self.memo, (true, key(s, t))))
    }

    fn rec(&mut self, s: &Term, t: &Term) -> bool {
        let k = key(s, t);
        if let Some(r) = self.memo.get(&(true, k)) {
            return r.is_some();
        }
        let r = if self.fast {
            self.fast_case(s, t)
        } else {
            self.full_case(s, t)
        };
        self.memo.insert((true, k), r);
        r.is_some()
    }

    fn full_case(&mut self, s: &Term, t: &Term) -> Option<Step> {
        let ca = self.a.cmp(s, t, &mut self.stats.a_calls);
        if ca.strict {
            return Some(Step::leaf("1"));
        }
        if s.is_var() || !ca.weak {
            return None;
        }
        for si in s.args() {
            if si == t {
                return Some(Step::leaf("2a"));
            }
            if self.rec(si, t) {
                return Some(Step::to("2a", true, key(si, t)));
            }
        }
        if t.is_var() {
            return None;
        }
        for tj in t.args() {
            if !self.rec(s, tj) {
                return None;
            }
        }
        self.head_case(s, t, "2b(i)", "2b(ii)")
    }

    fn fast_case(&mut self, s: &Term, t: &Term) -> Option<Step> {
        let ca = self.a.cmp(s, t, &mut self.stats.a_calls);
        if ca.strict {
            return Some(Step::leaf("1"));
        }
        if s.is_var() || t.is_var() || !ca.weak {
            return None;
        }
        self.head_case(s, t, "2(i)", "2(ii)")
    }

    fn head_case(
        &mut self,
        s: &Term,
        t: &Term,
        strict_label: &'static str,
        lex_label: &'static str,
    ) -> Option<Step> {
        let cb = self.b.cmp(s, t, &mut self.stats.b_calls);
        if cb.strict {
            return Some(Step::leaf(strict_label));
        }
        if !cb.weak {
            return None;
        }
        let (xs, ys) = (s.args(), t.args());
        let at = lex_strict_at(xs, ys, &mut |x: &Term, y: &Term| self.rec(x, y))?;
        Some(match at {
            Some(k) => Step::to(lex_label, true, key(&xs[k], &ys[k])),
            None => Step::leaf(lex_label),
        })
    }
}

pub fn gwpo_gt(
    s: &Term,
    t: &Term,
    a: &dyn OrderPair,
    b: &dyn OrderPair,
    stats: &mut ComparisonStats,
) -> bool {
    let mut e = GwpoEngine::new(a, b);
    let r = e.gt(s, t);
    stats.a_calls += e.stats.a_calls;
    stats.b_calls += e.stats.b_calls;
    r
}

pub fn gwpo_fast_gt(
    s: &Term,
    t: &Term,
    a: &dyn OrderPair,
    b: &dyn OrderPair,
    stats: &mut ComparisonStats,
) -> bool {
    let mut e = GwpoEngine::fast(a, b);
    let r = e.gt(s, t);
    stats.a_calls += e.stats.a_calls;
    stats.b_calls += e.stats.b_calls;
    r
}

/// `s >_MG t`: `s ≥_A t`, `s ≥_B t` and `s >_G t`.
pub fn mgwpo_gt(s: &Term, t: &Term, ta: &dyn ReductionTriple, tb: &dyn ReductionTriple) -> bool {
    ta.preorder(s, t)
        && tb.preorder(s, t)
        && GwpoEngine::new(ta as &dyn OrderPair, tb as &dyn OrderPair).gt(s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{pred_weights, pred_measure, pred_signature};
    use crate::algebra::{Interpretation, SymbolInterp};
    use crate::term::Symbol;
    use crate::triples::{AlgebraTriple, Precedence, PrecedenceTriple};

    fn pred_triples() -> (AlgebraTriple, AlgebraTriple) {
        (
            AlgebraTriple::new(pred_weights()).unwrap(),
            AlgebraTriple::new(pred_measure()).unwrap(),
        )
    }

    #[test]
    fn predecessor_rules_oriented() {
        let sig = pred_signature();
        let (a, b) = pred_triples();
        let mut e = GwpoEngine::new(&a, &b);
        let (l1, r1) = (sig.parse_term("p(s(x))").unwrap(), Term::var("x"));
        assert_eq!(e.gt_traced(&l1, &r1).unwrap().to_string(), "1");
        let l2 = sig.parse_term("f(s(x))").unwrap();
        let r2 = sig.parse_term("f(p(s(x)))").unwrap();
        assert!(e.gt(&l2, &r2));
        assert!(e.gt(&l2, &sig.parse_term("s(x)").unwrap()));
        assert!(mgwpo_gt(&l1, &r1, &a, &b));
        assert!(mgwpo_gt(&l2, &r2, &a, &b));
        assert!(!mgwpo_gt(&l2, &l2, &a, &b));
        assert!(!mgwpo_gt(&Term::var("x"), &Term::var("y"), &a, &b));
    }

    #[test]
    fn irreflexive_on_examples() {
        let sig = pred_signature();
        let (a, b) = pred_triples();
        let mut stats = ComparisonStats::default();
        for text in ["x", "s(x)", "f(p(s(x)))"] {
            let t = sig.parse_term(text).unwrap();
            assert!(!gwpo_gt(&t, &t, &a, &b, &mut stats));
        }
        assert!(stats.total() > 0);
    }

    #[test]
    fn fast_comparator_examples() {
        let f = Symbol::new("f", 1);
        let interp = Interpretation::new().with(f.clone(), SymbolInterp::linear(1, vec![1]));
        let a = AlgebraTriple::new(interp).unwrap();
        let b = PrecedenceTriple::new(Precedence::new().with(f.clone(), 0));
        let x = Term::var("x");
        let fx = Term::app(f.clone(), vec![x.clone()]);
        let ffx = Term::app(f, vec![fx.clone()]);
        let mut st = ComparisonStats::default();
        assert!(gwpo_fast_gt(&ffx, &fx, &a, &b, &mut st));
        assert!(gwpo_gt(&ffx, &fx, &a, &b, &mut st));
        assert!(!gwpo_fast_gt(&fx, &fx, &a, &b, &mut st));
        assert!(!gwpo_fast_gt(&x, &Term::var("y"), &a, &b, &mut st));
    }
}
