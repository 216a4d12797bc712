//! The semantic path order as a reduction order.

use super::lex::lex_strict_at;
use super::{follow, key, BaseCache, ComparisonStats, Memo, Step, Trace};
use crate::term::Term;
use crate::triples::{OrderPair, ReductionTriple};

/// `s >_S t` induced by a single order pair. Only applications can be
/// greater. Cases:
/// `a` some argument equals `t` or is above it;
/// `b(i)` `t = g(..)`, `s` is above every argument of `t`, and `s ⊐ t`;
/// `b(ii)` as b(i) but `s ⊒ t` and the arguments decrease lexicographically.
pub struct SpoEngine<'p> {
    base: BaseCache<'p>,
    memo: Memo,
    pub stats: ComparisonStats,
}

impl<'p> SpoEngine<'p> {
    pub fn new(pair: &'p dyn OrderPair) -> Self {
        SpoEngine {
            base: BaseCache::new(pair),
            memo: Memo::new(),
            stats: ComparisonStats::default(),
        }
    }

    pub fn gt(&mut self, s: &Term, t: &Term) -> bool {
        self.memo.clear();
        self.base.clear();
        self.rec(s, t)
    }

    pub fn gt_traced(&mut self, s: &Term, t: &Term) -> Option<Trace> {
        self.gt(s, t).then(|| follow(&self.memo, (true, key(s, t))))
    }

    fn rec(&mut self, s: &Term, t: &Term) -> bool {
        let k = key(s, t);
        if let Some(r) = self.memo.get(&(true, k)) {
            return r.is_some();
        }
        let r = self.case(s, t);
        self.memo.insert((true, k), r);
        r.is_some()
    }

    fn case(&mut self, s: &Term, t: &Term) -> Option<Step> {
        if s.is_var() {
            return None;
        }
        for si in s.args() {
            if si == t {
                return Some(Step::leaf("a"));
            }
            if self.rec(si, t) {
                return Some(Step::to("a", true, key(si, t)));
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
        let c = self.base.cmp(s, t, &mut self.stats.b_calls);
        if c.strict {
            return Some(Step::leaf("b(i)"));
        }
        if !c.weak {
            return None;
        }
        let (xs, ys) = (s.args(), t.args());
        let at = lex_strict_at(xs, ys, &mut |x: &Term, y: &Term| self.rec(x, y))?;
        Some(match at {
            Some(k) => Step::to("b(ii)", true, key(&xs[k], &ys[k])),
            None => Step::leaf("b(ii)"),
        })
    }
}

pub fn spo_gt(s: &Term, t: &Term, pair: &dyn OrderPair) -> bool {
    SpoEngine::new(pair).gt(s, t)
}

/// `s >_MS t`: `s ≥ t` and `s >_S t`.
pub fn mspo_gt(s: &Term, t: &Term, triple: &dyn ReductionTriple) -> bool {
    triple.preorder(s, t) && SpoEngine::new(triple as &dyn OrderPair).gt(s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{pred_weights, pred_measure, pred_signature};
    use crate::orders::gwpo_gt;
    use crate::triples::{lex_combine, AlgebraTriple, TrivialTriple};

    #[test]
    fn spo_examples() {
        let sig = pred_signature();
        let a = AlgebraTriple::new(pred_weights()).unwrap();
        let b = AlgebraTriple::new(pred_measure()).unwrap();
        let ab = lex_combine(&a, &b);
        let l = sig.parse_term("f(s(x))").unwrap();
        let r = sig.parse_term("f(p(s(x)))").unwrap();
        assert!(spo_gt(&l, &r, &ab));
        let mut st = ComparisonStats::default();
        assert!(gwpo_gt(&l, &r, &a, &b, &mut st));
        assert!(mspo_gt(&l, &r, &ab));

        let sx = sig.parse_term("s(x)").unwrap();
        let x = Term::var("x");
        let mut e = SpoEngine::new(&TrivialTriple);
        assert_eq!(e.gt_traced(&sx, &x).unwrap().to_string(), "a");
        for t in [&x, &sx, &l] {
            assert!(!spo_gt(&x, t, &TrivialTriple));
        }
    }
}
