//! Named oracle checks shared by the command line and the test suites.
//!
//! Each check bundles the fixed order instances it runs on, so a check
//! name together with a universe size fully determines its result.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::oracle::{
    check_fast_gwpo, check_mgwpo_equals_mspo, check_pair_inclusion, check_reduction_order_laws,
    check_strict_within_weak, describe_interpretation, random_algebra_pair, LawBudget, LawResult,
    OracleReport, RelationKind, Universe,
};
use crate::orders::{
    ground_totality, gwpo_pair, mgwpo_gt, mgwpo_pair, mspo_pair, spo_pair, ComparisonStats,
    GwpoEngine, Totality,
};
use crate::status::Status;
use crate::term::{Symbol, Term};
use crate::triples::{
    AlgebraTriple, Cmp, MarkedTriple, OrderPair, Precedence, PrecedenceTriple, ReductionTriple,
};
use crate::trs::Signature;

/// Seeds of the randomly drawn algebra pairs.
pub const RANDOM_SEEDS: [u64; 3] = [1, 2, 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// MGWPO and the lex-combined MSPO agree.
    MgwpoEqualsMspo,
    /// The SPO pair is included in the GWPO pair, with equality for total
    /// statuses.
    PairInclusion,
    /// The flat comparator agrees with the recursive GWPO.
    FastGwpo,
    /// Reduction-order and reduction-pair laws of four instances.
    Laws,
    /// Ground totality of a KBO-like instance and a trivial-order control.
    Totality,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::MgwpoEqualsMspo,
        Check::PairInclusion,
        Check::FastGwpo,
        Check::Laws,
        Check::Totality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::MgwpoEqualsMspo => "mgwpo-equals-mspo",
            Check::PairInclusion => "pair-inclusion",
            Check::FastGwpo => "fast-gwpo",
            Check::Laws => "laws",
            Check::Totality => "totality",
        }
    }

    /// Short historical names accepted on the command line.
    pub fn alias(self) -> Option<&'static str> {
        match self {
            Check::MgwpoEqualsMspo => Some("thm2.5"),
            Check::PairInclusion => Some("thm3.6"),
            Check::FastGwpo => Some("prop2.6"),
            Check::Laws | Check::Totality => None,
        }
    }

    pub fn default_size(self) -> usize {
        match self {
            Check::Totality => 6,
            _ => 5,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s || c.alias() == Some(s))
            .ok_or_else(|| {
                let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                Error::Precondition(format!("unknown check {s}; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TotalityResult {
    pub subject: String,
    pub size: usize,
    pub expect_total: bool,
    pub result: Totality,
}

/// Everything one named check produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<OracleReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub totality: Vec<TotalityResult>,
}

fn labelled(mut r: OracleReport, subject: &str) -> OracleReport {
    r.parameters.insert("subject".into(), subject.into());
    r
}

fn params(a: &crate::algebra::Interpretation, b: &crate::algebra::Interpretation) -> std::collections::BTreeMap<String, String> {
    let mut p = describe_interpretation("A", a);
    p.extend(describe_interpretation("B", b));
    p
}

fn algebra(i: crate::algebra::Interpretation) -> AlgebraTriple {
    AlgebraTriple::new(i).expect("fixture interpretations are well formed")
}

/// The non-total status used for the inclusion check on the standard
/// signature: `f` keeps its second argument, `g` none.
pub fn partial_status(sig: &Signature) -> Status {
    let mut st = Status::total();
    for f in sig.symbols() {
        match f.arity() {
            0 => {}
            1 => {
                st.set(f.clone(), vec![]).expect("valid");
            }
            n => {
                st.set(f.clone(), vec![n]).expect("valid");
            }
        }
    }
    st
}

/// Runs a named check on universes of the given size (or its default).
pub fn run_check(check: Check, size: Option<usize>, jobs: usize) -> Result<CheckOutcome> {
    let size = size.unwrap_or(check.default_size());
    let standard = Universe::standard().with_size(size);
    let mut reports = Vec::new();
    let mut totality = Vec::new();
    let passed = match check {
        Check::MgwpoEqualsMspo => {
            let pred = Universe::new(fixtures::pred_signature(), &["x", "y"], size);
            let (a, b) = (fixtures::pred_weights(), fixtures::pred_measure());
            let r = check_mgwpo_equals_mspo(&algebra(a.clone()), &algebra(b.clone()), &pred, jobs)?;
            reports.push(labelled(r.with_parameters(params(&a, &b)), "predecessor triples"));
            for seed in RANDOM_SEEDS {
                let (a, b) = random_algebra_pair(&standard.signature, &Status::total(), seed);
                let r = check_mgwpo_equals_mspo(&algebra(a.clone()), &algebra(b.clone()), &standard, jobs)?;
                reports.push(labelled(r.with_parameters(params(&a, &b)), &format!("random pair {seed}")));
            }
            reports.iter().all(|r| r.passed)
        }
        Check::PairInclusion => {
            let partial = partial_status(&standard.signature);
            let mut ok = true;
            for (status, kind) in [(partial, "non-total"), (Status::total(), "total")] {
                for seed in RANDOM_SEEDS {
                    let (a, b) = random_algebra_pair(&standard.signature, &status, seed);
                    let r = check_pair_inclusion(&algebra(a.clone()), &algebra(b.clone()), &status, &standard, jobs)?;
                    ok &= r.passed;
                    reports.push(labelled(
                        r.with_parameters(params(&a, &b)),
                        &format!("random pair {seed}, {kind} status"),
                    ));
                }
            }
            let succ = Universe::new(fixtures::successor_signature(), &["x", "y"], size);
            let a = fixtures::successor_weights();
            let b = fixtures::successor_weights();
            let r = check_pair_inclusion(&algebra(a.clone()), &algebra(b.clone()), &fixtures::successor_status(), &succ, jobs)?;
            let witness = r.equality_witness.as_ref().map(|w| (w.left.as_str(), w.right.as_str()));
            ok &= r.passed && witness == Some(("f(x)", "x"));
            reports.push(labelled(r.with_parameters(params(&a, &b)), "successor system, empty status"));
            ok
        }
        Check::FastGwpo => {
            let a = fixtures::unit_weights(&standard.signature);
            let prec = fixtures::declaration_precedence(&standard.signature);
            let r = check_fast_gwpo(&algebra(a.clone()), &PrecedenceTriple::new(prec.clone()), &standard, jobs)?;
            let mut p = describe_interpretation("A", &a);
            p.insert("precedence".into(), prec.to_string());
            reports.push(labelled(r.with_parameters(p), "unit weights, declaration precedence"));
            reports[0].passed
        }
        Check::Laws => {
            reports = law_reports(size, jobs);
            reports.iter().all(|r| r.passed)
        }
        Check::Totality => {
            let sig = Signature::from_symbols([("a", 0), ("f", 1)]);
            let a = algebra(fixtures::unit_weights(&sig));
            let b = PrecedenceTriple::new(fixtures::declaration_precedence(&sig));
            let kbo = |s: &Term, t: &Term| kbo_like(&a, &b, s, t).strict;
            let pos = ground_totality(kbo, &sig, size, jobs)?;
            let pair_sig = Signature::from_symbols([("a", 0), ("b", 0)]);
            let neg = ground_totality(|_: &Term, _: &Term| false, &pair_sig, size, jobs)?;
            let ok = matches!(pos, Totality::Total { .. }) && matches!(neg, Totality::Incomparable { .. });
            totality.push(TotalityResult {
                subject: "kbo-like, unit weights, a above f".into(),
                size,
                expect_total: true,
                result: pos,
            });
            totality.push(TotalityResult {
                subject: "always-false order over two constants".into(),
                size,
                expect_total: false,
                result: neg,
            });
            ok
        }
    };
    Ok(CheckOutcome {
        check,
        passed,
        reports,
        totality,
    })
}

/// The KBO-like reduction order: both preorders and the flat comparator.
pub fn kbo_like(a: &dyn ReductionTriple, b: &dyn ReductionTriple, s: &Term, t: &Term) -> Cmp {
    let (pa, pb): (&dyn OrderPair, &dyn OrderPair) = (a, b);
    let strict = a.preorder(s, t) && b.preorder(s, t) && GwpoEngine::fast(pa, pb).gt(s, t);
    Cmp {
        weak: strict || s == t,
        strict,
    }
}

/// Appends a law checked on the underlying order pair of a reduction pair.
fn add_law(r: &mut OracleReport, law: LawResult) {
    if !law.passed {
        r.passed = false;
        if r.counterexample.is_none() {
            r.counterexample = law.counterexample.clone().map(|mut c| {
                c.detail = format!("{}: {}", law.law, c.detail);
                c
            });
        }
    }
    r.laws.push(law);
}

fn order(strict: bool, s: &Term, t: &Term) -> Cmp {
    Cmp {
        weak: strict || s == t,
        strict,
    }
}

/// Law suites for the MGWPO of the predecessor triples, the SPO pair of the
/// z08 parameters, a GWPO pair with total status, and a KBO-like order.
pub fn law_reports(size: usize, jobs: usize) -> Vec<OracleReport> {
    let budget = LawBudget::default();
    let mut out = Vec::new();

    let pred = Universe::new(fixtures::pred_signature(), &["x", "y"], size);
    let (a, b) = (fixtures::pred_weights(), fixtures::pred_measure());
    let (ta, tb) = (algebra(a.clone()), algebra(b.clone()));
    let rel = |s: &Term, t: &Term| order(mgwpo_gt(s, t, &ta, &tb), s, t);
    let r = check_reduction_order_laws(&rel, RelationKind::Order, &pred, &budget, jobs);
    out.push(labelled(r.with_parameters(params(&a, &b)), "mgwpo, predecessor triples"));

    let z08 = Universe::new(fixtures::z08_signature(), &["x", "y"], size);
    let marked = MarkedTriple::new(fixtures::z08_marked_weights()).expect("fixture");
    let status = fixtures::z08_status();
    let rel = |s: &Term, t: &Term| mspo_pair(s, t, &status, &marked);
    let mut r = check_reduction_order_laws(&rel, RelationKind::Pair, &z08, &budget, jobs);
    let base = |s: &Term, t: &Term| spo_pair(s, t, &status, &marked);
    add_law(&mut r, check_strict_within_weak(&base, &z08, jobs));
    let mut p = describe_interpretation("A", &fixtures::z08_marked_weights());
    p.insert("status".into(), status.to_string());
    out.push(labelled(r.with_parameters(p), "spo pair, z08 parameters"));

    let standard = Universe::standard().with_size(size);
    let (a, b) = random_algebra_pair(&standard.signature, &Status::total(), RANDOM_SEEDS[0]);
    let (ta, tb) = (algebra(a.clone()), algebra(b.clone()));
    let total = Status::total();
    let rel = |s: &Term, t: &Term| mgwpo_pair(s, t, &total, &ta, &tb);
    let mut r = check_reduction_order_laws(&rel, RelationKind::Pair, &standard, &budget, jobs);
    let base = |s: &Term, t: &Term| gwpo_pair(s, t, &total, &ta, &tb);
    add_law(&mut r, check_strict_within_weak(&base, &standard, jobs));
    out.push(labelled(r.with_parameters(params(&a, &b)), "gwpo pair, total status"));

    let a = fixtures::unit_weights(&standard.signature);
    let prec = fixtures::declaration_precedence(&standard.signature);
    let (ta, tb) = (algebra(a.clone()), PrecedenceTriple::new(prec.clone()));
    let rel = |s: &Term, t: &Term| kbo_like(&ta, &tb, s, t);
    let r = check_reduction_order_laws(&rel, RelationKind::Order, &standard, &budget, jobs);
    let mut p = describe_interpretation("A", &a);
    p.insert("precedence".into(), prec.to_string());
    out.push(labelled(r.with_parameters(p), "kbo-like, unit weights"));
    out
}

/// Base comparisons of the flat comparator on `fⁿ(a)` against `fⁿ(b)`,
/// with `f(x) = x + 1`, `a = b = 1` and `a` above `b` in the precedence.
pub fn linear_family_count(n: usize) -> ComparisonStats {
    let f = Symbol::new("f", 1);
    let (ca, cb) = (Symbol::new("a", 0), Symbol::new("b", 0));
    let weights = crate::algebra::Interpretation::new()
        .with(f.clone(), crate::algebra::SymbolInterp::linear(1, vec![1]))
        .with(ca.clone(), crate::algebra::SymbolInterp::linear(1, vec![]))
        .with(cb.clone(), crate::algebra::SymbolInterp::linear(1, vec![]));
    let prec = Precedence::new().with(f.clone(), 2).with(ca.clone(), 1).with(cb.clone(), 0);
    let tower = |c: &Symbol| (0..n).fold(Term::constant(c.clone()), |t, _| Term::app(f.clone(), vec![t]));
    let (s, t) = (tower(&ca), tower(&cb));
    let a = algebra(weights);
    let b = PrecedenceTriple::new(prec);
    let mut e = GwpoEngine::fast(&a, &b);
    assert!(e.gt(&s, &t), "the tower over the larger constant is greater");
    e.stats
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_aliases_parse() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
            if let Some(a) = c.alias() {
                assert_eq!(a.parse::<Check>().unwrap(), c);
            }
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        for c in Check::ALL {
            let size = if c == Check::Totality { 4 } else { 3 };
            let out = run_check(c, Some(size), 1).unwrap();
            assert!(out.passed, "{c}: {out:?}");
        }
    }

    #[test]
    fn family_count_is_linear() {
        let counts: Vec<u64> = [1, 2, 4, 8].iter().map(|&n| linear_family_count(n).total()).collect();
        assert!(counts.windows(2).all(|w| w[0] < w[1]), "{counts:?}");
    }
}
