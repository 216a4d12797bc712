//! Property-based invariants over random terms of a small signature.

use std::collections::BTreeMap;

use proptest::prelude::*;

use gwpo_core::algebra::SymbolInterp;
use gwpo_core::fixtures;
use gwpo_core::io::{parse_ari, print_ari};
use gwpo_core::orders::{gwpo_gt, gwpo_pair, mgwpo_gt, mspo_gt, ComparisonStats, GwpoEngine};
use gwpo_core::triples::{lex_combine, AlgebraTriple, OrderPair, PrecedenceTriple};
use gwpo_core::{Rule, Signature, Status, Substitution, Term, Trs, Var};

fn term(sig: Signature, depth: u32) -> impl Strategy<Value = Term> {
    let leaves: Vec<Term> = sig
        .constants()
        .map(|c| Term::constant(c.clone()))
        .chain(["x", "y"].map(Term::var))
        .collect();
    let funs: Vec<_> = sig.symbols().iter().filter(|f| f.arity() > 0).cloned().collect();
    prop::sample::select(leaves).prop_recursive(depth, 24, 2, move |inner| {
        let funs = funs.clone();
        (prop::sample::select(funs), prop::collection::vec(inner, 2)).prop_map(|(f, args)| {
            Term::app(f.clone(), args.into_iter().take(f.arity()).collect())
        })
    })
}

fn oracle_term() -> impl Strategy<Value = Term> {
    term(fixtures::oracle_signature(), 4)
}

fn pred_term() -> impl Strategy<Value = Term> {
    let sig = fixtures::pred_signature();
    let leaves = vec![Term::var("x"), Term::var("y")];
    let funs: Vec<_> = sig.symbols().to_vec();
    prop::sample::select(leaves).prop_recursive(5, 8, 1, move |inner| {
        (prop::sample::select(funs.clone()), inner).prop_map(|(f, a)| Term::app(f, vec![a]))
    })
}

fn kbo_parts() -> (AlgebraTriple, PrecedenceTriple) {
    let sig = fixtures::oracle_signature();
    (
        AlgebraTriple::new(fixtures::unit_weights(&sig)).unwrap(),
        PrecedenceTriple::new(fixtures::declaration_precedence(&sig)),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn gwpo_is_irreflexive_and_asymmetric(s in oracle_term(), t in oracle_term()) {
        let (a, b) = kbo_parts();
        let mut st = ComparisonStats::default();
        prop_assert!(!gwpo_gt(&s, &s, &a, &b, &mut st));
        prop_assert!(!(gwpo_gt(&s, &t, &a, &b, &mut st) && gwpo_gt(&t, &s, &a, &b, &mut st)));
    }

    #[test]
    fn fast_and_recursive_comparators_agree(s in oracle_term(), t in oracle_term()) {
        let (a, b) = kbo_parts();
        let (pa, pb): (&dyn OrderPair, &dyn OrderPair) = (&a, &b);
        prop_assert_eq!(GwpoEngine::new(pa, pb).gt(&s, &t), GwpoEngine::fast(pa, pb).gt(&s, &t));
    }

    #[test]
    fn mgwpo_equals_mspo_on_predecessor_triples(s in pred_term(), t in pred_term()) {
        let a = AlgebraTriple::new(fixtures::pred_weights()).unwrap();
        let b = AlgebraTriple::new(fixtures::pred_measure()).unwrap();
        prop_assert_eq!(mgwpo_gt(&s, &t, &a, &b), mspo_gt(&s, &t, &lex_combine(&a, &b)));
    }

    #[test]
    fn gwpo_pair_strict_implies_weak(s in oracle_term(), t in oracle_term()) {
        let (a, b) = kbo_parts();
        let sig = fixtures::oracle_signature();
        let status = Status::total().with(sig.get("f").unwrap().clone(), vec![2]).unwrap();
        let c = gwpo_pair(&s, &t, &status, &a, &b);
        prop_assert!(!c.strict || c.weak);
    }

    #[test]
    fn strict_order_is_stable(s in oracle_term(), t in oracle_term(), u in oracle_term()) {
        let (a, b) = kbo_parts();
        let mut st = ComparisonStats::default();
        prop_assume!(gwpo_gt(&s, &t, &a, &b, &mut st));
        let sigma = Substitution::new().with("x", u.clone()).with("y", u);
        prop_assert!(gwpo_gt(&s.apply(&sigma), &t.apply(&sigma), &a, &b, &mut st));
    }

    #[test]
    fn symbolic_dominance_is_sound(s in oracle_term(), t in oracle_term(), x in 0u64..6, y in 0u64..6) {
        let sig = fixtures::oracle_signature();
        let (a, _) = random_pair(&sig);
        let (u, v) = (a.abstract_term(&s).unwrap(), a.abstract_term(&t).unwrap());
        let alpha: BTreeMap<Var, u64> = [(Var::new("x"), x), (Var::new("y"), y)].into();
        if u.weakly_exceeds(&v) {
            prop_assert!(a.evaluate(&s, &alpha).unwrap() >= a.evaluate(&t, &alpha).unwrap());
        }
        if u.strictly_exceeds(&v) {
            prop_assert!(a.evaluate(&s, &alpha).unwrap() > a.evaluate(&t, &alpha).unwrap());
        }
    }

    #[test]
    fn interpretations_render_and_parse_back(c in 0u64..4, k in prop::collection::vec(0u64..3, 0..3),
                                             base in 0u64..3, offs in prop::collection::vec(prop::option::of(-2i64..3), 0..3)) {
        let lin = SymbolInterp::linear(c, k.clone());
        prop_assert_eq!(SymbolInterp::parse(&lin.render(), k.len()).unwrap(), lin);
        let mp = SymbolInterp::max_plus(base, offs.clone());
        prop_assert_eq!(SymbolInterp::parse(&mp.render(), offs.len()).unwrap(), mp);
    }

    #[test]
    fn ari_printing_round_trips(rules in prop::collection::vec((oracle_term(), oracle_term()), 0..4)) {
        let sig = fixtures::oracle_signature();
        let rules: Vec<Rule> = rules
            .into_iter()
            .filter_map(|(l, r)| Rule::new(l, r).ok())
            .collect();
        let trs = Trs::new(sig, rules);
        prop_assert_eq!(parse_ari(&print_ari(&trs)).unwrap(), trs);
    }
}

fn random_pair(sig: &Signature) -> (gwpo_core::algebra::Interpretation, gwpo_core::algebra::Interpretation) {
    gwpo_core::oracle::random_algebra_pair(sig, &Status::total(), 11)
}
