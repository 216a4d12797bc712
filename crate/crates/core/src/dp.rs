//! Termination obligations: direct orientation by a reduction order, and the
//! basic dependency-pair criterion with an optional SCC split.

use std::collections::BTreeSet;
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;

use crate::term::{Symbol, Term};
use crate::triples::Cmp;
use crate::trs::{Rule, Trs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObligationKind {
    /// Every rule must decrease strictly.
    Direct,
    /// Rules must decrease weakly and dependency pairs strictly.
    Dp,
}

/// `weak ⊆ ≥` and `strict ⊆ >` for the pair being sought.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obligation {
    pub kind: ObligationKind,
    pub weak: Vec<Rule>,
    pub strict: Vec<Rule>,
}

impl Obligation {
    pub fn direct(trs: &Trs) -> Self {
        Obligation {
            kind: ObligationKind::Direct,
            weak: Vec::new(),
            strict: trs.rules.clone(),
        }
    }

    pub fn dp(trs: &Trs, pairs: Vec<Rule>) -> Self {
        Obligation {
            kind: ObligationKind::Dp,
            weak: trs.rules.clone(),
            strict: pairs,
        }
    }

    /// The obligations proving `trs` terminating with dependency pairs: one
    /// per cyclic SCC when `scc` is set, otherwise a single one with all
    /// pairs. Systems without pairs need no obligation.
    pub fn dp_obligations(trs: &Trs, scc: bool) -> Vec<Obligation> {
        let pairs = trs.dependency_pairs();
        if scc {
            scc_split(trs, &pairs)
                .into_iter()
                .map(|g| Obligation::dp(trs, g))
                .collect()
        } else if pairs.is_empty() {
            Vec::new()
        } else {
            vec![Obligation::dp(trs, pairs)]
        }
    }

    /// Every rule paired with whether it must decrease strictly.
    pub fn items(&self) -> impl Iterator<Item = (&Rule, bool)> {
        self.strict
            .iter()
            .map(|r| (r, true))
            .chain(self.weak.iter().map(|r| (r, false)))
    }

    /// Every function symbol occurring in the obligation.
    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        for (r, _) in self.items() {
            out.extend(r.lhs.symbols());
            out.extend(r.rhs.symbols());
        }
        out
    }
}

impl fmt::Display for Obligation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ObligationKind::Direct => write!(f, "direct ({} rules)", self.strict.len()),
            ObligationKind::Dp => write!(
                f,
                "dependency pairs ({} pairs, {} rules)",
                self.strict.len(),
                self.weak.len()
            ),
        }
    }
}

/// Outcome for one rule of an obligation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleCheck {
    pub rule: String,
    pub strict_required: bool,
    pub oriented: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub results: Vec<RuleCheck>,
    /// Index into `results` of the first rule that is not oriented.
    pub first_failure: Option<usize>,
}

impl Verdict {
    fn from_results(results: Vec<RuleCheck>) -> Self {
        let first_failure = results.iter().position(|r| !r.oriented);
        Verdict {
            holds: first_failure.is_none(),
            results,
            first_failure,
        }
    }
}

/// Every rule must satisfy `gt(lhs, rhs)`.
pub fn check_direct(trs: &Trs, mut gt: impl FnMut(&Term, &Term) -> bool) -> Verdict {
    let results = trs
        .rules
        .iter()
        .map(|r| RuleCheck {
            rule: r.to_string(),
            strict_required: true,
            oriented: gt(&r.lhs, &r.rhs),
        })
        .collect();
    Verdict::from_results(results)
}

/// Rules must be weakly and dependency pairs strictly oriented by `pair`.
pub fn check_dp(trs: &Trs, pair: impl FnMut(&Term, &Term) -> Cmp) -> Verdict {
    check_obligation(&Obligation::dp(trs, trs.dependency_pairs()), pair)
}

pub fn check_obligation(ob: &Obligation, mut pair: impl FnMut(&Term, &Term) -> Cmp) -> Verdict {
    let results = ob
        .items()
        .map(|(r, strict)| {
            let c = pair(&r.lhs, &r.rhs);
            RuleCheck {
                rule: r.to_string(),
                strict_required: strict,
                oriented: if strict { c.strict } else { c.weak },
            }
        })
        .collect();
    Verdict::from_results(results)
}

/// Whether a call `rhs` may reach the pair with left-hand side `lhs`: same
/// root, and no argument position where both sides have distinct
/// constructor roots.
fn may_follow(trs_defined: &BTreeSet<Symbol>, rhs: &Term, lhs: &Term) -> bool {
    if rhs.root() != lhs.root() {
        return false;
    }
    rhs.args().iter().zip(lhs.args()).all(|(u, v)| match (u.root(), v.root()) {
        (Some(f), Some(g)) => f == g || trs_defined.contains(f) || trs_defined.contains(g),
        _ => true,
    })
}

/// Cyclic strongly connected components of the estimated dependency graph,
/// ordered by their first pair; pairs on no cycle are dropped.
pub fn scc_split(trs: &Trs, pairs: &[Rule]) -> Vec<Vec<Rule>> {
    let defined = trs.defined_symbols();
    let mut g = DiGraph::<usize, ()>::new();
    let nodes: Vec<_> = (0..pairs.len()).map(|i| g.add_node(i)).collect();
    for (i, p) in pairs.iter().enumerate() {
        for (j, q) in pairs.iter().enumerate() {
            if may_follow(&defined, &p.rhs, &q.lhs) {
                g.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = tarjan_scc(&g)
        .into_iter()
        .map(|c| {
            let mut idx: Vec<usize> = c.iter().map(|n| g[*n]).collect();
            idx.sort_unstable();
            idx
        })
        .filter(|c| c.len() > 1 || g.contains_edge(nodes[c[0]], nodes[c[0]]))
        .collect();
    groups.sort();
    groups
        .into_iter()
        .map(|c| c.into_iter().map(|i| pairs[i].clone()).collect())
        .collect()
}
