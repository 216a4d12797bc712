//! Brute-force cross-checks over small term universes.
//!
//! Every check enumerates all ordered pairs of a universe exhaustively and
//! reports the first disagreement in enumeration order (row-major over the
//! enumerated terms). Substitutions and contexts used by the law suite are
//! drawn from a declared, seeded budget.

use std::collections::BTreeMap;

use petgraph::algo::{is_cyclic_directed, tarjan_scc};
use petgraph::graph::DiGraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Interpretation, SymbolInterp};
use crate::error::{Error, Result};
use crate::orders::{mgwpo_gt, mgwpo_pair, mspo_gt, mspo_pair, GwpoEngine};
use crate::par;
use crate::status::Status;
use crate::term::{Substitution, Term, Var};
use crate::triples::{lex_combine, Cmp, OrderPair, ReductionTriple};
use crate::trs::Signature;

/// All terms over `sig` and `vars` with at most `max_size` symbol and
/// variable occurrences. Ordered by size; within a size, constants precede
/// variables, and applications follow declaration order, then argument-size
/// splits, then the argument tuples.
pub fn enum_terms(sig: &Signature, vars: &[&str], max_size: usize) -> Vec<Term> {
    let mut by_size: Vec<Vec<Term>> = vec![Vec::new(); max_size + 1];
    if max_size >= 1 {
        by_size[1].extend(sig.constants().map(|c| Term::constant(c.clone())));
        by_size[1].extend(vars.iter().map(|v| Term::var(*v)));
    }
    for size in 2..=max_size {
        let mut out = Vec::new();
        for f in sig.symbols().iter().filter(|f| f.arity() > 0) {
            for split in compositions(size - 1, f.arity()) {
                let mut tuples: Vec<Vec<Term>> = vec![Vec::new()];
                for &part in &split {
                    let mut next = Vec::new();
                    for prefix in &tuples {
                        for t in &by_size[part] {
                            let mut p = prefix.clone();
                            p.push(t.clone());
                            next.push(p);
                        }
                    }
                    tuples = next;
                }
                out.extend(tuples.into_iter().map(|args| Term::app(f.clone(), args)));
            }
        }
        by_size[size] = out;
    }
    by_size.into_iter().flatten().collect()
}

/// Ordered ways to write `n` as a sum of `k` positive parts, lexicographic.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=n.saturating_sub(k - 1) {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A finite term universe.
#[derive(Clone, Debug)]
pub struct Universe {
    pub signature: Signature,
    pub variables: Vec<String>,
    pub max_size: usize,
}

impl Universe {
    pub fn new(signature: Signature, variables: &[&str], max_size: usize) -> Self {
        Universe {
            signature,
            variables: variables.iter().map(|v| v.to_string()).collect(),
            max_size,
        }
    }

    /// `{f/2, g/1, a/0, b/0}`, variables `x, y`, size ≤ 5.
    pub fn standard() -> Self {
        Universe::new(crate::fixtures::oracle_signature(), &["x", "y"], 5)
    }

    pub fn with_size(mut self, max_size: usize) -> Self {
        self.max_size = max_size;
        self
    }

    pub fn terms(&self) -> Vec<Term> {
        let vars: Vec<&str> = self.variables.iter().map(String::as_str).collect();
        enum_terms(&self.signature, &vars, self.max_size)
    }

    pub fn info(&self) -> UniverseInfo {
        UniverseInfo {
            signature: self
                .signature
                .symbols()
                .iter()
                .map(|f| format!("{}/{}", f.name(), f.arity()))
                .collect(),
            variables: self.variables.clone(),
            max_size: self.max_size,
            terms: self.terms().len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniverseInfo {
    pub signature: Vec<String>,
    pub variables: Vec<String>,
    pub max_size: usize,
    pub terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub left: String,
    pub right: String,
    pub detail: String,
}

impl Counterexample {
    fn new(s: &Term, t: &Term, detail: impl Into<String>) -> Self {
        Counterexample {
            left: s.to_string(),
            right: t.to_string(),
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: &'static str,
    pub passed: bool,
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// Machine-readable result of one oracle run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub check: String,
    pub passed: bool,
    pub universe: UniverseInfo,
    pub pairs_checked: u64,
    /// Replay information: every parameter of the compared orders.
    pub parameters: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status_total: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inclusion_violation: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_witness: Option<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub laws: Vec<LawResult>,
}

impl OracleReport {
    fn new(check: &str, universe: &Universe) -> Self {
        OracleReport {
            check: check.to_string(),
            passed: true,
            universe: universe.info(),
            pairs_checked: 0,
            parameters: BTreeMap::new(),
            counterexample: None,
            status_total: None,
            inclusion_violation: None,
            equality_witness: None,
            laws: Vec::new(),
        }
    }

    pub fn with_parameters(mut self, params: BTreeMap<String, String>) -> Self {
        self.parameters = params;
        self
    }
}

/// Parameter lines describing an interpretation, keyed `role:symbol`.
pub fn describe_interpretation(role: &str, interp: &Interpretation) -> BTreeMap<String, String> {
    interp
        .entries()
        .map(|(f, i)| {
            (
                format!("{role}:{}", SymbolInterp::render_head(f, role)),
                i.render(),
            )
        })
        .collect()
}

/// First application `t` of the universe and selected position `i` with
/// `rel(t, tᵢ)` failing.
fn subterm_violation(
    terms: &[Term],
    status: &Status,
    rel: impl Fn(&Term, &Term) -> bool,
) -> Option<(Term, Term)> {
    for t in terms.iter().filter(|t| !t.is_var()) {
        for ti in status.project(t) {
            if !rel(t, ti) {
                return Some((t.clone(), ti.clone()));
            }
        }
    }
    None
}

fn precondition(what: &str, hit: Option<(Term, Term)>) -> Result<()> {
    match hit {
        Some((s, t)) => Err(Error::Precondition(format!("{what} fails: {s} vs {t}"))),
        None => Ok(()),
    }
}

/// Runs `row(i)` for every universe row and returns the least per-row hit.
fn first_row_hit<R: Send>(
    n: usize,
    jobs: usize,
    row: impl Fn(usize) -> Option<R> + Sync,
) -> Option<R> {
    par::find_first(n as u64, jobs, |i| row(i as usize)).map(|(_, r)| r)
}

/// MGWPO induced by A and B agrees with the MSPO induced by
/// `(≥_A ∩ ≥_B, lex(A, B))` on every ordered pair of the universe.
///
/// Precondition: `⊒_A` has the subterm property, checked on the universe.
pub fn check_mgwpo_equals_mspo(
    ta: &dyn ReductionTriple,
    tb: &dyn ReductionTriple,
    universe: &Universe,
    jobs: usize,
) -> Result<OracleReport> {
    let terms = universe.terms();
    precondition(
        "subterm property of the weak A relation",
        subterm_violation(&terms, &Status::total(), |s, t| ta.weak(s, t)),
    )?;
    let combined = lex_combine(ta, tb);
    let hit = first_row_hit(terms.len(), jobs, |i| {
        let s = &terms[i];
        terms.iter().find_map(|t| {
            let g = mgwpo_gt(s, t, ta, tb);
            let m = mspo_gt(s, t, &combined);
            (g != m).then(|| Counterexample::new(s, t, format!("mgwpo={g} mspo={m}")))
        })
    });
    let mut r = OracleReport::new("mgwpo-equals-mspo", universe);
    r.pairs_checked = (terms.len() * terms.len()) as u64;
    r.passed = hit.is_none();
    r.counterexample = hit;
    Ok(r)
}

/// The SPO pair induced by `(≥_A ∩ ≥_B, lex(A, B))` and status π is
/// included in the GWPO pair induced by A, B and π, component-wise; when π
/// is total the two coincide.
///
/// Precondition: `⊒_A` is simple with respect to π, checked on the universe.
pub fn check_pair_inclusion(
    ta: &dyn ReductionTriple,
    tb: &dyn ReductionTriple,
    status: &Status,
    universe: &Universe,
    jobs: usize,
) -> Result<OracleReport> {
    let terms = universe.terms();
    precondition(
        "simplicity of the weak A relation for the status",
        subterm_violation(&terms, status, |s, t| ta.weak(s, t)),
    )?;
    let total = universe
        .signature
        .symbols()
        .iter()
        .all(|f| status.positions(f).len() == f.arity());
    let combined = lex_combine(ta, tb);
    let rows = par::map(terms.len() as u64, jobs, |i| {
        let s = &terms[i as usize];
        let mut incl = None;
        let mut diff = None;
        for t in &terms {
            let g = mgwpo_pair(s, t, status, ta, tb);
            let m = mspo_pair(s, t, status, &combined);
            if incl.is_none() && ((m.weak && !g.weak) || (m.strict && !g.strict)) {
                incl = Some(Counterexample::new(s, t, pair_detail(g, m)));
            }
            if diff.is_none() && g != m {
                diff = Some(Counterexample::new(s, t, pair_detail(g, m)));
            }
            if incl.is_some() && diff.is_some() {
                break;
            }
        }
        (incl, diff)
    });
    let mut r = OracleReport::new("pair-inclusion", universe);
    r.pairs_checked = (terms.len() * terms.len()) as u64;
    r.status_total = Some(total);
    r.inclusion_violation = rows.iter().find_map(|(i, _)| i.clone());
    r.equality_witness = rows.into_iter().find_map(|(_, d)| d);
    r.passed = r.inclusion_violation.is_none() && (!total || r.equality_witness.is_none());
    r.counterexample = r.inclusion_violation.clone().or_else(|| {
        if total {
            r.equality_witness.clone()
        } else {
            None
        }
    });
    Ok(r)
}

fn pair_detail(g: Cmp, m: Cmp) -> String {
    format!(
        "gwpo weak={} strict={}; spo weak={} strict={}",
        g.weak, g.strict, m.weak, m.strict
    )
}

/// The flat comparator agrees with the recursive GWPO on every ordered pair.
///
/// Precondition: both `⊐_A` and `⊒_A` have the subterm property, checked on
/// the universe.
pub fn check_fast_gwpo(
    pa: &dyn OrderPair,
    pb: &dyn OrderPair,
    universe: &Universe,
    jobs: usize,
) -> Result<OracleReport> {
    let terms = universe.terms();
    precondition(
        "subterm property of the strict A relation",
        subterm_violation(&terms, &Status::total(), |s, t| pa.strict(s, t)),
    )?;
    precondition(
        "subterm property of the weak A relation",
        subterm_violation(&terms, &Status::total(), |s, t| pa.weak(s, t)),
    )?;
    let hit = first_row_hit(terms.len(), jobs, |i| {
        let s = &terms[i];
        let mut full = GwpoEngine::new(pa, pb);
        let mut fast = GwpoEngine::fast(pa, pb);
        terms.iter().find_map(|t| {
            let g = full.gt(s, t);
            let f = fast.gt(s, t);
            (g != f).then(|| Counterexample::new(s, t, format!("recursive={g} fast={f}")))
        })
    });
    let mut r = OracleReport::new("fast-gwpo", universe);
    r.pairs_checked = (terms.len() * terms.len()) as u64;
    r.passed = hit.is_none();
    r.counterexample = hit;
    Ok(r)
}

/// What a relation under test promises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    /// A reduction order: the strict component is closed under contexts.
    Order,
    /// A reduction pair: the weak component is a rewrite preorder, the
    /// strict component is stable and compatible with it.
    Pair,
}

/// Budget for the sampled parts of the law suite.
#[derive(Clone, Copy, Debug)]
pub struct LawBudget {
    /// Size of the seeded substitution pool.
    pub substitutions: usize,
    /// Substitutions applied to each related pair, cycling through the pool.
    pub per_pair: usize,
    pub seed: u64,
}

impl Default for LawBudget {
    fn default() -> Self {
        LawBudget {
            substitutions: 256,
            per_pair: 2,
            seed: 0x5eed,
        }
    }
}

struct BitMatrix {
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl BitMatrix {
    fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    fn ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.words * 64;
        (0..n).filter(move |&j| j < self.len() && self.get(i, j))
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    fn subset(&self, i: usize, j: usize) -> Option<usize> {
        // First k with row j having k but row i not.
        for w in 0..self.words {
            let extra = self.rows[j][w] & !self.rows[i][w];
            if extra != 0 {
                return Some(w * 64 + extra.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// Depth-one contexts `f(.., □, ..)` whose other arguments are size-one
/// terms of the universe.
fn contexts(universe: &Universe) -> Vec<(crate::term::Symbol, usize, Vec<Term>)> {
    let small: Vec<Term> = universe.terms().into_iter().filter(|t| t.size() == 1).collect();
    let mut out = Vec::new();
    for f in universe.signature.symbols().iter().filter(|f| f.arity() > 0) {
        for hole in 0..f.arity() {
            let mut fillers: Vec<Vec<Term>> = vec![Vec::new()];
            for _ in 1..f.arity() {
                fillers = fillers
                    .into_iter()
                    .flat_map(|p| {
                        small.iter().map(move |u| {
                            let mut q = p.clone();
                            q.push(u.clone());
                            q
                        })
                    })
                    .collect();
            }
            for others in fillers {
                out.push((f.clone(), hole, others));
            }
        }
    }
    out
}

fn plug(ctx: &(crate::term::Symbol, usize, Vec<Term>), t: &Term) -> Term {
    let (f, hole, others) = ctx;
    let mut args = others.clone();
    args.insert(*hole, t.clone());
    Term::app(f.clone(), args)
}

fn substitution_pool(universe: &Universe, budget: &LawBudget) -> Vec<Substitution> {
    let pool: Vec<Term> = universe.terms().into_iter().filter(|t| t.size() <= 3).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    (0..budget.substitutions)
        .map(|_| {
            universe
                .variables
                .iter()
                .map(|v| (Var::new(v.as_str()), pool.choose(&mut rng).expect("non-empty").clone()))
                .collect()
        })
        .collect()
}

/// Irreflexivity, transitivity, closure under substitutions and contexts,
/// and acyclicity of the strict relation on the universe; for pairs also
/// reflexivity, transitivity and closure of the weak relation, and
/// compatibility (no strict step inside a cycle of the combined relation).
///
/// The weak component of a reduction pair built from a path order is
/// intersected with a rewrite preorder, so it need not contain the strict
/// component; [`check_strict_within_weak`] tests that inclusion on the
/// underlying order pair instead.
pub fn check_reduction_order_laws(
    rel: &(dyn Fn(&Term, &Term) -> Cmp + Sync),
    kind: RelationKind,
    universe: &Universe,
    budget: &LawBudget,
    jobs: usize,
) -> OracleReport {
    let terms = universe.terms();
    let n = terms.len();
    let words = n.div_ceil(64);
    let rows = par::map(n as u64, jobs, |i| {
        let s = &terms[i as usize];
        let mut strict = vec![0u64; words];
        let mut weak = vec![0u64; words];
        for (j, t) in terms.iter().enumerate() {
            let c = rel(s, t);
            if c.strict {
                strict[j / 64] |= 1 << (j % 64);
            }
            if c.weak {
                weak[j / 64] |= 1 << (j % 64);
            }
        }
        (strict, weak)
    });
    let (srows, wrows): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    let sm = BitMatrix { words, rows: srows };
    let wm = BitMatrix { words, rows: wrows };
    let pair = kind == RelationKind::Pair;

    let mut laws = vec![
        law_irreflexive(&terms, &sm),
        law_transitive("strict transitivity", &terms, &sm),
        law_acyclic(&terms, &sm),
    ];
    let subs = substitution_pool(universe, budget);
    let ctxs = contexts(universe);
    laws.push(law_stable("strict substitution closure", &terms, &sm, &subs, budget, rel, true, jobs));
    if pair {
        laws.push(law_reflexive(&terms, &wm));
        laws.push(law_transitive("weak transitivity", &terms, &wm));
        laws.push(law_compatible(&terms, &sm, &wm));
        laws.push(law_stable("weak substitution closure", &terms, &wm, &subs, budget, rel, false, jobs));
        laws.push(law_context("weak context closure", &terms, &wm, &ctxs, rel, false, jobs));
    } else {
        laws.push(law_context("strict context closure", &terms, &sm, &ctxs, rel, true, jobs));
    }
    let mut r = OracleReport::new("laws", universe);
    r.pairs_checked = (n * n) as u64;
    r.passed = laws.iter().all(|l| l.passed);
    r.counterexample = laws.iter().find_map(|l| {
        l.counterexample.clone().map(|mut c| {
            c.detail = format!("{}: {}", l.law, c.detail);
            c
        })
    });
    r.laws = laws;
    r
}

fn law(law: &'static str, checked: u64, ce: Option<Counterexample>) -> LawResult {
    LawResult {
        law,
        passed: ce.is_none(),
        checked,
        counterexample: ce,
    }
}

fn law_irreflexive(terms: &[Term], sm: &BitMatrix) -> LawResult {
    let ce = (0..terms.len())
        .find(|&i| sm.get(i, i))
        .map(|i| Counterexample::new(&terms[i], &terms[i], "strictly above itself"));
    law("irreflexivity", terms.len() as u64, ce)
}

fn law_reflexive(terms: &[Term], wm: &BitMatrix) -> LawResult {
    let ce = (0..terms.len())
        .find(|&i| !wm.get(i, i))
        .map(|i| Counterexample::new(&terms[i], &terms[i], "not weakly above itself"));
    law("weak reflexivity", terms.len() as u64, ce)
}

fn law_transitive(name: &'static str, terms: &[Term], m: &BitMatrix) -> LawResult {
    let mut checked = 0;
    for i in 0..m.len() {
        for j in m.ones(i) {
            checked += 1;
            if let Some(k) = m.subset(i, j) {
                let detail = format!("via {}, missing {} -> {}", terms[j], terms[i], terms[k]);
                return law(name, checked, Some(Counterexample::new(&terms[i], &terms[k], detail)));
            }
        }
    }
    law(name, checked, None)
}

/// `strict ⊆ weak` for an order pair on every ordered pair of the universe.
pub fn check_strict_within_weak(
    pair: &(dyn Fn(&Term, &Term) -> Cmp + Sync),
    universe: &Universe,
    jobs: usize,
) -> LawResult {
    let terms = universe.terms();
    let hit = first_row_hit(terms.len(), jobs, |i| {
        let s = &terms[i];
        terms.iter().find_map(|t| {
            let c = pair(s, t);
            (c.strict && !c.weak).then(|| Counterexample::new(s, t, "strict but not weak"))
        })
    });
    law("strict within weak", (terms.len() * terms.len()) as u64, hit)
}

fn graph(n: usize, ms: &[&BitMatrix]) -> DiGraph<(), ()> {
    let mut g = DiGraph::<(), ()>::with_capacity(n, 0);
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for i in 0..n {
        for j in 0..n {
            if ms.iter().any(|m| m.get(i, j)) {
                g.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    g
}

fn law_acyclic(terms: &[Term], sm: &BitMatrix) -> LawResult {
    let g = graph(terms.len(), &[sm]);
    let ce = is_cyclic_directed(&g).then(|| {
        let comp = tarjan_scc(&g)
            .into_iter()
            .find(|c| c.len() > 1 || sm.get(c[0].index(), c[0].index()))
            .expect("a cycle lies in some component");
        let (i, j) = (comp[0].index(), comp[comp.len() - 1].index());
        Counterexample::new(&terms[i], &terms[j], "both lie on a strict cycle")
    });
    law("strict acyclicity", terms.len() as u64, ce)
}

fn law_compatible(terms: &[Term], sm: &BitMatrix, wm: &BitMatrix) -> LawResult {
    let g = graph(terms.len(), &[sm, wm]);
    let mut comp_of = vec![0usize; terms.len()];
    for (c, comp) in tarjan_scc(&g).iter().enumerate() {
        for v in comp {
            comp_of[v.index()] = c;
        }
    }
    for i in 0..terms.len() {
        for j in sm.ones(i) {
            if comp_of[i] == comp_of[j] {
                return law(
                    "compatibility",
                    0,
                    Some(Counterexample::new(
                        &terms[i],
                        &terms[j],
                        "strict step returns through weak steps",
                    )),
                );
            }
        }
    }
    law("compatibility", (terms.len() * terms.len()) as u64, None)
}

#[allow(clippy::too_many_arguments)]
fn law_stable(
    name: &'static str,
    terms: &[Term],
    m: &BitMatrix,
    subs: &[Substitution],
    budget: &LawBudget,
    rel: &(dyn Fn(&Term, &Term) -> Cmp + Sync),
    strict: bool,
    jobs: usize,
) -> LawResult {
    let related: Vec<(usize, usize)> = (0..terms.len())
        .flat_map(|i| m.ones(i).map(move |j| (i, j)))
        .collect();
    let hit = par::find_first(related.len() as u64, jobs, |p| {
        let (i, j) = related[p as usize];
        (0..budget.per_pair).find_map(|k| {
            let sigma = &subs[(p as usize * budget.per_pair + k) % subs.len()];
            let (s, t) = (terms[i].apply(sigma), terms[j].apply(sigma));
            let c = rel(&s, &t);
            let ok = if strict { c.strict } else { c.weak };
            (!ok).then(|| Counterexample::new(&s, &t, format!("instance under {sigma}")))
        })
    });
    let checked = (related.len() * budget.per_pair) as u64;
    law(name, checked, hit.map(|(_, c)| c))
}

fn law_context(
    name: &'static str,
    terms: &[Term],
    m: &BitMatrix,
    ctxs: &[(crate::term::Symbol, usize, Vec<Term>)],
    rel: &(dyn Fn(&Term, &Term) -> Cmp + Sync),
    strict: bool,
    jobs: usize,
) -> LawResult {
    let related: Vec<(usize, usize)> = (0..terms.len())
        .flat_map(|i| m.ones(i).map(move |j| (i, j)))
        .collect();
    let hit = par::find_first(related.len() as u64, jobs, |p| {
        let (i, j) = related[p as usize];
        ctxs.iter().find_map(|ctx| {
            let (s, t) = (plug(ctx, &terms[i]), plug(ctx, &terms[j]));
            let c = rel(&s, &t);
            let ok = if strict { c.strict } else { c.weak };
            (!ok).then(|| {
                Counterexample::new(&s, &t, format!("context around {} and {}", terms[i], terms[j]))
            })
        })
    });
    law(name, (related.len() * ctxs.len()) as u64, hit.map(|(_, c)| c))
}

/// A seeded random pair of interpretations over `sig`: A is linear with
/// coefficients in `{0,1}` and constants in `{0..2}`, redrawn until it is
/// simple for `status`; B is max/plus with `c₀ ∈ {0..2}` and offsets in
/// `{-1, 0, 1}` or absent.
pub fn random_algebra_pair(sig: &Signature, status: &Status, seed: u64) -> (Interpretation, Interpretation) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = loop {
        let mut a = Interpretation::new();
        for f in sig.symbols() {
            let coeffs = (0..f.arity()).map(|_| rng.gen_range(0..=1)).collect();
            a = a.with(f.clone(), SymbolInterp::linear(rng.gen_range(0..=2), coeffs));
        }
        if a.check_simple(status) {
            break a;
        }
    };
    let mut b = Interpretation::new();
    for f in sig.symbols() {
        let offsets = (0..f.arity())
            .map(|_| rng.gen_bool(0.75).then(|| rng.gen_range(-1..=1)))
            .collect();
        b = b.with(f.clone(), SymbolInterp::max_plus(rng.gen_range(0..=2), offsets));
    }
    (a, b)
}
