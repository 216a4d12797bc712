//! Bounded, deterministic certificate search and independent re-verification.
//!
//! A candidate is a choice of interpretations for the roles A and B, a
//! status and a precedence, as required by the template. Candidates are
//! numbered in a fixed mixed-radix order, most significant first: B, A,
//! status, precedence. Within a role, symbols follow `(arity, name)` order
//! and each symbol's options are ordered by their coefficient vectors. The
//! result is the least-numbered candidate that discharges the obligation, no
//! matter how candidates are scheduled across threads.
//!
//! Role choices for the plain symbols of the rewrite rules are pruned up
//! front: the weak preorder of every role must contain the rules, so
//! combinations violating that are never numbered.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::{Interpretation, SymbolInterp};
use crate::dp::{Obligation, ObligationKind};
use crate::error::{Error, Result};
use crate::orders::{ComparisonStats, GwpoEngine, GwpoPairEngine, SpoPairEngine, Trace};
use crate::par;
use crate::status::Status;
use crate::term::{Symbol, Term};
use crate::triples::{
    lex_combine, AlgebraTriple, Cmp, MarkedTriple, OrderPair, Precedence, PrecedenceTriple,
    ReductionTriple,
};
use crate::trs::Rule;

/// Order families the search can instantiate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Template {
    /// Reduction pair: linear A simple for the status, precedence B.
    Wpo,
    /// Reduction pair: linear A simple for the status, marked max/plus B.
    Gwpo,
    /// Reduction pair: SPO over the lexicographic combination of a marked
    /// linear A and an optional marked max/plus B.
    Spo,
    /// Reduction order: simple linear A with unit coefficients, max/plus B.
    MgwpoDirect,
    /// Reduction order: strictly simple linear A with unit coefficients,
    /// precedence B, compared by the flat comparator.
    KboLike,
}

impl Template {
    pub const ALL: [Template; 5] = [
        Template::Wpo,
        Template::Gwpo,
        Template::Spo,
        Template::MgwpoDirect,
        Template::KboLike,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Template::Wpo => "wpo",
            Template::Gwpo => "gwpo",
            Template::Spo => "spo",
            Template::MgwpoDirect => "mgwpo-direct",
            Template::KboLike => "kbo-like",
        }
    }

    pub fn is_direct(self) -> bool {
        matches!(self, Template::MgwpoDirect | Template::KboLike)
    }

    fn b_is_precedence(self) -> bool {
        matches!(self, Template::Wpo | Template::KboLike)
    }

    fn has_status(self) -> bool {
        !self.is_direct()
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Template {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Template::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Certificate(format!("unknown template {s}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatusSpace {
    Total,
    All,
}

/// Parameter domains of the search.
#[derive(Clone, Debug)]
pub struct SearchSpace {
    pub template: Template,
    /// Constants `a₀` and bases `c₀` range over `0..=max_const`.
    pub max_const: u64,
    /// Linear coefficients `aᵢ`.
    pub coeffs: Vec<u64>,
    /// Max/plus offsets `cᵢ`; an argument may also be absent.
    pub offsets: Vec<i64>,
    pub statuses: StatusSpace,
}

impl SearchSpace {
    pub fn new(template: Template) -> Self {
        SearchSpace {
            template,
            max_const: 2,
            coeffs: vec![0, 1],
            offsets: vec![-1, 0, 1],
            statuses: StatusSpace::All,
        }
    }
}

/// Parameters of one order instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub template: Template,
    pub a: Option<Interpretation>,
    pub b: Option<Interpretation>,
    pub precedence: Option<Precedence>,
    pub status: Status,
}

impl Certificate {
    pub fn new(template: Template) -> Self {
        Certificate {
            template,
            a: None,
            b: None,
            precedence: None,
            status: Status::total(),
        }
    }
}

/// Symbols each parameter must cover for an obligation.
#[derive(Clone, Debug, Default)]
pub struct Requirements {
    /// A symbols whose choices are pruned by the rules.
    pub a_rules: Vec<Symbol>,
    pub a_free: Vec<Symbol>,
    pub b_rules: Vec<Symbol>,
    pub b_free: Vec<Symbol>,
    pub precedence: Vec<Symbol>,
    pub status: Vec<Symbol>,
}

fn sorted(set: BTreeSet<Symbol>) -> Vec<Symbol> {
    let mut v: Vec<Symbol> = set.into_iter().collect();
    v.sort_by(|x, y| x.canonical_key().cmp(&y.canonical_key()));
    v
}

impl Requirements {
    pub fn of(template: Template, ob: &Obligation) -> Self {
        let all = ob.symbols();
        let plain: BTreeSet<Symbol> = all.iter().filter(|f| f.is_plain()).cloned().collect();
        let tuple: BTreeSet<Symbol> = all.iter().filter(|f| !f.is_plain()).cloned().collect();
        let bangs: BTreeSet<Symbol> = all.iter().map(|f| f.to_bang()).collect();
        let mut r = Requirements::default();
        match template {
            Template::MgwpoDirect => {
                r.a_rules = sorted(all.clone());
                r.b_rules = sorted(all.clone());
            }
            Template::KboLike => {
                r.a_rules = sorted(all.clone());
                r.precedence = sorted(all.clone());
            }
            Template::Wpo => {
                r.a_rules = sorted(plain);
                r.a_free = sorted(tuple);
                r.precedence = sorted(all.clone());
            }
            Template::Gwpo => {
                r.a_rules = sorted(plain.clone());
                r.a_free = sorted(tuple);
                r.b_rules = sorted(plain);
                r.b_free = sorted(bangs);
            }
            Template::Spo => {
                r.a_rules = sorted(plain.clone());
                r.a_free = sorted(bangs.clone());
                r.b_rules = sorted(plain);
                r.b_free = sorted(bangs);
            }
        }
        if template.has_status() {
            r.status = sorted(all.into_iter().filter(|f| f.arity() > 0).collect());
        }
        r
    }
}

/// An instantiated order ready to orient rules.
pub struct Instance {
    template: Template,
    a: Box<dyn ReductionTriple>,
    b: Option<Box<dyn ReductionTriple>>,
    status: Status,
}

impl Instance {
    /// Builds the triples of a certificate. Fails on missing components.
    pub fn new(cert: &Certificate) -> Result<Self> {
        let t = cert.template;
        let a_interp = cert
            .a
            .clone()
            .ok_or_else(|| Error::Certificate("missing A interpretation".into()))?;
        let a: Box<dyn ReductionTriple> = match t {
            Template::Spo => Box::new(MarkedTriple::new(a_interp)?),
            _ => Box::new(AlgebraTriple::new(a_interp)?),
        };
        let b: Option<Box<dyn ReductionTriple>> = if t.b_is_precedence() {
            let p = cert
                .precedence
                .clone()
                .ok_or_else(|| Error::Certificate("missing precedence".into()))?;
            Some(Box::new(PrecedenceTriple::new(p)))
        } else {
            match (&cert.b, t) {
                (None, Template::Spo) => None,
                (None, _) => return Err(Error::Certificate("missing B interpretation".into())),
                (Some(i), Template::MgwpoDirect) => Some(Box::new(AlgebraTriple::new(i.clone())?)),
                (Some(i), _) => Some(Box::new(MarkedTriple::new(i.clone())?)),
            }
        };
        Ok(Instance {
            template: t,
            a,
            b,
            status: cert.status.clone(),
        })
    }

    fn b(&self) -> &dyn ReductionTriple {
        self.b.as_deref().expect("B is present for this template")
    }

    /// Orients one rule; returns whether it holds and, if requested and it
    /// holds, the case chain.
    pub fn orient(&self, rule: &Rule, strict: bool, traced: bool) -> (bool, Option<Trace>) {
        let (l, r) = (&rule.lhs, &rule.rhs);
        match self.template {
            Template::MgwpoDirect | Template::KboLike => {
                let (a, b) = (&*self.a, self.b());
                if !(a.preorder(l, r) && b.preorder(l, r)) {
                    return (false, None);
                }
                let (pa, pb): (&dyn OrderPair, &dyn OrderPair) = (a, b);
                let mut e = if self.template == Template::KboLike {
                    GwpoEngine::fast(pa, pb)
                } else {
                    GwpoEngine::new(pa, pb)
                };
                if traced {
                    let tr = e.gt_traced(l, r);
                    (tr.is_some(), tr)
                } else {
                    (e.gt(l, r), None)
                }
            }
            Template::Wpo | Template::Gwpo => {
                let (a, b) = (&*self.a, self.b());
                if !strict && !(a.preorder(l, r) && b.preorder(l, r)) {
                    return (false, None);
                }
                let mut e = GwpoPairEngine::new(&self.status, a, b);
                pair_result(traced, strict, l, r, |st, l, r| e.traced(st, l, r), |l, r| {
                    let mut e = GwpoPairEngine::new(&self.status, a, b);
                    e.compare(l, r)
                })
            }
            Template::Spo => match &self.b {
                Some(b) => {
                    let t = lex_combine(&*self.a, &**b);
                    self.orient_spo(&t, l, r, strict, traced)
                }
                None => self.orient_spo(&*self.a, l, r, strict, traced),
            },
        }
    }

    /// Both verdicts for `s` against `t` with the base comparisons issued.
    /// For the reduction-order templates the weak verdict is the reflexive
    /// closure of the strict one.
    pub fn compare(&self, s: &Term, t: &Term) -> (Cmp, ComparisonStats) {
        match self.template {
            Template::MgwpoDirect | Template::KboLike => {
                let (a, b) = (&*self.a, self.b());
                let (pa, pb): (&dyn OrderPair, &dyn OrderPair) = (a, b);
                let mut e = if self.template == Template::KboLike {
                    GwpoEngine::fast(pa, pb)
                } else {
                    GwpoEngine::new(pa, pb)
                };
                let strict = a.preorder(s, t) && b.preorder(s, t) && e.gt(s, t);
                (Cmp { weak: strict || s == t, strict }, e.stats)
            }
            Template::Wpo | Template::Gwpo => {
                let (a, b) = (&*self.a, self.b());
                let mut e = GwpoPairEngine::new(&self.status, a, b);
                let mut c = e.compare(s, t);
                c.weak &= a.preorder(s, t) && b.preorder(s, t);
                (c, e.stats)
            }
            Template::Spo => {
                let run = |tr: &dyn ReductionTriple| {
                    let mut e = SpoPairEngine::new(&self.status, tr);
                    let mut c = e.compare(s, t);
                    c.weak &= tr.preorder(s, t);
                    (c, e.stats)
                };
                match &self.b {
                    Some(b) => run(&lex_combine(&*self.a, &**b)),
                    None => run(&*self.a),
                }
            }
        }
    }

    fn orient_spo(
        &self,
        t: &dyn ReductionTriple,
        l: &Term,
        r: &Term,
        strict: bool,
        traced: bool,
    ) -> (bool, Option<Trace>) {
        if !strict && !t.preorder(l, r) {
            return (false, None);
        }
        let mut e = SpoPairEngine::new(&self.status, t);
        pair_result(traced, strict, l, r, |st, l, r| e.traced(st, l, r), |l, r| {
            let mut e = SpoPairEngine::new(&self.status, t);
            e.compare(l, r)
        })
    }
}

fn pair_result(
    traced: bool,
    strict: bool,
    l: &Term,
    r: &Term,
    mut trace: impl FnMut(bool, &Term, &Term) -> Option<Trace>,
    compare: impl FnOnce(&Term, &Term) -> Cmp,
) -> (bool, Option<Trace>) {
    if traced {
        let tr = trace(strict, l, r);
        (tr.is_some(), tr)
    } else {
        let c = compare(l, r);
        (if strict { c.strict } else { c.weak }, None)
    }
}

/// Outcome for one rule under a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orientation {
    pub rule: String,
    pub strict_required: bool,
    pub oriented: bool,
    pub trace: Option<String>,
}

/// Result of re-verifying a certificate against an obligation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    /// Hypothesis checks by name.
    pub hypotheses: Vec<(String, bool)>,
    pub orientations: Vec<Orientation>,
    /// The first failed component, if any.
    pub failure: Option<String>,
}

/// Rebuilds the order from the certificate, re-checks the hypotheses its
/// template relies on and every orientation.
///
/// Malformed certificates (missing components, uncovered symbols, a
/// template that does not fit the obligation) are errors.
pub fn verify_certificate(ob: &Obligation, cert: &Certificate) -> Result<VerifyReport> {
    let t = cert.template;
    if t.is_direct() != (ob.kind == ObligationKind::Direct) {
        return Err(Error::Certificate(format!(
            "template {t} does not fit a {} obligation",
            if ob.kind == ObligationKind::Direct { "direct" } else { "dependency-pair" }
        )));
    }
    let req = Requirements::of(t, ob);
    let inst = Instance::new(cert)?;
    let a = cert.a.as_ref().expect("checked by Instance::new");
    a.require(req.a_rules.iter().chain(&req.a_free).cloned())
        .map_err(|e| Error::Certificate(format!("A: {e}")))?;
    if let Some(b) = &cert.b {
        b.require(req.b_rules.iter().chain(&req.b_free).cloned())
            .map_err(|e| Error::Certificate(format!("B: {e}")))?;
    }
    if t.b_is_precedence() {
        let p = cert.precedence.as_ref().expect("checked by Instance::new");
        p.require(req.precedence.iter().cloned())?;
    }

    let mut hypotheses = vec![("A weakly monotone".to_string(), a.check_weak_monotone())];
    if let Some(b) = &cert.b {
        hypotheses.push(("B weakly monotone".to_string(), b.check_weak_monotone()));
    }
    match t {
        Template::MgwpoDirect => {
            hypotheses.push(("A simple".to_string(), a.check_simple(&Status::total())));
        }
        Template::KboLike => {
            hypotheses.push(("A simple".to_string(), a.check_simple(&Status::total())));
            hypotheses.push(("A strictly simple".to_string(), a.check_strictly_simple()));
        }
        Template::Wpo | Template::Gwpo => {
            hypotheses.push(("A simple for the status".to_string(), a.check_simple(&cert.status)));
        }
        Template::Spo => {}
    }
    let orientations: Vec<Orientation> = ob
        .items()
        .map(|(rule, strict)| {
            let (ok, trace) = inst.orient(rule, strict, true);
            Orientation {
                rule: rule.to_string(),
                strict_required: strict,
                oriented: ok,
                trace: trace.map(|t| t.to_string()),
            }
        })
        .collect();
    let failure = hypotheses
        .iter()
        .find(|(_, ok)| !ok)
        .map(|(name, _)| format!("hypothesis: {name}"))
        .or_else(|| {
            orientations.iter().find(|o| !o.oriented).map(|o| {
                format!(
                    "{} not {}",
                    o.rule,
                    if o.strict_required { "strictly oriented" } else { "weakly oriented" }
                )
            })
        });
    Ok(VerifyReport {
        passed: failure.is_none(),
        hypotheses,
        orientations,
        failure,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found {
        certificate: Certificate,
        index: u64,
        space: u64,
    },
    Exhausted {
        space: u64,
    },
    Timeout {
        budget: Option<Duration>,
    },
}

/// Per-symbol options of one role, with the rule-pruned combinations of the
/// constrained symbols.
struct RoleSpace {
    constrained: Vec<Symbol>,
    valid: Vec<Vec<u32>>,
    opts: Vec<Vec<SymbolInterp>>,
    free: Vec<Symbol>,
    free_opts: Vec<Vec<SymbolInterp>>,
    free_total: u64,
}

impl RoleSpace {
    fn len(&self) -> u64 {
        (self.valid.len() as u64).saturating_mul(self.free_total)
    }

    fn decode(&self, i: u64) -> Interpretation {
        let (hi, mut lo) = (i / self.free_total, i % self.free_total);
        let mut out = Interpretation::new();
        for (k, f) in self.constrained.iter().enumerate() {
            let choice = self.valid[hi as usize][k] as usize;
            out = out.with(f.clone(), self.opts[k][choice].clone());
        }
        let mut digits = vec![0usize; self.free.len()];
        for k in (0..self.free.len()).rev() {
            let radix = self.free_opts[k].len() as u64;
            digits[k] = (lo % radix) as usize;
            lo /= radix;
        }
        for (k, f) in self.free.iter().enumerate() {
            out = out.with(f.clone(), self.free_opts[k][digits[k]].clone());
        }
        out
    }
}

fn linear_options(arity: usize, consts: std::ops::RangeInclusive<u64>, coeffs: &[u64]) -> Vec<SymbolInterp> {
    let mut vectors: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..arity {
        vectors = vectors
            .into_iter()
            .flat_map(|v| {
                coeffs.iter().map(move |&c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for v in vectors {
        for c in consts.clone() {
            out.push(SymbolInterp::linear(c, v.clone()));
        }
    }
    out
}

fn max_plus_options(arity: usize, max_const: u64, offsets: &[i64]) -> Vec<SymbolInterp> {
    let choices: Vec<Option<i64>> = std::iter::once(None)
        .chain(offsets.iter().map(|&o| Some(o)))
        .collect();
    let mut vectors: Vec<Vec<Option<i64>>> = vec![Vec::new()];
    for _ in 0..arity {
        vectors = vectors
            .into_iter()
            .flat_map(|v| {
                choices.iter().map(move |&c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for v in vectors {
        for base in 0..=max_const {
            out.push(SymbolInterp::max_plus(base, v.clone()));
        }
    }
    out
}

/// Which family a role's options come from.
#[derive(Clone, Copy)]
enum Family {
    /// Linear with the space's coefficients.
    Linear,
    /// Linear with unit coefficients.
    Unit,
    /// Unit coefficients, positive constant for non-constants.
    UnitStrict,
    MaxPlus,
}

fn options(family: Family, f: &Symbol, space: &SearchSpace) -> Vec<SymbolInterp> {
    let n = f.arity();
    match family {
        Family::Linear => linear_options(n, 0..=space.max_const, &space.coeffs),
        Family::Unit => linear_options(n, 0..=space.max_const, &[1]),
        Family::UnitStrict => {
            let lo = if n > 0 { 1 } else { 0 };
            linear_options(n, lo..=space.max_const.max(lo), &[1])
        }
        Family::MaxPlus => max_plus_options(n, space.max_const, &space.offsets),
    }
}

/// Enumerates the combinations of the constrained symbols in canonical
/// order, keeping those under which every rule decreases weakly. A rule is
/// tested as soon as all of its constrained symbols have been chosen.
fn prune(
    constrained: &[Symbol],
    opts: &[Vec<SymbolInterp>],
    rules: &[Rule],
    deadline: Option<Instant>,
) -> Option<Vec<Vec<u32>>> {
    let pos = |f: &Symbol| constrained.iter().position(|g| g == f);
    // Rules grouped by the depth at which they become decidable.
    let mut at_depth: Vec<Vec<&Rule>> = vec![Vec::new(); constrained.len() + 1];
    for r in rules {
        let syms = r.lhs.symbols().into_iter().chain(r.rhs.symbols());
        let depth = syms.filter_map(|f| pos(&f)).map(|k| k + 1).max().unwrap_or(0);
        at_depth[depth].push(r);
    }
    let mut out = Vec::new();
    let mut digits = Vec::with_capacity(constrained.len());
    let mut interp = Interpretation::new();
    let ok = |interp: &Interpretation, rs: &[&Rule]| {
        rs.iter().all(|r| match (interp.abstract_term(&r.lhs), interp.abstract_term(&r.rhs)) {
            (Ok(u), Ok(v)) => u.weakly_exceeds(&v),
            _ => true,
        })
    };
    if !ok(&interp, &at_depth[0]) {
        return Some(out);
    }
    let mut steps = 0u64;
    fn rec(
        k: usize,
        constrained: &[Symbol],
        opts: &[Vec<SymbolInterp>],
        at_depth: &[Vec<&Rule>],
        digits: &mut Vec<u32>,
        interp: &mut Interpretation,
        out: &mut Vec<Vec<u32>>,
        steps: &mut u64,
        deadline: Option<Instant>,
        ok: &dyn Fn(&Interpretation, &[&Rule]) -> bool,
    ) -> bool {
        if k == constrained.len() {
            out.push(digits.clone());
            return true;
        }
        for (c, opt) in opts[k].iter().enumerate() {
            *steps += 1;
            if *steps % 4096 == 0 && deadline.is_some_and(|d| Instant::now() > d) {
                return false;
            }
            interp
                .insert(constrained[k].clone(), opt.clone())
                .expect("option arity matches");
            if ok(interp, &at_depth[k + 1]) {
                digits.push(c as u32);
                let more = rec(k + 1, constrained, opts, at_depth, digits, interp, out, steps, deadline, ok);
                digits.pop();
                if !more {
                    return false;
                }
            }
        }
        true
    }
    let finished = rec(
        0,
        constrained,
        opts,
        &at_depth,
        &mut digits,
        &mut interp,
        &mut out,
        &mut steps,
        deadline,
        &ok,
    );
    finished.then_some(out)
}

fn role_space(
    family: Family,
    rules_syms: &[Symbol],
    free: &[Symbol],
    rules: &[Rule],
    space: &SearchSpace,
    deadline: Option<Instant>,
) -> Option<RoleSpace> {
    let opts: Vec<Vec<SymbolInterp>> = rules_syms.iter().map(|f| options(family, f, space)).collect();
    let valid = prune(rules_syms, &opts, rules, deadline)?;
    let free_opts: Vec<Vec<SymbolInterp>> = free.iter().map(|f| options(family, f, space)).collect();
    let free_total = free_opts
        .iter()
        .fold(1u64, |acc, o| acc.saturating_mul(o.len() as u64));
    Some(RoleSpace {
        constrained: rules_syms.to_vec(),
        valid,
        opts,
        free: free.to_vec(),
        free_opts,
        free_total,
    })
}

/// Dense rank vectors: every total preorder on `n` symbols, as ranks using
/// all values `0..m` for some `m`.
fn dense_rankings(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(k: usize, n: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == n {
            let max = cur.iter().copied().max().map_or(0, |m| m + 1);
            if (0..max).all(|v| cur.contains(&v)) {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..n as u32 {
            cur[k] = v;
            rec(k + 1, n, cur, out);
        }
    }
    rec(0, n, &mut cur, &mut out);
    out
}

/// Status options for `f`: the total list first, then the other
/// strictly increasing sublists, longest first.
fn status_options(f: &Symbol, statuses: StatusSpace) -> Vec<Vec<usize>> {
    let n = f.arity();
    if statuses == StatusSpace::Total {
        return vec![(1..=n).collect()];
    }
    let mut subsets: Vec<Vec<usize>> = (0u32..1 << n)
        .map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    subsets.sort_by(|x: &Vec<usize>, y: &Vec<usize>| y.len().cmp(&x.len()).then(x.cmp(y)));
    subsets
}

/// Largest number of precedence symbols enumerated exhaustively.
pub const MAX_PRECEDENCE_SYMBOLS: usize = 7;

/// Searches the space for the least candidate discharging `ob`.
pub fn find_certificate(
    ob: &Obligation,
    space: &SearchSpace,
    budget: Option<Duration>,
    jobs: usize,
) -> SearchOutcome {
    let deadline = budget.map(|b| Instant::now() + b);
    let t = space.template;
    let req = Requirements::of(t, ob);
    let rules: &[Rule] = if t.is_direct() { &ob.strict } else { &ob.weak };

    let a_family = match t {
        Template::MgwpoDirect => Family::Unit,
        Template::KboLike => Family::UnitStrict,
        _ => Family::Linear,
    };
    let timeout = SearchOutcome::Timeout { budget };
    let Some(a_space) = role_space(a_family, &req.a_rules, &req.a_free, rules, space, deadline) else {
        return timeout;
    };
    let b_space = if t.b_is_precedence() {
        None
    } else {
        match role_space(Family::MaxPlus, &req.b_rules, &req.b_free, rules, space, deadline) {
            Some(b) => Some(b),
            None => return timeout,
        }
    };
    if req.precedence.len() > MAX_PRECEDENCE_SYMBOLS {
        return timeout;
    }
    let rankings = if t.b_is_precedence() {
        dense_rankings(req.precedence.len())
    } else {
        vec![Vec::new()]
    };
    let status_opts: Vec<Vec<Vec<usize>>> = req
        .status
        .iter()
        .map(|f| status_options(f, space.statuses))
        .collect();
    let n_status = status_opts
        .iter()
        .fold(1u64, |acc, o| acc.saturating_mul(o.len() as u64));
    let n_prec = rankings.len() as u64;
    let n_a = a_space.len();
    let n_b = b_space.as_ref().map_or(1, |b| b.len());
    let total = n_b
        .saturating_mul(n_a)
        .saturating_mul(n_status)
        .saturating_mul(n_prec);

    let decode = |mut i: u64| -> Certificate {
        let p = (i % n_prec) as usize;
        i /= n_prec;
        let mut st = i % n_status;
        i /= n_status;
        let ai = i % n_a;
        let bi = i / n_a;
        let mut cert = Certificate::new(t);
        cert.a = Some(a_space.decode(ai));
        cert.b = b_space.as_ref().map(|b| b.decode(bi));
        if t.b_is_precedence() {
            let mut prec = Precedence::new();
            for (f, &r) in req.precedence.iter().zip(&rankings[p]) {
                prec.set(f.clone(), r);
            }
            cert.precedence = Some(prec);
        }
        let mut status = Status::total();
        for k in (0..req.status.len()).rev() {
            let radix = status_opts[k].len() as u64;
            let choice = &status_opts[k][(st % radix) as usize];
            st /= radix;
            status
                .set(req.status[k].clone(), choice.clone())
                .expect("options are valid statuses");
        }
        cert.status = status;
        cert
    };

    let needs_simple = matches!(t, Template::Wpo | Template::Gwpo);
    let hit = par::find_first(total, jobs, |i| {
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Some(None);
        }
        let cert = decode(i);
        if needs_simple && !cert.a.as_ref().expect("A present").check_simple(&cert.status) {
            return None;
        }
        let inst = Instance::new(&cert).ok()?;
        ob.items()
            .all(|(r, strict)| inst.orient(r, strict, false).0)
            .then_some(Some(cert))
    });
    match hit {
        Some((index, Some(certificate))) => SearchOutcome::Found {
            certificate,
            index,
            space: total,
        },
        Some((_, None)) => timeout,
        None => SearchOutcome::Exhausted { space: total },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dense_ranking_counts() {
        let counts: Vec<usize> = (0..5).map(|n| dense_rankings(n).len()).collect();
        assert_eq!(counts, [1, 1, 3, 13, 75]);
    }

    #[test]
    fn status_options_put_total_first() {
        let f = Symbol::new("f", 2);
        assert_eq!(
            status_options(&f, StatusSpace::All),
            vec![vec![1, 2], vec![1], vec![2], vec![]]
        );
        assert_eq!(status_options(&f, StatusSpace::Total), vec![vec![1, 2]]);
    }

    #[test]
    fn option_lists_start_with_zero_b() {
        let opts = max_plus_options(2, 2, &[-1, 0, 1]);
        assert_eq!(opts.len(), 48);
        assert_eq!(opts[0], SymbolInterp::max_plus(0, vec![None, None]));
        assert_eq!(linear_options(1, 0..=2, &[0, 1]).len(), 6);
    }

    #[test]
    fn predecessor_system_paper_parameters_verify() {
        let trs = fixtures::pred_trs();
        let ob = Obligation::direct(&trs);
        let mut cert = Certificate::new(Template::MgwpoDirect);
        cert.a = Some(fixtures::pred_weights());
        cert.b = Some(fixtures::pred_measure());
        let r = verify_certificate(&ob, &cert).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn z08_status_matters() {
        let trs = fixtures::z08_trs();
        let ob = Obligation::dp(&trs, trs.dependency_pairs());
        let mut cert = Certificate::new(Template::Spo);
        cert.a = Some(fixtures::z08_marked_weights());
        cert.status = fixtures::z08_status();
        assert!(verify_certificate(&ob, &cert).unwrap().passed);
        let f = fixtures::z08_signature().get("f").unwrap().to_tuple();
        cert.status.set(f, vec![1]).unwrap();
        assert!(!verify_certificate(&ob, &cert).unwrap().passed);
    }

    #[test]
    fn missing_components_are_errors() {
        let trs = fixtures::pred_trs();
        let ob = Obligation::direct(&trs);
        let cert = Certificate::new(Template::MgwpoDirect);
        assert!(matches!(verify_certificate(&ob, &cert), Err(Error::Certificate(_))));
        let mut cert = Certificate::new(Template::MgwpoDirect);
        cert.a = Some(fixtures::pred_weights());
        cert.b = Some(Interpretation::new());
        assert!(matches!(verify_certificate(&ob, &cert), Err(Error::Certificate(_))));
    }
}
