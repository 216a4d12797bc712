//! Weakly monotone interpretations over the naturals and sound comparison of
//! open terms.
//!
//! Two symbol classes are supported: linear polynomials
//! `a₀ + a₁x₁ + … + aₙxₙ` and max/plus functions
//! `max{c₀, x_i + c_i, …}` where every offset may be negative. Terms with
//! variables are abstracted into a [`SymbolicValue`], a maximum of affine
//! branches, and compared by branch dominance.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::status::Status;
use crate::term::{Symbol, Term, Var};

/// Interpretation of a single symbol.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SymbolInterp {
    /// `constant + Σ coeffs[i] * x_{i+1}`
    Linear { constant: u64, coeffs: Vec<u64> },
    /// `max{base, x_{i+1} + c | offsets[i] = Some(c)}`; a `None` offset
    /// means the argument does not occur.
    MaxPlus { base: u64, offsets: Vec<Option<i64>> },
}

impl SymbolInterp {
    pub fn linear(constant: u64, coeffs: Vec<u64>) -> Self {
        SymbolInterp::Linear { constant, coeffs }
    }

    pub fn max_plus(base: u64, offsets: Vec<Option<i64>>) -> Self {
        SymbolInterp::MaxPlus { base, offsets }
    }

    /// Projection onto argument `i` (1-based) of an `arity`-ary symbol.
    pub fn projection(arity: usize, i: usize) -> Self {
        let mut coeffs = vec![0; arity];
        coeffs[i - 1] = 1;
        SymbolInterp::Linear { constant: 0, coeffs }
    }

    pub fn arity(&self) -> usize {
        match self {
            SymbolInterp::Linear { coeffs, .. } => coeffs.len(),
            SymbolInterp::MaxPlus { offsets, .. } => offsets.len(),
        }
    }

    fn apply(&self, args: &[u64]) -> u64 {
        match self {
            SymbolInterp::Linear { constant, coeffs } => {
                constant + coeffs.iter().zip(args).map(|(a, x)| a * x).sum::<u64>()
            }
            SymbolInterp::MaxPlus { base, offsets } => {
                let mut best = *base as i64;
                for (off, &x) in offsets.iter().zip(args) {
                    if let Some(c) = off {
                        best = best.max(x as i64 + c);
                    }
                }
                best as u64
            }
        }
    }

    fn apply_symbolic(&self, args: &[SymbolicValue]) -> SymbolicValue {
        match self {
            SymbolInterp::Linear { constant, coeffs } => {
                let mut acc = SymbolicValue::constant(*constant as i64);
                for (&a, v) in coeffs.iter().zip(args) {
                    if a > 0 {
                        acc = acc.add(&v.scale(a));
                    }
                }
                acc
            }
            SymbolInterp::MaxPlus { base, offsets } => {
                let mut branches = vec![Branch::constant(*base as i64)];
                for (off, v) in offsets.iter().zip(args) {
                    if let Some(c) = off {
                        branches.extend(v.branches.iter().map(|b| b.shifted(*c)));
                    }
                }
                SymbolicValue::from_branches(branches)
            }
        }
    }

    fn arg_names(arity: usize) -> Vec<String> {
        match arity {
            1 => vec!["x".to_string()],
            n => (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    /// Left-hand side of a rendered definition, e.g. `f_A(x1,x2)`.
    pub fn render_head(sym: &Symbol, role: &str) -> String {
        let names = Self::arg_names(sym.arity());
        if names.is_empty() {
            format!("{sym}_{role}")
        } else {
            format!("{sym}_{role}({})", names.join(","))
        }
    }

    /// Renders the right-hand side, e.g. `x + 1` or `max{0, x - 1}`.
    pub fn render(&self) -> String {
        let names = Self::arg_names(self.arity());
        match self {
            SymbolInterp::Linear { constant, coeffs } => {
                let mut parts = Vec::new();
                for (a, name) in coeffs.iter().zip(&names) {
                    match a {
                        0 => {}
                        1 => parts.push(name.clone()),
                        k => parts.push(format!("{k}*{name}")),
                    }
                }
                if *constant > 0 || parts.is_empty() {
                    parts.push(constant.to_string());
                }
                parts.join(" + ")
            }
            SymbolInterp::MaxPlus { base, offsets } => {
                let mut parts = vec![base.to_string()];
                for (off, name) in offsets.iter().zip(&names) {
                    match off {
                        None => {}
                        Some(0) => parts.push(name.clone()),
                        Some(c) if *c > 0 => parts.push(format!("{name} + {c}")),
                        Some(c) => parts.push(format!("{name} - {}", -c)),
                    }
                }
                format!("max{{{}}}", parts.join(", "))
            }
        }
    }

    /// Parses a right-hand side produced by [`SymbolInterp::render`] for a
    /// symbol of the given arity.
    pub fn parse(text: &str, arity: usize) -> Result<Self> {
        let names = Self::arg_names(arity);
        let bad = |msg: &str| Error::Certificate(format!("{msg} in `{text}`"));
        let var_index = |name: &str| -> Result<usize> {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| bad(&format!("unknown variable {name}")))
        };
        let text = text.trim();
        if let Some(inner) = text.strip_prefix("max{").and_then(|r| r.strip_suffix('}')) {
            let mut parts = inner.split(',').map(str::trim);
            let base: u64 = parts
                .next()
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| bad("expected non-negative base"))?;
            let mut offsets = vec![None; arity];
            for part in parts {
                let (name, off) = if let Some((n, c)) = part.split_once('+') {
                    (n.trim(), c.trim().parse::<i64>().map_err(|_| bad("bad offset"))?)
                } else if let Some((n, c)) = part.split_once('-') {
                    (n.trim(), -c.trim().parse::<i64>().map_err(|_| bad("bad offset"))?)
                } else {
                    (part, 0)
                };
                let i = var_index(name)?;
                if offsets[i].is_some() {
                    return Err(bad("argument listed twice"));
                }
                offsets[i] = Some(off);
            }
            return Ok(SymbolInterp::MaxPlus { base, offsets });
        }
        let mut constant = 0u64;
        let mut coeffs = vec![0u64; arity];
        for part in text.split('+').map(str::trim) {
            if let Ok(k) = part.parse::<u64>() {
                constant += k;
            } else if let Some((k, name)) = part.split_once('*') {
                let k: u64 = k.trim().parse().map_err(|_| bad("bad coefficient"))?;
                coeffs[var_index(name.trim())?] += k;
            } else {
                coeffs[var_index(part)?] += 1;
            }
        }
        Ok(SymbolInterp::Linear { constant, coeffs })
    }
}

impl fmt::Display for SymbolInterp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// An algebra over the naturals: one [`SymbolInterp`] per symbol.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Interpretation {
    map: BTreeMap<Symbol, SymbolInterp>,
}

impl Interpretation {
    pub fn new() -> Self {
        Interpretation::default()
    }

    pub fn insert(&mut self, sym: Symbol, interp: SymbolInterp) -> Result<&mut Self> {
        if sym.arity() != interp.arity() {
            return Err(Error::InvalidInterpretation(format!(
                "{sym} has arity {} but its interpretation takes {} arguments",
                sym.arity(),
                interp.arity()
            )));
        }
        self.map.insert(sym, interp);
        Ok(self)
    }

    pub fn with(mut self, sym: Symbol, interp: SymbolInterp) -> Self {
        self.insert(sym, interp).expect("arity-consistent interpretation");
        self
    }

    pub fn get(&self, sym: &Symbol) -> Option<&SymbolInterp> {
        self.map.get(sym)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Symbol, &SymbolInterp)> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    fn lookup(&self, sym: &Symbol) -> Result<&SymbolInterp> {
        self.map
            .get(sym)
            .ok_or_else(|| Error::MissingInterpretation(sym.to_string()))
    }

    /// Bottom-up evaluation under an assignment of naturals to variables.
    pub fn evaluate(&self, t: &Term, alpha: &BTreeMap<Var, u64>) -> Result<u64> {
        match t {
            Term::Var(v) => alpha
                .get(v)
                .copied()
                .ok_or_else(|| Error::UnassignedVariable(v.to_string())),
            Term::App(_) => {
                let f = self.lookup(t.root().expect("application"))?;
                let args = t
                    .args()
                    .iter()
                    .map(|a| self.evaluate(a, alpha))
                    .collect::<Result<Vec<_>>>()?;
                Ok(f.apply(&args))
            }
        }
    }

    /// Symbolic value of `t`, equal to `evaluate(t, ·)` pointwise.
    pub fn abstract_term(&self, t: &Term) -> Result<SymbolicValue> {
        match t {
            Term::Var(v) => Ok(SymbolicValue::var(v.clone())),
            Term::App(_) => {
                let f = self.lookup(t.root().expect("application"))?;
                let args = self.abstract_args(t)?;
                Ok(f.apply_symbolic(&args))
            }
        }
    }

    /// Symbolic value of `t!`: the root is replaced by its bang symbol.
    pub fn abstract_marked(&self, t: &Term) -> Result<SymbolicValue> {
        let root = t
            .root()
            .ok_or_else(|| Error::MarkVariable(t.to_string()))?;
        let f = self.lookup(&root.to_bang())?;
        let args = self.abstract_args(t)?;
        Ok(f.apply_symbolic(&args))
    }

    fn abstract_args(&self, t: &Term) -> Result<Vec<SymbolicValue>> {
        t.args().iter().map(|a| self.abstract_term(a)).collect()
    }

    /// Weak monotonicity in every argument. Both supported classes are
    /// monotone by construction, so this validates arities only.
    pub fn check_weak_monotone(&self) -> bool {
        self.map.iter().all(|(f, i)| f.arity() == i.arity())
    }

    /// `f(x₁..xₙ) ≥ xᵢ` for every interpreted `f` and every `i ∈ π(f)`.
    pub fn check_simple(&self, pi: &Status) -> bool {
        self.map.iter().all(|(f, interp)| {
            let value = interp.apply_symbolic(&generic_args(f.arity()));
            pi.positions(f)
                .into_iter()
                .all(|i| value.weakly_exceeds(&SymbolicValue::var(generic_var(i))))
        })
    }

    /// `f(x₁..xₙ) > xᵢ` for every interpreted `f` and every argument `i`.
    pub fn check_strictly_simple(&self) -> bool {
        self.map.iter().all(|(f, interp)| {
            let value = interp.apply_symbolic(&generic_args(f.arity()));
            (1..=f.arity()).all(|i| value.strictly_exceeds(&SymbolicValue::var(generic_var(i))))
        })
    }

    /// Checks that every symbol in `symbols` has an interpretation.
    pub fn require(&self, symbols: impl IntoIterator<Item = Symbol>) -> Result<()> {
        for s in symbols {
            self.lookup(&s)?;
        }
        Ok(())
    }
}

fn generic_var(i: usize) -> Var {
    Var::new(format!("x{i}"))
}

fn generic_args(arity: usize) -> Vec<SymbolicValue> {
    (1..=arity).map(|i| SymbolicValue::var(generic_var(i))).collect()
}

/// An affine function `constant + Σ coeff·v` with natural coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Branch {
    pub constant: i64,
    /// Sorted by variable, zero coefficients omitted.
    pub coeffs: Vec<(Var, u64)>,
}

impl Branch {
    pub fn constant(c: i64) -> Self {
        Branch {
            constant: c,
            coeffs: Vec::new(),
        }
    }

    fn shifted(&self, c: i64) -> Self {
        Branch {
            constant: self.constant + c,
            coeffs: self.coeffs.clone(),
        }
    }

    fn scaled(&self, k: u64) -> Self {
        Branch {
            constant: self.constant * k as i64,
            coeffs: self.coeffs.iter().map(|(v, a)| (v.clone(), a * k)).collect(),
        }
    }

    fn plus(&self, other: &Branch) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + other.coeffs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.coeffs.len() || j < other.coeffs.len() {
            match (self.coeffs.get(i), other.coeffs.get(j)) {
                (Some(a), Some(b)) if a.0 == b.0 => {
                    coeffs.push((a.0.clone(), a.1 + b.1));
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a.0 < b.0 => {
                    coeffs.push(a.clone());
                    i += 1;
                }
                (Some(_), Some(b)) => {
                    coeffs.push(b.clone());
                    j += 1;
                }
                (Some(a), None) => {
                    coeffs.push(a.clone());
                    i += 1;
                }
                (None, Some(b)) => {
                    coeffs.push(b.clone());
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Branch {
            constant: self.constant + other.constant,
            coeffs,
        }
    }

    fn coeff(&self, v: &Var) -> u64 {
        self.coeffs
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.coeffs[i].1)
            .unwrap_or(0)
    }

    fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Every coefficient of `self` is at least the matching one of `other`.
    fn covers_coeffs(&self, other: &Branch) -> bool {
        other.coeffs.iter().all(|(v, a)| self.coeff(v) >= *a)
    }

    fn dominates(&self, other: &Branch) -> bool {
        self.constant >= other.constant && self.covers_coeffs(other)
    }

    fn value(&self, alpha: &BTreeMap<Var, u64>) -> i64 {
        self.constant
            + self
                .coeffs
                .iter()
                .map(|(v, a)| (*a * alpha.get(v).copied().unwrap_or(0)) as i64)
                .sum::<i64>()
    }
}

/// A maximum of affine branches. Normalized: no branch is dominated by
/// another, branches are sorted, and some branch has a non-negative constant
/// so the value is always a natural number.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymbolicValue {
    branches: Vec<Branch>,
}

impl SymbolicValue {
    pub fn var(v: Var) -> Self {
        SymbolicValue {
            branches: vec![Branch {
                constant: 0,
                coeffs: vec![(v, 1)],
            }],
        }
    }

    pub fn constant(c: i64) -> Self {
        SymbolicValue {
            branches: vec![Branch::constant(c)],
        }
    }

    pub fn from_branches(branches: Vec<Branch>) -> Self {
        let mut v = SymbolicValue { branches };
        v.normalize();
        v
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    /// Removes duplicate and dominated branches and sorts the rest.
    pub fn normalize(&mut self) {
        self.branches.sort();
        self.branches.dedup();
        let bs = std::mem::take(&mut self.branches);
        let keep: Vec<bool> = (0..bs.len())
            .map(|i| {
                !bs.iter()
                    .enumerate()
                    .any(|(j, other)| j != i && other.dominates(&bs[i]) && other != &bs[i])
            })
            .collect();
        self.branches = bs
            .into_iter()
            .zip(keep)
            .filter_map(|(b, k)| k.then_some(b))
            .collect();
    }

    pub fn add(&self, other: &SymbolicValue) -> SymbolicValue {
        let mut out = Vec::with_capacity(self.branches.len() * other.branches.len());
        for a in &self.branches {
            for b in &other.branches {
                out.push(a.plus(b));
            }
        }
        SymbolicValue::from_branches(out)
    }

    pub fn scale(&self, k: u64) -> SymbolicValue {
        if k == 0 {
            return SymbolicValue::constant(0);
        }
        SymbolicValue::from_branches(self.branches.iter().map(|b| b.scaled(k)).collect())
    }

    /// Value under an assignment; unassigned variables count as 0.
    pub fn semantics(&self, alpha: &BTreeMap<Var, u64>) -> i64 {
        self.branches
            .iter()
            .map(|b| b.value(alpha))
            .max()
            .unwrap_or(0)
            .max(0)
    }

    /// Sound test for `self ≥ other` at every assignment.
    pub fn weakly_exceeds(&self, other: &SymbolicValue) -> bool {
        other.branches.iter().all(|b| {
            (b.is_constant() && b.constant <= 0) || self.branches.iter().any(|a| a.dominates(b))
        })
    }

    /// Sound test for `self > other` at every assignment.
    pub fn strictly_exceeds(&self, other: &SymbolicValue) -> bool {
        other.branches.iter().all(|b| {
            (b.is_constant() && b.constant < 0)
                || self
                    .branches
                    .iter()
                    .any(|a| a.constant > b.constant && a.covers_coeffs(b))
        })
    }
}

impl fmt::Display for SymbolicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .branches
            .iter()
            .map(|b| {
                let mut s: Vec<String> = b
                    .coeffs
                    .iter()
                    .map(|(v, a)| if *a == 1 { v.to_string() } else { format!("{a}*{v}") })
                    .collect();
                if b.constant != 0 || s.is_empty() {
                    s.push(b.constant.to_string());
                }
                s.join(" + ")
            })
            .collect();
        if parts.len() == 1 {
            f.write_str(&parts[0])
        } else {
            write!(f, "max{{{}}}", parts.join(", "))
        }
    }
}

/// `u ≥ v` by branch dominance.
pub fn cmp_weak(u: &SymbolicValue, v: &SymbolicValue) -> bool {
    u.weakly_exceeds(v)
}

/// `u > v` by strict branch dominance.
pub fn cmp_strict(u: &SymbolicValue, v: &SymbolicValue) -> bool {
    u.strictly_exceeds(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{pred_measure, pred_signature, pred_weights, z08_marked_weights, z08_signature};

    fn alpha(x: u64) -> BTreeMap<Var, u64> {
        [(Var::new("x"), x)].into_iter().collect()
    }

    #[test]
    fn evaluate_examples() {
        let sig = pred_signature();
        let t = sig.parse_term("p(s(x))").unwrap();
        assert_eq!(pred_measure().evaluate(&t, &alpha(0)).unwrap(), 0);

        let zsig = z08_signature();
        let lhs = zsig.parse_term("f!(b,f(a,x))").unwrap();
        for x in 0..4 {
            assert_eq!(z08_marked_weights().evaluate(&lhs, &alpha(x)).unwrap(), 1);
        }
        let a = zsig.parse_term("a").unwrap();
        assert_eq!(z08_marked_weights().evaluate(&a, &alpha(0)).unwrap(), 1);
    }

    #[test]
    fn evaluate_errors() {
        let sig = pred_signature();
        let t = sig.parse_term("p(s(x))").unwrap();
        assert!(matches!(
            Interpretation::new().evaluate(&t, &alpha(0)),
            Err(Error::MissingInterpretation(_))
        ));
        assert!(matches!(
            pred_weights().evaluate(&t, &BTreeMap::new()),
            Err(Error::UnassignedVariable(_))
        ));
    }

    #[test]
    fn abstract_examples() {
        let sig = pred_signature();
        let x = SymbolicValue::var(Var::new("x"));
        assert_eq!(pred_weights().abstract_term(&Term::var("x")).unwrap(), x);

        let sx = pred_weights().abstract_term(&sig.parse_term("s(x)").unwrap()).unwrap();
        assert_eq!(
            sx.branches(),
            &[Branch {
                constant: 1,
                coeffs: vec![(Var::new("x"), 1)]
            }]
        );

        // max{0, (x + 1) - 1}: the constant branch is dominated by x.
        let t = sig.parse_term("p(s(x))").unwrap();
        let v = pred_measure().abstract_term(&t).unwrap();
        assert_eq!(v, x);
        for a in 0..3 {
            assert_eq!(
                v.semantics(&alpha(a)),
                pred_measure().evaluate(&t, &alpha(a)).unwrap() as i64
            );
        }
    }

    #[test]
    fn weak_comparison_examples() {
        let sig = pred_signature();
        let a = pred_weights();
        let psx = a.abstract_term(&sig.parse_term("p(s(x))").unwrap()).unwrap();
        let x = a.abstract_term(&Term::var("x")).unwrap();
        let sx = a.abstract_term(&sig.parse_term("s(x)").unwrap()).unwrap();
        assert!(cmp_weak(&psx, &x));
        assert!(cmp_weak(&psx, &psx));
        assert!(!cmp_weak(&x, &sx));
    }

    #[test]
    fn strict_comparison_examples() {
        let sig = pred_signature();
        let a = pred_weights();
        let x = a.abstract_term(&Term::var("x")).unwrap();
        let sx = a.abstract_term(&sig.parse_term("s(x)").unwrap()).unwrap();
        assert!(cmp_strict(&sx, &x));
        assert!(!cmp_strict(&sx, &sx));

        let zsig = z08_signature();
        let l = z08_marked_weights()
            .abstract_marked(&zsig.parse_term("f(b,f(a,x))").unwrap())
            .unwrap();
        let r = z08_marked_weights()
            .abstract_marked(&zsig.parse_term("f(b,f(b,f(a,x)))").unwrap())
            .unwrap();
        assert_eq!(l, SymbolicValue::constant(1));
        assert_eq!(r, SymbolicValue::constant(0));
        assert!(cmp_strict(&l, &r));
    }

    #[test]
    fn clamped_branches_are_dominated() {
        // max{0, x - 1} vs 0 and vs a negative constant branch.
        let sig = pred_signature();
        let px = pred_measure().abstract_term(&sig.parse_term("p(x)").unwrap()).unwrap();
        assert!(cmp_weak(&px, &SymbolicValue::constant(0)));
        assert!(!cmp_strict(&px, &SymbolicValue::constant(0)));
        assert!(cmp_strict(&px, &SymbolicValue::constant(-1)));
        assert!(!cmp_weak(&px, &SymbolicValue::var(Var::new("x"))));
    }

    #[test]
    fn weak_monotonicity_holds_structurally() {
        assert!(pred_weights().check_weak_monotone());
        assert!(pred_measure().check_weak_monotone());
        let mut i = Interpretation::new();
        assert!(i
            .insert(Symbol::new("f", 2), SymbolInterp::linear(0, vec![1]))
            .is_err());
    }

    #[test]
    fn simplicity_examples() {
        assert!(pred_weights().check_simple(&Status::total()));
        assert!(!pred_measure().check_simple(&Status::total()));

        // F_A(x,y) = x is not >= y, so position 2 of F breaks simplicity.
        let f = z08_signature().get("f").unwrap().clone();
        let pi = Status::total()
            .with(f.to_tuple(), vec![2])
            .unwrap()
            .with(f.clone(), vec![])
            .unwrap()
            .with(f.to_bang(), vec![])
            .unwrap()
            .with(f.to_tuple().to_bang(), vec![])
            .unwrap();
        assert!(!z08_marked_weights().check_simple(&pi));
        let pi1 = Status::total()
            .with(f.to_tuple(), vec![1])
            .unwrap()
            .with(f.clone(), vec![1])
            .unwrap()
            .with(f.to_bang(), vec![2])
            .unwrap()
            .with(f.to_tuple().to_bang(), vec![1])
            .unwrap();
        assert!(z08_marked_weights().check_simple(&pi1));
    }

    #[test]
    fn strict_simplicity() {
        let i = Interpretation::new()
            .with(Symbol::new("f", 2), SymbolInterp::linear(1, vec![1, 1]))
            .with(Symbol::new("a", 0), SymbolInterp::linear(0, vec![]));
        assert!(i.check_strictly_simple());
        assert!(!pred_weights().check_strictly_simple());
    }

    #[test]
    fn render_and_parse() {
        let cases = [
            (SymbolInterp::linear(1, vec![1]), "x + 1"),
            (SymbolInterp::linear(0, vec![1]), "x"),
            (SymbolInterp::linear(2, vec![0, 3]), "3*x2 + 2"),
            (SymbolInterp::linear(0, vec![0, 0]), "0"),
            (SymbolInterp::max_plus(0, vec![Some(-1)]), "max{0, x - 1}"),
            (SymbolInterp::max_plus(2, vec![None, Some(1), Some(0)]), "max{2, x2 + 1, x3}"),
            (SymbolInterp::max_plus(1, vec![]), "max{1}"),
        ];
        for (interp, text) in cases {
            assert_eq!(interp.render(), text);
            assert_eq!(SymbolInterp::parse(text, interp.arity()).unwrap(), interp);
        }
        assert_eq!(
            SymbolInterp::render_head(&Symbol::new("s", 1), "A"),
            "s_A(x)"
        );
        assert!(SymbolInterp::parse("y + 1", 1).is_err());
        assert!(SymbolInterp::parse("max{-1, x}", 1).is_err());
    }
}
