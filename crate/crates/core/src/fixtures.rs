//! Reference systems and parameters used by tests, the oracle and the CLI.

use crate::algebra::{Interpretation, SymbolInterp};
use crate::status::Status;
use crate::term::Symbol;
use crate::triples::Precedence;
use crate::trs::{Signature, Trs};

fn sym(sig: &Signature, name: &str) -> Symbol {
    sig.get(name)
        .unwrap_or_else(|| panic!("fixture symbol {name}"))
        .clone()
}

/// `{p/1, s/1, f/1}`.
pub fn pred_signature() -> Signature {
    Signature::from_symbols([("p", 1), ("s", 1), ("f", 1)])
}

/// `p(s(x)) -> x`, `f(s(x)) -> f(p(s(x)))`.
pub fn pred_trs() -> Trs {
    Trs::parse(
        pred_signature(),
        &[("p(s(x))", "x"), ("f(s(x))", "f(p(s(x)))")],
    )
    .expect("fixture parses")
}

/// `p(x) = f(x) = x`, `s(x) = x + 1`: simple, weights the successor only.
pub fn pred_weights() -> Interpretation {
    let sig = pred_signature();
    Interpretation::new()
        .with(sym(&sig, "p"), SymbolInterp::linear(0, vec![1]))
        .with(sym(&sig, "f"), SymbolInterp::linear(0, vec![1]))
        .with(sym(&sig, "s"), SymbolInterp::linear(1, vec![1]))
}

/// `f(x) = s(x) = x + 1`, `p(x) = max{0, x - 1}`: truncated predecessor.
pub fn pred_measure() -> Interpretation {
    let sig = pred_signature();
    Interpretation::new()
        .with(sym(&sig, "p"), SymbolInterp::max_plus(0, vec![Some(-1)]))
        .with(sym(&sig, "f"), SymbolInterp::linear(1, vec![1]))
        .with(sym(&sig, "s"), SymbolInterp::linear(1, vec![1]))
}

/// `{f/2, a/0, b/0}`.
pub fn z08_signature() -> Signature {
    Signature::from_symbols([("f", 2), ("a", 0), ("b", 0)])
}

/// The TPDB system `Zantema_05/z08`.
pub fn z08_trs() -> Trs {
    Trs::parse(
        z08_signature(),
        &[
            ("f(a,f(b,f(a,x)))", "f(a,f(b,f(b,f(a,x))))"),
            ("f(b,f(b,f(b,x)))", "f(b,f(b,x))"),
        ],
    )
    .expect("fixture parses")
}

/// `f#(x,y) = f#!(x,y) = f(x,y) = x`, `f!(x,y) = y`, `a = a! = 1`,
/// `b = b! = 0`: the marked symbol projects the other argument.
pub fn z08_marked_weights() -> Interpretation {
    let sig = z08_signature();
    let (f, a, b) = (sym(&sig, "f"), sym(&sig, "a"), sym(&sig, "b"));
    Interpretation::new()
        .with(f.clone(), SymbolInterp::projection(2, 1))
        .with(f.to_tuple(), SymbolInterp::projection(2, 1))
        .with(f.to_tuple().to_bang(), SymbolInterp::projection(2, 1))
        .with(f.to_bang(), SymbolInterp::projection(2, 2))
        .with(a.clone(), SymbolInterp::linear(1, vec![]))
        .with(a.to_bang(), SymbolInterp::linear(1, vec![]))
        .with(b.clone(), SymbolInterp::linear(0, vec![]))
        .with(b.to_bang(), SymbolInterp::linear(0, vec![]))
}

/// `f# = [2]`, `f = a = b = []`.
pub fn z08_status() -> Status {
    let sig = z08_signature();
    let f = sym(&sig, "f");
    Status::total()
        .with(f.to_tuple(), vec![2])
        .and_then(|s| s.with(f, vec![]))
        .and_then(|s| s.with(sym(&sig, "a"), vec![]))
        .and_then(|s| s.with(sym(&sig, "b"), vec![]))
        .expect("fixture status")
}

/// `{f/1}`.
pub fn successor_signature() -> Signature {
    Signature::from_symbols([("f", 1)])
}

/// `f(x) = x + 1`.
pub fn successor_weights() -> Interpretation {
    Interpretation::new().with(Symbol::new("f", 1), SymbolInterp::linear(1, vec![1]))
}

/// `f = []`.
pub fn successor_status() -> Status {
    Status::total()
        .with(Symbol::new("f", 1), vec![])
        .expect("fixture status")
}

/// `{f/2, g/1, a/0, b/0}`: the default oracle signature.
pub fn oracle_signature() -> Signature {
    Signature::from_symbols([("f", 2), ("g", 1), ("a", 0), ("b", 0)])
}

/// KBO-style weights: every symbol adds 1 and every coefficient is 1.
pub fn unit_weights(sig: &Signature) -> Interpretation {
    let mut i = Interpretation::new();
    for f in sig.symbols() {
        i = i.with(f.clone(), SymbolInterp::linear(1, vec![1; f.arity()]));
    }
    i
}

/// Ranks following declaration order, first symbol highest.
pub fn declaration_precedence(sig: &Signature) -> Precedence {
    let n = sig.symbols().len() as u32;
    let mut p = Precedence::new();
    for (i, f) in sig.symbols().iter().enumerate() {
        p.set(f.clone(), n - 1 - i as u32);
    }
    p
}
