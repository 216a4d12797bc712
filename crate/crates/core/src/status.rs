//! Partial statuses: per-symbol selections of argument positions.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::term::{Symbol, Term};

/// Maps symbols to strictly increasing lists of 1-based argument positions.
/// Symbols without an entry get the total status `[1..n]`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct Status {
    map: BTreeMap<Symbol, Vec<usize>>,
}

impl Status {
    /// The total status.
    pub fn total() -> Self {
        Status::default()
    }

    pub fn set(&mut self, f: Symbol, positions: Vec<usize>) -> Result<&mut Self> {
        let increasing = positions.windows(2).all(|w| w[0] < w[1]);
        let in_range = positions.iter().all(|&i| i >= 1 && i <= f.arity());
        if !increasing || !in_range {
            return Err(Error::Certificate(format!(
                "status {positions:?} for {f} must be strictly increasing within 1..{}",
                f.arity()
            )));
        }
        self.map.insert(f, positions);
        Ok(self)
    }

    pub fn with(mut self, f: Symbol, positions: Vec<usize>) -> Result<Self> {
        self.set(f, positions)?;
        Ok(self)
    }

    /// Selected positions of `f` (1-based).
    pub fn positions(&self, f: &Symbol) -> Vec<usize> {
        match self.map.get(f) {
            Some(p) => p.clone(),
            None => (1..=f.arity()).collect(),
        }
    }

    pub fn contains(&self, f: &Symbol, i: usize) -> bool {
        match self.map.get(f) {
            Some(p) => p.contains(&i),
            None => i >= 1 && i <= f.arity(),
        }
    }

    /// `π(f)(t₁..tₙ)` for `t = f(t₁..tₙ)`; empty for variables.
    pub fn project<'a>(&self, t: &'a Term) -> Vec<&'a Term> {
        match t.root() {
            None => Vec::new(),
            Some(f) => match self.map.get(f) {
                Some(p) => p.iter().map(|&i| &t.args()[i - 1]).collect(),
                None => t.args().iter().collect(),
            },
        }
    }

    /// True if every explicitly listed symbol keeps all of its positions.
    pub fn is_total(&self) -> bool {
        self.map
            .iter()
            .all(|(f, p)| p.len() == f.arity())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Symbol, &Vec<usize>)> {
        self.map.iter()
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (sym, p)) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let list: Vec<String> = p.iter().map(|i| i.to_string()).collect();
            write!(f, "{sym}=[{}]", list.join(","))?;
        }
        Ok(())
    }
}
