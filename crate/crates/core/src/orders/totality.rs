//! Bounded ground-totality check.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::enum_terms;
use crate::par;
use crate::term::Term;
use crate::trs::Signature;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Totality {
    Total { terms: usize, pairs: usize },
    Incomparable { left: String, right: String },
}

/// Checks that every two distinct ground terms of size ≤ `size_bound` are
/// related by `gt` in one direction. Reports the first incomparable pair in
/// enumeration order.
pub fn ground_totality(
    gt: impl Fn(&Term, &Term) -> bool + Sync,
    sig: &Signature,
    size_bound: usize,
    jobs: usize,
) -> Result<Totality> {
    let terms = enum_terms(sig, &[], size_bound);
    if terms.is_empty() {
        return Err(Error::NoGroundTerms);
    }
    let n = terms.len();
    let pairs = n * (n - 1) / 2;
    let hit = par::find_first(n as u64, jobs, |i| {
        let s = &terms[i as usize];
        terms[i as usize + 1..]
            .iter()
            .find(|t| !gt(s, t) && !gt(t, s))
            .map(|t| (s.clone(), t.clone()))
    });
    Ok(match hit {
        Some((_, (s, t))) => Totality::Incomparable {
            left: s.to_string(),
            right: t.to_string(),
        },
        None => Totality::Total { terms: n, pairs },
    })
}
