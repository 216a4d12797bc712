//! Path orders over pluggable order pairs.
//!
//! Each engine owns a memo table keyed by the addresses of the two compared
//! subterms. The table is cleared at every top-level call, so addresses stay
//! valid for its whole lifetime. Base comparisons are cached the same way and
//! counted on cache misses only.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::term::Term;
use crate::triples::{Cmp, OrderPair};

pub mod gwpo;
pub mod lex;
pub mod pair;
pub mod spo;
pub mod totality;

pub use gwpo::{gwpo_fast_gt, gwpo_gt, mgwpo_gt, GwpoEngine};
pub use lex::{lex_strict, pair_lex};
pub use pair::{gwpo_pair, mgwpo_pair, mspo_pair, spo_pair, GwpoPairEngine, SpoPairEngine};
pub use spo::{mspo_gt, spo_gt, SpoEngine};
pub use totality::{ground_totality, Totality};

/// Number of base-relation comparisons issued, per parameter pair.
///
/// One comparison decides both `⊒` and `⊐` for a pair of subterms; repeated
/// requests for the same pair within one top-level comparison are free.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ComparisonStats {
    pub a_calls: u64,
    pub b_calls: u64,
}

impl ComparisonStats {
    pub fn total(&self) -> u64 {
        self.a_calls + self.b_calls
    }
}

impl fmt::Display for ComparisonStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={} B={}", self.a_calls, self.b_calls)
    }
}

/// The chain of case labels that established a comparison, outermost first.
/// Each step after the first is the decisive sub-comparison of the previous
/// one (the argument in a subterm case, the deciding position in a lex case).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Trace(pub Vec<&'static str>);

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        f.write_str(&self.0.join(" > "))
    }
}

pub(crate) type Key = (usize, usize);

pub(crate) fn key(s: &Term, t: &Term) -> Key {
    (s as *const Term as usize, t as *const Term as usize)
}

/// A successful case together with its decisive sub-comparison, if any.
/// The flag says whether the sub-comparison is the strict relation.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Step {
    pub label: &'static str,
    pub next: Option<(bool, Key)>,
}

impl Step {
    pub fn leaf(label: &'static str) -> Self {
        Step { label, next: None }
    }

    pub fn to(label: &'static str, strict: bool, k: Key) -> Self {
        Step {
            label,
            next: Some((strict, k)),
        }
    }
}

pub(crate) type Memo = HashMap<(bool, Key), Option<Step>>;

pub(crate) fn follow(memo: &Memo, start: (bool, Key)) -> Trace {
    let mut out = Vec::new();
    let mut at = Some(start);
    while let Some(k) = at {
        match memo.get(&k) {
            Some(Some(step)) => {
                out.push(step.label);
                at = step.next;
            }
            _ => break,
        }
    }
    Trace(out)
}

/// Cached base comparisons for one parameter pair.
pub(crate) struct BaseCache<'p> {
    pair: &'p dyn OrderPair,
    memo: HashMap<Key, Cmp>,
}

impl<'p> BaseCache<'p> {
    pub fn new(pair: &'p dyn OrderPair) -> Self {
        BaseCache {
            pair,
            memo: HashMap::new(),
        }
    }

    pub fn cmp(&mut self, s: &Term, t: &Term, counter: &mut u64) -> Cmp {
        let k = key(s, t);
        if let Some(c) = self.memo.get(&k) {
            return *c;
        }
        *counter += 1;
        let c = self.pair.compare(s, t);
        self.memo.insert(k, c);
        c
    }

    pub fn clear(&mut self) {
        self.memo.clear();
    }
}
