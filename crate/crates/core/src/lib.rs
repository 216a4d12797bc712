//! Termination toolkit for first-order term rewrite systems built around
//! generalized weighted path orders (GWPO) and semantic path orders (SPO).
//!
//! The crate provides terms and rewrite systems ([`term`], [`trs`]),
//! weakly monotone interpretations ([`algebra`]), reduction triples
//! ([`triples`]), the path orders themselves as reduction orders and as
//! reduction pairs with partial statuses ([`orders`]), dependency-pair
//! obligations ([`dp`]), a bounded certificate search ([`search`]),
//! brute-force cross-checks ([`oracle`]) and the file formats ([`io`]).

pub mod algebra;
pub mod checks;
pub mod dp;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod oracle;
pub mod orders;
pub mod par;
pub mod search;
pub mod status;
pub mod term;
pub mod triples;
pub mod trs;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use status::Status;
pub use term::{Position, Substitution, Symbol, Term, Var};
pub use trs::{Rule, Signature, Trs};
