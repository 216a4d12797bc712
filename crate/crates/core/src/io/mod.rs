//! Problem files, proofs and run configuration.

pub mod ari;
pub mod config;
pub mod proof;

pub use ari::{parse_ari, print_ari, term_to_ari};
pub use config::Config;
pub use proof::{
    emit_certificate, emit_proof, obligations, parse_proof, prove, verify_proof, ParsedProof,
    Proof, ProofGroup, ProofVerdict, ProveOptions,
};
