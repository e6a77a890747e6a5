//! The Steinberg presentation of `SL_d(Z)` and homomorphisms out of it.
//!
//! A homomorphism is given by the images of the elementary generators
//! `E_ij`; it is well defined iff every relator of the presentation maps to
//! the identity. This module checks that, evaluates words, and builds the
//! small exceptional representations used elsewhere in the crate.

mod candidate;
mod format;
mod reps;
mod word;

pub use candidate::{
    CandidateScalar, HomCandidate, LoadedCandidate, RelatorFailure, ScalarDomain, VerificationReport,
};
pub use format::parse_candidate;
pub use reps::{
    build_counterexample_rep, closure_order, closure_order_of, u3_exceptional_rep, u3_relations, ClosureOrder,
    U3Case, COUNTEREXAMPLE_RADICAND,
};
pub use word::{steinberg_presentation, steinberg_relations, steinberg_relator_count, GenSymbol, Word};
