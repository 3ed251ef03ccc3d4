//! Size-restricted subset sums and length-restricted subsequence sums over
//! the integers: exact computation, closed-form minimum-cardinality bounds,
//! extremal-structure classification, and exhaustive verification sweeps
//! over bounded universes.
//!
//! The crate is organized around four layers:
//!
//! * [`input`] - canonical input objects ([`IntSet`], [`MultiSeq`]) and
//!   their sign regime.
//! * [`sumset`] - the restricted sum sets themselves, computed by a
//!   cardinality-indexed bit-row table, plus [`brute`], an independent
//!   enumeration oracle with the same contract.
//! * [`bounds`] - every closed-form lower bound on `|Sigma_alpha|` and the
//!   m-index machinery.
//! * [`extremal`] - extremality tests, dilated-interval / exceptional-family
//!   classification, and the direct / inverse sweep drivers.
//!
//! All operations are pure functions of immutable inputs; sweeps may fan out
//! over a thread pool internally but merge deterministically.

pub mod bounds;
pub mod brute;
mod dp;
pub mod error;
pub mod extremal;
pub mod input;
pub mod sumset;

pub use bounds::{bound_for, bound_for_computed, m_index, AlphaIndex, BoundReport};
pub use brute::{brute_force_sums, brute_force_sums_capped, DEFAULT_ENUMERATION_CAP};
pub use error::{Error, Result};
pub use extremal::{
    annotate_structure, classify_structure, enumerate_extremal, is_extremal, match_exception,
    verify_direct, verify_inverse, CandidateSpace, ExceptionMatch, ExceptionTag, Finding,
    StructureClass, StructureKind, SweepConfig, SweepMode, Verdict, VerificationReport,
    DEFAULT_CANDIDATE_CAP,
};
pub use input::{IntSet, MultiSeq, ObjectKind, Regime, SumInput};
pub use sumset::{
    reflect, subseq_sums_at_least, subseq_sums_at_most, subset_sums_at_least, subset_sums_at_most,
    sums, SumSet, Variant,
};
