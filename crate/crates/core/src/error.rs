use crate::input::Regime;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A restriction parameter outside its admissible window.
    #[error("alpha {alpha} out of range [0, {max}]")]
    AlphaRange { alpha: usize, max: usize },

    /// A formula was asked for fewer distinct values than it covers.
    #[error("{what} requires k >= {min} (got k = {k})")]
    TooFewElements {
        what: &'static str,
        k: usize,
        min: usize,
    },

    /// Sets and multiset-sequences must hold at least one element.
    #[error("input must be nonempty")]
    EmptyInput,

    /// Set literals must not repeat a value.
    #[error("duplicate element {0} (sets hold distinct integers)")]
    DuplicateElement(i64),

    /// Term and repetition lists must pair up one to one.
    #[error("terms/reps length mismatch ({terms} terms, {reps} reps)")]
    LengthMismatch { terms: usize, reps: usize },

    /// Every term of a sequence must occur at least once.
    #[error("repetition at index {index} must be >= 1")]
    ZeroRepetition { index: usize },

    /// Input or intermediate state too large for exact 64-bit computation.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Enumeration would visit more candidates than the configured cap.
    #[error("candidate count {candidates} exceeds cap {cap}")]
    CapExceeded { candidates: u128, cap: u64 },

    /// `reflect` called with a total that disagrees with the stored one.
    #[error("total mismatch: sum set stores source total {stored}, got {given}")]
    TotalMismatch { stored: i64, given: i64 },

    /// Bounds and structure theorems cover only positive and with-zero
    /// inputs; the mixed-sign case (the Jiang-Li setting) is out of scope.
    #[error(
        "no bound covers the {0} regime: mixed-sign inputs (the Jiang-Li case) are out of scope"
    )]
    UnsupportedRegime(Regime),

    /// A verification run was requested outside a theorem's hypotheses.
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    /// The sweep universe cannot host a single candidate.
    #[error("universe [1, {universe_max}] cannot host {needed} distinct values")]
    UniverseTooSmall { universe_max: i64, needed: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
