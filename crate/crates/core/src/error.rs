use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QracError {
    #[error("invalid level {0}: generators exist only for N >= 2")]
    InvalidLevel(usize),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPsd(f64),

    #[error("trace is {0}, expected 1")]
    InvalidTrace(f64),

    #[error("vector is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("not a state: most negative eigenvalue {min_eigenvalue:e}")]
    NotAState { min_eigenvalue: f64 },

    #[error("POVM effects do not sum to identity (max deviation {0:e})")]
    Incomplete(f64),

    #[error("effect has eigenvalue {0} above 1")]
    EffectTooLarge(f64),

    #[error("probability {0} lies outside [0, 1]")]
    ProbabilityOutOfRange(f64),

    #[error("invalid bit string {0:?}")]
    InvalidBits(String),

    #[error("unknown scheme {0:?}")]
    UnknownScheme(String),

    #[error("malformed scheme: {0}")]
    MalformedScheme(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("region count for k={k}, d={d} does not fit in 64 bits")]
    Capacity { k: u64, d: u64 },

    #[error("inconsistency: {0}; no such coding should exist (check tolerances)")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, QracError>;
