use thiserror::Error;

/// Errors produced by construction and arithmetic routines.
///
/// Verification routines never surface failed identities through this type;
/// those come back as [`crate::verify::Check`] reports.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("{what} = {value} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("{what} = {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("tableau is not standard: {0}")]
    NotStandard(String),

    #[error("shape {lambda} is not {mu} plus one cell")]
    NotAnEdge { mu: String, lambda: String },

    #[error("coincident evaluation points u_{i} = u_{j}")]
    CoincidentPoints { i: usize, j: usize },

    #[error("fusion singularity not removable at step {step} (nonzero remainder)")]
    FusionSingularity { step: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
