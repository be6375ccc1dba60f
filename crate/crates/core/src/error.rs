use thiserror::Error;

/// Errors raised by the geometry, fuzzy-set and topology layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported dimension {0} (at most {max} supported)", max = crate::geometry::MAX_DIM)]
    UnsupportedDimension(usize),
    #[error("unsupported: {0} requires bounded operands")]
    UnsupportedUnbounded(&'static str),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid grade {0}: grades must lie in (0, 1]")]
    InvalidGrade(String),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("pairing matrix is singular")]
    SingularPairing,
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("grid has {points} points, cap is {cap}")]
    GridTooLarge { points: usize, cap: usize },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that signal a capability limit rather than bad input.
    pub fn is_unsupported(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedDimension(_) | Error::UnsupportedUnbounded(_) | Error::Unsupported(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
