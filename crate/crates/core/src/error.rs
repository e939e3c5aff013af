use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid game space: {0}")]
    InvalidSpace(String),

    #[error("invalid strategy profile: {0}")]
    InvalidProfile(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("game spaces differ: {left} vs {right}")]
    SpaceMismatch { left: String, right: String },

    #[error("unsupported space {space}: {reason}")]
    UnsupportedSpace { space: String, reason: String },

    #[error("weight matrix is not symmetric")]
    NotSymmetric,

    #[error("weight matrix is not positive definite (pivot {pivot} is not positive)")]
    NotPositiveDefinite { pivot: usize },

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },

    #[error("format error: {0}")]
    Format(String),

    /// A construction step produced something that contradicts a structural
    /// invariant (e.g. scheme parts that fail to form a direct sum).
    #[error("construction failed: {0}")]
    Construction(String),
}
