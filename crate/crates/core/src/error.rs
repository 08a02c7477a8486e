use std::time::Duration;

use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("size {0} exceeds the supported maximum of {max}", max = crate::bits::MAX_BITS)]
    TooLarge(usize),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),

    #[error("vertex {0} appears on both sides of a biclique")]
    Overlap(usize),

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("u and v must be distinct (got {0} twice)")]
    SameVertex(usize),

    #[error("vertex set must be nonempty")]
    EmptySet,

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("field of order {0}^{1} exceeds 2^16 elements")]
    FieldTooLarge(u32, u32),

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("vectors come from different fields or have different lengths")]
    VectorMismatch,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("labels have mixed lengths ({0} and {1})")]
    MixedLabelLength(usize, usize),

    #[error("invalid label symbol {0:?}")]
    BadLabel(char),

    #[error("search timed out after {elapsed:?} (known bounds {lower}..={upper})")]
    Timeout {
        elapsed: Duration,
        lower: usize,
        upper: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
