use thiserror::Error;

/// Errors raised by the combinatorial and algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dendriform product with empty word undefined")]
    EmptyDendriform,

    #[error("near-concatenation with an empty composition")]
    EmptyNearConcat,

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid packed word: {0}")]
    InvalidPackedWord(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),

    #[error("invalid column partition: {0}")]
    InvalidColumnPartition(String),

    #[error("q-binomial [{n} choose {k}] is undefined")]
    QBinomialRange { n: i64, k: i64 },

    #[error("element is not homogeneous")]
    Inhomogeneous,

    #[error("repeated letter {0} in insertion input")]
    RepeatedLetter(u32),

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("closure violated: {0}")]
    ClosureViolated(String),

    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
