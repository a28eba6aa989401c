use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("partition ({0}) is not strict")]
    NotStrict(Partition),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("shifted diagram of ({inner}) is not contained in that of ({outer})")]
    NotContained { outer: Partition, inner: Partition },

    #[error("partition ({0}) already contains 1 as a part")]
    PartContainsOne(Partition),

    #[error("unsupported degree n = {0} (need n >= 4)")]
    UnsupportedN(usize),

    #[error("{divisor} does not divide {dividend}")]
    NonDivisor { dividend: String, divisor: String },

    #[error("too few variables: {k} < {needed}")]
    TooFewVariables { k: usize, needed: usize },

    #[error("structure-constant extraction left a residue: {0}")]
    ExtractionResidue(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    /// An arithmetic invariant (integrality, degree balance) failed.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
