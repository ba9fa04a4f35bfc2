use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RotationError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,

    #[error("radicand {0} is not a square-free positive integer")]
    NotSquareFree(u64),

    #[error("rotation angle must be irrational")]
    RationalAlpha,

    #[error("rotation angle must lie strictly between 0 and 1, got {0}")]
    AlphaOutOfRange(String),

    #[error("partition is not an exact disjoint cover of the circle: {0}")]
    InvalidPartition(String),

    #[error("word uses symbol {0:?} unknown to the coding system")]
    UnknownSymbol(String),

    #[error("grouping depth must be at least 1")]
    GroupTooSmall,

    #[error("orbit prefix never exposed the expected factor count for k = {0}")]
    FactorCountNotReached(usize),

    #[error("system file, line {line}: {message}")]
    SystemFile { line: usize, message: String },

    #[error(transparent)]
    Word(#[from] words_core::WordError),
}
