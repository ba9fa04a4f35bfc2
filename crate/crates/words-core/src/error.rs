use thiserror::Error;

/// Errors raised by word and factor-language operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),

    #[error("symbol {0:?} is empty or contains whitespace")]
    MalformedSymbol(String),

    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),

    #[error("letter index {index} out of range for alphabet of size {size}")]
    LetterOutOfRange { index: usize, size: usize },

    #[error("words belong to different alphabets")]
    AlphabetMismatch,

    #[error("window bound {max_n} exceeds word length {len}")]
    WindowExceedsWord { max_n: usize, len: usize },

    #[error("operation needs factor data up to length {needed}, window holds {max_n}")]
    InsufficientWindow { needed: usize, max_n: usize },

    #[error("{0:?} is not a factor of the analyzed word")]
    NotAFactor(String),

    #[error("operation not defined on the empty word")]
    EmptyWord,

    #[error("overlap precondition violated: concatenations {left:?} and {right:?} differ")]
    OverlapMismatch { left: String, right: String },

    #[error("no word in input")]
    NoWordInInput,
}
