use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RauzyError {
    #[error("graph for k = {k} needs factor data up to length {needed}, window holds {max_n}")]
    WindowTooSmall {
        k: usize,
        needed: usize,
        max_n: usize,
    },

    #[error("edge label {0:?} repeated")]
    DuplicateLabel(String),

    #[error("edge label {label:?} has length {len}, expected {expected}")]
    LabelLength {
        label: String,
        len: usize,
        expected: usize,
    },

    #[error("no edge labels given")]
    NoEdges,

    #[error("invalid shape ({l}, {{{r}, {s}}}): arcs must be >= 1 and not both 1")]
    InvalidShape { l: usize, r: usize, s: usize },

    #[error("malformed shape spec {0:?}, expected \"l,r,s\"")]
    ShapeParse(String),
}
