use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("strand {index} out of range for {strands} strands")]
    StrandOutOfRange { index: usize, strands: usize },

    #[error("invalid strand count {0}")]
    InvalidStrandCount(usize),

    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid half-twist: {0}")]
    InvalidHalfTwist(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{strands} strands exceeds the limit of {max} for this computation")]
    TooManyStrands { strands: usize, max: usize },

    #[error("{crossings} crossings exceeds the limit of {max} for the state sum")]
    TooManyCrossings { crossings: usize, max: usize },

    #[error("no closure component {0}")]
    UnknownComponent(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("configuration error at {path}: {msg}")]
    Config { path: String, msg: String },

    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;
