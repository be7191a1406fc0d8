use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("index set must be nonempty")]
    EmptyIndexSet,
    #[error("index {index} outside 1..={ambient}")]
    IndexOutOfRange { index: usize, ambient: usize },
    #[error("parameter {name} = {value} outside [{lo}, {hi}]")]
    ParameterOutOfRange {
        name: &'static str,
        value: String,
        lo: String,
        hi: String,
    },
    #[error("simplex has {found} vertices, expected {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("degenerate simplex: {0}")]
    Degenerate(String),
    #[error("point lies outside the unit cube")]
    OutsideCube,
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
