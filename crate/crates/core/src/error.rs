use thiserror::Error;

/// Errors raised by the algebra, field and solver layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {0} outside supported range 1..={max}", max = crate::MAX_DIM)]
    UnsupportedDimension(usize),

    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },

    #[error("blade index {index} out of range for dimension {dim}")]
    BladeIndexOutOfRange { index: usize, dim: usize },

    #[error("blade indices must be strictly increasing: {0:?}")]
    BladeNotCanonical(Vec<usize>),

    #[error("entry {index} of structural set is not a pure grade-1 vector")]
    NotAVector { index: usize },

    #[error("structural set violates relation ({i},{j}): got {product}")]
    RelationViolated { i: usize, j: usize, product: String },

    #[error("expected {expected} vectors, got {got}")]
    WrongSetSize { expected: usize, got: usize },

    #[error("matrix is not orthogonal")]
    NotOrthogonal,

    #[error("matrix shape {rows}x{cols} does not fit: {context}")]
    Shape { rows: usize, cols: usize, context: &'static str },

    #[error("invalid index set {0:?}")]
    InvalidIndexSet(Vec<usize>),

    #[error("level {level} out of range: {context}")]
    LevelOutOfRange { level: usize, context: &'static str },

    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("field has a term of degree {found}, outside coefficient space of degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("hypergeometric series does not terminate or has a vanishing denominator parameter")]
    NonTerminatingSeries,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
