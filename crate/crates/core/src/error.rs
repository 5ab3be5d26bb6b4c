use thiserror::Error;

/// Errors raised by the algebra, combinatorics and expansion layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in {op}")]
    DivisionByZero { op: &'static str },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("denominator vanishes at the requested point in coefficient of {term}: {coefficient}")]
    VanishingDenominator { term: String, coefficient: String },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cell ({row},{col}) lies outside the diagram")]
    CellOutsideDiagram { row: usize, col: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial is not in the span of the basis; residual {residual}")]
    NotInSpan { residual: String },

    #[error("basis elements are linearly dependent")]
    SingularBasis,

    #[error("basement step s_{index} does not move {direction}")]
    DirectionMismatch { index: usize, direction: &'static str },

    #[error("partition has {parts} nonzero parts but only {n} variables")]
    TooManyParts { parts: usize, n: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("invalid basis specification: {0}")]
    InvalidBasis(String),

    #[error("size {0} exceeds the supported bound")]
    SizeBound(usize),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
