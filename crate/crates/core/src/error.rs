use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("ring contexts differ")]
    ContextMismatch,
    #[error("unsupported substitution: {0}")]
    UnsupportedSubstitution(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("tensor degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("invalid dimension n = {0}")]
    InvalidDimension(usize),
    #[error("generating function is not a Laurent polynomial at (i, j) = ({0}, {1})")]
    NotPolynomial(usize, usize),
    #[error("generating function at (i, j) = ({i}, {j}) has x-exponent {exp} outside 1..={n}")]
    ExponentOutOfRange { i: usize, j: usize, exp: i64, n: usize },
    #[error("generator `{0}` is reserved here")]
    ReservedGenerator(String),
    #[error("invalid operator file: {0}")]
    InvalidOperator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
