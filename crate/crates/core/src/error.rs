use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quantum integer [{0}] requested with negative argument")]
    NegativeQuantumInteger(i64),
    #[error("valuation of zero is +infinity")]
    ZeroValuation,
    #[error("pole of order {order} at the evaluation point")]
    Pole { order: i64 },
    #[error("entry ({row}, {col}) has a pole of order {order} at the evaluation point")]
    PoleAt { row: usize, col: usize, order: i64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("shape {0} is not rectangular")]
    NotRectangular(String),
    #[error("word of rank {word} applied to tableau of size {tableau}")]
    RankMismatch { word: usize, tableau: usize },
    #[error("invalid cactus word: {0}")]
    InvalidWord(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("no regular conjugation: entry ({row}, {col}) keeps a pole of order {order} at q = 0")]
    IrregularConjugation { row: usize, col: usize, order: i64 },
    #[error("no basis permutation reproduces the reference matrices; closest match:\n{0}")]
    NoMatchingPermutation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
