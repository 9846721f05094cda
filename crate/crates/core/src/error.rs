use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    #[error("insufficient accuracy: asked to compare through q^{through} but accuracy is only q^{available}")]
    InsufficientAccuracy { through: i64, available: i64 },
    #[error("summation did not terminate within index cap {cap} at accuracy {acc}")]
    NonTerminating { cap: i64, acc: i64 },
    #[error("quadratic exponent (P n^2 + Q n)/2 needs P and Q of equal parity, got P={p}, Q={q}")]
    ParityViolation { p: i64, q: i64 },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("illegal spec: {0}")]
    IllegalSpec(String),
    #[error("unknown identity id `{0}`")]
    UnknownId(String),
    #[error("accuracy {requested} is below the minimum {minimum} for `{id}`")]
    AccuracyTooLow {
        id: String,
        requested: i64,
        minimum: i64,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
