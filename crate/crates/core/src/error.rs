use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("strand mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: i64, bound: usize },
    #[error("word is not a pure braid")]
    NotPure,
    #[error("word is not a half-twist: its permutation is not a transposition")]
    NotHalfTwist,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("power {0} is not allowed here")]
    Power(u32),
    #[error("position {0} out of range")]
    Position(usize),
    #[error("invalid size: {0}")]
    Size(String),
}

pub type Result<T> = std::result::Result<T, Error>;
