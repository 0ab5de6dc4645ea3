use thiserror::Error;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a supported prime power (expected one of 2, 3, 4, 5, 7, 8, 9)")]
    NotPrimePower(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generator matrix has rank {rank}, expected full rank {k}")]
    RankDeficient { rank: usize, k: usize },
    #[error("invalid code dimensions: n = {n}, k = {k}")]
    InvalidDimensions { n: usize, k: usize },
    #[error("symbol {symbol} is not an element of GF({q})")]
    SymbolOutOfRange { symbol: u32, q: u32 },
    #[error("vector is not a codeword of the given code")]
    NotACodeword,
    #[error("method requires GF(2), code is over GF({0})")]
    WrongField(u32),
    #[error("at least one column must be appended")]
    NoColumns,
    #[error("set of minimum-weight information vectors is empty")]
    EmptyJd,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
