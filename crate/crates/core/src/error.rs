use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("grading mismatch: {0}")]
    Grading(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("empty window: no K-type in [{lo}, {hi}] has parity {parity}")]
    EmptyWindow { lo: i64, hi: i64, parity: u8 },
    #[error("degenerate band input: dimensions {dims:?} grow with the window")]
    Degenerate { dims: Vec<usize> },
    #[error("independent routes disagree: {0}")]
    OracleMismatch(String),
    #[error("schema error at {location}: {message}")]
    Schema { location: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
