use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Caller supplied something out of range or malformed.
    #[error("invalid input: {0}")]
    Input(String),

    #[error("not a Belavin-Drinfeld triple: {0}")]
    InvalidTriple(String),

    /// Broken internal invariant; indicates a bug rather than bad input.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("refusing dense computation at n = {n} (limit {limit})")]
    TooLarge { n: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
