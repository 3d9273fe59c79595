//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input: out-of-range element, malformed payload, violated
    /// operation precondition.
    #[error("invalid input: {0}")]
    Input(String),

    /// An enumeration exceeded its configured budget. Brute-force search is a
    /// correctness oracle; a truncated answer would be worse than no answer.
    #[error("enumeration budget exceeded: examined {examined} subsets, budget {budget}")]
    Budget { examined: u64, budget: u64 },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
