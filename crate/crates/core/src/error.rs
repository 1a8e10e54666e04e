use thiserror::Error;

/// Errors produced by the statistics and their supporting routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input sequences have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("non-finite value at index {index}")]
    NonFiniteValue { index: usize },

    #[error("tied values at indices {first} and {second}")]
    TiesPresent { first: usize, second: usize },

    #[error("sequence of length {0} is not a permutation of 1..=n")]
    NotAPermutation(usize),

    #[error("sample size {n} is below the minimum {min} for this statistic")]
    SampleTooSmall { n: usize, min: usize },

    #[error("n = {n} exceeds the brute-force oracle bound {max}")]
    TooLargeForOracle { n: usize, max: usize },

    #[error("scaled statistic is not finite")]
    NonFiniteStat,

    #[error("null distribution cache: {0}")]
    BadCache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
