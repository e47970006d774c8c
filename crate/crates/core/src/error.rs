use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("rank-deficient representation: {0}")]
    RankDeficient(String),

    #[error("unknown ground-set label {0}")]
    UnknownLabel(u32),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),

    #[error("bad rank {0}: {1}")]
    BadRank(usize, &'static str),

    #[error("invalid candidate: {0}")]
    InvalidCandidate(String),

    #[error("base is not the single-column extension the operation expects")]
    NotAnExtension,

    #[error("search budget exceeded: {0}")]
    Budget(String),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("invalid census seed: {0}")]
    InvalidSeed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
