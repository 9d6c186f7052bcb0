use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator s_{index} does not exist in S_{rank}")]
    InvalidGenerator { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("partition size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("rank {rank} outside supported range {min}..={max}")]
    RankOutOfRange { rank: usize, min: usize, max: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("cache I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache format version {found}, expected {expected}")]
    CacheVersion { found: u32, expected: u32 },
    #[error("cache checksum mismatch: {0}")]
    CacheChecksum(String),
    #[error("malformed cache: {0}")]
    CacheFormat(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
