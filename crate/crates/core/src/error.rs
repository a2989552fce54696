use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by code construction, decoding, and the simulation harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is rank deficient: rank {rank}, need {expected}")]
    Singular { rank: usize, expected: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("corrupt code: {0}")]
    CorruptCode(String),

    #[error("vector is not a codeword")]
    NotCodeword,

    #[error("empty candidate list")]
    EmptyList,

    #[error("oracle limit exceeded: {0}")]
    OracleLimit(String),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("config key `{key}`: {msg}")]
    Config { key: String, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
