use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the scoring pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("n-gram order must be at least 1 (got {0})")]
    InvalidN(usize),
    #[error("n-gram orders differ: {0} vs {1}")]
    MismatchedN(usize, usize),
    #[error("POS tagging requested but no lexical database was supplied")]
    MissingLexicon,
    #[error("invalid combination: {method} cannot run with {setting}")]
    InvalidCombination { method: String, setting: String },
    #[error("stemmed input is not compatible with lexicon-based scoring")]
    StemmingIncompatible,
    #[error("threshold {0} is outside [0, 1]")]
    InvalidThreshold(f64),
    #[error("depth weights must start at 1.0 and be non-increasing")]
    InvalidDepthWeights,
    #[error("missing database file: {}", .0.display())]
    MissingFile(PathBuf),
    #[error("{file}:{line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },
    #[error("duplicate pair id: {0}")]
    DuplicateId(String),
    #[error("annotation lists differ in length: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
