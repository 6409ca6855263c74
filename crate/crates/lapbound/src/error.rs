use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Parse failure with a 1-based line (edge lists) or 0-based byte offset
/// (family DSL).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("family `{input}` at offset {pos}: {msg}")]
    Family {
        input: String,
        pos: usize,
        msg: String,
    },
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] lapbound_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
    #[error("encoding json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("encoding csv: {0}")]
    Csv(#[from] csv::Error),
}
