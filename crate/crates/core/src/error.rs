use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("instance with {size} vertices exceeds the exact-solver cap of {cap}")]
    ExceedsCap { size: usize, cap: usize },

    #[error("infeasible instance: target {0} has no allowed dominator")]
    Infeasible(usize),

    #[error("gave up after {0} rejected samples")]
    Exhausted(usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// An algorithm broke its output contract; always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
