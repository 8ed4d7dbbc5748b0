use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const RESOURCE: i32 = 3;
    pub const IO: i32 = 4;
}

#[derive(Debug, Error)]
pub enum LabError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{source_name}:{line}: {reason}")]
    Parse {
        source_name: String,
        line: usize,
        reason: String,
    },
    #[error("{source_name}:{line}: vertex {vertex} out of range for order {order}")]
    Range {
        source_name: String,
        line: usize,
        vertex: usize,
        order: usize,
    },
    #[error(transparent)]
    Core(#[from] isolation_core::Error),
}

impl LabError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        LabError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Io { .. } => exit::IO,
            LabError::Core(isolation_core::Error::ResourceExhausted { .. }) => exit::RESOURCE,
            _ => exit::USAGE,
        }
    }
}

pub type Result<T, E = LabError> = std::result::Result<T, E>;
