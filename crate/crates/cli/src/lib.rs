//! Command-line front end for `voss`.
//!
//! The binary lives in `main.rs`; this library holds the file formats and the
//! command implementations so they can be tested without spawning processes.

pub mod commands;
pub mod formats;

use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or unparseable input.
    #[error("{0}")]
    Usage(String),
    /// Input parsed but is not a density matrix.
    #[error("invalid state ({invariant}): {message}")]
    State {
        invariant: &'static str,
        message: String,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::State { .. } => 3,
            CliError::Io { .. } => 4,
        }
    }

    pub(crate) fn state(e: voss::Error) -> Self {
        CliError::State {
            invariant: e.invariant(),
            message: e.to_string(),
        }
    }

    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}
