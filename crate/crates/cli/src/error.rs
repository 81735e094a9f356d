use std::path::PathBuf;

use specfun_core::SpecFunError;
use specfun_verify::VerifyError;
use thiserror::Error;

/// Process exit codes; a stable contract for scripts.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VIOLATION: u8 = 1;
    pub const DOMAIN: u8 = 2;
    pub const USAGE: u8 = 64;
    pub const IO: u8 = 74;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Kernel(#[from] SpecFunError),

    #[error(transparent)]
    Verify(#[from] VerifyError),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {detail}")]
    State { path: PathBuf, detail: String },
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Verify(_) => exit::USAGE,
            CliError::Kernel(SpecFunError::Config { .. }) => exit::USAGE,
            CliError::Kernel(_) => exit::DOMAIN,
            CliError::Io { .. } | CliError::State { .. } => exit::IO,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
