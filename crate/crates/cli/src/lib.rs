//! Command-line harness around the `oddgirth` library: graph generation,
//! per-graph analysis records, corpus scans, the bound table and
//! certificate emission.

pub mod analysis;
pub mod certify;
pub mod generate;
pub mod input;
pub mod output;
pub mod scan;
pub mod table;

use thiserror::Error;

/// Tool version; part of every scan-cache key.
pub const VERSION: &str = concat!("oddgirth ", env!("CARGO_PKG_VERSION"));

/// Default cap on the vertex count accepted for dense eigensolves.
pub const DEFAULT_MAX_N: usize = 4096;

/// Environment variable naming the default scan-cache directory.
pub const CACHE_DIR_ENV: &str = "ODDGIRTH_CACHE_DIR";

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Partial = 1,
    Usage = 2,
    Io = 3,
    Precondition = 4,
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Library(#[from] oddgirth::Error),
}

impl HarnessError {
    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        HarnessError::Io {
            context: context.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            HarnessError::Usage(_) => ExitCode::Usage,
            HarnessError::Io { .. } => ExitCode::Io,
            HarnessError::Precondition(_) | HarnessError::Library(_) => ExitCode::Precondition,
        }
    }
}

pub type HarnessResult<T> = std::result::Result<T, HarnessError>;
