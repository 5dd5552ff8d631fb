use std::io;

use thiserror::Error;

/// Failures surfaced by the command-line driver.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: io::Error,
    },

    #[error("cannot create {path}: {source}")]
    Create {
        path: String,
        #[source]
        source: io::Error,
    },

    #[error("cannot write output: {0}")]
    Write(#[from] io::Error),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("body `{name}`: {source}")]
    Body {
        name: String,
        #[source]
        source: gds_core::Error,
    },

    #[error("{0}")]
    Core(#[from] gds_core::Error),

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for a singular fusion, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) | CliError::Body { source: e, .. } if e.is_singular() => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
