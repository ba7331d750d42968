//! File formats, fixtures and the command layer of the `nabla-lmo` tool.
//!
//! [`run`] is a pure function from arguments to exit code and output text;
//! `main` only wires it to the process.

pub mod commands;
pub mod fixtures;
pub mod formats;
pub mod parse;

pub use commands::{run, Outcome};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] parse::ParseError),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Math(#[from] nabla_core::Error),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    /// 1 for mathematical rejection, 2 for unreadable input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) | CliError::Mismatch(_) => 1,
            CliError::Parse(_) | CliError::Io(_) | CliError::Format(_) => 2,
        }
    }
}

/// Order used when `--order` is absent.
pub const DEFAULT_ORDER: usize = nabla_core::DEFAULT_ORDER;

/// Environment variable overriding [`DEFAULT_ORDER`].
pub const ORDER_ENV: &str = "NABLA_LMO_ORDER";
