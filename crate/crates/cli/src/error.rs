use thiserror::Error;

use crate::expr::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] cfk::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Elaboration(String),
}

impl CliError {
    /// Short machine-readable category used in JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Parse(_) => "parse",
            Self::Core(_) => "computation",
            Self::Io { .. } => "io",
            Self::Usage(_) => "usage",
            Self::Elaboration(_) => "elaboration",
        }
    }
}
