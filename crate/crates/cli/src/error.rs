use thiserror::Error;

use crate::lang::LangError;

/// Any failure that prevents a command from producing a verdict. Exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lang(#[from] LangError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    /// A declaration that parses but does not describe a valid object.
    #[error("{}{message}", .line.map(|l| format!("{l}: ")).unwrap_or_default())]
    Validation { line: Option<usize>, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Catalog(#[from] semisplit::CatalogError),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Lang(e) => e.kind(),
            CliError::Io { .. } => "Io",
            CliError::Validation { .. } => "ValidationError",
            CliError::Usage(_) => "UsageError",
            CliError::Catalog(_) => "CatalogError",
        }
    }

    pub fn location(&self) -> Option<(usize, usize)> {
        match self {
            CliError::Lang(e) => Some(e.location()),
            CliError::Validation { line: Some(l), .. } => Some((*l, 1)),
            _ => None,
        }
    }

    pub fn validation(line: Option<usize>, message: impl Into<String>) -> Self {
        CliError::Validation { line, message: message.into() }
    }
}
