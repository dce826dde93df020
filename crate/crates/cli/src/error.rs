use chiforge_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("malformed input at line {line}, column {column}: {message}")]
    Format { line: usize, column: usize, message: String },

    #[error("rejected plan: {0}")]
    Tampered(String),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error(transparent)]
    Core(#[from] CoreError),
}
