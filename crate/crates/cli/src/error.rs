use thiserror::Error;

/// Failures that stop a command before any verdict is reached. All of them
/// map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid document: {0}")]
    Invalid(String),

    #[error("{0}")]
    Usage(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("invalid document: {0}")]
    Model(#[from] disordered::Error),
}

impl CliError {
    pub const EXIT_CODE: i32 = 2;
}
