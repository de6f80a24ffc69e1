//! CLI error type with scriptable exit codes.

use oddform_core::FormError;
use std::fmt;

/// Exit codes: 0 ok, 1 internal/io, 2 usage, 3 parse, 4 incompatible data,
/// 5 nontrivial kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Incompatible(String),
    Kernel(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Incompatible(_) => 4,
            CliError::Kernel(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Incompatible(msg) => write!(f, "incompatible data: {msg}"),
            CliError::Kernel(msg) => write!(f, "nontrivial kernel: {msg}"),
            CliError::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<FormError> for CliError {
    fn from(err: FormError) -> Self {
        match err {
            FormError::NonTrivialKernel => CliError::Kernel(err.to_string()),
            FormError::IncompatibleData(_) => CliError::Incompatible(err.to_string()),
            FormError::InvalidParameter(_) => CliError::Usage(err.to_string()),
            FormError::DimensionMismatch { .. }
            | FormError::DegreeMismatch { .. }
            | FormError::InvalidIndexSet(_) => CliError::Parse(err.to_string()),
            other => CliError::Incompatible(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        CliError::Parse(err.to_string())
    }
}
