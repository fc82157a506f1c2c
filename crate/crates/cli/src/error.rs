use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] projdiff_core::Error),
}

impl CliError {
    /// 2 for mathematical failures, 1 for I/O, parse and usage errors.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn in_file(self, path: &Path) -> CliError {
        match self {
            CliError::Parse { location, message } => CliError::Parse {
                location: format!("{}, {}", path.display(), location),
                message,
            },
            other => other,
        }
    }
}
