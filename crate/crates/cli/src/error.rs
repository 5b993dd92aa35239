use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] rekolor_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    File {
        path: PathBuf,
        source: rekolor_core::Error,
    },
    #[error("invalid sequence: {0}")]
    Invalid(rekolor_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use rekolor_core::Error as E;
        match self {
            CliError::Invalid(_) => 5,
            CliError::Io { .. } | CliError::Usage(_) => 3,
            CliError::Core(e) | CliError::File { source: e, .. } => match e {
                E::Precondition(_) => 2,
                E::Input(_) | E::Parse { .. } => 3,
                E::Resource(_) => 4,
                E::InvalidStep { .. } => 5,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
