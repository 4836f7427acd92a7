use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Engine(#[from] knightpaths::Error),

    #[error("engines disagree: {0}")]
    Disagreement(String),

    #[error("verification failed: {0}")]
    Failed(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for a disagreement or failed check, 2 for anything the caller got wrong.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Disagreement(_) | CliError::Failed(_) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
