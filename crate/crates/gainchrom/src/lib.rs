//! File formats and the command-line front end for `gainchrom-core`.

pub mod cli;
pub mod graph_file;
pub mod run;
pub mod text;

use gainchrom_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    CheckFailed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for a failed check, 2 for bad input, 3 when an edge bound is hit.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::CheckFailed(_) => 1,
            Self::Core(Error::TooManyEdges { .. }) => 3,
            Self::Usage(_) | Self::Core(_) | Self::Io(_) => 2,
        }
    }
}
