use std::path::PathBuf;

use crate::format::ParseError;

/// Process exit status. A mathematical "no" is kept apart from bad input,
/// and both are kept apart from a violated theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Negative = 1,
    Usage = 2,
    Contradiction = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    /// The more serious of two statuses; contradictions dominate.
    pub fn worst(self, other: ExitStatus) -> ExitStatus {
        fn rank(s: ExitStatus) -> u8 {
            match s {
                ExitStatus::Ok => 0,
                ExitStatus::Negative => 1,
                ExitStatus::Usage => 2,
                ExitStatus::Contradiction => 3,
            }
        }
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] keller_core::Error),
    /// A well-formed question whose answer is "no".
    #[error("{0}")]
    Negative(String),
}

impl CliError {
    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => ExitStatus::Usage,
            CliError::Negative(_) => ExitStatus::Negative,
            CliError::Core(e) if e.is_contradiction() => ExitStatus::Contradiction,
            CliError::Core(e) if e.is_negative() => ExitStatus::Negative,
            CliError::Core(_) => ExitStatus::Usage,
        }
    }
}
