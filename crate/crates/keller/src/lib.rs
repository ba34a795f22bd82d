//! Text formats, reports, corpus files, the verification suite and the
//! command line for `keller-core`.

pub mod cli;
pub mod error;
pub mod format;
pub mod report;
pub mod suite;

pub use error::{CliError, ExitStatus};
