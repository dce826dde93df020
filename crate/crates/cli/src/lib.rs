//! File formats, command-line front end and verification reports for
//! `chiforge-core`.

pub mod commands;
pub mod error;
pub mod format;
pub mod io;

pub use commands::{run, Cli, CommandResult, Status, DEFAULT_BUDGET};
pub use error::CliError;
pub use format::Record;
