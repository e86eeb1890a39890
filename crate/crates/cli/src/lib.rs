//! Command-line front end: scheme files, reports and subcommand dispatch.

pub mod args;
pub mod commands;
pub mod error;
pub mod format;
pub mod scheme_file;

pub use args::Cli;
pub use commands::run;
pub use error::{CliError, CliResult};
pub use scheme_file::SchemeFile;
