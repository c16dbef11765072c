//! Command-line front-end for `entangle-core`.

pub mod commands;
pub mod descriptor;
pub mod error;
pub mod format;
pub mod report;
pub mod scan;

pub use commands::{run, Cli};
pub use error::{CliError, CliResult};
