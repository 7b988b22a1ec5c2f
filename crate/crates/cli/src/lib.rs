//! File formats, reports and subcommands of the `terracini` tool.

pub mod commands;
pub mod descriptor;
pub mod formats;
pub mod report;

pub use commands::{exit, run, CliError};
