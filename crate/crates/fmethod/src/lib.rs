//! Command-line driver and wire formats for `fmethod-core`.

pub mod cli;
pub mod report;

pub use cli::{run, Cli, CliError, Format, Outcome};
