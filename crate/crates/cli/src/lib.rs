//! Command-line front end: polynomial literals, reports and commands.

pub mod app;
pub mod parse;
pub mod report;

pub use app::{configure_threads, execute, run, Cli, CliConfig, CliError, Outcome};
pub use parse::{parse_poly, ParseError};
pub use report::{render, Format, Report};
