//! File formats, reports and command dispatch for the `projdiff` tool.

pub mod args;
pub mod error;
pub mod files;
pub mod report;
pub mod run;

pub use error::CliError;
pub use report::Report;
pub use run::{run_args, Outcome};
