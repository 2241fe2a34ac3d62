//! Library side of the `tropos` command: input formats, output rendering
//! and subcommand execution. The binary only adds process concerns
//! (threads, files, exit codes).

pub mod cli;
pub mod error;
pub mod formats;
pub mod graph;
pub mod run;

pub use error::{CliError, CliResult};
pub use run::{execute, Report};
