//! File formats, text rendering and the command-line driver on top of
//! `motivic-core`.
//!
//! Exit codes: 0 success / equal / all checks pass, 1 a check came out
//! false, 2 usage or parse error, 3 evaluation error.

mod cli;
pub mod commands;
pub mod config;
pub mod json;
pub mod render;

pub use cli::{run, Cli, Outcome};
pub use commands::Status;
pub use config::{Format, RunConfig};
