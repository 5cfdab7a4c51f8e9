//! Command-line front end for `artinlab`: job files, the report tree, its text
//! and structured serializations, and the fixture corpus.

pub mod error;
pub mod fixtures;
pub mod job;
pub mod render;
pub mod report;
pub mod run;

pub use error::{exit, CliError};
pub use job::{Format, JobFile, JobSpec, Mode, Overrides};
pub use render::{from_structured, render, to_structured, to_text};
pub use report::{Report, SCHEMA};
pub use run::{run, run_with_cancel};
