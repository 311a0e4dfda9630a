//! Command-line front end: the definition language, command dispatch and reports.

pub mod args;
pub mod commands;
pub mod error;
pub mod export;
pub mod lang;
pub mod model;
pub mod report;

pub use error::CliError;
pub use lang::{parse, serialize, Document, LangError};
pub use report::{Format, Report};
