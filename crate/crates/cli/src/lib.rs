//! Front end for the `disordered` command: description files, checks and
//! verdict reports.
//!
//! Exit codes are 0 when every verdict passes, 1 when at least one fails and
//! 2 when the command cannot run (bad arguments, unreadable or malformed
//! input).

pub mod commands;
pub mod document;
pub mod error;
pub mod report;

pub use commands::{check, cut_at, distance, fiber, load, FiberQuery};
pub use document::{parse, serialize, Body, Document, Kind};
pub use error::CliError;
pub use report::{Report, Status, Verdict};
