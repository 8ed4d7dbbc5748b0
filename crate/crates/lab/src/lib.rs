//! File formats, construction expressions, JSON reports and the
//! `isolation-lab` command line on top of `isolation-core`.

pub mod cli;
pub mod error;
pub mod expr;
pub mod io;
pub mod report;

pub use error::{exit, LabError, Result};
