//! File formats, analysis reports and the acceptance suite behind the
//! `lierad` command.

pub mod error;
pub mod format;
pub mod report;
pub mod suite;
pub mod target;

pub use error::CliError;
