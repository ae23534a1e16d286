//! Batch verification harness for the `octoweak-core` identities.
//!
//! [`suites::run_all`] runs every registered suite and returns a
//! [`report::RunReport`]; the `octoweak` binary wraps it with flags, a config
//! file and text/JSON output.

pub mod config;
pub mod error;
pub mod report;
pub mod suites;

pub use config::{ConfigLayer, SuiteConfig};
pub use error::HarnessError;
pub use report::{RunReport, SuiteReport};
pub use suites::{run_all, run_suite, run_suite_id, SuiteId};

/// The 8×8 basis multiplication table, rendered as a grid.
pub fn dump_table() -> String {
    octoweak_core::STRUCTURE_TABLE.to_string()
}
