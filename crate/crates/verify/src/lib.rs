//! Batch driver for the verification suites of `qonsager-core`: builds the
//! operators to test, runs suites on a small worker pool and renders reports.

pub mod config;
pub mod controls;
pub mod matrix;
pub mod output;
pub mod suites;

pub use config::{ConfigError, Format, SeedChoice, Suite, SuiteConfig};
pub use controls::{run_controls, Control};
pub use suites::{cap_hit, run, run_suite};
