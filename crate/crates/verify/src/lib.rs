//! Verification suites for `capelli-core`, the reports they produce and the
//! plumbing behind the `capelli` command.
//!
//! A suite is a named list of exact checks over a small parameter range.
//! Running one gives a [`SuiteReport`]; several are collected in a
//! [`Report`] that serializes to JSON, markdown or plain text.

pub mod params;
pub mod report;
pub mod suites;

pub use params::{Params, UsageError, DEFAULT_MAX_CELLS};
pub use report::{CheckRecord, Report, Status, SuiteReport};
pub use suites::{find, registry, run_suite, CheckSet, Suite};
