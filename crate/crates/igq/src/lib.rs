//! Batch driver over `igq-core`: check suites, JSON/Markdown reports and
//! presentation dumps.

pub mod dump;
pub mod report;
pub mod suite;

pub use report::{Invocation, Report, Summary};
pub use suite::{run_dcat_suite, run_qh_suite, CheckResult, DcatCheck, QhCheck, Status};
