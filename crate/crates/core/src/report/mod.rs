//! Check registry, suite runner and report rendering.

mod outcome;
mod registry;
mod suite;

pub use outcome::{Outcome, Residual};
pub use registry::{registry, Check, CheckFn, Group, RunConfig};
pub use suite::{docs_table, run_suite, select, CheckResult, Counts, RunOptions, Status, SuiteReport, SCHEMA_VERSION};
