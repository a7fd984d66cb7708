//! File format, command-line argument helpers, verification suites and
//! report rendering.

pub mod args;
pub mod report;
pub mod suite;
pub mod wgr;

pub use args::{parse_range, parse_suites, parse_vertex_list};
pub use report::{emit_quantities_csv, emit_report, Check, Real, Relation, ReportFormat, VerificationReport};
pub use suite::{analyze, run_suite, Suite, SuiteOptions};
pub use wgr::{parse_wgr, write_wgr, WgrFile};
