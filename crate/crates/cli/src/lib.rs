//! Command-line front end: JSON reports and SVG diagrams.

mod app;
pub mod report;
pub mod svg;

pub use app::{check_report, run, Outcome, EXIT_INTERNAL, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE};
