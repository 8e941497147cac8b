//! File formats, reports, verification suites and the command-line
//! front end for [`sidigraph_core`].

pub mod checks;
pub mod cli;
pub mod fixtures;
pub mod format;
pub mod gen;
pub mod report;

pub use format::{parse_polynomial, parse_sidigraph, render_sidigraph, ParseError};
pub use report::AnalysisReport;
