//! Command-line front end: element encodings, report formats and the
//! verification suites.

pub mod commands;
pub mod encoding;
pub mod output;
pub mod parallel;
pub mod suites;
