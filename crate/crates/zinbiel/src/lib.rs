//! Text formats, reports and the command-line front end over `zinbiel-core`.

pub mod cli;
pub mod format;
pub mod report;
