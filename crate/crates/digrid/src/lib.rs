//! File formats, the multi-threaded search driver and the `digrid` command
//! line on top of `digrid-core`.

pub mod checkpoint;
pub mod cli;
pub mod driver;
pub mod format;
pub mod report;
pub mod table;
