//! IO companion to `dnaword-core`: code/manifest/record file formats, the
//! rejection-sampling bench driver, and the command-line front end.

pub mod bench_driver;
pub mod commands;
pub mod format;
pub mod manifest;

pub use commands::{run, Cli};
