//! Instance files, JSON reports, the acceptance self-test and the `pigame`
//! command line on top of [`pigame_core`].

pub mod cli;
pub mod instance_file;
pub mod report;
pub mod selftest;
