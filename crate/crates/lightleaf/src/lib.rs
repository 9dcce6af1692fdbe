//! File formats and the `lightleaf` command-line front end for
//! [`lightleaf_core`].

pub mod cache;
pub mod cli;
pub mod config;
pub mod error;
pub mod formats;
pub mod words;

pub use error::CliError;
