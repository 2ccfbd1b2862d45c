//! File formats, rendering and the command-line front end for
//! `crosssec-core`.

pub mod cli;
pub mod commands;
pub mod config;
pub mod csvio;
pub mod dto;
pub mod error;
pub mod format;
pub mod parallel;
pub mod svg;

pub use cli::run;
pub use error::CliError;
