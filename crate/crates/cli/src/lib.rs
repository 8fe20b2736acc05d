//! Command-line front end for `triboson-core`: single-state analysis,
//! figure sweeps and randomized audits. Owns all file formats.

pub mod audit;
pub mod document;
mod error;
pub mod input;
pub mod sweep;

pub use error::CliError;
