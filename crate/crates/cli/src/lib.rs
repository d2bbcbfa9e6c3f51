//! Command-line front end for tropical tritangent analysis: coefficient
//! files, random smooth curves, JSON reports and SVG pictures of tritangent
//! classes.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod commands;
pub mod error;
pub mod generate;
pub mod pipeline;
pub mod render;
pub mod report;

pub use error::CliError;
