//! Command-line front end for the `knightpaths` engines: counting, tables,
//! coefficient streams, bijections, asymptotic reports and verification
//! against published values.

pub mod checks;
pub mod engine;
pub mod error;
pub mod fixtures;

pub use error::{CliError, CliResult};
