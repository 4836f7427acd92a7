//! Exact enumeration of grand knight's paths and grand zigzag knight's paths.
//!
//! Four engines compute the same numbers by independent routes:
//!
//! - [`enumerate`]: dynamic programming over visited vertices (ground truth),
//! - [`series`]: kernel-method generating functions as exact truncated series,
//! - [`closedform`]: binomial sums,
//! - [`bijections`]: composition and tiling encodings.
//!
//! [`asymptotics`] evaluates the leading-order estimates and compares them
//! with exact counts.

pub mod error;
pub mod path;
pub mod enumerate;
pub mod series;
pub mod closedform;
pub mod bijections;
pub mod asymptotics;

pub use error::{Error, Result};
pub use path::{path_of_string, validate_path, Composition, Direction, Path, PathConstraints, Step};
