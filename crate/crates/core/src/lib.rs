//! Exact coincidence indices for lattices and Z-modules in dimensions 2 to 4.

pub mod arith;
pub mod counting;
pub mod engine;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod quadratic;
pub mod quaternion;

pub use error::{Error, Result};
