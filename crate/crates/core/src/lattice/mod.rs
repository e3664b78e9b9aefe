//! Integer lattices: normal forms, lattice algebra and sublattice
//! enumeration.

pub mod basis;
pub mod enumerate;
pub mod hnf;

pub use basis::{commensurate_quad, intersect_quad, CanonicalBasis, LatticeBasis};
pub use enumerate::{count_sublattices, enumerate_sublattices};
pub use hnf::{hnf, smith_diagonal, HnfForm};
