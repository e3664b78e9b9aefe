//! Exact arithmetic in Z, Z[i], Z[τ] and Z[ξ₅].

pub mod cyclo;
pub mod factor;
pub mod gauss;
pub mod golden;
pub mod int;
pub mod text;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

pub use cyclo::CycloInt;
pub use factor::{factor_element, split_prime, Factorization, PrimeSplit, RingKind, SplitKind};
pub use gauss::GaussInt;
pub use golden::GoldenInt;

use crate::error::Result;

/// Commutative ring element with exact arithmetic.
pub trait RingElem:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + num_traits::Zero
    + num_traits::One
{
    fn from_int(n: BigInt) -> Self;
}

/// The principal ideal domains of this crate: Euclidean, with a canonical
/// choice of associate and an explicit prime splitting law.
pub trait Factorable: RingElem {
    const RING: RingKind;

    /// Absolute norm down to Z, always positive for nonzero elements.
    fn abs_norm(&self) -> BigInt;

    /// `self / d` if it lies in the ring.
    fn exact_div(&self, d: &Self) -> Option<Self>;

    /// Returns `(c, u)` with `self = u * c`, `u` a unit and `c` the
    /// canonical associate.
    fn unit_normalize(&self) -> Result<(Self, Self)>;

    /// Primes of the ring above the rational prime `p`, with multiplicity.
    fn split(p: u64) -> Result<PrimeSplit<Self>>;

    fn is_unit(&self) -> bool {
        self.abs_norm() == BigInt::from(1)
    }

    fn divides(&self, x: &Self) -> bool {
        !self.is_zero() && x.exact_div(self).is_some()
    }
}

macro_rules! forward_ref_ops {
    ($t:ty) => {
        impl<'a> std::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, o: &'a $t) -> $t {
                self.clone() + o.clone()
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, o: &'a $t) -> $t {
                self.clone() - o.clone()
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, o: &'a $t) -> $t {
                self.clone() * o.clone()
            }
        }
        impl std::str::FromStr for $t {
            type Err = crate::error::Error;
            fn from_str(s: &str) -> crate::error::Result<Self> {
                Self::parse(s)
            }
        }
    };
}
pub(crate) use forward_ref_ops;

impl RingElem for BigInt {
    fn from_int(n: BigInt) -> Self {
        n
    }
}
