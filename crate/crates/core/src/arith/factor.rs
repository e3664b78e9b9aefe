use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::int::factorize_big;
use super::Factorable;
use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RingKind {
    Gaussian,
    Golden,
    Cyclotomic,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingKind::Gaussian => "Z[i]",
            RingKind::Golden => "Z[tau]",
            RingKind::Cyclotomic => "Z[xi5]",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitKind {
    Inert,
    Split,
    Ramified,
}

/// The primes above a rational prime `p`: `p = unit · ∏ πᵉ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSplit<E> {
    pub p: u64,
    pub ring: RingKind,
    pub kind: SplitKind,
    pub factors: Vec<(E, u32)>,
}

impl<E: Factorable> PrimeSplit<E> {
    pub(crate) fn new(p: u64, kind: SplitKind, factors: Vec<(E, u32)>) -> Self {
        PrimeSplit { p, ring: E::RING, kind, factors }
    }
}

pub fn split_prime<E: Factorable>(p: u64) -> Result<PrimeSplit<E>> {
    E::split(p)
}

/// `x = unit · ∏ πᵉ` with canonical, pairwise non-associate primes π.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<(E, u32)>,
}

impl<E: Factorable> Factorization<E> {
    pub fn expand(&self) -> E {
        let mut out = self.unit.clone();
        for (p, e) in &self.factors {
            for _ in 0..*e {
                out = out * p.clone();
            }
        }
        out
    }
}

/// Factors a nonzero element by factoring its absolute norm over Z and
/// dividing out the primes above each rational prime.
pub fn factor_element<E: Factorable>(x: &E) -> Result<Factorization<E>> {
    if x.is_zero() {
        return domain("cannot factor zero");
    }
    let mut rest = x.clone();
    let mut factors = Vec::new();
    for (p, _) in factorize_big(&x.abs_norm())? {
        for (pi, _) in E::split(p)?.factors {
            let mut e = 0;
            while let Some(q) = rest.exact_div(&pi) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                factors.push((pi, e));
            }
        }
    }
    debug_assert_eq!(rest.abs_norm().to_u64(), Some(1));
    Ok(Factorization { unit: rest, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::arith::{CycloInt, GaussInt, GoldenInt, RingElem};
    use num_bigint::BigInt;

    #[test]
    fn examples() {
        let f = factor_element(&GaussInt::new(4, 3)).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].1, 2);
        assert_eq!(f.expand(), GaussInt::new(4, 3));
        assert_eq!(f.factors[0].0.pow(2).norm(), BigInt::from(25));

        let f = factor_element(&GoldenInt::new(5, 0)).unwrap();
        assert_eq!(f.factors, vec![(GoldenInt::new(3, -1), 2)]);
        assert!(f.unit.is_unit());

        let f = factor_element(&CycloInt::from_int(2.into())).unwrap();
        assert_eq!(f.factors, vec![(CycloInt::from_int(2.into()), 1)]);
        assert!(factor_element(&GaussInt::zero()).is_err());
    }

    #[test]
    fn round_trip_gauss() {
        for a in -100i64..=100 {
            for b in -100i64..=100 {
                let x = GaussInt::new(a, b);
                if x.is_zero() || x.norm() > BigInt::from(10_000) {
                    continue;
                }
                let f = factor_element(&x).unwrap();
                assert_eq!(f.expand(), x);
                assert!(f.unit.is_unit());
            }
        }
    }

    #[test]
    fn round_trip_golden() {
        for a in -120i64..=120 {
            for b in -120i64..=120 {
                let x = GoldenInt::new(a, b);
                if x.is_zero() || x.abs_norm() > BigInt::from(10_000) {
                    continue;
                }
                let f = factor_element(&x).unwrap();
                assert_eq!(f.expand(), x);
                for (p, _) in &f.factors {
                    assert_eq!(p.unit_normalize().unwrap().0, *p);
                }
            }
        }
    }

    #[test]
    fn round_trip_cyclo() {
        let b = 5i64;
        for c0 in -b..=b {
            for c1 in -b..=b {
                for c2 in -b..=b {
                    for c3 in -b..=b {
                        let x = CycloInt::new([c0, c1, c2, c3]);
                        if x.is_zero() || x.norm() > BigInt::from(10_000) {
                            continue;
                        }
                        let f = factor_element(&x).unwrap();
                        assert_eq!(f.expand(), x);
                    }
                }
            }
        }
    }

    #[test]
    fn split_products() {
        fn check<E: Factorable>(p: u64) {
            let s = E::split(p).unwrap();
            let prod = s.factors.iter().fold(E::one(), |a, (f, e)| {
                (0..*e).fold(a, |a, _| a * f.clone())
            });
            let q = E::from_int(p.into()).exact_div(&prod).unwrap();
            assert!(q.is_unit(), "{p}");
        }
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 29, 31, 41, 59, 61, 71, 89, 101] {
            check::<GaussInt>(p);
            check::<GoldenInt>(p);
            check::<CycloInt>(p);
        }
    }
}
