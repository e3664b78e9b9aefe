use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::hnf::{hnf, smith_diagonal, HnfForm};
use crate::error::{Error, Result};
use crate::matrix::{IntMat, QuadMat, RatMat};

/// Full-rank lattice in Qᵈ, stored by a basis whose columns are the basis
/// vectors. Two bases compare equal iff they span the same lattice.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    basis: RatMat,
}

/// Canonical rational form: the lattice equals `hnf / den`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalBasis {
    pub hnf: HnfForm,
    pub den: BigInt,
}

impl LatticeBasis {
    pub fn new(basis: RatMat) -> Result<Self> {
        if !basis.is_square() {
            return Err(Error::Dimension("lattice basis must be square".into()));
        }
        if basis.det()?.is_zero() {
            return Err(Error::RankDeficient);
        }
        Ok(LatticeBasis { basis })
    }

    /// Accepts a basis over Q(√d) provided all entries are rational.
    pub fn from_quad(basis: &QuadMat) -> Result<Self> {
        let b = basis
            .to_rational()
            .ok_or_else(|| Error::Incommensurate("basis has irrational entries".into()))?;
        Self::new(b)
    }

    pub fn from_int(m: &IntMat) -> Result<Self> {
        Self::new(RatMat::from_int(m))
    }

    pub fn standard(d: usize) -> Self {
        LatticeBasis { basis: RatMat::identity(d) }
    }

    pub fn scaled(d: usize, m: i64) -> Self {
        LatticeBasis { basis: RatMat::identity(d).scale(&BigRational::from_integer(m.into())) }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &RatMat {
        &self.basis
    }

    /// Volume of a fundamental domain, |det B|.
    pub fn volume(&self) -> BigRational {
        self.basis.det().expect("square").abs()
    }

    pub fn canonical(&self) -> CanonicalBasis {
        let d0 = self.basis.denominator();
        let m = self
            .basis
            .scale(&BigRational::from_integer(d0.clone()))
            .to_int()
            .expect("integral after clearing denominators");
        let h = hnf(&m).expect("full rank");
        let content = h.matrix().entries().iter().fold(d0.clone(), |g, x| g.gcd(x));
        let hm = h.matrix().map(|x| x / &content);
        CanonicalBasis { hnf: HnfForm::from_matrix_unchecked(&hm), den: d0 / content }
    }

    /// Coordinates of `other`'s basis vectors in this basis.
    pub fn coordinates(&self, other: &LatticeBasis) -> Result<RatMat> {
        self.check_dim(other)?;
        self.basis.inverse()?.mul(&other.basis)
    }

    fn check_dim(&self, o: &LatticeBasis) -> Result<()> {
        if self.dim() != o.dim() {
            return Err(Error::Dimension(format!("{} vs {}", self.dim(), o.dim())));
        }
        Ok(())
    }

    pub fn contains(&self, inner: &LatticeBasis) -> Result<bool> {
        Ok(self.coordinates(inner)?.is_integral())
    }

    /// `[outer : inner]` for `inner ⊆ outer`.
    pub fn index(outer: &LatticeBasis, inner: &LatticeBasis) -> Result<BigInt> {
        let x = outer.coordinates(inner)?;
        if !x.is_integral() {
            return Err(Error::NotSublattice);
        }
        Ok(x.det()?.to_integer().abs())
    }

    /// Elementary divisors of `outer / inner`.
    pub fn snf_divisors(outer: &LatticeBasis, inner: &LatticeBasis) -> Result<Vec<BigInt>> {
        let x = outer.coordinates(inner)?;
        let xi = x.to_int().ok_or(Error::NotSublattice)?;
        smith_diagonal(&xi)
    }

    pub fn sum(&self, o: &LatticeBasis) -> Result<LatticeBasis> {
        self.check_dim(o)?;
        let d = self.basis.denominator().lcm(&o.basis.denominator());
        let dr = BigRational::from_integer(d.clone());
        let m = self.basis.scale(&dr).hcat(&o.basis.scale(&dr))?;
        let h = hnf(&m.to_int().expect("integral"))?;
        LatticeBasis::new(RatMat::from_int(&h.matrix()).scale(&(BigRational::one() / dr)))
    }

    /// Dual lattice for the standard inner product: basis B⁻ᵀ.
    pub fn dual(&self) -> LatticeBasis {
        LatticeBasis { basis: self.basis.inverse().expect("full rank").transpose() }
    }

    /// Dual for the bilinear form with Gram matrix `g`: basis G⁻¹B⁻ᵀ.
    pub fn dual_with_gram(&self, g: &RatMat) -> Result<LatticeBasis> {
        LatticeBasis::new(g.inverse()?.mul(&self.dual().basis)?)
    }

    /// Γ₁ ∩ Γ₂, computed as (Γ₁* + Γ₂*)*.
    pub fn intersect(&self, o: &LatticeBasis) -> Result<LatticeBasis> {
        Ok(self.dual().sum(&o.dual())?.dual())
    }

    /// Rational bases are always commensurate once both are full rank.
    pub fn commensurate(&self, o: &LatticeBasis) -> bool {
        self.dim() == o.dim()
    }

    /// Image of the lattice under a linear map.
    pub fn transform(&self, a: &RatMat) -> Result<LatticeBasis> {
        LatticeBasis::new(a.mul(&self.basis)?)
    }
}

/// Commensurability test for bases over Q(√d): B₁⁻¹B₂ must be rational.
pub fn commensurate_quad(b1: &QuadMat, b2: &QuadMat) -> Result<bool> {
    Ok(b1.inverse()?.mul(b2)?.to_rational().is_some())
}

/// Γ₁ ∩ Γ₂ for bases over Q(√d); fails unless they are commensurate.
pub fn intersect_quad(b1: &QuadMat, b2: &QuadMat) -> Result<LatticeBasis> {
    let x = b1.inverse()?.mul(b2)?;
    let x = x
        .to_rational()
        .ok_or_else(|| Error::Incommensurate("B1^-1 B2 is irrational".into()))?;
    // work in the coordinates of b1, where Γ₁ = Zᵈ
    let inner = LatticeBasis::standard(b1.rows()).intersect(&LatticeBasis::new(x)?)?;
    let back = b1.mul(&inner.basis.to_quad())?;
    LatticeBasis::from_quad(&back).or_else(|_| {
        Err(Error::Unsupported("intersection has an irrational basis; use module coordinates".into()))
    })
}

impl PartialEq for LatticeBasis {
    fn eq(&self, o: &Self) -> bool {
        self.dim() == o.dim() && self.canonical() == o.canonical()
    }
}

impl Eq for LatticeBasis {}

impl fmt::Display for LatticeBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.basis)
    }
}

impl CanonicalBasis {
    pub fn to_basis(&self) -> LatticeBasis {
        let m = RatMat::from_int(&self.hnf.matrix())
            .scale(&BigRational::new(BigInt::one(), self.den.clone()));
        LatticeBasis { basis: m }
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }
}

impl fmt::Display for CanonicalBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.hnf)
        } else {
            write!(f, "({})/{}", self.hnf, self.den)
        }
    }
}

impl From<&HnfForm> for LatticeBasis {
    fn from(h: &HnfForm) -> Self {
        LatticeBasis { basis: RatMat::from_int(&h.matrix()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lb(rows: &[&[i64]]) -> LatticeBasis {
        let m = IntMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect())
            .unwrap();
        LatticeBasis::from_int(&m).unwrap()
    }

    fn q(s: &str) -> LatticeBasis {
        LatticeBasis::new(RatMat::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn index_examples() {
        let z3 = LatticeBasis::standard(3);
        assert_eq!(LatticeBasis::index(&z3, &LatticeBasis::scaled(3, 2)).unwrap(), 8.into());
        let even = lb(&[&[1, 0], &[1, 2]]);
        assert_eq!(LatticeBasis::index(&LatticeBasis::standard(2), &even).unwrap(), 2.into());
        assert_eq!(LatticeBasis::index(&even, &even).unwrap(), 1.into());
        assert_eq!(
            LatticeBasis::index(&even, &LatticeBasis::standard(2)),
            Err(Error::NotSublattice)
        );
        assert_eq!(
            LatticeBasis::snf_divisors(&LatticeBasis::standard(2), &even).unwrap(),
            vec![1.into(), 2.into()]
        );
        assert_eq!(
            LatticeBasis::snf_divisors(&z3, &LatticeBasis::scaled(3, 2)).unwrap(),
            vec![2.into(), 2.into(), 2.into()]
        );
    }

    #[test]
    fn intersections() {
        let z2 = LatticeBasis::standard(2);
        let r = q("4/5,-3/5;3/5,4/5");
        let csl = z2.intersect(&r).unwrap();
        assert_eq!(LatticeBasis::index(&z2, &csl).unwrap(), 5.into());
        assert_eq!(z2.intersect(&z2).unwrap(), z2);
        let six = LatticeBasis::scaled(2, 2).intersect(&LatticeBasis::scaled(2, 3)).unwrap();
        assert_eq!(six, LatticeBasis::scaled(2, 6));
        assert_eq!(LatticeBasis::scaled(2, 2).sum(&LatticeBasis::scaled(2, 3)).unwrap(), z2);
        assert_eq!(z2.dual(), z2);
        let c = LatticeBasis::scaled(2, 3).dual().canonical();
        assert_eq!(c.den, 3.into());
        assert!(c.hnf.matrix().is_identity());
    }

    #[test]
    fn quad_bases() {
        let b1 = QuadMat::parse("1,0;0,1").unwrap();
        let b2 = QuadMat::parse("sqrt(2),0;0,1").unwrap();
        assert!(!commensurate_quad(&b1, &b2).unwrap());
        assert!(matches!(intersect_quad(&b1, &b2), Err(Error::Incommensurate(_))));
        let b3 = QuadMat::parse("2,0;0,1").unwrap();
        assert_eq!(LatticeBasis::index(&LatticeBasis::standard(2), &intersect_quad(&b1, &b3).unwrap()).unwrap(), 2.into());
    }

    fn lattice(d: usize) -> impl Strategy<Value = LatticeBasis> {
        (prop::collection::vec(-5i64..=5, d * d), 1i64..4)
            .prop_filter_map("nonsingular", move |(v, den)| {
                let m = RatMat::from_vec(
                    d,
                    d,
                    v.into_iter().map(|x| BigRational::new(x.into(), den.into())).collect(),
                );
                LatticeBasis::new(m).ok()
            })
    }

    fn sublattice(d: usize) -> impl Strategy<Value = (LatticeBasis, LatticeBasis)> {
        (lattice(d), prop::collection::vec(-4i64..=4, d * d)).prop_filter_map("nonsingular", move |(g, v)| {
            let z = RatMat::from_vec(d, d, v.into_iter().map(|x| BigRational::from_integer(x.into())).collect());
            let inner = LatticeBasis::new(g.basis.mul(&z).ok()?).ok()?;
            Some((g, inner))
        })
    }

    proptest! {
        #[test]
        fn double_dual(g in lattice(3)) {
            prop_assert_eq!(g.dual().dual(), g);
        }

        #[test]
        fn duality_index_law((g1, g2) in sublattice(3)) {
            let a = LatticeBasis::index(&g1, &g2).unwrap();
            let b = LatticeBasis::index(&g2.dual(), &g1.dual()).unwrap();
            prop_assert_eq!(a, b);
            prop_assert_eq!(
                LatticeBasis::snf_divisors(&g1, &g2).unwrap(),
                LatticeBasis::snf_divisors(&g2.dual(), &g1.dual()).unwrap()
            );
        }

        #[test]
        fn scaled_copy_inside((g1, g2) in sublattice(3)) {
            let m = LatticeBasis::index(&g1, &g2).unwrap();
            prop_assume!(m <= BigInt::from(20));
            let mi: i64 = m.clone().try_into().unwrap();
            let mg = g1.transform(&RatMat::identity(3).scale(&BigRational::from_integer(mi.into()))).unwrap();
            prop_assert_eq!(LatticeBasis::index(&g2, &mg).unwrap(), m.pow(2));
        }

        #[test]
        fn diamond(g1 in lattice(2), g2 in lattice(2)) {
            let s = g1.sum(&g2).unwrap();
            let i = g1.intersect(&g2).unwrap();
            let m1 = LatticeBasis::index(&s, &g1).unwrap();
            let m2 = LatticeBasis::index(&s, &g2).unwrap();
            let n1 = LatticeBasis::index(&g1, &i).unwrap();
            let n2 = LatticeBasis::index(&g2, &i).unwrap();
            prop_assert_eq!(m1, n2);
            prop_assert_eq!(m2, n1);
        }
    }
}
