//! Rational matrices stored as an integer numerator over one common
//! denominator. Products skip per-entry gcds, which is what makes the
//! oracle sweeps affordable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::lattice::hnf::hnf_modular;
use crate::lattice::{HnfForm, LatticeBasis};
use crate::matrix::RatMat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracMat {
    n: usize,
    num: Vec<BigInt>,
    den: BigInt,
}

impl FracMat {
    /// `num / den`, reduced so that the denominator is positive and
    /// coprime to the content of the numerator.
    pub fn new(n: usize, num: Vec<BigInt>, den: BigInt) -> Self {
        assert_eq!(num.len(), n * n);
        assert!(!den.is_zero());
        let mut m = FracMat { n, num, den };
        m.reduce();
        m
    }

    pub fn identity(n: usize) -> Self {
        let num = (0..n * n).map(|k| if k % (n + 1) == 0 { BigInt::one() } else { BigInt::zero() }).collect();
        FracMat { n, num, den: BigInt::one() }
    }

    pub fn from_rat(m: &RatMat) -> Self {
        let den = m.denominator();
        let num = m.entries().iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
        FracMat::new(m.rows(), num, den)
    }

    pub fn to_rat(&self) -> RatMat {
        RatMat::from_vec(
            self.n,
            self.n,
            self.num.iter().map(|x| BigRational::new(x.clone(), self.den.clone())).collect(),
        )
    }

    fn reduce(&mut self) {
        let g = self.num.iter().fold(self.den.clone(), |g, x| g.gcd(x));
        let g = if self.den.is_negative() { -g } else { g };
        if !g.is_one() {
            for x in self.num.iter_mut() {
                *x = &*x / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Least positive integer clearing all denominators.
    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn numerator(&self, i: usize, j: usize) -> &BigInt {
        &self.num[i * self.n + j]
    }

    pub fn is_identity(&self) -> bool {
        *self == FracMat::identity(self.n)
    }

    pub fn mul(&self, o: &FracMat) -> FracMat {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut num = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.num[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.num[k * n + j];
                    if !b.is_zero() {
                        num[i * n + j] += a * b;
                    }
                }
            }
        }
        FracMat::new(n, num, &self.den * &o.den)
    }

    /// `[Zⁿ : Zⁿ ∩ AZⁿ]` for `|det A| = 1`. This equals `[Zⁿ + AZⁿ : Zⁿ]`,
    /// read off from the modular Hermite form of `D·A` with `D = den A`.
    pub fn coincidence_index(&self) -> BigInt {
        if let Some(s) = self.index_i128() {
            return s;
        }
        let csl = self.csl();
        csl.det()
    }

    fn index_i128(&self) -> Option<BigInt> {
        let d = self.den.to_i128()?;
        let n = self.n;
        let gens: Vec<Vec<i128>> = (0..n)
            .map(|j| (0..n).map(|i| self.num[i * n + j].mod_floor(&self.den).to_i128()).collect::<Option<Vec<_>>>())
            .collect::<Option<_>>()?;
        let h = hnf_modular(&gens, n, d)?;
        let det: BigInt = (0..n).map(|i| BigInt::from(h[i][i])).product();
        Some(BigInt::from(d).pow(n as u32) / det)
    }

    /// Hermite basis of `Zⁿ ∩ AZⁿ`.
    pub fn csl(&self) -> HnfForm {
        let a = LatticeBasis::new(self.to_rat()).expect("nonsingular action");
        let c = LatticeBasis::standard(self.n).intersect(&a).expect("same dimension").canonical();
        debug_assert!(c.den.is_one());
        c.hnf
    }

    /// Image `A·H` of an integral lattice, in Hermite form.
    pub fn apply(&self, h: &HnfForm) -> HnfForm {
        let b = LatticeBasis::from(h).transform(&self.to_rat()).expect("nonsingular");
        b.canonical().hnf
    }

    pub fn abs_det_is_one(&self) -> bool {
        self.to_rat().det().is_ok_and(|d| d.abs().is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fm(n: usize, v: &[i64], d: i64) -> FracMat {
        FracMat::new(n, v.iter().map(|&x| x.into()).collect(), d.into())
    }

    #[test]
    fn index_matches_lattice_route() {
        // R((0,1,1,1)) on Z³: Σ = 3
        let a = fm(3, &[-1, 2, 2, 2, -1, 2, 2, 2, -1], 3);
        assert_eq!(a.coincidence_index(), BigInt::from(3));
        assert_eq!(a.csl().det(), BigInt::from(3));
        let r = fm(2, &[4, -3, 3, 4], 5);
        assert_eq!(r.coincidence_index(), BigInt::from(5));
        assert!(r.abs_det_is_one());
    }

    #[test]
    fn reduces_on_construction() {
        let a = fm(2, &[2, 0, 0, -2], -2);
        assert!(a.mul(&a).is_identity());
        assert_eq!(a.denominator(), &BigInt::one());
    }
}
