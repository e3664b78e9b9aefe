use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::factor::{PrimeSplit, RingKind, SplitKind};
use super::golden::GoldenInt;
use super::int::is_prime;
use super::text::{parse_terms, push_term, require_integer};
use super::{forward_ref_ops, Factorable, RingElem};
use crate::error::{domain, Error, Result};

/// Element `c0 + c1ξ + c2ξ² + c3ξ³` of Z[ξ], ξ = exp(2πi/5).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloInt {
    pub c: [BigInt; 4],
}

/// Product in Z[ξ] on raw coefficient arrays; shared by the big-integer
/// type and the machine-integer search loops.
fn poly_mul<T>(x: &[T; 4], y: &[T; 4]) -> [T; 4]
where
    T: Clone + Zero + Add<Output = T> + Sub<Output = T> + for<'a> Mul<&'a T, Output = T>,
{
    let mut d: [T; 7] = std::array::from_fn(|_| T::zero());
    for i in 0..4 {
        for j in 0..4 {
            d[i + j] = d[i + j].clone() + x[i].clone() * &y[j];
        }
    }
    reduce5([
        d[0].clone() + d[5].clone(),
        d[1].clone() + d[6].clone(),
        d[2].clone(),
        d[3].clone(),
        d[4].clone(),
    ])
}

/// Folds a ξ⁴ coefficient back using ξ⁴ = −1 − ξ − ξ² − ξ³.
fn reduce5<T: Clone + Sub<Output = T>>(e: [T; 5]) -> [T; 4] {
    let [a, b, c, d, f] = e;
    [a - f.clone(), b - f.clone(), c - f.clone(), d - f]
}

fn galois_raw<T: Clone + Zero + Add<Output = T> + Sub<Output = T>>(x: &[T; 4], k: usize) -> [T; 4] {
    let mut e: [T; 5] = std::array::from_fn(|_| T::zero());
    for (j, cj) in x.iter().enumerate() {
        let t = (j * k) % 5;
        e[t] = e[t].clone() + cj.clone();
    }
    reduce5(e)
}

pub(crate) fn norm_i128(x: &[i128; 4]) -> i128 {
    let y = poly_mul(&poly_mul(x, &galois_raw(x, 2)), &poly_mul(&galois_raw(x, 3), &galois_raw(x, 4)));
    y[0]
}

impl CycloInt {
    pub fn new<T: Into<BigInt>>(c: [T; 4]) -> Self {
        let [a, b, d, e] = c;
        CycloInt { c: [a.into(), b.into(), d.into(), e.into()] }
    }

    pub fn xi() -> Self {
        Self::new([0, 1, 0, 0])
    }

    pub fn xi_pow(k: u32) -> Self {
        let mut e: [BigInt; 5] = std::array::from_fn(|_| BigInt::zero());
        e[(k % 5) as usize] = BigInt::from(1);
        CycloInt { c: reduce5(e) }
    }

    /// Galois automorphism ξ ↦ ξᵏ, k ∈ {1, 2, 3, 4}.
    pub fn galois(&self, k: usize) -> Self {
        CycloInt { c: galois_raw(&self.c, k) }
    }

    /// Complex conjugation, ξ ↦ ξ⁴.
    pub fn conj(&self) -> Self {
        self.galois(4)
    }

    /// Absolute norm: product of the four Galois conjugates.
    pub fn norm(&self) -> BigInt {
        let y = self.clone() * self.galois(2) * self.galois(3) * self.galois(4);
        debug_assert!(y.c[1..].iter().all(Zero::is_zero));
        y.c[0].clone()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Embeds a + bτ via τ = −ξ² − ξ³.
    pub fn from_golden(g: &GoldenInt) -> Self {
        CycloInt { c: [g.a.clone(), BigInt::zero(), -&g.b, -&g.b] }
    }

    /// Inverse of `from_golden`; `None` unless the element is real.
    pub fn to_golden(&self) -> Option<GoldenInt> {
        (self.c[1].is_zero() && self.c[2] == self.c[3])
            .then(|| GoldenInt { a: self.c[0].clone(), b: -&self.c[2] })
    }

    /// |x|² as a golden integer.
    pub fn abs2(&self) -> GoldenInt {
        (self.clone() * self.conj()).to_golden().expect("x·x̄ is real")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let terms = parse_terms(s, &["xi", "x"])?;
        let mut out = Self::zero();
        for (e, c) in terms {
            let c = require_integer(&c, s)?;
            out = out + Self::xi_pow(e) * Self::from_int(c);
        }
        Ok(out)
    }
}

impl Zero for CycloInt {
    fn zero() -> Self {
        Self::new([0, 0, 0, 0])
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for CycloInt {
    fn one() -> Self {
        Self::new([1, 0, 0, 0])
    }
}

impl RingElem for CycloInt {
    fn from_int(n: BigInt) -> Self {
        CycloInt { c: [n, BigInt::zero(), BigInt::zero(), BigInt::zero()] }
    }

}

impl Factorable for CycloInt {
    const RING: RingKind = RingKind::Cyclotomic;

    fn abs_norm(&self) -> BigInt {
        self.norm()
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let num = self.clone() * d.galois(2) * d.galois(3) * d.galois(4);
        if num.c.iter().all(|x| (x % &n).is_zero()) {
            Some(CycloInt { c: num.c.map(|x| x / &n) })
        } else {
            None
        }
    }

    /// Balances the golden-unit part so that |x|² / |σ₂x|² lies in
    /// [τ⁻², τ²), then takes the lexicographically least of the ten
    /// associates ±ξᵏx.
    fn unit_normalize(&self) -> Result<(Self, Self)> {
        if self.is_zero() {
            return domain("zero has no canonical associate");
        }
        let tau = Self::from_golden(&GoldenInt::tau());
        let tau_inv = Self::from_golden(&GoldenInt::new(-1, 1));
        let tau2 = GoldenInt::new(1, 1);
        let tau_m2 = GoldenInt::new(2, -1);
        let mut x = self.clone();
        let mut m = Self::one();
        loop {
            let g = x.abs2();
            if g.cmp_real(&(tau2.clone() * g.conj())) != Ordering::Less {
                x = x * tau_inv.clone();
                m = m * tau_inv.clone();
            } else if g.cmp_real(&(tau_m2.clone() * g.conj())) == Ordering::Less {
                x = x * tau.clone();
                m = m * tau.clone();
            } else {
                break;
            }
        }
        let mut best: Option<(Self, Self)> = None;
        for k in 0..5 {
            for s in [1i64, -1] {
                let u = Self::xi_pow(k) * Self::from_int(s.into());
                let cand = x.clone() * u.clone();
                if best.as_ref().map_or(true, |(b, _)| cand < *b) {
                    best = Some((cand, m.clone() * u));
                }
            }
        }
        let (c, m) = best.expect("ten candidates");
        let u = Self::one().exact_div(&m).expect("unit");
        Ok((c, u))
    }

    fn split(p: u64) -> Result<PrimeSplit<Self>> {
        if !is_prime(p) {
            return domain(format!("{p} is not prime"));
        }
        match p % 5 {
            0 => {
                let pi = Self::new([1, -1, 0, 0]).unit_normalize()?.0;
                Ok(PrimeSplit::new(p, SplitKind::Ramified, vec![(pi, 4)]))
            }
            2 | 3 => Ok(PrimeSplit::new(p, SplitKind::Inert, vec![(Self::from_int(p.into()), 1)])),
            4 => {
                let rho = GoldenInt::split(p)?;
                let mut f = rho
                    .factors
                    .iter()
                    .map(|(g, e)| Ok((Self::from_golden(g).unit_normalize()?.0, *e)))
                    .collect::<Result<Vec<_>>>()?;
                f.sort();
                Ok(PrimeSplit::new(p, SplitKind::Split, f))
            }
            _ => {
                let pi = cyclo_prime_above(p)?;
                let mut f = (1..5)
                    .map(|k| Ok((pi.galois(k).unit_normalize()?.0, 1)))
                    .collect::<Result<Vec<_>>>()?;
                f.sort();
                Ok(PrimeSplit::new(p, SplitKind::Split, f))
            }
        }
    }
}

/// Box search for an element of norm p, p ≡ 1 (mod 5). The box half-width
/// starts at ⌈p^{1/4}⌉ + 2 and doubles until a hit.
fn cyclo_prime_above(p: u64) -> Result<CycloInt> {
    let mut b = (p as f64).powf(0.25).ceil() as i128 + 2;
    let target = p as i128;
    for _ in 0..6 {
        for c0 in -b..=b {
            for c1 in -b..=b {
                for c2 in -b..=b {
                    for c3 in -b..=b {
                        if norm_i128(&[c0, c1, c2, c3]) == target {
                            return Ok(CycloInt::new([c0 as i64, c1 as i64, c2 as i64, c3 as i64]));
                        }
                    }
                }
            }
        }
        b *= 2;
    }
    Err(Error::Domain(format!("no element of norm {p} found")))
}

/// Exhaustive check used by tests and examples: does some element with
/// coefficients in [−b, b] have absolute norm n?
pub fn has_element_of_norm(n: u64, b: i64) -> bool {
    let b = b as i128;
    let t = n as i128;
    for c0 in -b..=b {
        for c1 in -b..=b {
            for c2 in -b..=b {
                for c3 in -b..=b {
                    if norm_i128(&[c0, c1, c2, c3]) == t {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub fn to_f64(x: &CycloInt) -> [f64; 4] {
    x.c.clone().map(|v| v.to_f64().unwrap_or(f64::NAN))
}

impl Add for CycloInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let [a, b, c, d] = self.c;
        let [e, f, g, h] = o.c;
        CycloInt { c: [a + e, b + f, c + g, d + h] }
    }
}

impl Sub for CycloInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let [a, b, c, d] = self.c;
        let [e, f, g, h] = o.c;
        CycloInt { c: [a - e, b - f, c - g, d - h] }
    }
}

impl Mul for CycloInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        CycloInt { c: poly_mul(&self.c, &o.c) }
    }
}

impl Neg for CycloInt {
    type Output = Self;
    fn neg(self) -> Self {
        CycloInt { c: self.c.map(|x| -x) }
    }
}

forward_ref_ops!(CycloInt);

impl fmt::Display for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (k, sym) in ["", "x", "x^2", "x^3"].iter().enumerate() {
            push_term(&mut s, &self.c[k], sym, true);
        }
        if s.is_empty() {
            s.push('0');
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(a: i64, b: i64, d: i64, e: i64) -> CycloInt {
        CycloInt::new([a, b, d, e])
    }

    #[test]
    fn relations() {
        let xi = CycloInt::xi();
        assert_eq!(xi.pow(5), CycloInt::one());
        let s = (0..5).fold(CycloInt::zero(), |acc, k| acc + xi.pow(k));
        assert!(s.is_zero());
        assert_eq!(xi.conj(), xi.pow(4));
        assert_eq!(xi.conj() * xi.clone(), CycloInt::one());
        // τ = −ξ² − ξ³ satisfies τ² = τ + 1
        let t = CycloInt::from_golden(&GoldenInt::tau());
        assert_eq!(t.clone() * t.clone(), t + CycloInt::one());
    }

    #[test]
    fn small_norms() {
        assert_eq!(c(2, 1, 0, 0).norm(), BigInt::from(11));
        assert_eq!(c(2, -1, 0, 0).norm(), BigInt::from(31));
        assert_eq!(c(1, -1, 0, 0).norm(), BigInt::from(5));
        assert_eq!(CycloInt::from_int(2.into()).norm(), BigInt::from(16));
    }

    #[test]
    fn splitting() {
        let s = CycloInt::split(11).unwrap();
        assert_eq!(s.kind, SplitKind::Split);
        assert_eq!(s.factors.len(), 4);
        let prod = s.factors.iter().fold(CycloInt::one(), |a, (f, _)| a * f.clone());
        assert!(CycloInt::from_int(11.into()).exact_div(&prod).unwrap().is_unit());
        // two independent complex-conjugate pairs
        for (f, _) in &s.factors {
            let cc = f.conj().unit_normalize().unwrap().0;
            assert!(s.factors.iter().any(|(g, _)| *g == cc));
            assert_ne!(cc, *f);
        }
        let s = CycloInt::split(7).unwrap();
        assert_eq!(s.kind, SplitKind::Inert);
        assert!(!has_element_of_norm(7, 4));
        assert!(!has_element_of_norm(2, 4));
        assert_eq!(CycloInt::split(19).unwrap().factors.len(), 2);
        let s = CycloInt::split(5).unwrap();
        assert_eq!(s.factors[0].1, 4);
    }

    #[test]
    fn text() {
        for s in ["1+2*x-x^3", "x", "-x^2", "0", "3", "2-x"] {
            assert_eq!(CycloInt::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(CycloInt::parse("x^4").unwrap(), c(-1, -1, -1, -1));
        assert_eq!(CycloInt::parse("2 + xi").unwrap(), c(2, 1, 0, 0));
    }

    fn small() -> impl Strategy<Value = CycloInt> {
        prop::array::uniform4(-6i64..6).prop_map(|[a, b, d, e]| c(a, b, d, e))
    }

    proptest! {
        #[test]
        fn norm_multiplicative(x in small(), y in small()) {
            prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
        }

        #[test]
        fn galois_is_automorphism(x in small(), y in small(), k in 1usize..5) {
            prop_assert_eq!((x.clone() * y.clone()).galois(k), x.galois(k) * y.galois(k));
            prop_assert_eq!((x.clone() + y.clone()).galois(k), x.galois(k) + y.galois(k));
        }

        #[test]
        fn canonical_is_invariant(x in small(), k in 0u32..5, j in -3i64..3, neg: bool) {
            prop_assume!(!x.is_zero());
            let (cx, u) = x.unit_normalize().unwrap();
            prop_assert_eq!(u.clone() * cx.clone(), x.clone());
            prop_assert!(u.is_unit());
            let mut y = x * CycloInt::xi_pow(k) * CycloInt::from_golden(&GoldenInt::tau_pow(j));
            if neg { y = -y; }
            prop_assert_eq!(y.unit_normalize().unwrap().0, cx);
        }

        #[test]
        fn parse_print(x in small()) {
            prop_assert_eq!(CycloInt::parse(&x.to_string()).unwrap(), x);
        }
    }
}
