use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor::{factor_element, PrimeSplit, RingKind, SplitKind};
use super::int::{is_prime, round_div};
use super::text::{parse_terms, push_term, require_integer};
use super::{forward_ref_ops, Factorable, RingElem};
use crate::error::{domain, Error, Result};

pub const TAU: f64 = 1.618_033_988_749_895;

/// Golden integer `a + b·τ`, τ = (1+√5)/2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoldenInt {
    pub a: BigInt,
    pub b: BigInt,
}

/// Sign of `u + v·√5`.
pub(crate) fn sign_sqrt5(u: &BigInt, v: &BigInt) -> Ordering {
    let zero = BigInt::zero();
    match (u.cmp(&zero), v.cmp(&zero)) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (s, t) if s == t => s,
        (su, _) => {
            let u2 = u * u;
            let v2 = v * v * 5;
            if u2 > v2 {
                su
            } else {
                su.reverse()
            }
        }
    }
}

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GoldenInt { a: a.into(), b: b.into() }
    }

    pub fn tau() -> Self {
        Self::new(0, 1)
    }

    /// τ^k for any integer k, using τ⁻¹ = τ − 1.
    pub fn tau_pow(k: i64) -> Self {
        let step = if k >= 0 { Self::tau() } else { Self::new(-1, 1) };
        (0..k.unsigned_abs()).fold(Self::one(), |acc, _| acc * step.clone())
    }

    /// Algebraic conjugate `(a+b) − bτ`.
    pub fn conj(&self) -> Self {
        GoldenInt { a: &self.a + &self.b, b: -&self.b }
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn trace(&self) -> BigInt {
        2 * &self.a + &self.b
    }

    /// Sign under the embedding τ ↦ (1+√5)/2.
    pub fn sign1(&self) -> Ordering {
        sign_sqrt5(&(2 * &self.a + &self.b), &self.b)
    }

    /// Sign under the conjugate embedding τ ↦ (1−√5)/2.
    pub fn sign2(&self) -> Ordering {
        sign_sqrt5(&(2 * &self.a + &self.b), &-&self.b)
    }

    pub fn is_totally_positive(&self) -> bool {
        self.sign1() == Ordering::Greater && self.sign2() == Ordering::Greater
    }

    /// Exact comparison of first embeddings.
    pub fn cmp_real(&self, o: &Self) -> Ordering {
        (self.clone() - o.clone()).sign1()
    }

    pub fn embeddings(&self) -> (f64, f64) {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        (a + b * TAU, a + b * (1.0 - TAU))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return domain("division by zero");
        }
        let n = d.norm();
        let num = self.clone() * d.conj();
        let q = GoldenInt { a: round_div(&num.a, &n), b: round_div(&num.b, &n) };
        let r = self.clone() - q.clone() * d.clone();
        Ok((q, r))
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let terms = parse_terms(s, &["tau", "t"])?;
        let mut out = Self::zero();
        for (e, c) in terms {
            let c = require_integer(&c, s)?;
            out = out + Self::tau_pow(e as i64) * Self::from_int(c);
        }
        Ok(out)
    }
}

/// Greatest common divisor in Z[τ], as the canonical associate.
pub fn golden_gcd(x: &GoldenInt, y: &GoldenInt) -> Result<GoldenInt> {
    if x.is_zero() && y.is_zero() {
        return domain("gcd(0, 0) is undefined");
    }
    let (mut a, mut b) = (x.clone(), y.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.unit_normalize()?.0)
}

impl Zero for GoldenInt {
    fn zero() -> Self {
        Self::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for GoldenInt {
    fn one() -> Self {
        Self::new(1, 0)
    }
}

impl RingElem for GoldenInt {
    fn from_int(n: BigInt) -> Self {
        GoldenInt { a: n, b: BigInt::zero() }
    }

}

impl Factorable for GoldenInt {
    const RING: RingKind = RingKind::Golden;

    fn abs_norm(&self) -> BigInt {
        self.norm().abs()
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let num = self.clone() * d.conj();
        if (&num.a % &n).is_zero() && (&num.b % &n).is_zero() {
            Some(GoldenInt { a: num.a / &n, b: num.b / &n })
        } else {
            None
        }
    }

    /// Canonical associate: totally positive with minimal trace; of two
    /// associates with equal trace the one with smaller first embedding.
    fn unit_normalize(&self) -> Result<(Self, Self)> {
        if self.is_zero() {
            return domain("zero has no canonical associate");
        }
        // track c = m * self, with m a unit
        let mut c = self.clone();
        let mut m = Self::one();
        if c.sign1() == Ordering::Less {
            c = -c;
            m = -m;
        }
        if c.sign2() == Ordering::Less {
            c = c * Self::tau();
            m = m * Self::tau();
        }
        let up = Self::new(1, 1); // τ²
        let down = Self::new(2, -1); // τ⁻²
        loop {
            let t = c.clone() * down.clone();
            if t.trace() <= c.trace() {
                c = t;
                m = m * down.clone();
            } else {
                break;
            }
        }
        loop {
            let t = c.clone() * up.clone();
            if t.trace() < c.trace() {
                c = t;
                m = m * up.clone();
            } else {
                break;
            }
        }
        let u = unit_inverse(&m);
        Ok((c, u))
    }

    fn split(p: u64) -> Result<PrimeSplit<Self>> {
        if !is_prime(p) {
            return domain(format!("{p} is not prime"));
        }
        match p % 5 {
            0 => {
                let r = Self::new(-1, 2).unit_normalize()?.0;
                Ok(PrimeSplit::new(p, SplitKind::Ramified, vec![(r, 2)]))
            }
            2 | 3 => Ok(PrimeSplit::new(p, SplitKind::Inert, vec![(Self::from_int(p.into()), 1)])),
            _ => {
                let pi = golden_prime_above(p)?;
                let a = pi.unit_normalize()?.0;
                let b = pi.conj().unit_normalize()?.0;
                let mut f = vec![(a, 1), (b, 1)];
                f.sort();
                Ok(PrimeSplit::new(p, SplitKind::Split, f))
            }
        }
    }
}

/// Inverse of a unit: ±τ^k has inverse ±(conjugate) up to the sign of the
/// norm.
pub fn unit_inverse(u: &GoldenInt) -> GoldenInt {
    let n = u.norm();
    debug_assert!(n.abs() == BigInt::from(1));
    if n.is_positive() {
        u.conj()
    } else {
        -u.conj()
    }
}

/// Square root of a totally positive element, positive in the first
/// embedding. `None` unless `x` is a square in Z[τ].
pub fn golden_sqrt(x: &GoldenInt) -> Option<GoldenInt> {
    if x.is_zero() {
        return Some(GoldenInt::zero());
    }
    if !x.is_totally_positive() {
        return None;
    }
    let f = factor_element(x).ok()?;
    let mut root = GoldenInt::one();
    for (p, e) in &f.factors {
        if e % 2 != 0 {
            return None;
        }
        root = root * p.pow(e / 2);
    }
    // the remaining unit is totally positive, hence τ^(2k)
    let one = GoldenInt::one();
    let (mut u, mut k) = (f.unit, 0i64);
    while u != one {
        if u.cmp_real(&one) == Ordering::Greater {
            u = u * GoldenInt::new(2, -1);
            k += 1;
        } else {
            u = u * GoldenInt::new(1, 1);
            k -= 1;
        }
    }
    Some(root * GoldenInt::tau_pow(k))
}

pub fn is_golden_square(x: &GoldenInt) -> bool {
    golden_sqrt(x).is_some()
}

/// An element of norm ±p for a prime p ≡ ±1 (mod 5).
fn golden_prime_above(p: u64) -> Result<GoldenInt> {
    let target = p as i128;
    let mut bound = 2 * (p.sqrt() as i128) + 2;
    for _ in 0..8 {
        for b in 0..=bound {
            for a in -bound..=bound {
                let n = a * a + a * b - b * b;
                if n == target || n == -target {
                    return Ok(GoldenInt::new(a as i64, b as i64));
                }
            }
        }
        bound *= 2;
    }
    Err(Error::Domain(format!("no element of norm ±{p} found")))
}

impl Add for GoldenInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GoldenInt { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for GoldenInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GoldenInt { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Mul for GoldenInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // τ² = τ + 1
        let bd = &self.b * &o.b;
        GoldenInt {
            a: &self.a * &o.a + &bd,
            b: &self.a * &o.b + &self.b * &o.a + bd,
        }
    }
}

impl Neg for GoldenInt {
    type Output = Self;
    fn neg(self) -> Self {
        GoldenInt { a: -self.a, b: -self.b }
    }
}

forward_ref_ops!(GoldenInt);

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        push_term(&mut s, &self.a, "", false);
        push_term(&mut s, &self.b, "t", false);
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

    fn g(a: i64, b: i64) -> GoldenInt {
        GoldenInt::new(a, b)
    }

    #[test]
    fn norms_and_units() {
        assert_eq!(g(3, 1).norm(), BigInt::from(11));
        assert_eq!(g(1, 1).norm(), BigInt::from(1));
        assert_eq!(g(-1, 2).pow(2), g(5, 0));
        for k in -6..=6 {
            let u = GoldenInt::tau_pow(k);
            assert!(u.is_unit());
            assert_eq!(u.clone() * GoldenInt::tau_pow(-k), GoldenInt::one());
            assert_eq!(unit_inverse(&u) * u, GoldenInt::one());
        }
    }

    #[test]
    fn signs_are_exact() {
        assert_eq!(g(-1, 2).sign1(), Ordering::Greater); // √5
        assert_eq!(g(-1, 2).sign2(), Ordering::Less);
        assert_eq!(g(2, -1).sign1(), Ordering::Greater); // τ⁻²
        assert_eq!(g(-2, 1).sign1(), Ordering::Less);
        // large values near zero in the first embedding: F(n) - F(n+1)/τ
        let x = GoldenInt::tau_pow(-40);
        assert_eq!(x.sign1(), Ordering::Greater);
        assert_eq!((-x).sign1(), Ordering::Less);
    }

    #[test]
    fn canonical_forms() {
        let (c, u) = (-(GoldenInt::tau() * g(1, 1))).unit_normalize().unwrap();
        assert_eq!(c, GoldenInt::one());
        assert_eq!(u, -GoldenInt::tau_pow(3));
        let a = g(3, 1).unit_normalize().unwrap().0;
        let b = (GoldenInt::tau_pow(2) * g(3, 1)).unit_normalize().unwrap().0;
        assert_eq!(a, b);
        // √5 associates: trace tie between 3−τ and 2+τ broken towards the
        // smaller first embedding
        assert_eq!(g(-1, 2).unit_normalize().unwrap().0, g(3, -1));
    }

    #[test]
    fn gcd_content() {
        assert_eq!(golden_gcd(&GoldenInt::tau(), &g(1, 1)).unwrap(), GoldenInt::one());
        assert_eq!(golden_gcd(&g(10, 0), &g(-1, 2)).unwrap(), g(3, -1));
    }

    #[test]
    fn split_law() {
        let s = GoldenInt::split(11).unwrap();
        assert_eq!(s.kind, SplitKind::Split);
        for (f, _) in &s.factors {
            assert_eq!(f.abs_norm(), BigInt::from(11));
        }
        assert!(s.factors.iter().any(|(f, _)| *f == g(3, 1).unit_normalize().unwrap().0));
        assert_eq!(GoldenInt::split(7).unwrap().kind, SplitKind::Inert);
        assert_eq!(GoldenInt::split(5).unwrap().kind, SplitKind::Ramified);
        assert!(GoldenInt::split(1).is_err());
    }

    #[test]
    fn brute_force_norm_11() {
        // every element of norm ±11 with small coordinates is an associate
        // of 3+τ or its conjugate
        let reps = [g(3, 1).unit_normalize().unwrap().0, g(4, -1).unit_normalize().unwrap().0];
        for a in -4..=4 {
            for b in -4..=4 {
                let x = g(a, b);
                if x.abs_norm() == BigInt::from(11) {
                    assert!(reps.contains(&x.unit_normalize().unwrap().0));
                }
            }
        }
    }

    #[test]
    fn square_roots_match_brute_force() {
        let mut squares = std::collections::HashSet::new();
        for a in -15i64..=15 {
            for b in -15i64..=15 {
                let y = g(a, b);
                squares.insert(y.clone() * y);
            }
        }
        for a in -30i64..=30 {
            for b in -30i64..=30 {
                let x = g(a, b);
                let r = golden_sqrt(&x);
                if let Some(r) = &r {
                    assert_eq!(r.clone() * r.clone(), x);
                    assert!(r.is_zero() || r.sign1() == Ordering::Greater);
                }
                if x.is_totally_positive() && x.a.abs() <= BigInt::from(20) && x.b.abs() <= BigInt::from(20) {
                    assert_eq!(r.is_some(), squares.contains(&x), "{x}");
                }
            }
        }
        assert_eq!(golden_sqrt(&g(0, 1)), None);
        assert_eq!(golden_sqrt(&g(2, 3)), Some(g(1, 1)));
    }

    #[test]
    fn text() {
        for s in ["3-t", "t", "-2t", "0", "5", "1+t"] {
            assert_eq!(GoldenInt::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(GoldenInt::parse("t^2").unwrap(), g(1, 1));
        assert_eq!(GoldenInt::parse("2*tau - 1").unwrap(), g(-1, 2));
    }

    proptest! {
        #[test]
        fn norm_multiplicative(a in -60i64..60, b in -60i64..60, c in -60i64..60, d in -60i64..60) {
            let (x, y) = (g(a, b), g(c, d));
            prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
            prop_assert_eq!(x.clone() * x.conj(), GoldenInt::from_int(x.norm()));
        }

        #[test]
        fn canonical_is_invariant(a in -40i64..40, b in -40i64..40, k in -5i64..5, neg: bool) {
            let x = g(a, b);
            prop_assume!(!x.is_zero());
            let (c, u) = x.unit_normalize().unwrap();
            prop_assert!(c.is_totally_positive());
            prop_assert_eq!(u.clone() * c.clone(), x.clone());
            prop_assert!(u.is_unit());
            let mut y = GoldenInt::tau_pow(k) * x;
            if neg { y = -y; }
            prop_assert_eq!(y.unit_normalize().unwrap().0, c);
        }

        #[test]
        fn gcd_divides(a in -30i64..30, b in -30i64..30, c in -30i64..30, d in -30i64..30) {
            let (x, y) = (g(a, b), g(c, d));
            prop_assume!(!x.is_zero() && !y.is_zero());
            let h = golden_gcd(&x, &y).unwrap();
            prop_assert!(h.divides(&x) && h.divides(&y));
            // the cofactors are coprime
            let (xa, ya) = (x.exact_div(&h).unwrap(), y.exact_div(&h).unwrap());
            prop_assert_eq!(golden_gcd(&xa, &ya).unwrap(), GoldenInt::one());
        }

        #[test]
        fn parse_print(a in -1000i64..1000, b in -1000i64..1000) {
            let x = g(a, b);
            prop_assert_eq!(GoldenInt::parse(&x.to_string()).unwrap(), x);
        }
    }
}
