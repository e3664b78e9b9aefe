use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use super::factor::{PrimeSplit, RingKind, SplitKind};
use super::int::{is_prime, round_div};
use super::text::{parse_terms, push_term, require_integer};
use super::{forward_ref_ops, Factorable, RingElem};
use crate::error::{domain, Error, Result};

/// Gaussian integer `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Euclidean division with nearest-integer quotient, so that
    /// `N(rem) <= N(d)/2`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return domain("division by zero");
        }
        let n = d.norm();
        let num = self.clone() * d.conj();
        let q = GaussInt { re: round_div(&num.re, &n), im: round_div(&num.im, &n) };
        let r = self.clone() - q.clone() * d.clone();
        Ok((q, r))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let terms = parse_terms(s, &["i"])?;
        let mut out = Self::zero();
        for (e, c) in terms {
            let c = require_integer(&c, s)?;
            // i^e cycles with period 4
            let unit = Self::i().pow(e % 4);
            out = out + unit * Self::from_int(c);
        }
        Ok(out)
    }
}

/// Greatest common divisor, normalized to the first-quadrant associate.
pub fn gauss_gcd(x: &GaussInt, y: &GaussInt) -> Result<GaussInt> {
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

impl Zero for GaussInt {
    fn zero() -> Self {
        Self::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussInt {
    fn one() -> Self {
        Self::new(1, 0)
    }
}

impl RingElem for GaussInt {
    fn from_int(n: BigInt) -> Self {
        GaussInt { re: n, im: BigInt::zero() }
    }

}

impl Factorable for GaussInt {
    const RING: RingKind = RingKind::Gaussian;

    fn abs_norm(&self) -> BigInt {
        self.norm()
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    fn unit_normalize(&self) -> Result<(Self, Self)> {
        if self.is_zero() {
            return domain("zero has no canonical associate");
        }
        let mut c = self.clone();
        // c = self * i^k; then self = i^{-k} * c
        for k in 0..4u32 {
            if c.re.is_positive() && !c.im.is_negative() {
                let unit = Self::i().pow((4 - k) % 4);
                return Ok((c, unit));
            }
            c = c * Self::i();
        }
        unreachable!("one associate lies in the first quadrant")
    }

    fn split(p: u64) -> Result<PrimeSplit<Self>> {
        if !is_prime(p) {
            return domain(format!("{p} is not prime"));
        }
        if p == 2 {
            return Ok(PrimeSplit::new(p, SplitKind::Ramified, vec![(Self::new(1, 1), 2)]));
        }
        if p % 4 == 3 {
            return Ok(PrimeSplit::new(p, SplitKind::Inert, vec![(Self::new(p, 0), 1)]));
        }
        let r = p.sqrt();
        for x in 1..=r {
            let y2 = p - x * x;
            let y = y2.sqrt();
            if y * y == y2 {
                let a = Self::new(x, y).unit_normalize()?.0;
                let b = a.conj().unit_normalize()?.0;
                let mut f = vec![(a, 1), (b, 1)];
                f.sort();
                return Ok(PrimeSplit::new(p, SplitKind::Split, f));
            }
        }
        Err(Error::Domain(format!("no two-square representation of {p}")))
    }
}

impl Add for GaussInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussInt { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussInt { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for GaussInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for GaussInt {
    type Output = Self;
    fn neg(self) -> Self {
        GaussInt { re: -self.re, im: -self.im }
    }
}

forward_ref_ops!(GaussInt);

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        push_term(&mut s, &self.re, "", false);
        push_term(&mut s, &self.im, "i", false);
        if s.is_empty() {
            s.push('0');
        }
        f.write_str(&s)
    }
}
