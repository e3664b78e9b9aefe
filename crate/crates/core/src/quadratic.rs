//! Numbers `a + b√d` with rational `a`, `b`: the entries of isometries.
//! Rational matrices use `d = 1`; golden matrices live in Q(√5) = Q(τ).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::text::{parse_rational, parse_terms};
use crate::arith::golden::golden_sqrt;
use crate::arith::int::exact_sqrt;
use crate::arith::{GoldenInt, RingElem};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad {
    a: BigRational,
    b: BigRational,
    /// Squarefree radicand; 1 exactly when `b == 0`.
    d: u64,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Splits `d = s²·d₀` with `d₀` squarefree.
fn squarefree(mut d: u64) -> (u64, u64) {
    let (mut s, mut f) = (1u64, 2u64);
    while f * f <= d {
        while d % (f * f) == 0 {
            d /= f * f;
            s *= f;
        }
        f += 1;
    }
    (s, d)
}

impl Quad {
    /// `a + b√d`; `d` is reduced to its squarefree part.
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Self {
        assert!(d >= 1, "radicand must be positive");
        let (s, d0) = squarefree(d);
        let b = b * BigRational::from_integer(s.into());
        if d0 == 1 {
            Quad { a: a + b, b: BigRational::zero(), d: 1 }
        } else if b.is_zero() {
            Quad { a, b, d: 1 }
        } else {
            Quad { a, b, d: d0 }
        }
    }

    pub fn rational(a: BigRational) -> Self {
        Quad { a, b: BigRational::zero(), d: 1 }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(rat(n))
    }

    /// `α + βτ` as an element of Q(√5).
    pub fn golden(alpha: BigRational, beta: BigRational) -> Self {
        let half = BigRational::new(1.into(), 2.into());
        let b = &beta * &half;
        Self::new(alpha + &b, b, 5)
    }

    pub fn from_golden_int(g: &GoldenInt) -> Self {
        Self::golden(BigRational::from_integer(g.a.clone()), BigRational::from_integer(g.b.clone()))
    }

    pub fn tau() -> Self {
        Self::golden(rat(0), rat(1))
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    /// Coordinates `(α, β)` with `self = α + βτ`, if the number lies in Q(τ).
    pub fn golden_parts(&self) -> Option<(BigRational, BigRational)> {
        match self.d {
            1 | 5 => Some((&self.a - &self.b, &self.b * rat(2))),
            _ => None,
        }
    }

    /// Galois conjugate `a − b√d`.
    pub fn conj(&self) -> Self {
        Quad { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.into())
    }

    pub fn sign(&self) -> Ordering {
        let zero = BigRational::zero();
        match (self.a.cmp(&zero), self.b.cmp(&zero)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2 = &self.b * &self.b * BigRational::from_integer(self.d.into());
                if a2 > b2 {
                    sa
                } else {
                    sa.reverse()
                }
            }
        }
    }

    /// Exact square root inside Q or Q(τ): the root that is positive in
    /// the standard embedding. Rationals without a rational root get one in
    /// Q(√d).
    pub fn sqrt(&self) -> Option<Quad> {
        match self.sign() {
            Ordering::Less => return None,
            Ordering::Equal => return Some(Quad::int(0)),
            Ordering::Greater => {}
        }
        if self.d == 1 {
            let (n, d) = (self.a.numer(), self.a.denom());
            let nd: BigInt = n * d;
            let d_rat = BigRational::from_integer(d.clone());
            return Some(match exact_sqrt(&nd) {
                Some(r) => Quad::rational(BigRational::from_integer(r) / d_rat),
                None => {
                    let nd = nd.to_u64()?;
                    Quad::new(rat(0), BigRational::one() / d_rat, nd)
                }
            });
        }
        let (al, be) = self.golden_parts()?;
        let den = num_integer::Integer::lcm(al.denom(), be.denom());
        let den_r = BigRational::from_integer(den.clone());
        let sq = &den_r * &den_r;
        let g = GoldenInt::new((&al * &sq).to_integer(), (&be * &sq).to_integer());
        let r = golden_sqrt(&g)?;
        Some(Quad::from_golden_int(&r) / Quad::rational(den_r))
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    fn common_d(&self, o: &Self) -> u64 {
        match (self.d, o.d) {
            (1, d) | (d, 1) => d,
            (d, e) if d == e => d,
            (d, e) => panic!("mixed quadratic fields Q(√{d}) and Q(√{e})"),
        }
    }

    pub fn compatible(&self, o: &Self) -> bool {
        self.d == 1 || o.d == 1 || self.d == o.d
    }

    /// Parses `p/q`, golden `a+bt` (rational coefficients, powers of t
    /// allowed) or `a+b*sqrt(n)`.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty entry".into()));
        }
        if t.contains("sqrt(") {
            let mut radicand: Option<u64> = None;
            let mut rest = String::new();
            let mut tail = t.as_str();
            while let Some(pos) = tail.find("sqrt(") {
                rest.push_str(&tail[..pos]);
                let after = &tail[pos + 5..];
                let close = after
                    .find(')')
                    .ok_or_else(|| Error::Parse(format!("unclosed sqrt in {s:?}")))?;
                let n: u64 = after[..close]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad radicand in {s:?}")))?;
                if n == 0 {
                    return Err(Error::Parse(format!("zero radicand in {s:?}")));
                }
                if radicand.is_some_and(|r| r != n) {
                    return Err(Error::Unsupported(format!("several radicands in {s:?}")));
                }
                radicand = Some(n);
                rest.push('s');
                tail = &after[close + 1..];
            }
            rest.push_str(tail);
            let n = radicand.expect("at least one sqrt");
            let terms = parse_terms(&rest, &["s"])?;
            let mut out = Quad::int(0);
            let root = Quad::new(rat(0), rat(1), n);
            for (e, c) in terms {
                let mut term = Quad::rational(c);
                for _ in 0..e {
                    term = term * root.clone();
                }
                out = out + term;
            }
            return Ok(out);
        }
        if t.contains('t') {
            let terms = parse_terms(&t, &["tau", "t"])?;
            let mut out = Quad::int(0);
            for (e, c) in terms {
                let g = GoldenInt::tau_pow(e as i64);
                out = out + Quad::rational(c) * Quad::from_golden_int(&g);
            }
            return Ok(out);
        }
        Ok(Quad::rational(parse_rational(&t)?))
    }
}

fn push_rat(out: &mut String, c: &BigRational, sym: &str) {
    if c.is_zero() {
        return;
    }
    if c.is_negative() {
        out.push('-');
    } else if !out.is_empty() {
        out.push('+');
    }
    let a = c.abs();
    if sym.is_empty() {
        out.push_str(&a.to_string());
    } else if a.is_one() {
        out.push_str(sym);
    } else {
        out.push_str(&a.to_string());
        out.push('*');
        out.push_str(sym);
    }
}

impl fmt::Display for Quad {
    /// Golden entries print as `α+β*t`, others as `a+b*sqrt(d)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        if self.d == 5 {
            let (al, be) = self.golden_parts().expect("golden");
            push_rat(&mut s, &al, "");
            push_rat(&mut s, &be, "t");
        } else {
            push_rat(&mut s, &self.a, "");
            push_rat(&mut s, &self.b, &format!("sqrt({})", self.d));
        }
        if s.is_empty() {
            s.push('0');
        }
        f.write_str(&s)
    }
}

impl Add for Quad {
    type Output = Quad;
    fn add(self, o: Quad) -> Quad {
        let d = self.common_d(&o);
        Quad::new(self.a + o.a, self.b + o.b, d)
    }
}

impl Sub for Quad {
    type Output = Quad;
    fn sub(self, o: Quad) -> Quad {
        let d = self.common_d(&o);
        Quad::new(self.a - o.a, self.b - o.b, d)
    }
}

impl Mul for Quad {
    type Output = Quad;
    fn mul(self, o: Quad) -> Quad {
        let d = self.common_d(&o);
        let dd = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &o.a + &self.b * &o.b * dd;
        let b = &self.a * &o.b + &self.b * &o.a;
        Quad::new(a, b, d)
    }
}

impl Div for Quad {
    type Output = Quad;
    fn div(self, o: Quad) -> Quad {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero");
        let num = self * o.conj();
        Quad::new(num.a / &n, num.b / &n, num.d.max(1))
    }
}

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Zero for Quad {
    fn zero() -> Self {
        Quad::int(0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Quad {
    fn one() -> Self {
        Quad::int(1)
    }
}

impl RingElem for Quad {
    fn from_int(n: BigInt) -> Self {
        n.into()
    }
}

impl From<BigRational> for Quad {
    fn from(a: BigRational) -> Self {
        Quad::rational(a)
    }
}

impl From<BigInt> for Quad {
    fn from(a: BigInt) -> Self {
        Quad::rational(BigRational::from_integer(a))
    }
}

impl From<GoldenInt> for Quad {
    fn from(g: GoldenInt) -> Self {
        Quad::from_golden_int(&g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Quad {
        Quad::parse(s).unwrap()
    }

    #[test]
    fn golden_round_trip() {
        let t = Quad::tau();
        assert_eq!(t.clone() * t.clone(), t.clone() + Quad::int(1));
        assert_eq!(t.to_string(), "t");
        assert_eq!(q("1/2 + 1/2*t").to_string(), "1/2+1/2*t");
        assert_eq!(q("t^2"), q("1+t"));
        assert_eq!(q("sqrt(5)"), q("2t-1"));
        assert_eq!(q("-1/2*sqrt(2)").to_string(), "-1/2*sqrt(2)");
        assert_eq!(q("sqrt(8)"), q("2*sqrt(2)"));
        assert!(q("sqrt(4)").is_rational());
        assert!(Quad::parse("sqrt(2)+sqrt(3)").is_err());
        assert!(Quad::parse("1/0").is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(q("9/4").sqrt(), Some(q("3/2")));
        assert_eq!(q("2").sqrt(), Some(q("sqrt(2)")));
        assert_eq!(q("1/2").sqrt(), Some(q("1/2*sqrt(2)")));
        assert_eq!(q("t^2").sqrt(), Some(q("t")));
        assert_eq!(q("5").sqrt(), Some(q("2t-1")));
        assert_eq!(q("t").sqrt(), None);
        assert_eq!(q("-1").sqrt(), None);
        assert_eq!(q("10/9+7/9*t").sqrt(), Some(q("1+1/3*t")));
    }

    #[test]
    fn signs() {
        assert_eq!(q("2-sqrt(3)").sign(), Ordering::Greater);
        assert_eq!(q("1-t").sign(), Ordering::Less);
        assert_eq!(q("0").sign(), Ordering::Equal);
    }

    fn golden() -> impl Strategy<Value = Quad> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(a, b, c, d)| {
            Quad::golden(BigRational::new(a.into(), b.into()), BigRational::new(c.into(), d.into()))
        })
    }

    proptest! {
        #[test]
        fn field_laws(x in golden(), y in golden()) {
            prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
            if !y.is_zero() {
                prop_assert_eq!((x.clone() / y.clone()) * y.clone(), x.clone());
            }
            prop_assert_eq!(Quad::parse(&x.to_string()).unwrap(), x);
        }
    }
}
