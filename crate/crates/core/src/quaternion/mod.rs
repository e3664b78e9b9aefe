//! Quaternions over Z, Z[τ] and their fraction fields, Cayley's map onto
//! SO(3), the map (q₁, q₂) ↦ M(q₁, q₂) onto SO(4), and the Hurwitz and
//! icosian orders.

pub mod enumerate;
pub mod orders;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::golden::{golden_gcd, is_golden_square};
use crate::arith::int::exact_sqrt;
use crate::arith::{Factorable, GoldenInt, RingElem};
use crate::error::{domain, Error, Result};
use crate::matrix::{Matrix, QuadMat};
use crate::quadratic::Quad;

pub use enumerate::{enumerate_hurwitz, enumerate_icosians, enumerate_lipschitz, enumerate_quaternions, QuatRing};
pub use orders::{icosian_basis, icosian_units, Hurwitz, Icosian};

/// Quaternion `κ + λi + μj + νk`, stored as `[κ, λ, μ, ν]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quat<T> {
    pub c: [T; 4],
}

pub type IntQuat = Quat<BigInt>;
pub type GoldenQuat = Quat<GoldenInt>;
pub type QuadQuat = Quat<Quad>;

impl<T: RingElem> Quat<T> {
    pub fn new(k: T, l: T, m: T, n: T) -> Self {
        Quat { c: [k, l, m, n] }
    }

    pub fn from_fn(f: impl FnMut(usize) -> T) -> Self {
        Quat { c: std::array::from_fn(f) }
    }

    pub fn zero() -> Self {
        Quat { c: [T::zero(), T::zero(), T::zero(), T::zero()] }
    }

    pub fn one() -> Self {
        Quat { c: [T::one(), T::zero(), T::zero(), T::zero()] }
    }

    /// Basis quaternion `e_i` (1, i, j, k for i = 0..3).
    pub fn basis(i: usize) -> Self {
        let mut q = Self::zero();
        q.c[i] = T::one();
        q
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn conj(&self) -> Self {
        let [k, l, m, n] = self.c.clone();
        Quat { c: [k, -l, -m, -n] }
    }

    /// `|q|² = κ² + λ² + μ² + ν²`.
    pub fn norm(&self) -> T {
        self.c.iter().fold(T::zero(), |acc, x| acc + x.clone() * x.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, mut f: F) -> Quat<U> {
        Quat { c: [f(&self.c[0]), f(&self.c[1]), f(&self.c[2]), f(&self.c[3])] }
    }

    /// Coordinates of `q₁ e_j q̄₂` as the columns of a 4×4 matrix.
    pub fn mat4_entries(q1: &Self, q2: &Self) -> [[T; 4]; 4] {
        let q2b = q2.conj();
        let cols: Vec<[T; 4]> = (0..4).map(|j| (q1.clone() * Self::basis(j) * q2b.clone()).c).collect();
        std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone()))
    }

    /// `|q|²·R(q)`: the integral numerator of Cayley's parametrization.
    pub fn cayley_entries(&self) -> [[T; 3]; 3] {
        let [k, l, m, n] = self.c.clone();
        let two = T::from_int(2.into());
        let sq = |x: &T| x.clone() * x.clone();
        let (k2, l2, m2, n2) = (sq(&k), sq(&l), sq(&m), sq(&n));
        let p = |a: &T, b: &T| two.clone() * a.clone() * b.clone();
        [
            [
                k2.clone() + l2.clone() - m2.clone() - n2.clone(),
                -p(&k, &n) + p(&l, &m),
                p(&k, &m) + p(&l, &n),
            ],
            [
                p(&k, &n) + p(&l, &m),
                k2.clone() - l2.clone() + m2.clone() - n2.clone(),
                -p(&k, &l) + p(&m, &n),
            ],
            [-p(&k, &m) + p(&l, &n), p(&k, &l) + p(&m, &n), k2 - l2 - m2 + n2],
        ]
    }
}

impl<T: RingElem> Mul for Quat<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let [a1, b1, c1, d1] = self.c;
        let [a2, b2, c2, d2] = o.c;
        let m = |x: &T, y: &T| x.clone() * y.clone();
        Quat {
            c: [
                m(&a1, &a2) - m(&b1, &b2) - m(&c1, &c2) - m(&d1, &d2),
                m(&a1, &b2) + m(&b1, &a2) + m(&c1, &d2) - m(&d1, &c2),
                m(&a1, &c2) - m(&b1, &d2) + m(&c1, &a2) + m(&d1, &b2),
                m(&a1, &d2) + m(&b1, &c2) - m(&c1, &b2) + m(&d1, &a2),
            ],
        }
    }
}

impl<T: RingElem> Add for Quat<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let [a, b, c, d] = self.c;
        let [e, f, g, h] = o.c;
        Quat { c: [a + e, b + f, c + g, d + h] }
    }
}

impl<T: RingElem> Sub for Quat<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: RingElem> Neg for Quat<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|x| -x.clone())
    }
}

impl<T: fmt::Display> fmt::Display for Quat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.c[0], self.c[1], self.c[2], self.c[3])
    }
}

impl Quat<BigInt> {
    pub fn from_i64(k: i64, l: i64, m: i64, n: i64) -> Self {
        Quat { c: [k.into(), l.into(), m.into(), n.into()] }
    }

    pub fn to_quad(&self) -> QuadQuat {
        self.map(|x| Quad::from(x.clone()))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// `(p, c)` with `self = c·p`, `p` primitive and its first nonzero
    /// component positive.
    pub fn make_primitive(&self) -> Result<(IntQuat, BigInt)> {
        if self.is_zero() {
            return domain("zero quaternion has no primitive part");
        }
        let mut g = self.content();
        if first_nonzero(&self.c).is_negative() {
            g = -g;
        }
        Ok((self.map(|x| x / &g), g))
    }

    /// Sign representative: first nonzero component positive.
    pub fn canonical_sign(&self) -> IntQuat {
        if self.is_zero() || first_nonzero(&self.c).is_positive() {
            self.clone()
        } else {
            -self.clone()
        }
    }
}

fn first_nonzero<T: RingElem>(c: &[T; 4]) -> &T {
    c.iter().find(|x| !x.is_zero()).expect("nonzero quaternion")
}

impl Quat<GoldenInt> {
    pub fn to_quad(&self) -> QuadQuat {
        self.map(Quad::from_golden_int)
    }

    /// Canonical gcd of the components in Z[τ].
    pub fn content(&self) -> Result<GoldenInt> {
        let mut g = GoldenInt::zero();
        for x in &self.c {
            g = if g.is_zero() { x.clone() } else { golden_gcd(&g, x)? };
        }
        if g.is_zero() {
            return domain("zero quaternion has no content");
        }
        Ok(g.unit_normalize()?.0)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_ok_and(|g| g.is_unit())
    }

    /// `(p, c)` with `self = c·p`, `p` primitive over Z[τ] and its first
    /// nonzero component equal to its own canonical associate.
    pub fn make_primitive(&self) -> Result<(GoldenQuat, GoldenInt)> {
        let g = self.content()?;
        let p = self.map(|x| x.exact_div(&g).expect("content divides"));
        let (_, u) = first_nonzero(&p.c).unit_normalize()?;
        let ui = crate::arith::golden::unit_inverse(&u);
        Ok((p.scale(&ui), g * u))
    }

    /// Sign representative: first nonzero component positive in the
    /// standard embedding.
    pub fn canonical_sign(&self) -> GoldenQuat {
        if self.is_zero() || first_nonzero(&self.c).sign1() == std::cmp::Ordering::Greater {
            self.clone()
        } else {
            -self.clone()
        }
    }
}

/// Ring of definition of a field-valued quaternion after clearing
/// denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Integral {
    Int(IntQuat),
    Golden(GoldenQuat),
}

impl Quat<Quad> {
    /// Parses `(k,l,m,n)`; the components use the scalar syntax of `Quad`.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("quaternion must look like (k,l,m,n): {s:?}")))?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("quaternion needs 4 components: {s:?}")));
        }
        let c: Vec<Quad> = parts.iter().map(|p| Quad::parse(p)).collect::<Result<_>>()?;
        let q = Quat { c: [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()] };
        q.field()?;
        Ok(q)
    }

    /// Common radicand of the components: 1 (rational) or 5 (golden).
    pub fn field(&self) -> Result<u64> {
        let mut d = 1;
        for x in &self.c {
            match x.radicand() {
                1 => {}
                5 => d = 5,
                e => return Err(Error::Unsupported(format!("quaternion entries in Q(√{e})"))),
            }
        }
        Ok(d)
    }

    /// Scales by a positive rational so that all components become
    /// integral over Z (rational input) or Z[τ] (golden input).
    pub fn clear_denominators(&self) -> Result<Integral> {
        if self.is_zero() {
            return domain("zero quaternion");
        }
        if self.field()? == 1 {
            let rats: Vec<BigRational> = self.c.iter().map(|x| x.to_rational().expect("rational")).collect();
            let den = rats.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
            let c: Vec<BigInt> = rats.iter().map(|r| (r * &den).to_integer()).collect();
            return Ok(Integral::Int(Quat { c: [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()] }));
        }
        let parts: Vec<(BigRational, BigRational)> =
            self.c.iter().map(|x| x.golden_parts().expect("golden")).collect();
        let den = parts.iter().fold(BigInt::one(), |l, (a, b)| l.lcm(a.denom()).lcm(b.denom()));
        let c: Vec<GoldenInt> = parts
            .iter()
            .map(|(a, b)| GoldenInt::new((a * &den).to_integer(), (b * &den).to_integer()))
            .collect();
        Ok(Integral::Golden(Quat { c: [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()] }))
    }
}

fn to_matrix<T: Clone, const N: usize>(e: [[T; N]; N]) -> Matrix<T> {
    Matrix::from_vec(N, N, e.into_iter().flatten().collect())
}

/// Cayley's parametrization `R(q) = (cayley numerator)/|q|²` of SO(3).
pub fn cayley3(q: &QuadQuat) -> Result<QuadMat> {
    q.field()?;
    if q.is_zero() {
        return domain("Cayley map of the zero quaternion");
    }
    let n = q.norm();
    let e = q.cayley_entries();
    Ok(to_matrix(e).map(|x| x.clone() / n.clone()))
}

/// Recovers a quaternion `q` with `R(q) = r` from a rotation in SO(3) over
/// Q or Q(τ). The result is determined up to a nonzero scalar.
pub fn cayley_inverse(r: &QuadMat) -> Result<QuadQuat> {
    if r.rows() != 3 || r.cols() != 3 {
        return Err(Error::Dimension("Cayley inversion needs a 3×3 matrix".into()));
    }
    let e = |i: usize, j: usize| r.get(i, j).clone();
    let one = Quad::int(1);
    // each row is (4c/|q|²)·q for c = κ, λ, μ, ν respectively
    let rows = [
        [one.clone() + e(0, 0) + e(1, 1) + e(2, 2), e(2, 1) - e(1, 2), e(0, 2) - e(2, 0), e(1, 0) - e(0, 1)],
        [e(2, 1) - e(1, 2), one.clone() + e(0, 0) - e(1, 1) - e(2, 2), e(0, 1) + e(1, 0), e(0, 2) + e(2, 0)],
        [e(0, 2) - e(2, 0), e(0, 1) + e(1, 0), one.clone() - e(0, 0) + e(1, 1) - e(2, 2), e(1, 2) + e(2, 1)],
        [e(1, 0) - e(0, 1), e(0, 2) + e(2, 0), e(1, 2) + e(2, 1), one - e(0, 0) - e(1, 1) + e(2, 2)],
    ];
    for row in rows {
        let q = Quat { c: row };
        if !q.is_zero() {
            if &cayley3(&q)? != r {
                return Err(Error::NotOrthogonal("matrix is not a rotation".into()));
            }
            return Ok(q);
        }
    }
    Err(Error::NotOrthogonal("matrix is not a rotation".into()))
}

/// `M(q₁, q₂)`, the matrix of `x ↦ q₁ x q̄₂` on R⁴.
pub fn mat4<T: RingElem>(q1: &Quat<T>, q2: &Quat<T>) -> Result<Matrix<T>> {
    if q1.is_zero() || q2.is_zero() {
        return domain("M(q₁, q₂) needs nonzero quaternions");
    }
    Ok(to_matrix(Quat::mat4_entries(q1, q2)))
}

/// The rotation `M(q₁, q₂)/|q₁q₂|`. For rational pairs the result lives in
/// Q(√n) with n the squarefree part of |q₁q₂|²; for golden pairs the norm
/// must be a square in Q(τ).
pub fn rot4(q1: &QuadQuat, q2: &QuadQuat) -> Result<QuadMat> {
    let (d1, d2) = (q1.field()?, q2.field()?);
    let m = mat4(q1, q2)?;
    let n = q1.norm() * q2.norm();
    let s = n.sqrt().ok_or_else(|| Error::NotAdmissible(format!("|q₁q₂|² = {n} has no root in Q(τ)")))?;
    if d1.max(d2) == 5 && s.radicand() != 1 && s.radicand() != 5 {
        return Err(Error::NotAdmissible(format!("|q₁q₂|² = {n} is not a square in Q(τ)")));
    }
    Ok(m.map(|x| x.clone() / s.clone()))
}

/// Recovers `(q₁, q₂)` with `rot4(q₁, q₂) = r` from a rotation in SO(4)
/// over Q or Q(τ).
pub fn rot4_inverse(r: &QuadMat) -> Result<(QuadQuat, QuadQuat)> {
    if r.rows() != 4 || r.cols() != 4 {
        return Err(Error::Dimension("needs a 4×4 matrix".into()));
    }
    // y ↦ conj(r(ȳ)) is y ↦ q₂ y q̄₁ up to scale
    let c = Matrix::from_vec(4, 4, (0..16).map(|i| Quad::int(match i {
        0 => 1,
        5 | 10 | 15 => -1,
        _ => 0,
    })).collect());
    let r2 = c.mul(r)?.mul(&c)?;
    let not_rot = || Error::NotOrthogonal("matrix is not a rotation of the form x ↦ q₁xq̄₂".into());
    let q1 = left_factor(r).ok_or_else(not_rot)?;
    let q2 = left_factor(&r2).ok_or_else(not_rot)?;
    for b in [q2.clone(), -q2] {
        if rot4(&q1, &b).is_ok_and(|m| &m == r) {
            return Ok((q1, b));
        }
    }
    Err(not_rot())
}

/// For `r(x) = q₁ x q̄₂/s`: `Σ_j r(e_j)·e_k·ē_j = 4(q₂)_k·q₁/s`, nonzero
/// for some k.
fn left_factor(r: &QuadMat) -> Option<QuadQuat> {
    (0..4).find_map(|k| {
        let acc = (0..4).fold(QuadQuat::zero(), |acc, j| {
            let col = Quat::from_fn(|i| r.get(i, j).clone());
            acc + col * QuadQuat::basis(k) * QuadQuat::basis(j).conj()
        });
        (!acc.is_zero()).then_some(acc)
    })
}

/// `|q₁q₂|²` is a square in N.
pub fn is_admissible_pair(q1: &IntQuat, q2: &IntQuat) -> Result<bool> {
    if !q1.is_primitive() || !q2.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    Ok(exact_sqrt(&(q1.norm() * q2.norm())).is_some())
}

/// `|q₁q₂|²` is a square in Z[τ].
pub fn is_admissible_golden_pair(q1: &GoldenQuat, q2: &GoldenQuat) -> Result<bool> {
    if !q1.is_primitive() || !q2.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    Ok(is_golden_square(&(q1.norm() * q2.norm())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iq(k: i64, l: i64, m: i64, n: i64) -> IntQuat {
        IntQuat::from_i64(k, l, m, n)
    }

    fn qq(s: &str) -> QuadQuat {
        QuadQuat::parse(s).unwrap()
    }

    fn trace(m: &QuadMat) -> Quad {
        (0..m.rows()).fold(Quad::int(0), |a, i| a + m.get(i, i).clone())
    }

    #[test]
    fn hamilton_table() {
        let (i, j, k) = (IntQuat::basis(1), IntQuat::basis(2), IntQuat::basis(3));
        assert_eq!(i.clone() * j.clone(), k.clone());
        assert_eq!(j.clone() * k.clone(), i.clone());
        assert_eq!(k.clone() * i.clone(), j.clone());
        assert_eq!(i.clone() * i.clone(), -IntQuat::one());
        assert_eq!(j.clone() * i, -k);
    }

    #[test]
    fn cayley_examples() {
        assert!(cayley3(&qq("(1,0,0,0)")).unwrap().is_identity());
        let r = cayley3(&qq("(0,1,1,1)")).unwrap();
        let v: Vec<Quad> = r.mul_vec(&[Quad::int(1), Quad::int(1), Quad::int(1)]);
        assert_eq!(v, vec![Quad::int(1); 3]);
        assert_eq!(trace(&r), Quad::int(-1)); // angle π
        let r = cayley3(&qq("(1,1,1,1)")).unwrap();
        assert_eq!(trace(&r), Quad::int(0));
        assert!(r.mul(&r).unwrap().mul(&r).unwrap().is_identity());
        assert!(cayley3(&qq("(0,0,0,0)")).is_err());
        assert_eq!(cayley3(&qq("(1,2,3,4)")).unwrap(), cayley3(&qq("(-1,-2,-3,-4)")).unwrap());
    }

    #[test]
    fn mat4_matches_explicit_matrix() {
        let (k, l, m, n) = (2i64, -1, 3, 5);
        let (a, b, c, d) = (1i64, 4, -2, 3);
        let mm = mat4(&iq(k, l, m, n), &iq(a, b, c, d)).unwrap();
        let explicit: [[i64; 4]; 4] = [
            [a * k + b * l + c * m + d * n, -a * l + b * k + c * n - d * m, -a * m - b * n + c * k + d * l, -a * n + b * m - c * l + d * k],
            [a * l - b * k + c * n - d * m, a * k + b * l - c * m - d * n, -a * n + b * m + c * l - d * k, a * m + b * n + c * k + d * l],
            [a * m - b * n - c * k + d * l, a * n + b * m + c * l + d * k, a * k - b * l + c * m - d * n, -a * l - b * k + c * n + d * m],
            [a * n + b * m - c * l - d * k, -a * m + b * n - c * k + d * l, a * l + b * k + c * n + d * m, a * k - b * l - c * m + d * n],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(mm.get(i, j), &BigInt::from(explicit[i][j]), "entry {i},{j}");
            }
        }
    }

    #[test]
    fn mat4_examples() {
        assert!(mat4(&IntQuat::one(), &IntQuat::one()).unwrap().is_identity());
        let (p, q) = (iq(1, 2, 0, -1), iq(3, 1, 1, 1));
        assert_eq!(mat4(&p, &q).unwrap(), mat4(&-p.clone(), &-q.clone()).unwrap());
        assert!(mat4(&IntQuat::zero(), &q).is_err());
    }

    #[test]
    fn primitive_parts() {
        assert_eq!(iq(2, 4, 6, 8).make_primitive().unwrap(), (iq(1, 2, 3, 4), BigInt::from(2)));
        assert_eq!(iq(0, -2, 4, 0).make_primitive().unwrap(), (iq(0, 1, -2, 0), BigInt::from(-2)));
        assert!(iq(1, 1, 1, 1).is_primitive());
        assert!(!iq(2, 0, 2, 0).is_primitive());
        let g = |a: i64, b: i64| GoldenInt::new(a, b);
        let z = GoldenInt::zero;
        let q = Quat::new(g(0, 1), g(1, 1), z(), z());
        let (p, c) = q.make_primitive().unwrap();
        assert_eq!(c, g(0, 1));
        assert_eq!(p, Quat::new(g(1, 0), g(0, 1), z(), z()));
        assert!(!Quat::new(g(2, 0), g(0, 2), z(), z()).is_primitive());
        assert!(Quat::new(g(2, 0), g(0, 1), z(), z()).is_primitive());
    }

    #[test]
    fn admissibility() {
        let a = iq(1, 1, 1, 0);
        assert!(is_admissible_pair(&a, &a).unwrap());
        assert!(!is_admissible_pair(&a, &IntQuat::one()).unwrap());
        assert!(!is_admissible_pair(&iq(1, 1, 0, 0), &iq(1, 1, 1, 1)).unwrap());
        assert_eq!(is_admissible_pair(&iq(2, 0, 0, 0), &a), Err(Error::NotPrimitive));
        let g = |a: i64, b: i64| GoldenInt::new(a, b);
        let z = GoldenInt::zero;
        // |q|² = τ², a square; 2+τ has norm 5 and is no square
        let t = Quat::new(g(0, 1), z(), z(), z());
        let s = Quat::new(g(1, 0), g(1, 0), g(0, 1), z());
        assert!(is_admissible_golden_pair(&t, &GoldenQuat::one()).unwrap());
        assert!(!is_admissible_golden_pair(&s, &GoldenQuat::one()).unwrap());
        assert!(is_admissible_golden_pair(&s, &s).unwrap());
    }

    #[test]
    fn rot4_normalizes() {
        let a = qq("(1,1,1,0)");
        let r = rot4(&a, &a).unwrap();
        assert!(r.is_orthogonal());
        assert_eq!(r.det().unwrap(), Quad::int(1));
        let r = rot4(&qq("(1,1,0,0)"), &qq("(1,0,0,0)")).unwrap();
        assert_eq!(r.radicand(), 2);
        assert!(r.is_orthogonal());
        assert!(rot4(&qq("(t,0,0,0)"), &qq("(1,0,0,0)")).is_ok());
        assert!(rot4(&qq("(1,1,t,0)"), &qq("(1,0,0,0)")).is_err());
    }

    #[test]
    fn inverses() {
        let q = qq("(1,2,-1,3)");
        let r = cayley3(&q).unwrap();
        let p = cayley_inverse(&r).unwrap();
        assert_eq!(cayley3(&p).unwrap(), r);
        let g = qq("(1/2*t, 1/2, 1/2-1/2*t, 0)");
        let r = cayley3(&g).unwrap();
        assert_eq!(cayley3(&cayley_inverse(&r).unwrap()).unwrap(), r);
        let bad = QuadMat::parse("1,0,0;0,1,0;0,0,-1").unwrap();
        assert!(cayley_inverse(&bad).is_err());
        let (q1, q2) = (qq("(1,2,0,1)"), qq("(2,1,1,0)"));
        let r = rot4(&q1, &q2).unwrap();
        let (p1, p2) = rot4_inverse(&r).unwrap();
        assert_eq!(rot4(&p1, &p2).unwrap(), r);
    }

    #[test]
    fn parse_and_print() {
        let q = qq("( 1/2+1/2*t , -1, 0, t )");
        assert_eq!(q.to_string(), "(1/2+1/2*t,-1,0,t)");
        assert_eq!(qq(&q.to_string()), q);
        assert!(QuadQuat::parse("(1,2,3)").is_err());
        assert!(QuadQuat::parse("1,2,3,4").is_err());
        assert!(QuadQuat::parse("(sqrt(2),0,0,t)").is_err());
        assert!(matches!(qq("(1/2,1,0,0)").clear_denominators().unwrap(), Integral::Int(q) if q == iq(1, 2, 0, 0)));
    }

    fn small() -> impl Strategy<Value = IntQuat> {
        prop::array::uniform4(-6i64..=6).prop_map(|[a, b, c, d]| IntQuat::from_i64(a, b, c, d))
    }

    fn golden() -> impl Strategy<Value = QuadQuat> {
        prop::array::uniform8(-3i64..=3).prop_map(|v| {
            Quat::from_fn(|i| Quad::from_golden_int(&GoldenInt::new(v[2 * i], v[2 * i + 1])))
        })
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(p in small(), q in small()) {
            prop_assert_eq!((p.clone() * q.clone()).norm(), p.norm() * q.norm());
            prop_assert_eq!((p.clone() * q.clone()).conj(), q.conj() * p.conj());
        }

        #[test]
        fn cayley_is_a_homomorphism(p in small(), q in small()) {
            prop_assume!(!p.is_zero() && !q.is_zero());
            let (pq, qq) = (p.to_quad(), q.to_quad());
            let r = cayley3(&(pq.clone() * qq.clone())).unwrap();
            let rp = cayley3(&pq).unwrap();
            prop_assert_eq!(r.clone(), rp.mul(&cayley3(&qq).unwrap()).unwrap());
            prop_assert!(r.is_orthogonal());
            prop_assert_eq!(r.det().unwrap(), Quad::int(1));
            // axis and angle
            let axis = [pq.c[1].clone(), pq.c[2].clone(), pq.c[3].clone()];
            prop_assert_eq!(rp.mul_vec(&axis), axis.to_vec());
            let n = pq.norm();
            let cos = (pq.c[0].clone() * pq.c[0].clone() - axis.iter().fold(Quad::int(0), |a, x| a + x.clone() * x.clone())) / n;
            prop_assert_eq!(trace(&rp), Quad::int(1) + Quad::int(2) * cos);
        }

        #[test]
        fn golden_cayley(p in golden(), q in golden()) {
            prop_assume!(!p.is_zero() && !q.is_zero());
            let r = cayley3(&(p.clone() * q.clone())).unwrap();
            prop_assert_eq!(r.clone(), cayley3(&p).unwrap().mul(&cayley3(&q).unwrap()).unwrap());
            prop_assert!(r.is_orthogonal());
            prop_assert_eq!(cayley3(&cayley_inverse(&r).unwrap()).unwrap(), r);
        }

        #[test]
        fn mat4_laws(p in small(), q in small()) {
            prop_assume!(!p.is_zero() && !q.is_zero());
            let m = mat4(&p, &q).unwrap();
            let n2 = p.norm() * q.norm();
            let det = crate::matrix::RatMat::from_int(&m).det().unwrap();
            prop_assert_eq!(det, BigRational::from_integer(&n2 * &n2));
            let mmt = m.mul(&m.transpose()).unwrap();
            prop_assert_eq!(mmt, Matrix::identity(4).scale(&n2));
            let r = rot4(&p.to_quad(), &q.to_quad()).unwrap();
            prop_assert!(r.is_orthogonal());
        }

        #[test]
        fn rot4_inverse_round_trip(p in small(), q in small()) {
            prop_assume!(!p.is_zero() && !q.is_zero());
            // equal norms make the pair admissible
            let (a, b) = ((p.clone() * q.clone()).to_quad(), (q * p).to_quad());
            let r = rot4(&a, &b).unwrap();
            let (x, y) = rot4_inverse(&r).unwrap();
            prop_assert_eq!(rot4(&x, &y).unwrap(), r);
        }
    }
}
