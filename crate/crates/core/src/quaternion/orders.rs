//! The Hurwitz order J and the icosian ring I. Elements are stored doubled
//! (2q), which makes all coordinates integral over Z resp. Z[τ].

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::{Integral, IntQuat, GoldenQuat, Quat, QuadQuat};
use crate::arith::{factor_element, Factorable, GoldenInt};
use crate::error::{domain, Result};
use crate::lattice::hnf::{hnf, HnfForm};
use crate::matrix::IntMat;
use crate::quadratic::Quad;

/// Hurwitz quaternion: components all in Z or all in Z + ½.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hurwitz {
    doubled: IntQuat,
}

impl Hurwitz {
    pub fn from_doubled(d: IntQuat) -> Option<Self> {
        let odd = d.c.iter().filter(|x| x.is_odd()).count();
        (odd == 0 || odd == 4).then_some(Hurwitz { doubled: d })
    }

    pub fn from_quad(q: &QuadQuat) -> Option<Self> {
        let two = Quad::int(2);
        let d = q.map(|x| x.clone() * two.clone());
        match d.clear_denominators().ok()? {
            Integral::Int(z) if d.c.iter().all(|x| x.to_rational().is_some_and(|r| r.is_integer())) => {
                Self::from_doubled(z)
            }
            _ => None,
        }
    }

    pub fn doubled(&self) -> &IntQuat {
        &self.doubled
    }

    pub fn to_quad(&self) -> QuadQuat {
        let two = Quad::int(2);
        self.doubled.to_quad().map(|x| x.clone() / two.clone())
    }

    /// `|q|²`, always an integer.
    pub fn norm(&self) -> BigInt {
        self.doubled.norm() / 4
    }

    /// The 24 units: ±1, ±i, ±j, ±k and ½(±1 ± i ± j ± k).
    pub fn units() -> Vec<Hurwitz> {
        let mut out = Vec::with_capacity(24);
        for i in 0..4 {
            for s in [2i64, -2] {
                let mut c = [0i64; 4];
                c[i] = s;
                out.push(Hurwitz { doubled: IntQuat::from_i64(c[0], c[1], c[2], c[3]) });
            }
        }
        for m in 0..16 {
            let s = |b: usize| if m >> b & 1 == 1 { -1 } else { 1 };
            out.push(Hurwitz { doubled: IntQuat::from_i64(s(0), s(1), s(2), s(3)) });
        }
        out
    }
}

impl std::ops::Mul for Hurwitz {
    type Output = Hurwitz;
    fn mul(self, o: Hurwitz) -> Hurwitz {
        let p = self.doubled * o.doubled;
        Hurwitz { doubled: p.map(|x| x / 2) }
    }
}

/// Doubled coordinates of the 120 unit icosians: ±1, ±i, ±j, ±k,
/// ½(±1 ± i ± j ± k) and the even permutations of ½(±τ, ±1, ±(1−τ), 0).
pub fn icosian_units() -> Vec<GoldenQuat> {
    let g = |a: i64, b: i64| GoldenInt::new(a, b);
    let mut out = Vec::with_capacity(120);
    for i in 0..4 {
        for s in [2i64, -2] {
            let mut q = GoldenQuat::zero();
            q.c[i] = g(s, 0);
            out.push(q);
        }
    }
    for m in 0..16 {
        let s = |b: usize| if m >> b & 1 == 1 { g(-1, 0) } else { g(1, 0) };
        out.push(Quat::new(s(0), s(1), s(2), s(3)));
    }
    let base = [g(0, 1), g(1, 0), g(1, -1), g(0, 0)];
    let even: [[usize; 4]; 12] = [
        [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2],
        [1, 0, 3, 2], [1, 2, 0, 3], [1, 3, 2, 0],
        [2, 0, 1, 3], [2, 1, 3, 0], [2, 3, 0, 1],
        [3, 0, 2, 1], [3, 1, 0, 2], [3, 2, 1, 0],
    ];
    for p in even {
        for m in 0..8 {
            let mut q = GoldenQuat::zero();
            for (k, &slot) in p.iter().enumerate() {
                let neg = k < 3 && (m >> k) & 1 == 1;
                q.c[slot] = if neg { -base[k].clone() } else { base[k].clone() };
            }
            out.push(q);
        }
    }
    out
}

/// Interleaved integer coordinates `(a₀, b₀, …, a₃, b₃)` of a golden
/// quaternion with components `a_i + b_i τ`.
pub(crate) fn flatten(q: &GoldenQuat) -> Vec<BigInt> {
    q.c.iter().flat_map(|x| [x.a.clone(), x.b.clone()]).collect()
}

#[cfg(test)]
pub(crate) fn unflatten(v: &[BigInt]) -> GoldenQuat {
    Quat::from_fn(|i| GoldenInt::new(v[2 * i].clone(), v[2 * i + 1].clone()))
}

/// Hermite form of the Z-span of the doubled unit icosians in Z⁸.
pub fn regenerate_icosian_basis() -> HnfForm {
    let cols: Vec<Vec<BigInt>> = icosian_units().iter().map(flatten).collect();
    hnf(&IntMat::from_cols(&cols).expect("shape")).expect("full rank")
}

/// Hermite basis of the icosian ring in doubled interleaved coordinates,
/// row-major; columns are the basis vectors.
const ICOSIAN_BASIS: [[i64; 8]; 8] = [
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [1, 1, 0, 1, 2, 0, 0, 0],
    [1, 0, 1, 1, 0, 2, 0, 0],
    [0, 1, 1, 1, 0, 0, 2, 0],
    [1, 1, 1, 0, 0, 0, 0, 2],
];

/// The fixed rank-8 basis of I (doubled coordinates).
pub fn icosian_basis() -> &'static HnfForm {
    static B: OnceLock<HnfForm> = OnceLock::new();
    B.get_or_init(|| {
        let m = IntMat::from_vec(8, 8, ICOSIAN_BASIS.iter().flatten().map(|&x| BigInt::from(x)).collect());
        HnfForm::from_matrix(&m).expect("hard-coded basis is in Hermite form")
    })
}

/// Element of the icosian ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Icosian {
    doubled: GoldenQuat,
}

impl Icosian {
    /// Accepts `2q` when `q ∈ I`.
    pub fn from_doubled(d: GoldenQuat) -> Option<Self> {
        icosian_basis().contains(&flatten(&d)).then_some(Icosian { doubled: d })
    }

    pub fn from_quad(q: &QuadQuat) -> Option<Self> {
        Self::membership(q).map(|(i, _)| i)
    }

    /// Membership of a golden-rational quaternion, with its integer
    /// coordinates in the basis `icosian_basis()` as certificate.
    pub fn membership(q: &QuadQuat) -> Option<(Icosian, Vec<BigInt>)> {
        let two = Quad::int(2);
        let d = q.map(|x| x.clone() * two.clone());
        let mut comps = Vec::with_capacity(4);
        for x in &d.c {
            let (a, b) = x.golden_parts()?;
            if !a.is_integer() || !b.is_integer() {
                return None;
            }
            comps.push(GoldenInt::new(a.to_integer(), b.to_integer()));
        }
        let d = Quat::from_fn(|i| comps[i].clone());
        let cert = icosian_basis().solve(&flatten(&d))?;
        Some((Icosian { doubled: d }, cert))
    }

    pub fn doubled(&self) -> &GoldenQuat {
        &self.doubled
    }

    pub fn to_quad(&self) -> QuadQuat {
        let two = Quad::int(2);
        self.doubled.to_quad().map(|x| x.clone() / two.clone())
    }

    /// `|q|² ∈ Z[τ]`.
    pub fn norm(&self) -> GoldenInt {
        let n = self.doubled.norm();
        n.exact_div(&GoldenInt::new(4, 0)).expect("icosian norms are integral")
    }

    pub fn units() -> Vec<Icosian> {
        icosian_units().into_iter().map(|d| Icosian { doubled: d }).collect()
    }

    /// No golden prime π has `q/π ∈ I`.
    pub fn is_primitive(&self) -> bool {
        self.divide_once().is_none()
    }

    fn divide_once(&self) -> Option<(Icosian, GoldenInt)> {
        let c = self.doubled.content().ok()?;
        if c.is_unit() {
            return None;
        }
        let f = factor_element(&c).ok()?;
        f.factors.iter().find_map(|(pi, _)| {
            let d = Quat::from_fn(|i| self.doubled.c[i].exact_div(pi).expect("π divides the content"));
            Icosian::from_doubled(d).map(|q| (q, pi.clone()))
        })
    }

    /// `(p, c)` with `self = c·p` and `p` primitive in I.
    pub fn make_primitive(&self) -> Result<(Icosian, GoldenInt)> {
        if self.doubled.is_zero() {
            return domain("zero icosian has no primitive part");
        }
        let (mut q, mut c) = (self.clone(), GoldenInt::one());
        while let Some((p, pi)) = q.divide_once() {
            q = p;
            c = c * pi;
        }
        Ok((q, c))
    }

    pub fn canonical_sign(&self) -> Icosian {
        Icosian { doubled: self.doubled.canonical_sign() }
    }
}

impl std::ops::Mul for Icosian {
    type Output = Icosian;
    fn mul(self, o: Icosian) -> Icosian {
        let p = self.doubled * o.doubled;
        let two = GoldenInt::new(2, 0);
        Icosian { doubled: p.map(|x| x.exact_div(&two).expect("I is a ring")) }
    }
}

/// The trace form `Tr(|q|²)` on doubled interleaved coordinates is
/// `Σ (2a² + 2ab + 3b²)/4`; this is its Gram matrix in the basis of
/// `icosian_basis()`, scaled by 4.
pub(crate) fn icosian_gram4() -> [[i64; 8]; 8] {
    let b = &ICOSIAN_BASIS;
    let form = |u: &[i64; 8], v: &[i64; 8]| -> i64 {
        (0..4)
            .map(|k| {
                let (a1, b1, a2, b2) = (u[2 * k], u[2 * k + 1], v[2 * k], v[2 * k + 1]);
                2 * a1 * a2 + a1 * b2 + b1 * a2 + 3 * b1 * b2
            })
            .sum()
    };
    let col = |j: usize| -> [i64; 8] { std::array::from_fn(|i| b[i][j]) };
    std::array::from_fn(|i| std::array::from_fn(|j| form(&col(i), &col(j))))
}

#[allow(dead_code)]
fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("small")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn hurwitz_units_form_a_group() {
        let u = Hurwitz::units();
        let set: HashSet<_> = u.iter().cloned().collect();
        assert_eq!(set.len(), 24);
        for a in &u {
            assert_eq!(a.norm(), BigInt::from(1));
            for b in &u {
                assert!(set.contains(&(a.clone() * b.clone())));
            }
        }
        assert!(Hurwitz::from_doubled(IntQuat::from_i64(1, 1, 1, 0)).is_none());
        let h = Hurwitz::from_quad(&QuadQuat::parse("(1/2,1/2,-1/2,3/2)").unwrap()).unwrap();
        assert_eq!(h.norm(), BigInt::from(3));
        assert!(Hurwitz::from_quad(&QuadQuat::parse("(1/2,1/2,0,0)").unwrap()).is_none());
    }

    #[test]
    fn icosian_units_form_a_group() {
        let u = Icosian::units();
        let set: HashSet<_> = u.iter().cloned().collect();
        assert_eq!(set.len(), 120);
        for a in &u {
            assert_eq!(a.norm(), GoldenInt::one());
            for b in &u {
                assert!(set.contains(&(a.clone() * b.clone())));
            }
        }
    }

    #[test]
    fn basis_regenerates() {
        assert_eq!(&regenerate_icosian_basis(), icosian_basis());
        assert_eq!(icosian_basis().det(), BigInt::from(16));
    }

    #[test]
    fn basis_products_close() {
        let b = icosian_basis().matrix();
        let elems: Vec<Icosian> = b
            .col_vecs()
            .iter()
            .map(|c| Icosian::from_doubled(unflatten(c)).expect("basis vector is a member"))
            .collect();
        for x in &elems {
            for y in &elems {
                let p = x.clone() * y.clone();
                assert!(Icosian::from_doubled(p.doubled().clone()).is_some());
            }
        }
        for u in Icosian::units() {
            assert!(icosian_basis().contains(&flatten(u.doubled())));
        }
    }

    #[test]
    fn membership_examples() {
        let q = |s: &str| QuadQuat::parse(s).unwrap();
        let (_, cert) = Icosian::membership(&q("(1/2*t, 1/2, 1/2-1/2*t, 0)")).unwrap();
        assert_eq!(cert.len(), 8);
        assert!(Icosian::membership(&q("(1/2,0,0,0)")).is_none());
        assert!(Icosian::membership(&q("(3,-1,4,7)")).is_some());
        assert!(Icosian::membership(&q("(1/2,1/2,1/2,1/2)")).is_some());
        assert!(Icosian::membership(&q("(1/2,1/2,0,0)")).is_none());
        assert!(Icosian::membership(&q("(1/3,0,0,0)")).is_none());
    }

    #[test]
    fn primitive_parts() {
        let two = Icosian::from_quad(&QuadQuat::parse("(2,0,0,0)").unwrap()).unwrap();
        assert!(!two.is_primitive());
        let (p, c) = two.make_primitive().unwrap();
        assert_eq!(c, GoldenInt::new(2, 0));
        assert!(p.norm().is_unit());
        let s = Icosian::from_quad(&QuadQuat::parse("(1,1,0,0)").unwrap()).unwrap();
        assert!(s.is_primitive());
        let x = Icosian::from_quad(&QuadQuat::parse("(2+t,t,0,1)").unwrap()).unwrap();
        let y = Icosian::from_quad(&QuadQuat::parse("(3-t,0,0,0)").unwrap()).unwrap();
        let (p, c) = (x.clone() * y).make_primitive().unwrap();
        assert_eq!(c.unit_normalize().unwrap().0, GoldenInt::new(3, -1));
        assert!(p.is_primitive());
    }

    #[test]
    fn trace_gram_is_integral() {
        let g = icosian_gram4();
        for (i, row) in g.iter().enumerate() {
            assert!(row[i] > 0);
            for j in 0..8 {
                assert_eq!(row[j], g[j][i]);
                assert_eq!(row[j] % 2, 0);
            }
        }
    }
}
