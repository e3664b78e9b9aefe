//! Coincidence indices, CSL bases, enumeration of coincidence rotations and
//! classification of CSLs for the twelve structures.

mod enumerate;
mod frac;
mod sigma;
mod structure;

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

pub use enumerate::{
    classify_csls, enumerate_rotations, module_dual_check, point_group, Classification, CslOrbit, DualCheck,
    EnumOptions, ResumeToken, Rotation, RotationPage,
};
pub use frac::FracMat;
pub use sigma::{
    action, denominator, golden_denominator, icosian_gcd_sigma, is_coincidence, reflection_sigma, sigma,
    sigma_closed_form, sigma_oracle, sigma_oracle_value, CoincidenceResult, Denominator, Method, Sigma,
};
pub use structure::{in_icosahedral_module, Ambient, Structure, StructureSpec};

use crate::arith::{CycloInt, GaussInt};
use crate::error::{Error, Result};
use crate::matrix::QuadMat;
use crate::quadratic::Quad;
use crate::quaternion::{cayley3, rot4, QuadQuat};

/// `(k,l,m,n)` with an optional trailing scale, e.g. `(tau,1,tau-1,0)/2`.
fn parse_scaled(s: &str) -> Result<QuadQuat> {
    let t = s.trim();
    match t.rfind(")/") {
        Some(cut) => {
            let k = Quad::parse(&t[cut + 2..])?;
            if k == Quad::int(0) {
                return Err(Error::Parse(format!("zero scale in {s:?}")));
            }
            let q = QuadQuat::parse(&t[..=cut])?;
            Ok(QuadQuat::from_fn(|i| q.c[i].clone() / k.clone()))
        }
        None => QuadQuat::parse(t),
    }
}

/// An isometry, either as an explicit matrix or through one of the
/// parametrizations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Isometry {
    Matrix(QuadMat),
    /// `x ↦ q x q̄ / |q|²` on R³.
    Quaternion(QuadQuat),
    /// `x ↦ q₁ x q̄₂ / |q₁q₂|` on R⁴.
    Pair(QuadQuat, QuadQuat),
    /// `x ↦ (num/den)·x` on C, or `x ↦ (num/den)·x̄` when `reflect`.
    Gaussian { num: GaussInt, den: GaussInt, reflect: bool },
    /// As `Gaussian`, over Q(ξ₅).
    Cyclotomic { num: CycloInt, den: CycloInt, reflect: bool },
}

impl Isometry {
    pub fn dim(&self) -> usize {
        match self {
            Isometry::Matrix(m) => m.rows(),
            Isometry::Quaternion(_) => 3,
            Isometry::Pair(..) => 4,
            Isometry::Gaussian { .. } | Isometry::Cyclotomic { .. } => 2,
        }
    }

    pub fn parse_matrix(s: &str) -> Result<Self> {
        let m = QuadMat::parse(s)?;
        if !m.is_square() {
            return Err(Error::Parse(format!("matrix must be square: {s:?}")));
        }
        Ok(Isometry::Matrix(m))
    }

    pub fn parse_quaternion(s: &str) -> Result<Self> {
        Ok(Isometry::Quaternion(parse_scaled(s)?))
    }

    /// `(k,l,m,n),(k',l',m',n')`; a `;` also separates the two.
    pub fn parse_pair(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let cut = t
            .find(")")
            .map(|c| match t[c + 1..].strip_prefix('/') {
                // skip a trailing scale `/k`
                Some(r) => c + 1 + r.find([',', ';']).unwrap_or(r.len()),
                None => c,
            })
            .ok_or_else(|| Error::Parse(format!("pair must look like (k,l,m,n),(k,l,m,n): {s:?}")))?;
        let (a, b) = t.split_at(cut + 1);
        let b = b.strip_prefix([',', ';']).unwrap_or(b);
        Ok(Isometry::Pair(parse_scaled(a)?, parse_scaled(b)?))
    }

    /// `num/den` in Z[i], e.g. `(4+3i)/5`.
    pub fn parse_gaussian(s: &str, reflect: bool) -> Result<Self> {
        let (n, d) = split_quotient(s)?;
        let (num, den) = (GaussInt::parse(n)?, GaussInt::parse(d)?);
        Ok(Isometry::Gaussian { num, den, reflect })
    }

    /// `num/den` in Z[ξ], written in `x` (or `xi`), e.g. `(2+x)/(2+x^4)`.
    pub fn parse_cyclotomic(s: &str, reflect: bool) -> Result<Self> {
        let (n, d) = split_quotient(s)?;
        let (num, den) = (CycloInt::parse(n)?, CycloInt::parse(d)?);
        Ok(Isometry::Cyclotomic { num, den, reflect })
    }

    /// Rejects zero denominators and quotients off the unit circle.
    pub fn validate(&self) -> Result<()> {
        let off = || Err(Error::NotOrthogonal("quotient does not have absolute value 1".into()));
        match self {
            Isometry::Matrix(m) => {
                if !m.is_orthogonal() {
                    return Err(Error::NotOrthogonal("M·Mᵀ ≠ 1".into()));
                }
            }
            Isometry::Quaternion(q) => {
                q.field()?;
                if q.is_zero() {
                    return Err(Error::Domain("zero quaternion".into()));
                }
            }
            Isometry::Pair(a, b) => {
                a.field()?;
                b.field()?;
                if a.is_zero() || b.is_zero() {
                    return Err(Error::Domain("zero quaternion".into()));
                }
            }
            Isometry::Gaussian { num, den, .. } => {
                if den.is_zero() || num.norm() != den.norm() {
                    return off();
                }
            }
            Isometry::Cyclotomic { num, den, .. } => {
                if den.is_zero() || num.abs2() != den.abs2() {
                    return off();
                }
            }
        }
        Ok(())
    }

    /// Orientation; parametrized rotations are never reflections.
    pub fn is_reflection(&self) -> Result<bool> {
        Ok(match self {
            Isometry::Matrix(m) => m.det()? == Quad::int(-1),
            Isometry::Quaternion(_) | Isometry::Pair(..) => false,
            Isometry::Gaussian { reflect, .. } | Isometry::Cyclotomic { reflect, .. } => *reflect,
        })
    }

    /// The isometry as a matrix over Q(√d). Rotations by elements of
    /// Q(ξ₅) other than ±1 have no such matrix.
    pub fn matrix(&self) -> Result<QuadMat> {
        match self {
            Isometry::Matrix(m) => Ok(m.clone()),
            Isometry::Quaternion(q) => cayley3(q),
            Isometry::Pair(a, b) => rot4(a, b),
            Isometry::Gaussian { num, den, reflect } => {
                let z = num.clone() * den.conj();
                let n = Quad::from(den.norm());
                let (x, y) = (Quad::from(z.re.clone()) / n.clone(), Quad::from(z.im.clone()) / n);
                let rows = if *reflect {
                    vec![vec![x.clone(), y.clone()], vec![y, -x]]
                } else {
                    vec![vec![x.clone(), -y.clone()], vec![y, x]]
                };
                QuadMat::from_rows(rows)
            }
            Isometry::Cyclotomic { num, den, reflect } => {
                let s = if *num == *den {
                    1
                } else if *num == -den.clone() {
                    -1
                } else {
                    return Err(Error::Unsupported(
                        "a rotation by an element of Q(ξ₅) other than ±1 has entries outside every quadratic field"
                            .into(),
                    ));
                };
                let t = if *reflect { -s } else { s };
                QuadMat::from_rows(vec![vec![Quad::int(s), Quad::int(0)], vec![Quad::int(0), Quad::int(t)]])
            }
        }
    }

    pub fn inverse(&self) -> Isometry {
        match self {
            Isometry::Matrix(m) => Isometry::Matrix(m.transpose()),
            Isometry::Quaternion(q) => Isometry::Quaternion(q.conj()),
            Isometry::Pair(a, b) => Isometry::Pair(a.conj(), b.conj()),
            Isometry::Gaussian { num, den, reflect: false } => {
                Isometry::Gaussian { num: den.clone(), den: num.clone(), reflect: false }
            }
            Isometry::Cyclotomic { num, den, reflect: false } => {
                Isometry::Cyclotomic { num: den.clone(), den: num.clone(), reflect: false }
            }
            // x ↦ z·x̄ is an involution
            other => other.clone(),
        }
    }
}

fn strip_parens(x: &str) -> &str {
    let x = x.trim();
    x.strip_prefix('(').and_then(|y| y.strip_suffix(')')).unwrap_or(x)
}

fn split_quotient(s: &str) -> Result<(&str, &str)> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => Ok((strip_parens(a), strip_parens(b))),
        None => Ok((strip_parens(s), "1")),
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let refl = |r: &bool| if *r { " conj" } else { "" };
        match self {
            Isometry::Matrix(m) => write!(f, "{m}"),
            Isometry::Quaternion(q) => write!(f, "{q}"),
            Isometry::Pair(a, b) => write!(f, "{a},{b}"),
            Isometry::Gaussian { num, den, reflect } => write!(f, "({num})/({den}){}", refl(reflect)),
            Isometry::Cyclotomic { num, den, reflect } => write!(f, "({num})/({den}){}", refl(reflect)),
        }
    }
}

impl Serialize for Isometry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
