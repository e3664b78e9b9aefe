//! The twelve structures: bases in ambient coordinates, invariant forms and
//! point groups.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::frac::FracMat;
use crate::arith::GoldenInt;
use crate::counting::Counting;
use crate::error::{Error, Result};
use crate::lattice::hnf::hnf;
use crate::matrix::{IntMat, RatMat};
use crate::quaternion::icosian_basis;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Structure {
    Z2,
    Z3,
    Fcc,
    Bcc,
    Z4,
    D4,
    M10,
    Mb,
    Mp,
    Mf,
    Mc,
    H4,
}

impl Structure {
    pub const ALL: [Structure; 12] = [
        Structure::Z2,
        Structure::Z3,
        Structure::Fcc,
        Structure::Bcc,
        Structure::Z4,
        Structure::D4,
        Structure::M10,
        Structure::Mb,
        Structure::Mp,
        Structure::Mf,
        Structure::Mc,
        Structure::H4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Structure::Z2 => "Z2",
            Structure::Z3 => "Z3",
            Structure::Fcc => "FCC",
            Structure::Bcc => "BCC",
            Structure::Z4 => "Z4",
            Structure::D4 => "D4",
            Structure::M10 => "M10",
            Structure::Mb => "MB",
            Structure::Mp => "MP",
            Structure::Mf => "MF",
            Structure::Mc => "MC",
            Structure::H4 => "ICOSIAN_H4",
        }
    }

    /// Dimension of the isometries acting on the structure.
    pub fn dim(self) -> usize {
        match self {
            Structure::Z2 | Structure::M10 => 2,
            Structure::Z4 | Structure::D4 | Structure::H4 => 4,
            _ => 3,
        }
    }

    pub fn ambient(self) -> Ambient {
        match self {
            Structure::Z2 => Ambient::Real(2),
            Structure::Z3 | Structure::Fcc | Structure::Bcc => Ambient::Real(3),
            Structure::Z4 | Structure::D4 => Ambient::Real(4),
            Structure::M10 => Ambient::Cyclotomic,
            Structure::Mb | Structure::Mp | Structure::Mf | Structure::Mc => Ambient::Golden(3),
            Structure::H4 => Ambient::Golden(4),
        }
    }

    /// Z-rank of the structure.
    pub fn rank(self) -> usize {
        self.ambient().rank()
    }

    /// Orders of the full point group and of its rotation subgroup.
    pub fn point_group_orders(self) -> (u64, u64) {
        match self {
            Structure::Z2 => (8, 4),
            Structure::Z3 | Structure::Fcc | Structure::Bcc | Structure::Mc => (48, 24),
            Structure::Z4 => (384, 192),
            Structure::D4 => (1152, 576),
            Structure::M10 => (20, 10),
            Structure::Mb | Structure::Mp | Structure::Mf => (120, 60),
            Structure::H4 => (14400, 7200),
        }
    }

    /// Counting function of coincidence rotations, `rotations(m) = k·f(m)`.
    pub fn counting(self) -> Counting {
        match self {
            Structure::Z2 => Counting::Square,
            Structure::Z3 | Structure::Fcc | Structure::Bcc => Counting::Cubic,
            Structure::Z4 => Counting::Z4,
            Structure::D4 => Counting::D4,
            Structure::M10 => Counting::Tenfold,
            Structure::Mb | Structure::Mp | Structure::Mf => Counting::Icosahedral,
            Structure::Mc => Counting::ModuleC,
            Structure::H4 => Counting::H4,
        }
    }

    pub fn is_module(self) -> bool {
        matches!(self.ambient(), Ambient::Golden(_) | Ambient::Cyclotomic)
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Structure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase().replace(['-', '_'], "");
        Ok(match t.as_str() {
            "Z2" => Structure::Z2,
            "Z3" => Structure::Z3,
            "FCC" => Structure::Fcc,
            "BCC" => Structure::Bcc,
            "Z4" => Structure::Z4,
            "D4" => Structure::D4,
            "M10" => Structure::M10,
            "MB" => Structure::Mb,
            "MP" => Structure::Mp,
            "MF" => Structure::Mf,
            "MC" => Structure::Mc,
            "ICOSIANH4" | "H4" | "ICOSIAN" => Structure::H4,
            _ => return Err(Error::Parse(format!("unknown structure {s:?}"))),
        })
    }
}

/// The Q-vector space the structure lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Ambient {
    /// Qᵈ with the standard form.
    Real(usize),
    /// Q(τ)ᵈ written over Q with interleaved coordinates `(a₁, b₁, …)` for
    /// `aₖ + bₖτ`, with the trace form.
    Golden(usize),
    /// Q(ξ) in the power basis `1, ξ, ξ², ξ³`, with the trace of the
    /// Hermitian form.
    Cyclotomic,
}

impl Ambient {
    pub fn rank(self) -> usize {
        match self {
            Ambient::Real(d) => d,
            Ambient::Golden(d) => 2 * d,
            Ambient::Cyclotomic => 4,
        }
    }

    /// Gram matrix of the invariant Q-bilinear form.
    pub fn gram(self) -> RatMat {
        match self {
            Ambient::Real(d) => RatMat::identity(d),
            Ambient::Golden(d) => {
                let block = RatMat::from_vec(2, 2, [2, 1, 1, 3].map(rat).to_vec());
                RatMat::block_diag(&vec![block; d])
            }
            Ambient::Cyclotomic => RatMat::from_vec(
                4,
                4,
                (0..16).map(|k| if k % 5 == 0 { rat(2) } else { BigRational::new((-1).into(), 2.into()) }).collect(),
            ),
        }
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// A structure together with a basis (columns, ambient coordinates). The
/// structure coordinates of a point are its coordinates in this basis, and
/// an isometry acts on them by `S⁻¹·A·S`.
#[derive(Clone, Debug)]
pub struct StructureSpec {
    pub structure: Structure,
    pub dual: bool,
    basis: RatMat,
    s: FracMat,
    s_inv: FracMat,
}

impl StructureSpec {
    pub fn new(structure: Structure) -> Self {
        Self::with_basis(structure, false, primal_basis(structure))
    }

    fn with_basis(structure: Structure, dual: bool, basis: RatMat) -> Self {
        let s = FracMat::from_rat(&basis);
        let s_inv = FracMat::from_rat(&basis.inverse().expect("bases are nonsingular"));
        StructureSpec { structure, dual, basis, s, s_inv }
    }

    /// The dual structure `{y : ⟨x, y⟩ ∈ Z for all x}`, basis `G⁻¹S⁻ᵀ`.
    pub fn dual(&self) -> Self {
        let g = self.ambient().gram();
        let b = g
            .inverse()
            .and_then(|gi| gi.mul(&self.basis.inverse()?.transpose()))
            .expect("nondegenerate form");
        Self::with_basis(self.structure, !self.dual, b)
    }

    pub fn name(&self) -> String {
        if self.dual {
            format!("{}*", self.structure)
        } else {
            self.structure.name().to_string()
        }
    }

    pub fn rank(&self) -> usize {
        self.structure.rank()
    }

    pub fn dim(&self) -> usize {
        self.structure.dim()
    }

    pub fn ambient(&self) -> Ambient {
        self.structure.ambient()
    }

    pub fn basis(&self) -> &RatMat {
        &self.basis
    }

    /// Gram matrix of the structure basis, `SᵀGS`.
    pub fn gram(&self) -> RatMat {
        let g = self.ambient().gram();
        self.basis.transpose().mul(&g).and_then(|x| x.mul(&self.basis)).expect("square")
    }

    /// `S⁻¹·A·S`.
    pub(crate) fn to_structure(&self, ambient: &FracMat) -> FracMat {
        if self.s.is_identity() {
            return ambient.clone();
        }
        self.s_inv.mul(ambient).mul(&self.s)
    }

    /// Converts a Hermite basis in structure coordinates to ambient
    /// coordinates.
    pub fn to_ambient(&self, h: &crate::lattice::HnfForm) -> RatMat {
        self.basis.mul(&RatMat::from_int(&h.matrix())).expect("square")
    }
}

fn int_cols(d: usize, cols: &[Vec<i64>]) -> RatMat {
    let data = (0..d).flat_map(|i| cols.iter().map(move |c| rat(c[i]))).collect();
    RatMat::from_vec(d, cols.len(), data)
}

fn primal_basis(s: Structure) -> RatMat {
    let half = BigRational::new(1.into(), 2.into());
    match s {
        Structure::Z2 | Structure::Z3 | Structure::Z4 | Structure::M10 | Structure::Mc => {
            RatMat::identity(s.rank())
        }
        Structure::Fcc => int_cols(3, &[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]),
        Structure::Bcc => {
            let mut b = RatMat::identity(3);
            for i in 0..3 {
                b.set(i, 2, half.clone());
            }
            b
        }
        Structure::D4 => int_cols(4, &[vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1], vec![0, 0, 0, 2]]),
        Structure::Mb | Structure::Mp | Structure::Mf => golden_module_basis(s),
        Structure::H4 => RatMat::from_int(&icosian_basis().matrix()).scale(&half),
    }
}

/// Membership in the three icosahedral modules, tested on `α ∈ Z[τ]³`
/// through its residue mod 2.
pub fn in_icosahedral_module(s: Structure, a: &[GoldenInt; 3]) -> bool {
    let even = |x: &GoldenInt| x.a.clone() % 2 == BigInt::zero() && x.b.clone() % 2 == BigInt::zero();
    let t = GoldenInt::tau();
    let t2 = GoldenInt::new(1, 1);
    // α₁ + τα₂ + τ²α₃ ≡ 0: the orientation fixed by the 120 unit icosians
    // under R(q); the mirror condition τ²α₁ + τα₂ + α₃ is not invariant.
    if !even(&(a[0].clone() + t.clone() * a[1].clone() + t2 * a[2].clone())) {
        return false;
    }
    let sum = a[0].clone() + a[1].clone() + a[2].clone();
    match s {
        Structure::Mb => true,
        Structure::Mp => even(&sum) || even(&(sum - t)),
        Structure::Mf => even(&sum),
        _ => panic!("{s} is not an icosahedral module"),
    }
}

fn golden_module_basis(s: Structure) -> RatMat {
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for bits in 0u32..64 {
        let x: Vec<i64> = (0..6).map(|k| ((bits >> k) & 1) as i64).collect();
        let a = [0, 1, 2].map(|k| GoldenInt::new(x[2 * k], x[2 * k + 1]));
        if in_icosahedral_module(s, &a) {
            cols.push(x.into_iter().map(BigInt::from).collect());
        }
    }
    for k in 0..6 {
        let mut e = vec![BigInt::zero(); 6];
        e[k] = BigInt::from(2);
        cols.push(e);
    }
    let m = IntMat::from_cols(&cols).expect("equal lengths");
    RatMat::from_int(&hnf(&m).expect("contains 2Z⁶").matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeBasis;

    fn lat(s: &StructureSpec) -> LatticeBasis {
        LatticeBasis::new(s.basis().clone()).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for s in Structure::ALL {
            assert_eq!(s.name().parse::<Structure>().unwrap(), s);
        }
        assert_eq!("h4".parse::<Structure>().unwrap(), Structure::H4);
        assert!("Z5".parse::<Structure>().is_err());
    }

    #[test]
    fn cubic_duals() {
        let fcc = StructureSpec::new(Structure::Fcc);
        let bcc = StructureSpec::new(Structure::Bcc);
        assert_eq!(lat(&fcc.dual()), lat(&bcc));
        assert_eq!(lat(&bcc.dual()), lat(&fcc));
        let z3 = StructureSpec::new(Structure::Z3);
        assert_eq!(LatticeBasis::index(&lat(&z3), &lat(&fcc)).unwrap(), BigInt::from(2));
        let d4 = StructureSpec::new(Structure::D4);
        let z4 = StructureSpec::new(Structure::Z4);
        assert_eq!(LatticeBasis::index(&lat(&z4), &lat(&d4)).unwrap(), BigInt::from(2));
        assert_eq!(LatticeBasis::index(&lat(&d4.dual()), &lat(&z4)).unwrap(), BigInt::from(2));
    }

    #[test]
    fn icosahedral_chain() {
        let mc = lat(&StructureSpec::new(Structure::Mc));
        let twice = LatticeBasis::scaled(6, 2);
        let idx = |s| LatticeBasis::index(&mc, &lat(&StructureSpec::new(s))).unwrap();
        assert_eq!(idx(Structure::Mb), BigInt::from(4));
        assert_eq!(idx(Structure::Mp), BigInt::from(8));
        assert_eq!(idx(Structure::Mf), BigInt::from(16));
        let mf = lat(&StructureSpec::new(Structure::Mf));
        let mp = lat(&StructureSpec::new(Structure::Mp));
        let mb = lat(&StructureSpec::new(Structure::Mb));
        assert!(mp.contains(&mf).unwrap() && mb.contains(&mp).unwrap());
        assert_eq!(LatticeBasis::index(&mf, &twice).unwrap(), BigInt::from(4));
    }

    #[test]
    fn grams_are_positive() {
        for s in Structure::ALL {
            let g = StructureSpec::new(s).gram();
            assert_eq!(g, g.transpose());
            assert!(g.det().unwrap() > BigRational::zero(), "{s}");
        }
    }
}
