//! Coincidence indices: the lattice-intersection oracle and the closed
//! forms of the various parametrizations.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::frac::FracMat;
use super::structure::{Ambient, Structure, StructureSpec};
use super::Isometry;
use crate::arith::golden::{golden_gcd, golden_sqrt};
use crate::arith::int::{exact_sqrt, odd_part};
use crate::arith::{CycloInt, Factorable, GaussInt, GoldenInt, SplitKind};
use crate::error::{Error, Result};
use crate::lattice::HnfForm;
use crate::matrix::{QuadMat, RatMat};
use crate::quaternion::{cayley_inverse, rot4_inverse, GoldenQuat, Icosian, IntQuat, Integral, Quat, QuadQuat};

/// A coincidence index; `Infinite` for isometries that are not
/// coincidences.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sigma {
    Finite(BigInt),
    Infinite,
}

impl Sigma {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            Sigma::Finite(s) => Some(s),
            Sigma::Infinite => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.finite().and_then(|s| s.to_u64())
    }
}

impl From<u64> for Sigma {
    fn from(n: u64) -> Self {
        Sigma::Finite(n.into())
    }
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sigma::Finite(s) => write!(f, "{s}"),
            Sigma::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Sigma {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Sigma::Finite(n) => match n.to_u64() {
                Some(v) => s.serialize_u64(v),
                None => s.serialize_str(&n.to_string()),
            },
            Sigma::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed-form",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoincidenceResult {
    pub sigma: Sigma,
    /// Hermite basis of the CSL/CSM in structure coordinates (oracle only).
    pub csl: Option<HnfForm>,
    pub method: Method,
}

/// Denominator of a matrix over Q or Q(τ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Denominator {
    Integer(BigInt),
    Golden(GoldenInt),
}

impl fmt::Display for Denominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Denominator::Integer(n) => write!(f, "{n}"),
            Denominator::Golden(g) => write!(f, "{g}"),
        }
    }
}

/// Least positive integer `k` with `kM` integral for rational `M`; for
/// `M` over Q(τ) the canonical totally positive generator of the ideal of
/// all `k ∈ Z[τ]` with `kM` integral.
pub fn denominator(m: &QuadMat) -> Result<Denominator> {
    match m.radicand() {
        1 => Ok(Denominator::Integer(m.to_rational().expect("rational").denominator())),
        5 => Ok(Denominator::Golden(golden_denominator(m)?)),
        d => Err(Error::Unsupported(format!("denominator over Q(√{d})"))),
    }
}

pub fn golden_denominator(m: &QuadMat) -> Result<GoldenInt> {
    let mut l = GoldenInt::one();
    for x in m.entries() {
        let (a, b) = x
            .golden_parts()
            .ok_or_else(|| Error::Unsupported(format!("entry {x} is not in Q(τ)")))?;
        let c = a.denom().lcm(b.denom());
        let cr = BigRational::from_integer(c.clone());
        let g = GoldenInt::new((a * &cr).to_integer(), (b * &cr).to_integer());
        let cg = GoldenInt::new(c, 0);
        let d = cg.exact_div(&gcd0(&cg, &g)?).expect("gcd divides");
        l = lcm_golden(&l, &d)?;
    }
    Ok(l.unit_normalize()?.0)
}

fn gcd0(x: &GoldenInt, y: &GoldenInt) -> Result<GoldenInt> {
    if y.is_zero() {
        return Ok(x.clone());
    }
    golden_gcd(x, y)
}

fn lcm_golden(x: &GoldenInt, y: &GoldenInt) -> Result<GoldenInt> {
    let g = gcd0(x, y)?;
    Ok((x.clone() * y.clone()).exact_div(&g).expect("gcd divides"))
}

fn check_dim(iso: &Isometry, s: Structure) -> Result<()> {
    if iso.dim() != s.dim() {
        return Err(Error::Dimension(format!("{s} needs a {}-dimensional isometry, got {}", s.dim(), iso.dim())));
    }
    match iso {
        Isometry::Gaussian { .. } if s != Structure::Z2 => {
            Err(Error::Unsupported(format!("Gaussian quotients act on Z2, not {s}")))
        }
        Isometry::Cyclotomic { .. } if s != Structure::M10 => {
            Err(Error::Unsupported(format!("cyclotomic quotients act on M10, not {s}")))
        }
        _ => Ok(()),
    }
}

fn rat_to_frac(m: &RatMat) -> FracMat {
    FracMat::from_rat(m)
}

/// `E/d` with golden entries, expanded to 2×2 blocks `[[u, v], [v, u+v]]`
/// (multiplication by `u + vτ` on the basis `1, τ`).
fn golden_blocks(e: &[Vec<GoldenInt>], d: &GoldenInt) -> FracMat {
    let r = e.len();
    let dc = d.conj();
    let n = 2 * r;
    let mut num = vec![BigInt::zero(); n * n];
    for i in 0..r {
        for j in 0..r {
            let g = e[i][j].clone() * dc.clone();
            num[2 * i * n + 2 * j] = g.a.clone();
            num[2 * i * n + 2 * j + 1] = g.b.clone();
            num[(2 * i + 1) * n + 2 * j] = g.b.clone();
            num[(2 * i + 1) * n + 2 * j + 1] = &g.a + &g.b;
        }
    }
    FracMat::new(n, num, d.norm())
}

fn quad_golden_blocks(m: &QuadMat) -> Option<FracMat> {
    let r = m.rows();
    let n = 2 * r;
    let mut data = vec![BigRational::zero(); n * n];
    for i in 0..r {
        for j in 0..r {
            let (u, v) = m.get(i, j).golden_parts()?;
            data[2 * i * n + 2 * j] = u.clone();
            data[2 * i * n + 2 * j + 1] = v.clone();
            data[(2 * i + 1) * n + 2 * j] = v.clone();
            data[(2 * i + 1) * n + 2 * j + 1] = u + v;
        }
    }
    Some(rat_to_frac(&RatMat::from_vec(n, n, data)))
}

/// Matrix of multiplication by `x` on the power basis of Z[ξ].
fn cyclo_mult(x: &CycloInt) -> Vec<BigInt> {
    let mut m = vec![BigInt::zero(); 16];
    for j in 0..4u32 {
        let c = x.clone() * CycloInt::xi_pow(j);
        for i in 0..4 {
            m[i * 4 + j as usize] = c.c[i].clone();
        }
    }
    m
}

fn cyclo_conj() -> FracMat {
    let mut m = vec![BigInt::zero(); 16];
    for j in 0..4u32 {
        let c = CycloInt::xi_pow(j).conj();
        for i in 0..4 {
            m[i * 4 + j as usize] = c.c[i].clone();
        }
    }
    FracMat::new(4, m, BigInt::one())
}

/// `z = num/den` as `w / N(den)` with `w ∈ Z[ξ]`.
pub(crate) fn cyclo_quotient(num: &CycloInt, den: &CycloInt) -> (CycloInt, BigInt) {
    let w = num.clone() * den.galois(2) * den.galois(3) * den.galois(4);
    (w, den.norm())
}

fn integral_golden(q: &QuadQuat) -> Result<GoldenQuat> {
    Ok(match q.clear_denominators()? {
        Integral::Int(z) => z.map(|x| GoldenInt::new(x.clone(), 0)),
        Integral::Golden(g) => g,
    })
}

/// The action on ambient coordinates, or `None` if the isometry is not a
/// coincidence of the structure.
fn ambient_action(iso: &Isometry, s: Structure) -> Result<Option<FracMat>> {
    check_dim(iso, s)?;
    iso.validate()?;
    match (s.ambient(), iso) {
        (Ambient::Real(3), Isometry::Quaternion(q)) if q.field()? == 1 => {
            let Integral::Int(z) = q.clear_denominators()? else { unreachable!() };
            let e = z.cayley_entries();
            Ok(Some(FracMat::new(3, e.into_iter().flatten().collect(), z.norm())))
        }
        (Ambient::Real(4), Isometry::Pair(a, b)) if a.field()? == 1 && b.field()? == 1 => {
            let (Integral::Int(x), Integral::Int(y)) = (a.clear_denominators()?, b.clear_denominators()?) else {
                unreachable!()
            };
            let Some(s) = exact_sqrt(&(x.norm() * y.norm())) else {
                return Ok(None);
            };
            let e = Quat::mat4_entries(&x, &y);
            Ok(Some(FracMat::new(4, e.into_iter().flatten().collect(), s)))
        }
        (Ambient::Golden(3), Isometry::Quaternion(q)) => {
            let g = integral_golden(q)?;
            let e = g.cayley_entries().map(|r| r.to_vec()).to_vec();
            Ok(Some(golden_blocks(&e, &g.norm())))
        }
        (Ambient::Golden(4), Isometry::Pair(a, b)) => {
            let (x, y) = (integral_golden(a)?, integral_golden(b)?);
            let n = x.norm() * y.norm();
            let s = golden_sqrt(&n)
                .ok_or_else(|| Error::NotAdmissible(format!("|q₁q₂|² = {n} is not a square in Z[τ]")))?;
            let e = Quat::mat4_entries(&x, &y).map(|r| r.to_vec()).to_vec();
            Ok(Some(golden_blocks(&e, &s)))
        }
        (Ambient::Real(2), Isometry::Gaussian { num, den, reflect }) => {
            let z = num.clone() * den.conj();
            let (x, y) = (z.re.clone(), z.im.clone());
            let num = if *reflect { vec![x.clone(), y.clone(), y, -x] } else { vec![x.clone(), -y.clone(), y, x] };
            Ok(Some(FracMat::new(2, num, den.norm())))
        }
        (Ambient::Cyclotomic, Isometry::Cyclotomic { num, den, reflect }) => {
            let (w, n) = cyclo_quotient(num, den);
            let a = FracMat::new(4, cyclo_mult(&w), n);
            Ok(Some(if *reflect { a.mul(&cyclo_conj()) } else { a }))
        }
        (Ambient::Cyclotomic, Isometry::Matrix(m)) => {
            let one = crate::quadratic::Quad::int(1);
            let zero = crate::quadratic::Quad::int(0);
            if m.get(0, 1) != &zero || m.get(1, 0) != &zero || m.get(0, 0).clone() * m.get(0, 0).clone() != one {
                return Ok(None);
            }
            let s = if m.get(0, 0) == &one { 1 } else { -1 };
            let flip = m.get(1, 1) != m.get(0, 0);
            let mut a = FracMat::new(4, FracMat::identity(4).to_rat().entries().iter().map(|x| x.to_integer() * s).collect(), BigInt::one());
            if flip {
                a = a.mul(&cyclo_conj());
            }
            Ok(Some(a))
        }
        (Ambient::Cyclotomic, _) => Err(Error::Unsupported("M10 takes a matrix or a cyclotomic quotient".into())),
        (Ambient::Real(_), _) => {
            let m = iso.matrix()?;
            Ok(m.to_rational().map(|r| rat_to_frac(&r)))
        }
        (Ambient::Golden(_), _) => {
            let m = iso.matrix()?;
            Ok(quad_golden_blocks(&m))
        }
    }
}

/// The action `S⁻¹AS` on structure coordinates, or `None` if the isometry
/// is not a coincidence.
pub fn action(iso: &Isometry, spec: &StructureSpec) -> Result<Option<FracMat>> {
    let Some(a) = ambient_action(iso, spec.structure)? else {
        return Ok(None);
    };
    let a = spec.to_structure(&a);
    debug_assert!(a.abs_det_is_one());
    Ok(Some(a))
}

pub fn is_coincidence(iso: &Isometry, spec: &StructureSpec) -> Result<bool> {
    Ok(action(iso, spec)?.is_some())
}

/// `[L : L ∩ RL]` and the Hermite basis of `L ∩ RL`, computed directly
/// from the action on structure coordinates.
pub fn sigma_oracle(iso: &Isometry, spec: &StructureSpec) -> Result<CoincidenceResult> {
    Ok(match action(iso, spec)? {
        None => CoincidenceResult { sigma: Sigma::Infinite, csl: None, method: Method::Oracle },
        Some(a) => {
            let h = a.csl();
            CoincidenceResult { sigma: Sigma::Finite(h.det()), csl: Some(h), method: Method::Oracle }
        }
    })
}

/// The oracle index alone, without the CSL basis.
pub fn sigma_oracle_value(iso: &Isometry, spec: &StructureSpec) -> Result<Sigma> {
    Ok(match action(iso, spec)? {
        None => Sigma::Infinite,
        Some(a) => Sigma::Finite(a.coincidence_index()),
    })
}

/// Closed-form index; the four-dimensional icosian module has none and is
/// routed to the oracle.
pub fn sigma_closed_form(iso: &Isometry, spec: &StructureSpec) -> Result<CoincidenceResult> {
    check_handle(iso, spec.structure)?;
    if !is_coincidence(iso, spec)? {
        return Ok(CoincidenceResult { sigma: Sigma::Infinite, csl: None, method: Method::ClosedForm });
    }
    if iso.is_reflection()? {
        return reflection_sigma(iso, spec);
    }
    rotation_closed_form(iso, spec)
}

/// Shorthand for the closed-form index.
pub fn sigma(iso: &Isometry, spec: &StructureSpec) -> Result<Sigma> {
    Ok(sigma_closed_form(iso, spec)?.sigma)
}

/// Rejects non-primitive integral handles and inadmissible pairs.
fn check_handle(iso: &Isometry, s: Structure) -> Result<()> {
    check_dim(iso, s)?;
    let integral = |q: &QuadQuat| q.c.iter().all(|x| x.to_rational().is_some_and(|r| r.is_integer()));
    match (iso, s) {
        (Isometry::Quaternion(q), Structure::Z3 | Structure::Fcc | Structure::Bcc) if integral(q) => {
            let Integral::Int(z) = q.clear_denominators()? else { unreachable!() };
            if !z.is_primitive() {
                return Err(Error::NotPrimitive);
            }
        }
        (Isometry::Pair(a, b), Structure::Z4 | Structure::D4) => {
            if integral(a) && integral(b) {
                let (Integral::Int(x), Integral::Int(y)) = (a.clear_denominators()?, b.clear_denominators()?) else {
                    unreachable!()
                };
                if !crate::quaternion::is_admissible_pair(&x, &y)? {
                    return Err(Error::NotAdmissible(format!("|q₁q₂|² = {} is not a square", x.norm() * y.norm())));
                }
            }
        }
        _ => {}
    }
    Ok(())
}

/// The reflection `T` used to reduce reflections to rotations; a symmetry
/// of every structure of the given dimension.
fn reflection_t(d: usize) -> QuadMat {
    use crate::quadratic::Quad;
    let diag: Vec<i64> = match d {
        2 => vec![1, -1],
        3 => vec![-1, -1, -1],
        _ => vec![1, -1, -1, -1],
    };
    let mut m = QuadMat::identity(d);
    for (i, s) in diag.into_iter().enumerate() {
        m.set(i, i, Quad::int(s));
    }
    m
}

/// `Σ(R) = Σ(R·T)` for a reflection `R`.
pub fn reflection_sigma(iso: &Isometry, spec: &StructureSpec) -> Result<CoincidenceResult> {
    if !iso.is_reflection()? {
        return Err(Error::Domain("not a reflection".into()));
    }
    let rot = match iso {
        Isometry::Matrix(m) => Isometry::Matrix(m.mul(&reflection_t(m.rows()))?),
        Isometry::Gaussian { num, den, .. } => Isometry::Gaussian { num: num.clone(), den: den.clone(), reflect: false },
        Isometry::Cyclotomic { num, den, .. } => {
            Isometry::Cyclotomic { num: num.clone(), den: den.clone(), reflect: false }
        }
        _ => unreachable!("parametrized handles are rotations"),
    };
    if !is_coincidence(&rot, spec)? {
        return Ok(CoincidenceResult { sigma: Sigma::Infinite, csl: None, method: Method::ClosedForm });
    }
    rotation_closed_form(&rot, spec)
}

fn finite(s: BigInt) -> Result<CoincidenceResult> {
    Ok(CoincidenceResult { sigma: Sigma::Finite(s), csl: None, method: Method::ClosedForm })
}

fn rotation_closed_form(iso: &Isometry, spec: &StructureSpec) -> Result<CoincidenceResult> {
    match spec.structure {
        Structure::Z2 => {
            let (num, den) = gaussian_of(iso)?;
            finite(split_sigma(&num, &den, |p| p % 4 == 1)?)
        }
        Structure::M10 => match iso {
            Isometry::Cyclotomic { num, den, .. } => finite(split_sigma(num, den, |p| p % 5 == 1)?),
            _ => finite(BigInt::one()),
        },
        Structure::Z3 | Structure::Fcc | Structure::Bcc => finite(odd_part(&int_quat_of(iso)?.norm())),
        Structure::D4 | Structure::Z4 => {
            let (x, y) = int_pair_of(iso)?;
            let sf = odd_part(&x.norm()).lcm(&odd_part(&y.norm()));
            if spec.structure == Structure::D4 {
                return finite(sf);
            }
            let s = exact_sqrt(&(x.norm() * y.norm())).expect("admissible");
            let content = Quat::mat4_entries(&x, &y).iter().flatten().fold(s.clone(), |g, e| g.gcd(e));
            finite(sf.lcm(&(s / content)))
        }
        Structure::Mb | Structure::Mp | Structure::Mf => {
            let q = golden_quat_of(iso)?;
            finite(icosian_sigma(&q)?)
        }
        Structure::Mc => {
            let d = match iso {
                Isometry::Quaternion(q) => {
                    let g = integral_golden(q)?;
                    let n = g.norm();
                    let c = g.cayley_entries().iter().flatten().try_fold(n.clone(), |acc, e| gcd0(&acc, e))?;
                    n.exact_div(&c).expect("gcd divides")
                }
                _ => golden_denominator(&iso.matrix()?)?,
            };
            finite(d.norm().abs())
        }
        Structure::H4 => {
            let mut r = sigma_oracle(iso, spec)?;
            r.csl = None;
            Ok(r)
        }
    }
}

fn gaussian_of(iso: &Isometry) -> Result<(GaussInt, GaussInt)> {
    match iso {
        Isometry::Gaussian { num, den, .. } => Ok((num.clone(), den.clone())),
        _ => {
            let m = iso.matrix()?.to_rational().expect("coincidence of Z2 is rational");
            let n = m.denominator();
            let nr = BigRational::from_integer(n.clone());
            let c = (m.get(0, 0) * &nr).to_integer();
            let s = (m.get(1, 0) * &nr).to_integer();
            Ok((GaussInt { re: c, im: s }, GaussInt { re: n, im: BigInt::zero() }))
        }
    }
}

fn int_quat_of(iso: &Isometry) -> Result<IntQuat> {
    let q = match iso {
        Isometry::Quaternion(q) if q.field()? == 1 => q.clone(),
        _ => cayley_inverse(&iso.matrix()?)?,
    };
    match q.clear_denominators()? {
        Integral::Int(z) => Ok(z.make_primitive()?.0),
        Integral::Golden(_) => Err(Error::Unsupported("rotation is not rational".into())),
    }
}

fn int_pair_of(iso: &Isometry) -> Result<(IntQuat, IntQuat)> {
    let (a, b) = match iso {
        Isometry::Pair(a, b) if a.field()? == 1 && b.field()? == 1 => (a.clone(), b.clone()),
        _ => rot4_inverse(&iso.matrix()?)?,
    };
    match (a.clear_denominators()?, b.clear_denominators()?) {
        (Integral::Int(x), Integral::Int(y)) => Ok((x.make_primitive()?.0, y.make_primitive()?.0)),
        _ => Err(Error::Unsupported("rotation is not rational".into())),
    }
}

fn golden_quat_of(iso: &Isometry) -> Result<GoldenQuat> {
    let q = match iso {
        Isometry::Quaternion(q) => q.clone(),
        _ => cayley_inverse(&iso.matrix()?)?,
    };
    integral_golden(&q)
}

/// `N(|p|²)` for the primitive icosian `p` on the line of `q`. Every
/// preimage of `R(q)` in I is a Z[τ]-multiple of `p`, so this is the
/// minimum (and gcd) of `N(|q'|²)` over all preimages.
fn icosian_sigma(q: &GoldenQuat) -> Result<BigInt> {
    let two = GoldenInt::new(2, 0);
    let d = q.scale(&two);
    let ic = Icosian::from_doubled(d).expect("Z[τ]⁴ lies in I");
    let (p, _) = ic.make_primitive()?;
    Ok(p.norm().norm().abs())
}

/// Closed form for the icosahedral modules from a rotation matrix over
/// Q(τ): Cayley-invert, clear denominators, reduce to the primitive icosian.
pub fn icosian_gcd_sigma(r: &QuadMat) -> Result<BigInt> {
    if r.rows() != 3 || !r.is_orthogonal() {
        return Err(Error::NotOrthogonal("needs a 3×3 rotation".into()));
    }
    let q = cayley_inverse(r)?;
    icosian_sigma(&integral_golden(&q)?)
}

type PrimeTable<E> = HashMap<u64, (SplitKind, Vec<E>)>;

thread_local! {
    static GAUSS_PRIMES: std::cell::RefCell<PrimeTable<GaussInt>> = Default::default();
    static CYCLO_PRIMES: std::cell::RefCell<PrimeTable<CycloInt>> = Default::default();
}

trait Cached: Factorable {
    fn with_primes<R>(p: u64, f: impl FnOnce(SplitKind, &[Self]) -> R) -> Result<R>;
}

macro_rules! cached {
    ($t:ty, $table:ident) => {
        impl Cached for $t {
            fn with_primes<R>(p: u64, f: impl FnOnce(SplitKind, &[Self]) -> R) -> Result<R> {
                $table.with(|t| {
                    let mut t = t.borrow_mut();
                    if !t.contains_key(&p) {
                        let s = <$t>::split(p)?;
                        t.insert(p, (s.kind, s.factors.into_iter().map(|(e, _)| e).collect()));
                    }
                    let (k, v) = &t[&p];
                    Ok(f(*k, v))
                })
            }
        }
    };
}
cached!(GaussInt, GAUSS_PRIMES);
cached!(CycloInt, CYCLO_PRIMES);

fn valuation<E: Factorable>(x: &E, pi: &E) -> i64 {
    let mut x = x.clone();
    let mut v = 0;
    while let Some(q) = x.exact_div(pi) {
        x = q;
        v += 1;
    }
    v
}

/// `Σ = ∏ p^{(Σ_{π|p} |v_π(num) − v_π(den)|)/2}` over the split primes
/// selected by `keep`, for a quotient of absolute value 1.
fn split_sigma<E: Cached>(num: &E, den: &E, keep: impl Fn(u64) -> bool) -> Result<BigInt> {
    let n = num.abs_norm() * den.abs_norm();
    let mut sigma = BigInt::one();
    for (p, _) in crate::arith::int::factorize_big(&n)? {
        if !keep(p) {
            continue;
        }
        let total = E::with_primes(p, |kind, primes| {
            debug_assert_eq!(kind, SplitKind::Split);
            primes.iter().map(|pi| (valuation(num, pi) - valuation(den, pi)).abs()).sum::<i64>()
        })?;
        debug_assert!(total % 2 == 0);
        sigma *= BigInt::from(p).pow((total / 2) as u32);
    }
    Ok(sigma)
}

pub(crate) fn split_sigma_cyclo(num: &CycloInt, den: &CycloInt) -> Result<BigInt> {
    split_sigma(num, den, |p| p % 5 == 1)
}

pub(crate) fn split_sigma_gauss(num: &GaussInt, den: &GaussInt) -> Result<BigInt> {
    split_sigma(num, den, |p| p % 4 == 1)
}
