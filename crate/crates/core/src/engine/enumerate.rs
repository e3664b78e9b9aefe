//! Enumeration of coincidence rotations by index, point groups and the
//! classification of CSLs under the point group.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::frac::FracMat;
use super::sigma::{action, cyclo_quotient, sigma_oracle_value, split_sigma_cyclo, split_sigma_gauss, Sigma};
use super::structure::{Structure, StructureSpec};
use super::Isometry;
use crate::arith::cyclo::norm_i128;
use crate::arith::golden::golden_gcd;
use crate::arith::int::factorize;
use crate::arith::{CycloInt, Factorable, GaussInt, GoldenInt};
use crate::error::{Error, Result};
use crate::lattice::HnfForm;
use crate::quadratic::Quad;
use crate::quaternion::{enumerate_icosians, enumerate_lipschitz, GoldenQuat, IntQuat, QuadQuat};

/// Bound on intermediate candidate lists.
pub const SEARCH_CAP: u64 = 20_000_000;

/// Compact handle of an enumerated rotation; the derived order is the
/// tie-break after the index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Handle {
    /// `z = (x + iy)/n`.
    Gaussian([i64; 3]),
    /// `z = (w₀ + w₁ξ + w₂ξ² + w₃ξ³)/n`.
    Cyclotomic([i64; 5]),
    Lipschitz([i64; 4]),
    LipschitzPair([i64; 4], [i64; 4]),
    /// Doubled interleaved coordinates of an icosian.
    Icosian([i64; 8]),
    IcosianPair([i64; 8], [i64; 8]),
}

fn golden_quat(d: &[i64; 8]) -> QuadQuat {
    let half = Quad::rational(num_rational::BigRational::new(1.into(), 2.into()));
    QuadQuat::from_fn(|k| Quad::from_golden_int(&GoldenInt::new(d[2 * k], d[2 * k + 1])) * half.clone())
}

fn int_quat(q: &[i64; 4]) -> QuadQuat {
    IntQuat::from_i64(q[0], q[1], q[2], q[3]).to_quad()
}

impl Handle {
    pub fn isometry(&self) -> Isometry {
        match self {
            Handle::Gaussian([x, y, n]) => {
                Isometry::Gaussian { num: GaussInt::new(*x, *y), den: GaussInt::new(*n, 0), reflect: false }
            }
            Handle::Cyclotomic([a, b, c, d, n]) => Isometry::Cyclotomic {
                num: CycloInt::new([*a, *b, *c, *d]),
                den: CycloInt::new([*n, 0, 0, 0]),
                reflect: false,
            },
            Handle::Lipschitz(q) => Isometry::Quaternion(int_quat(q)),
            Handle::LipschitzPair(a, b) => Isometry::Pair(int_quat(a), int_quat(b)),
            Handle::Icosian(d) => Isometry::Quaternion(golden_quat(d)),
            Handle::IcosianPair(a, b) => Isometry::Pair(golden_quat(a), golden_quat(b)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rotation {
    pub sigma: u64,
    pub handle: Handle,
}

impl Rotation {
    pub fn isometry(&self) -> Isometry {
        self.handle.isometry()
    }
}

impl Serialize for Rotation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let iso = self.isometry();
        let mut st = s.serialize_struct("Rotation", 3)?;
        st.serialize_field("sigma", &self.sigma)?;
        st.serialize_field("handle", &iso.to_string())?;
        st.serialize_field("matrix", &iso.matrix().map(|m| m.to_string()).ok())?;
        st.end()
    }
}

/// `STRUCTURE:SIGMA_MAX:OFFSET`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResumeToken {
    pub structure: String,
    pub sigma_max: u64,
    pub offset: usize,
}

impl fmt::Display for ResumeToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.structure, self.sigma_max, self.offset)
    }
}

impl FromStr for ResumeToken {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("resume token must be STRUCTURE:SIGMA:OFFSET, got {s:?}"));
        let mut it = s.trim().split(':');
        let (Some(a), Some(b), Some(c), None) = (it.next(), it.next(), it.next(), it.next()) else {
            return Err(bad());
        };
        Ok(ResumeToken {
            structure: a.to_string(),
            sigma_max: b.parse().map_err(|_| bad())?,
            offset: c.parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    /// Maximum number of rotations per page.
    pub cap: Option<u64>,
    pub offset: usize,
    /// Bound on intermediate candidate lists.
    pub search_cap: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { cap: None, offset: 0, search_cap: SEARCH_CAP }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RotationPage {
    pub structure: String,
    pub sigma_max: u64,
    pub total: usize,
    pub offset: usize,
    pub items: Vec<Rotation>,
    #[serde(serialize_with = "ser_token")]
    pub resume: Option<ResumeToken>,
}

fn ser_token<S: serde::Serializer>(t: &Option<ResumeToken>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match t {
        Some(t) => s.serialize_str(&t.to_string()),
        None => s.serialize_none(),
    }
}

impl RotationPage {
    /// Number of rotations with each index, over the whole enumeration
    /// when the page is complete.
    pub fn histogram(&self) -> BTreeMap<u64, u64> {
        let mut h = BTreeMap::new();
        for r in &self.items {
            *h.entry(r.sigma).or_insert(0) += 1;
        }
        h
    }
}

/// All coincidence rotations with `Σ ≤ sigma_max`, sorted by index and
/// handle. Dual structures share the rotations and indices of the primal.
///
/// The four-dimensional icosian case only searches pairs with
/// `N(|qᵢ|²) ≤ sigma_max`; that covers Σ = 1 exactly.
pub fn enumerate_rotations(spec: &StructureSpec, sigma_max: u64, opts: EnumOptions) -> Result<RotationPage> {
    let all = rotations_upto(spec, sigma_max, opts.search_cap)?;
    let total = all.len();
    let start = opts.offset.min(total);
    let end = match opts.cap {
        Some(c) => start.saturating_add(c as usize).min(total),
        None => total,
    };
    let resume = (end < total).then(|| ResumeToken { structure: spec.name(), sigma_max, offset: end });
    Ok(RotationPage {
        structure: spec.name(),
        sigma_max,
        total,
        offset: start,
        items: all[start..end].to_vec(),
        resume,
    })
}

fn rotations_upto(spec: &StructureSpec, m: u64, cap: u64) -> Result<Vec<Rotation>> {
    if m == 0 {
        return Ok(Vec::new());
    }
    let mut out = match spec.structure {
        Structure::Z2 => planar_square(m)?,
        Structure::M10 => planar_tenfold(m)?,
        Structure::Z3 | Structure::Fcc | Structure::Bcc => cubic(m, cap)?,
        Structure::Z4 | Structure::D4 => quartic(m, spec.structure == Structure::Z4, cap)?,
        Structure::Mb | Structure::Mp | Structure::Mf => icosahedral(m, cap)?,
        Structure::Mc => module_c(m, cap)?,
        Structure::H4 => icosian_pairs(spec, m, cap)?,
    };
    out.sort();
    Ok(out)
}

fn to_i64<const N: usize>(v: &[BigInt]) -> [i64; N] {
    std::array::from_fn(|i| v[i].to_i64().expect("small coordinates"))
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

fn planar_square(m: u64) -> Result<Vec<Rotation>> {
    let b = (m as i64).sqrt();
    let mut seen: BTreeMap<[i64; 3], u64> = BTreeMap::new();
    for a in -b..=b {
        for c in -b..=b {
            let n = a * a + c * c;
            if n == 0 || n as u64 > m {
                continue;
            }
            let alpha = GaussInt::new(a, c);
            let s = split_sigma_gauss(&alpha, &alpha.conj())?.to_u64().expect("small");
            if s > m {
                continue;
            }
            // z = α/ᾱ = α²/n
            let (mut x, mut y) = (a * a - c * c, 2 * a * c);
            for _ in 0..4 {
                let g = gcd_all(&[x, y, n]);
                seen.entry([x / g, y / g, n / g]).or_insert(s);
                (x, y) = (-y, x);
            }
        }
    }
    Ok(seen.into_iter().map(|(k, s)| Rotation { sigma: s, handle: Handle::Gaussian(k) }).collect())
}

fn good_tenfold_norms(m: u64) -> Vec<bool> {
    (0..=m).map(|n| n >= 1 && factorize(n).iter().all(|(p, _)| p % 5 == 1)).collect()
}

fn planar_tenfold(m: u64) -> Result<Vec<Rotation>> {
    // balanced α has |α|, |σ₂α| ≤ (τ√m)^{1/2}, hence |aₖ| ≤ 8/5 of that
    let tau = crate::arith::golden::TAU;
    let b = (1.6 * (tau * (m as f64).sqrt()).sqrt()).floor() as i128 + 1;
    let good = good_tenfold_norms(m);
    let mut seen: BTreeMap<[i64; 5], u64> = BTreeMap::new();
    let mut done: HashSet<[i64; 5]> = HashSet::new();
    let units: Vec<CycloInt> =
        (0..5).flat_map(|k| [CycloInt::xi_pow(k), -CycloInt::xi_pow(k)]).collect();
    for c0 in -b..=b {
        for c1 in -b..=b {
            for c2 in -b..=b {
                for c3 in -b..=b {
                    let n = norm_i128(&[c0, c1, c2, c3]);
                    if n < 1 || n as u64 > m || !good[n as usize] {
                        continue;
                    }
                    let alpha = CycloInt::new([c0 as i64, c1 as i64, c2 as i64, c3 as i64]);
                    let (w, d) = cyclo_quotient(&alpha, &alpha.conj());
                    let key = reduce_cyclo(&w, &d);
                    if !done.insert(key) {
                        continue;
                    }
                    let s = split_sigma_cyclo(&alpha, &alpha.conj())?.to_u64().expect("small");
                    if s > m {
                        continue;
                    }
                    for u in &units {
                        seen.entry(reduce_cyclo(&(w.clone() * u.clone()), &d)).or_insert(s);
                    }
                }
            }
        }
    }
    Ok(seen.into_iter().map(|(k, s)| Rotation { sigma: s, handle: Handle::Cyclotomic(k) }).collect())
}

fn reduce_cyclo(w: &CycloInt, n: &BigInt) -> [i64; 5] {
    let g = w.c.iter().fold(n.clone(), |g, x| g.gcd(x));
    let g = if n.is_negative() { -g } else { g };
    let v: Vec<BigInt> = w.c.iter().chain(std::iter::once(n)).map(|x| x / &g).collect();
    to_i64(&v)
}

fn odd(n: u64) -> u64 {
    n >> n.trailing_zeros()
}

fn cubic(m: u64, cap: u64) -> Result<Vec<Rotation>> {
    Ok(enumerate_lipschitz(4 * m, true, cap)?
        .iter()
        .filter_map(|q| {
            let s = odd(q.norm().to_u64()?);
            (s <= m).then(|| Rotation { sigma: s, handle: Handle::Lipschitz(to_i64(&q.c)) })
        })
        .collect())
}

fn qmul(a: &[i64; 4], b: &[i64; 4]) -> [i64; 4] {
    let [a1, b1, c1, d1] = *a;
    let [a2, b2, c2, d2] = *b;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

/// Columns `q₁ eⱼ q̄₂`, flattened row-major.
fn mat4_i64(q1: &[i64; 4], q2: &[i64; 4]) -> [i64; 16] {
    let q2b = [q2[0], -q2[1], -q2[2], -q2[3]];
    let mut out = [0i64; 16];
    for j in 0..4 {
        let mut e = [0i64; 4];
        e[j] = 1;
        let c = qmul(&qmul(q1, &e), &q2b);
        for i in 0..4 {
            out[i * 4 + j] = c[i];
        }
    }
    out
}

fn quartic(m: u64, primitive_cell: bool, cap: u64) -> Result<Vec<Rotation>> {
    let mut groups: BTreeMap<u64, Vec<[i64; 4]>> = BTreeMap::new();
    for q in enumerate_lipschitz(4 * m, true, cap)? {
        groups.entry(q.norm().to_u64().expect("small")).or_default().push(to_i64(&q.c));
    }
    let mut seen: HashSet<[i64; 17]> = HashSet::new();
    let mut out = Vec::new();
    for (&n1, g1) in &groups {
        for (&n2, g2) in &groups {
            let prod = n1 * n2;
            let s = prod.sqrt();
            if s * s != prod {
                continue;
            }
            let sf = odd(n1).lcm(&odd(n2));
            if sf > m {
                continue;
            }
            for q1 in g1 {
                for q2 in g2 {
                    for sign in [1i64, -1] {
                        let q2s = q2.map(|x| x * sign);
                        let e = mat4_i64(q1, &q2s);
                        let g = gcd_all(&e).gcd(&(s as i64));
                        let den = s as i64 / g;
                        let sigma = if primitive_cell { sf.lcm(&(den as u64)) } else { sf };
                        if sigma > m {
                            continue;
                        }
                        let mut key = [0i64; 17];
                        for (k, x) in e.iter().enumerate() {
                            key[k] = x / g;
                        }
                        key[16] = den;
                        if seen.insert(key) {
                            out.push(Rotation { sigma, handle: Handle::LipschitzPair(*q1, q2s) });
                        }
                    }
                }
            }
            if out.len() as u64 > cap {
                return Err(Error::CapExceeded { cap, resume: None });
            }
        }
    }
    Ok(out)
}

fn icosian_key(q: &GoldenQuat) -> [i64; 8] {
    let v: Vec<BigInt> = q.c.iter().flat_map(|g| [g.a.clone(), g.b.clone()]).collect();
    to_i64(&v)
}

fn icosahedral(m: u64, cap: u64) -> Result<Vec<Rotation>> {
    Ok(enumerate_icosians(m, true, cap)?
        .iter()
        .map(|q| Rotation {
            sigma: q.norm().norm().abs().to_u64().expect("small"),
            handle: Handle::Icosian(icosian_key(q.doubled())),
        })
        .collect())
}

/// `|N(den R(q))|` for `R(q) = cayley(d)/|d|²`.
pub(crate) fn module_c_sigma(d: &GoldenQuat) -> Result<BigInt> {
    let n = d.norm();
    let mut g = n.clone();
    for e in d.cayley_entries().iter().flatten() {
        if !e.is_zero() {
            g = golden_gcd(&g, e)?;
        }
    }
    Ok(n.exact_div(&g).expect("gcd divides").norm().abs())
}

fn module_c(m: u64, cap: u64) -> Result<Vec<Rotation>> {
    // Σ_F ≤ 4Σ_C, since MF has index 4 over 2·MC
    let mut out = Vec::new();
    for q in enumerate_icosians(4 * m, true, cap)? {
        let s = module_c_sigma(q.doubled())?.to_u64().expect("small");
        if s <= m {
            out.push(Rotation { sigma: s, handle: Handle::Icosian(icosian_key(q.doubled())) });
        }
    }
    Ok(out)
}

fn icosian_pairs(spec: &StructureSpec, m: u64, cap: u64) -> Result<Vec<Rotation>> {
    let qs = enumerate_icosians(m, true, cap)?;
    // every candidate pair costs an oracle call
    let budget = cap / 400;
    if 2 * (qs.len() as u64).pow(2) > budget {
        return Err(Error::CapExceeded { cap: budget, resume: None });
    }
    let mut out = Vec::new();
    for a in &qs {
        for b in &qs {
            if !crate::arith::golden::is_golden_square(&(a.norm() * b.norm())) {
                continue;
            }
            for sign in [1i64, -1] {
                let bk = icosian_key(b.doubled()).map(|x| x * sign);
                let h = Handle::IcosianPair(icosian_key(a.doubled()), bk);
                if let Sigma::Finite(s) = sigma_oracle_value(&h.isometry(), spec)? {
                    let s = s.to_u64().expect("small");
                    if s <= m {
                        out.push(Rotation { sigma: s, handle: h });
                    }
                }
            }
            if out.len() as u64 > cap {
                return Err(Error::CapExceeded { cap, resume: None });
            }
        }
    }
    Ok(out)
}

/// The rotation point group: the rotations of index 1.
pub fn point_group(spec: &StructureSpec) -> Result<Vec<Isometry>> {
    Ok(rotations_upto(spec, 1, SEARCH_CAP)?.iter().map(Rotation::isometry).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CslOrbit {
    /// Least member in Hermite order, row-major.
    #[serde(serialize_with = "ser_hnf")]
    pub representative: HnfForm,
    pub size: usize,
}

fn ser_hnf<S: serde::Serializer>(h: &HnfForm, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&h.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub structure: String,
    pub sigma: u64,
    pub rotations: usize,
    pub csls: usize,
    pub point_group_order: usize,
    pub orbits: Vec<CslOrbit>,
}

/// The distinct CSLs of index `sigma` (structure coordinates), grouped into
/// orbits of the rotation point group.
pub fn classify_csls(spec: &StructureSpec, sigma: u64) -> Result<Classification> {
    let rots: Vec<Rotation> =
        rotations_upto(spec, sigma, SEARCH_CAP)?.into_iter().filter(|r| r.sigma == sigma).collect();
    let mut csls: BTreeSet<HnfForm> = BTreeSet::new();
    for r in &rots {
        let a = action(&r.isometry(), spec)?.expect("enumerated rotations are coincidences");
        csls.insert(a.csl());
    }
    let group: Vec<FracMat> = point_group(spec)?
        .iter()
        .map(|g| Ok(action(g, spec)?.expect("symmetries are coincidences")))
        .collect::<Result<_>>()?;
    let mut left = csls.clone();
    let mut orbits = Vec::new();
    while let Some(h) = left.pop_first() {
        let orbit: BTreeSet<HnfForm> = group.iter().map(|g| g.apply(&h)).collect();
        debug_assert!(orbit.is_subset(&csls));
        for x in &orbit {
            left.remove(x);
        }
        orbits.push(CslOrbit { representative: h, size: orbit.len() });
    }
    Ok(Classification {
        structure: spec.name(),
        sigma,
        rotations: rots.len(),
        csls: csls.len(),
        point_group_order: group.len(),
        orbits,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DualCheck {
    pub structure: String,
    pub checked: usize,
    /// Handles whose oracle index differs between the structure, its dual
    /// or the enumerated value.
    pub mismatches: Vec<String>,
}

/// Compares oracle indices on the structure and on its dual for every
/// rotation with `Σ ≤ sigma_max`.
pub fn module_dual_check(spec: &StructureSpec, sigma_max: u64) -> Result<DualCheck> {
    let dual = spec.dual();
    let rots = rotations_upto(spec, sigma_max, SEARCH_CAP)?;
    let mut mismatches = Vec::new();
    for r in &rots {
        let iso = r.isometry();
        let a = sigma_oracle_value(&iso, spec)?;
        let b = sigma_oracle_value(&iso, &dual)?;
        if a != b || a != Sigma::from(r.sigma) {
            mismatches.push(format!("{iso}: {a} vs {b} (enumerated {})", r.sigma));
        }
    }
    Ok(DualCheck { structure: spec.name(), checked: rots.len(), mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::Counting;
    use crate::engine::sigma;
    use crate::quaternion::mat4;

    fn counts(s: Structure, m: u64) -> BTreeMap<u64, u64> {
        enumerate_rotations(&StructureSpec::new(s), m, EnumOptions::default()).unwrap().histogram()
    }

    fn expect(s: Structure, m: u64) {
        let c = s.counting();
        let k = c.rotation_multiplier().unwrap();
        let h = counts(s, m);
        for n in 1..=m {
            let f = c.value(n).unwrap();
            assert_eq!(h.get(&n).copied().unwrap_or(0) as i128, k as i128 * f, "{s} Σ={n}");
        }
    }

    #[test]
    fn mat4_agrees_with_library() {
        let (a, b) = ([1, 2, -3, 4], [0, -1, 5, 2]);
        let m = mat4(&IntQuat::from_i64(1, 2, -3, 4), &IntQuat::from_i64(0, -1, 5, 2)).unwrap();
        let e = mat4_i64(&a, &b);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.get(i, j).to_i64().unwrap(), e[i * 4 + j]);
            }
        }
    }

    #[test]
    fn counts_match_counting_functions() {
        expect(Structure::Z2, 60);
        expect(Structure::Z3, 30);
        expect(Structure::Bcc, 15);
        expect(Structure::D4, 5);
        expect(Structure::Z4, 7);
        expect(Structure::M10, 41);
        expect(Structure::Mb, 20);
        expect(Structure::Mc, 9);
    }

    #[test]
    fn enumerated_indices_agree_with_closed_form_and_oracle() {
        for s in [Structure::Z2, Structure::Z3, Structure::Fcc, Structure::Z4, Structure::D4, Structure::M10, Structure::Mp, Structure::Mc] {
            let spec = StructureSpec::new(s);
            let page = enumerate_rotations(&spec, 11, EnumOptions::default()).unwrap();
            for r in page.items.iter().step_by(7) {
                let iso = r.isometry();
                let want = Sigma::from(r.sigma);
                assert_eq!(sigma(&iso, &spec).unwrap(), want, "{s} {iso}");
                assert_eq!(sigma_oracle_value(&iso, &spec).unwrap(), want, "{s} {iso}");
            }
        }
    }

    #[test]
    fn point_groups() {
        for s in Structure::ALL {
            if s == Structure::H4 {
                continue;
            }
            let g = point_group(&StructureSpec::new(s)).unwrap();
            assert_eq!(g.len() as u64, s.point_group_orders().1, "{s}");
        }
    }

    #[test]
    fn paging() {
        let spec = StructureSpec::new(Structure::Z3);
        let full = enumerate_rotations(&spec, 9, EnumOptions::default()).unwrap();
        let mut items = Vec::new();
        let mut opts = EnumOptions { cap: Some(50), ..Default::default() };
        loop {
            let p = enumerate_rotations(&spec, 9, opts).unwrap();
            items.extend(p.items);
            match p.resume {
                Some(t) => {
                    let t: ResumeToken = t.to_string().parse().unwrap();
                    opts.offset = t.offset;
                }
                None => break,
            }
        }
        assert_eq!(items, full.items);
    }

    #[test]
    fn cubic_classification() {
        let spec = StructureSpec::new(Structure::Z3);
        let c5 = classify_csls(&spec, 5).unwrap();
        assert_eq!((c5.csls, c5.orbits.len()), (6, 1));
        for s in [3u64, 7, 9, 11] {
            assert_eq!(classify_csls(&spec, s).unwrap().orbits.len(), 1, "Σ={s}");
        }
        let c13 = classify_csls(&spec, 13).unwrap();
        assert!(c13.orbits.len() >= 2);
        assert_eq!(c13.rotations as i128, 24 * Counting::Cubic.value(13).unwrap());
    }

    #[test]
    fn duals_agree() {
        for s in [Structure::Fcc, Structure::D4, Structure::Mb, Structure::M10] {
            let d = module_dual_check(&StructureSpec::new(s), 5).unwrap();
            assert!(d.mismatches.is_empty(), "{:?}", d.mismatches);
            assert!(d.checked > 0);
        }
    }
}
