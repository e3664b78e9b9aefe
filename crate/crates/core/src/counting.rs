//! Multiplicative counting functions and their Dirichlet series.
//!
//! Every function is stored as a prime-power rule. Tables are materialized
//! on demand with a smallest-prime-factor sieve, and each rule has an
//! independent Euler factor so the two can be checked against each other.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::int::{divisors, factorize, is_prime};
use crate::error::{Error, Result};
use crate::lattice::enumerate::count_sublattices;

/// The counting functions of the coincidence problems, plus the three
/// companions of the square-lattice hierarchy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Counting {
    /// CSLs of the square lattice Z².
    Square,
    /// CSLs of Z³ (and of the fcc and bcc lattices).
    Cubic,
    /// CSLs of the root lattice D₄.
    D4,
    /// CSLs of the hypercubic lattice Z⁴.
    Z4,
    /// CSMs of the tenfold module of rank 4.
    Tenfold,
    /// CSMs of the icosahedral modules of rank 6.
    Icosahedral,
    /// CSMs of the cubic module Z[τ]³.
    ModuleC,
    /// CSMs of the icosian ring.
    H4,
    /// All sublattices of Zⁿ.
    Sublattices(u32),
    /// Square sublattices of Z² (the ζ_K coefficients).
    SquareSublattices,
    /// Primitive square sublattices of Z².
    PrimitiveSquare,
}

impl Counting {
    /// The nine counting functions proper, with Z³ sublattices standing in
    /// for the sublattice family.
    pub const NINE: [Counting; 9] = [
        Counting::Square,
        Counting::Cubic,
        Counting::D4,
        Counting::Z4,
        Counting::Tenfold,
        Counting::Icosahedral,
        Counting::ModuleC,
        Counting::H4,
        Counting::Sublattices(3),
    ];

    pub fn name(&self) -> String {
        match self {
            Counting::Square => "square".into(),
            Counting::Cubic => "cubic".into(),
            Counting::D4 => "d4".into(),
            Counting::Z4 => "z4".into(),
            Counting::Tenfold => "tenfold".into(),
            Counting::Icosahedral => "icosahedral".into(),
            Counting::ModuleC => "module-c".into(),
            Counting::H4 => "h4".into(),
            Counting::Sublattices(n) => format!("sublattices{n}"),
            Counting::SquareSublattices => "square-sublattices".into(),
            Counting::PrimitiveSquare => "primitive-square".into(),
        }
    }

    /// Which indices carry nonzero values.
    pub fn domain_note(&self) -> &'static str {
        match self {
            Counting::Square => "products of primes p ≡ 1 (4)",
            Counting::Cubic | Counting::D4 => "odd m",
            Counting::Z4 => "m not divisible by 4",
            Counting::Tenfold => "products of primes p ≡ 1 (5)",
            Counting::Icosahedral | Counting::ModuleC | Counting::H4 => {
                "m = a² + ab − b²: primes ≡ ±2 (5) to even powers"
            }
            Counting::Sublattices(_) => "all m",
            Counting::SquareSublattices => "sums of two squares",
            Counting::PrimitiveSquare => "2^a·∏pᵉ with a ≤ 1, p ≡ 1 (4)",
        }
    }

    /// Order of the rotation part of the point group: the number of
    /// coincidence rotations of index m is this times f(m).
    pub fn rotation_multiplier(&self) -> Option<u64> {
        match self {
            Counting::Square => Some(4),
            Counting::Cubic => Some(24),
            Counting::D4 => Some(576),
            Counting::Z4 => Some(192),
            Counting::Tenfold => Some(10),
            Counting::Icosahedral => Some(60),
            Counting::ModuleC => Some(24),
            Counting::H4 => Some(7200),
            _ => None,
        }
    }

    /// Leading behaviour Σ_{m≤N} f(m) ≈ c·N^k, as `(k, c)`.
    pub fn asymptotic(&self) -> Option<(u32, f64)> {
        use std::f64::consts::PI;
        let log_tau = ((1.0 + 5f64.sqrt()) / 2.0).ln();
        Some(match self {
            Counting::Square => (1, 1.0 / PI),
            Counting::Cubic => (2, 3.0 / (PI * PI)),
            Counting::D4 => (3, 0.26257),
            Counting::Tenfold => (1, 5.0 * log_tau / (PI * PI)),
            Counting::Icosahedral => (2, 45.0 * 5f64.sqrt() * log_tau / (2.0 * PI.powi(4))),
            Counting::H4 => (3, 0.19773),
            Counting::Sublattices(n) if *n >= 1 => {
                // r_n·N^n/n with r_n = ζ(2)⋯ζ(n)
                let r: f64 = (2..=*n).map(zeta).product();
                (*n, r / *n as f64)
            }
            Counting::SquareSublattices => (1, PI / 4.0),
            Counting::PrimitiveSquare => (1, 3.0 / (2.0 * PI)),
            _ => return None,
        })
    }

    /// f(p^r) for a prime p and r ≥ 1.
    pub fn prime_power(&self, p: u64, r: u32) -> Result<i128> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if r == 0 {
            return Ok(1);
        }
        let v = rule(*self, p, r);
        v.to_i128().ok_or_else(|| Error::Domain(format!("f({p}^{r}) overflows")))
    }

    /// f(m) for m ≥ 1.
    pub fn value(&self, m: u64) -> Result<i128> {
        if m == 0 {
            return Err(Error::Domain("index must be positive".into()));
        }
        factorize(m).into_iter().try_fold(1i128, |acc, (p, r)| {
            let v = self.prime_power(p, r)?;
            acc.checked_mul(v).ok_or_else(|| Error::Domain(format!("f({m}) overflows")))
        })
    }

    /// Coefficients f(1..=n).
    pub fn table(&self, n: usize) -> Result<SeriesTable> {
        let spf = smallest_prime_factors(n);
        let mut pp: HashMap<(u64, u32), i128> = HashMap::new();
        let mut c = vec![0i128; n + 1];
        if n >= 1 {
            c[1] = 1;
        }
        for m in 2..=n {
            let p = spf[m];
            let (mut q, mut r) = (m, 0u32);
            while q % p == 0 {
                q /= p;
                r += 1;
            }
            let v = match pp.get(&(p as u64, r)) {
                Some(v) => *v,
                None => {
                    let v = self.prime_power(p as u64, r)?;
                    pp.insert((p as u64, r), v);
                    v
                }
            };
            c[m] = c[q].checked_mul(v).ok_or_else(|| Error::Domain(format!("f({m}) overflows")))?;
        }
        Ok(SeriesTable { name: self.name(), coeffs: c })
    }

    /// The Euler factor at p as a rational function of x = p^(−s).
    pub fn euler_factor(&self, p: u64) -> EulerFactor {
        let p = p as i128;
        let one = || EulerFactor::one();
        let ratio = |num: Vec<i128>, den: Vec<i128>| EulerFactor { num, den };
        let res4 = p % 4;
        let res5 = p % 5;
        match self {
            Counting::Square if res4 == 1 => ratio(vec![1, 1], vec![1, -1]),
            Counting::Square => one(),
            Counting::Cubic if p == 2 => one(),
            Counting::Cubic => ratio(vec![1, 1], vec![1, -p]),
            Counting::D4 if p == 2 => one(),
            Counting::D4 => Counting::Cubic.euler_factor(p as u64).times(&Counting::Cubic.euler_factor(p as u64).twist(p)),
            Counting::Z4 if p == 2 => ratio(vec![1, 2], vec![1]),
            Counting::Z4 => Counting::D4.euler_factor(p as u64),
            Counting::Tenfold if res5 == 1 => ratio(vec![1, 1], vec![1, -1]).pow(2),
            Counting::Tenfold => one(),
            Counting::Icosahedral if p == 5 => ratio(vec![1, 1], vec![1, -5]),
            Counting::Icosahedral if res5 == 2 || res5 == 3 => ratio(vec![1, 0, 1], vec![1, 0, -p * p]),
            Counting::Icosahedral => ratio(vec![1, 1], vec![1, -p]).pow(2),
            // (1+4^{1−s})/(1+4^{−s}) cancels the 1+x² of the p = 2 factor
            Counting::ModuleC if p == 2 => ratio(vec![1, 0, 4], vec![1, 0, -4]),
            Counting::ModuleC => Counting::Icosahedral.euler_factor(p as u64),
            Counting::H4 => {
                let f = Counting::Icosahedral.euler_factor(p as u64);
                f.times(&f.twist(p))
            }
            Counting::Sublattices(n) => (0..*n).fold(one(), |acc, k| acc.times(&ratio(vec![1], vec![1, -p.pow(k)]))),
            Counting::SquareSublattices => match res4 {
                1 => ratio(vec![1], vec![1, -1]).pow(2),
                3 => ratio(vec![1], vec![1, 0, -1]),
                _ => ratio(vec![1], vec![1, -1]),
            },
            Counting::PrimitiveSquare => match res4 {
                1 => ratio(vec![1, 1], vec![1, -1]),
                3 => one(),
                _ => ratio(vec![1, 1], vec![1]),
            },
        }
    }

    /// Coefficients f(1..=n) multiplied out from the Euler product.
    pub fn euler_table(&self, n: usize) -> SeriesTable {
        let mut c = vec![0i128; n + 1];
        if n >= 1 {
            c[1] = 1;
        }
        for p in (2..=n).filter(|&p| is_prime(p as u64)) {
            let mut rmax = 0;
            let mut q = 1usize;
            while q <= n / p {
                q *= p;
                rmax += 1;
            }
            let e = self.euler_factor(p as u64).expand(rmax);
            // multiply the current partial product by the local factor
            let mut next = vec![0i128; n + 1];
            for m in (1..=n).filter(|m| m % p != 0) {
                if c[m] == 0 {
                    continue;
                }
                let mut pk = 1usize;
                for ek in e.iter() {
                    if m * pk > n {
                        break;
                    }
                    next[m * pk] += c[m] * ek;
                    if pk > n / p {
                        break;
                    }
                    pk *= p;
                }
            }
            c = next;
        }
        SeriesTable { name: format!("{} (Euler product)", self.name()), coeffs: c }
    }
}

impl fmt::Display for Counting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Counting {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.to_ascii_lowercase();
        Ok(match t.as_str() {
            "square" | "z2" => Counting::Square,
            "cubic" | "z3" | "fcc" | "bcc" => Counting::Cubic,
            "d4" | "d4*" => Counting::D4,
            "z4" => Counting::Z4,
            "tenfold" | "m10" => Counting::Tenfold,
            "icosahedral" | "mp" | "mb" | "mf" => Counting::Icosahedral,
            "module-c" | "mc" => Counting::ModuleC,
            "h4" | "icosian" => Counting::H4,
            "sigma1" => Counting::Sublattices(2),
            "square-sublattices" => Counting::SquareSublattices,
            "primitive-square" => Counting::PrimitiveSquare,
            _ => match t.strip_prefix("sublattices").map(str::parse::<u32>) {
                Some(Ok(n)) if n >= 1 => Counting::Sublattices(n),
                _ => return Err(Error::Parse(format!("unknown counting function {s:?}"))),
            },
        })
    }
}

fn zeta(k: u32) -> f64 {
    // tail bounded by N^{1−k}/(k−1); fine for k ≥ 2
    let n = 100_000;
    (1..=n).map(|m| (m as f64).powi(-(k as i32))).sum::<f64>() + (n as f64).powi(1 - k as i32) / (k as f64 - 1.0)
}

fn pow(p: u64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), e as usize)
}

fn exact_div(n: BigInt, d: BigInt) -> BigInt {
    let (q, r) = n.div_rem(&d);
    debug_assert!(r.is_zero(), "prime-power rule is not integral");
    q
}

/// The printed prime-power rules.
fn rule(kind: Counting, p: u64, r: u32) -> BigInt {
    let big = |n: i64| BigInt::from(n);
    let bp = BigInt::from(p);
    let m5 = p % 5;
    match kind {
        Counting::Square => big(if p % 4 == 1 { 2 } else { 0 }),
        Counting::Cubic if p == 2 => big(0),
        Counting::Cubic => (&bp + 1) * pow(p, r - 1),
        Counting::D4 if p == 2 => big(0),
        Counting::D4 => {
            // (p+1)/(p−1)·p^{r−1}(p^{r+1} + p^{r−1} − 2)
            let n = (&bp + 1) * pow(p, r - 1) * (pow(p, r + 1) + pow(p, r - 1) - 2);
            exact_div(n, &bp - 1)
        }
        Counting::Z4 if p == 2 => big(if r == 1 { 2 } else { 0 }),
        Counting::Z4 => rule(Counting::D4, p, r),
        Counting::Tenfold => big(if m5 == 1 { 4 * r as i64 } else { 0 }),
        Counting::Icosahedral if p == 5 => 6 * pow(5, r - 1),
        Counting::Icosahedral if m5 == 2 || m5 == 3 => {
            if r % 2 == 1 {
                big(0)
            } else {
                let h = r / 2;
                (&bp * &bp + 1) * pow(p, 2 * (h - 1))
            }
        }
        Counting::Icosahedral => {
            // (p+1)((r+1)p^{r−1} + (r−1)p^{r−2}); the second term vanishes at r = 1
            let second = if r >= 2 { big(r as i64 - 1) * pow(p, r - 2) } else { big(0) };
            (&bp + 1) * (big(r as i64 + 1) * pow(p, r - 1) + second)
        }
        // the modified factor at 2 gives 2·4^k at 2^{2k}
        Counting::ModuleC if p == 2 => {
            if r % 2 == 1 {
                big(0)
            } else {
                2 * pow(2, r)
            }
        }
        Counting::ModuleC => rule(Counting::Icosahedral, p, r),
        Counting::H4 if p == 5 => exact_div(3 * pow(5, r - 1) * (pow(5, r + 1) + pow(5, r - 1) - 2), big(2)),
        Counting::H4 if m5 == 2 || m5 == 3 => {
            if r % 2 == 1 {
                big(0)
            } else {
                let h = r / 2;
                let p2 = &bp * &bp;
                let n = (&p2 + 1) * pow(p, 2 * (h - 1)) * (pow(p, 2 * (h + 1)) + pow(p, 2 * (h - 1)) - 2);
                exact_div(n, p2 - 1)
            }
        }
        Counting::H4 => {
            let (p2, p3, p4) = (pow(p, 2), pow(p, 3), pow(p, 4));
            let rb = big(r as i64);
            let inner = 4 * &p2 * (2 * (&p2 + 1) + &rb * (&p2 - 1))
                + pow(p, r) * (&p2 + 1) * (&rb * (&p4 - 1) + &p4 - 4 * &p3 - 2 * &p2 - 4 * &bp + 1);
            let mut n = (&bp + 1) * inner;
            let mut d = num_traits::pow(&bp - 1, 3);
            if r >= 4 {
                n *= pow(p, r - 4);
            } else {
                d *= pow(p, 4 - r);
            }
            exact_div(n, d)
        }
        Counting::Sublattices(n) => sublattice_prime_power(n, p, r),
        Counting::SquareSublattices => match p % 4 {
            1 => big(r as i64 + 1),
            3 => big(if r % 2 == 0 { 1 } else { 0 }),
            _ => big(1),
        },
        Counting::PrimitiveSquare => match p % 4 {
            1 => big(2),
            3 => big(0),
            _ => big(if r == 1 { 1 } else { 0 }),
        },
    }
}

/// Σ over exponent vectors (e₁,…,eₙ) summing to r of p^{Σ (i−1)eᵢ}.
fn sublattice_prime_power(n: u32, p: u64, r: u32) -> BigInt {
    if n == 0 {
        return if r == 0 { BigInt::one() } else { BigInt::zero() };
    }
    // the last slot carries weight n−1
    (0..=r).map(|e| pow(p, (n - 1) * e) * sublattice_prime_power(n - 1, p, r - e)).sum()
}

/// f_F(p^r) = f(p^r)(f(p^r) + 2 Σ_{ℓ=1}^{⌊r/2⌋} f(p^{r−2ℓ})) with f the Z³
/// function.
pub fn d4_cubrec(p: u64, r: u32) -> Result<i128> {
    let f = |e: u32| Counting::Cubic.prime_power(p, e);
    let mut acc = f(r)?;
    for l in 1..=r / 2 {
        acc += 2 * f(r - 2 * l)?;
    }
    Ok(f(r)? * acc)
}

/// f_n(m) by the recursion f_n(m) = Σ_{d|m} d·f_{n−1}(d), f_1 ≡ 1.
pub fn f_sublattices(n: u32, m: u64) -> Result<u128> {
    if m == 0 || n == 0 {
        return Err(Error::Domain("need n ≥ 1 and m ≥ 1".into()));
    }
    if n == 1 {
        return Ok(1);
    }
    divisors(m).into_iter().try_fold(0u128, |acc, d| {
        let t = (d as u128)
            .checked_mul(f_sublattices(n - 1, d)?)
            .ok_or_else(|| Error::Domain("f_n(m) overflows".into()))?;
        Ok(acc + t)
    })
}

/// f_n(m) by the closed form Σ over ordered factorizations m = d₁⋯dₙ of
/// d₁⁰d₂¹⋯dₙ^{n−1}.
pub fn f_sublattices_closed(n: u32, m: u64) -> u128 {
    count_sublattices(n as usize, m)
}

/// A Dirichlet series truncated at a bound: coefficients f(1..=N).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable {
    pub name: String,
    coeffs: Vec<i128>,
}

impl SeriesTable {
    pub fn from_fn(name: impl Into<String>, n: usize, f: impl Fn(u64) -> i128) -> Self {
        let mut coeffs = vec![0; n + 1];
        for (m, c) in coeffs.iter_mut().enumerate().skip(1) {
            *c = f(m as u64);
        }
        SeriesTable { name: name.into(), coeffs }
    }

    /// ε: 1 at m = 1, zero elsewhere.
    pub fn identity(n: usize) -> Self {
        SeriesTable::from_fn("identity", n, |m| (m == 1) as i128)
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// f(m), or None beyond the bound.
    pub fn get(&self, m: u64) -> Option<i128> {
        (m >= 1).then(|| self.coeffs.get(m as usize).copied()).flatten()
    }

    /// `(m, f(m))` for m = 1..=N.
    pub fn iter(&self) -> impl Iterator<Item = (u64, i128)> + '_ {
        self.coeffs.iter().enumerate().skip(1).map(|(m, &c)| (m as u64, c))
    }

    /// Nonzero terms, as they are printed in a series.
    pub fn support(&self) -> Vec<(u64, i128)> {
        self.iter().filter(|(_, c)| *c != 0).collect()
    }

    /// Coefficients of Φ(s − k): f(m)·m^k.
    pub fn shift(&self, k: u32) -> SeriesTable {
        SeriesTable {
            name: format!("{}(s-{k})", self.name),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, &c)| c * (m as i128).pow(k))
                .collect(),
        }
    }

    /// Σ_{m≤N} f(m).
    pub fn summatory(&self) -> i128 {
        self.coeffs.iter().sum()
    }

    pub fn is_multiplicative(&self) -> bool {
        let n = self.bound() as u64;
        if self.get(1) != Some(1) {
            return false;
        }
        (2..=n).all(|a| {
            (2..=n / a).filter(|&b| a.gcd(&b) == 1).all(|b| self.get(a * b) == Some(self.get(a).unwrap() * self.get(b).unwrap()))
        })
    }
}

/// h(m) = Σ_{d|m} f(d)g(m/d), up to the smaller bound.
pub fn dirichlet_convolve(f: &SeriesTable, g: &SeriesTable) -> SeriesTable {
    let n = f.bound().min(g.bound());
    let mut h = vec![0i128; n + 1];
    for d in 1..=n {
        if f.coeffs[d] == 0 {
            continue;
        }
        for e in 1..=n / d {
            h[d * e] += f.coeffs[d] * g.coeffs[e];
        }
    }
    SeriesTable { name: format!("{}*{}", f.name, g.name), coeffs: h }
}

/// A local factor num(x)/den(x) with den(0) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerFactor {
    pub num: Vec<i128>,
    pub den: Vec<i128>,
}

impl EulerFactor {
    pub fn one() -> Self {
        EulerFactor { num: vec![1], den: vec![1] }
    }

    pub fn times(&self, o: &EulerFactor) -> Self {
        EulerFactor { num: poly_mul(&self.num, &o.num), den: poly_mul(&self.den, &o.den) }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(EulerFactor::one(), |acc, _| acc.times(self))
    }

    /// x ↦ p·x, i.e. s ↦ s − 1.
    pub fn twist(&self, p: i128) -> Self {
        let tw = |v: &[i128]| v.iter().enumerate().map(|(i, &c)| c * p.pow(i as u32)).collect();
        EulerFactor { num: tw(&self.num), den: tw(&self.den) }
    }

    /// Power-series coefficients up to x^rmax.
    pub fn expand(&self, rmax: usize) -> Vec<i128> {
        assert_eq!(self.den[0], 1, "denominator must start with 1");
        let mut out = vec![0i128; rmax + 1];
        for k in 0..=rmax {
            let mut c = self.num.get(k).copied().unwrap_or(0);
            for j in 1..=k.min(self.den.len() - 1) {
                c -= self.den[j] * out[k - j];
            }
            out[k] = c;
        }
        out
    }
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn smallest_prime_factors(n: usize) -> Vec<usize> {
    let mut spf = vec![0usize; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i;
                }
                j += i;
            }
        }
    }
    spf
}

/// The square-lattice hierarchy at one index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hierarchy {
    pub all: u128,
    pub square: u128,
    pub primitive_square: u128,
    pub csl: u128,
}

/// Sublattices, square sublattices, primitive square sublattices and CSLs
/// of Z² at index m. The square counts come from the Gaussian integers of
/// norm m, four associates per lattice.
pub fn hierarchy_counts(m: u64) -> Result<Hierarchy> {
    if m == 0 {
        return Err(Error::Domain("index must be positive".into()));
    }
    let (mut square, mut primitive) = (0u128, 0u128);
    let mut a: u64 = 0;
    while a * a <= m {
        let rest = m - a * a;
        let b = rest.isqrt();
        if b * b == rest {
            // count every sign pattern of (a, b)
            let signs = match (a == 0, b == 0) {
                (true, true) => 1,
                (true, false) | (false, true) => 2,
                _ => 4,
            };
            square += signs;
            if a.gcd(&b) == 1 {
                primitive += signs;
            }
        }
        a += 1;
    }
    Ok(Hierarchy {
        all: f_sublattices(2, m)?,
        square: square / 4,
        primitive_square: primitive / 4,
        csl: Counting::Square.value(m)? as u128,
    })
}

/// |Σ_{m≤N} f(m) / (c·N^k) − 1|.
pub fn summatory_check(f: &SeriesTable, k: u32, c: f64) -> f64 {
    let n = f.bound() as f64;
    let s = f.summatory() as f64;
    (s / (c * n.powi(k as i32)) - 1.0).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(kind: Counting, ms: &[u64]) -> Vec<i128> {
        let t = kind.table(*ms.iter().max().unwrap() as usize).unwrap();
        ms.iter().map(|&m| t.get(m).unwrap()).collect()
    }

    #[test]
    fn printed_values() {
        assert_eq!(coeffs(Counting::Square, &[1, 5, 65, 3]), [1, 2, 4, 0]);
        assert_eq!(coeffs(Counting::Cubic, &[3, 2, 15]), [4, 0, 24]);
        assert_eq!(coeffs(Counting::D4, &[3, 9, 6]), [16, 168, 0]);
        assert_eq!(coeffs(Counting::Z4, &[2, 6, 4]), [2, 32, 0]);
        assert_eq!(coeffs(Counting::Tenfold, &[11, 121, 7]), [4, 8, 0]);
        assert_eq!(coeffs(Counting::Icosahedral, &[4, 11, 36]), [5, 24, 50]);
        assert_eq!(coeffs(Counting::ModuleC, &[4, 16, 5]), [8, 32, 6]);
        assert_eq!(coeffs(Counting::H4, &[4, 11, 20]), [25, 288, 900]);
        assert_eq!(f_sublattices(2, 12).unwrap(), 28);
        assert_eq!(f_sublattices(3, 2).unwrap(), 7);
        assert_eq!(f_sublattices(1, 97).unwrap(), 1);
    }

    #[test]
    fn rules_match_euler_products() {
        let mut all: Vec<Counting> = Counting::NINE.to_vec();
        all.extend([
            Counting::Sublattices(1),
            Counting::Sublattices(2),
            Counting::Sublattices(4),
            Counting::SquareSublattices,
            Counting::PrimitiveSquare,
        ]);
        for kind in all {
            assert_eq!(kind.table(3000).unwrap().coeffs, kind.euler_table(3000).coeffs, "{kind}");
        }
    }

    #[test]
    fn d4_three_ways() {
        for p in [3u64, 5, 7, 11, 13] {
            for r in 1..6 {
                assert_eq!(d4_cubrec(p, r).unwrap(), Counting::D4.prime_power(p, r).unwrap(), "{p}^{r}");
            }
        }
        let f = Counting::Cubic.table(2000).unwrap();
        let conv = dirichlet_convolve(&f, &f.shift(1));
        assert_eq!(conv.coeffs, Counting::D4.table(2000).unwrap().coeffs);
    }

    #[test]
    fn h4_is_icosahedral_convolution() {
        let f = Counting::Icosahedral.table(3000).unwrap();
        assert_eq!(dirichlet_convolve(&f, &f.shift(1)).coeffs, Counting::H4.table(3000).unwrap().coeffs);
    }

    #[test]
    fn identity_convolution() {
        let f = Counting::Cubic.table(200).unwrap();
        assert_eq!(dirichlet_convolve(&SeriesTable::identity(200), &f).coeffs, f.coeffs);
    }

    #[test]
    fn sublattice_recursion_matches_closed_form() {
        for n in 1..=4 {
            for m in 1..=60 {
                let r = f_sublattices(n, m).unwrap();
                assert_eq!(r, f_sublattices_closed(n, m), "n={n} m={m}");
                assert_eq!(r as i128, Counting::Sublattices(n).value(m).unwrap());
            }
        }
    }

    #[test]
    fn hierarchy_examples() {
        let h = |m| hierarchy_counts(m).unwrap();
        assert_eq!(h(25), Hierarchy { all: 31, square: 3, primitive_square: 2, csl: 2 });
        assert_eq!(h(2), Hierarchy { all: 3, square: 1, primitive_square: 1, csl: 0 });
        assert_eq!(h(1), Hierarchy { all: 1, square: 1, primitive_square: 1, csl: 1 });
        for m in 1..500 {
            let x = h(m);
            assert_eq!(x.square as i128, Counting::SquareSublattices.value(m).unwrap(), "{m}");
            assert_eq!(x.primitive_square as i128, Counting::PrimitiveSquare.value(m).unwrap(), "{m}");
            assert!(x.all >= x.square && x.square >= x.primitive_square && x.primitive_square >= x.csl);
        }
    }

    #[test]
    fn tables_are_multiplicative() {
        for kind in Counting::NINE {
            assert!(kind.table(200).unwrap().is_multiplicative(), "{kind}");
        }
    }

    #[test]
    fn parse_names() {
        for kind in Counting::NINE {
            assert_eq!(kind.name().parse::<Counting>().unwrap(), kind);
        }
        assert!("nonsense".parse::<Counting>().is_err());
    }
}
