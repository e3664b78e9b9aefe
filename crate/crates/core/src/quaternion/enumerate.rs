//! Bounded enumeration of integral quaternions, one per sign class.

use std::cmp::Ordering;

use num_bigint::BigInt;

use super::orders::{icosian_basis, icosian_gram4, Hurwitz, Icosian};
use super::{GoldenQuat, IntQuat, Quat, QuadQuat};
use crate::arith::GoldenInt;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuatRing {
    /// Z⁴.
    Lipschitz,
    /// Z⁴ ∪ (Z⁴ + ½(1,1,1,1)).
    Hurwitz,
    Icosian,
}

fn cap_check(n: usize, cap: u64) -> Result<()> {
    if n as u64 > cap {
        return Err(Error::CapExceeded { cap, resume: None });
    }
    Ok(())
}

fn isqrt(n: u64) -> i64 {
    (n as f64).sqrt() as i64 + 1
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn positive_lead(c: &[i64; 4]) -> bool {
    c.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// Integer quaternions with `1 ≤ |q|² ≤ max_norm`, first nonzero component
/// positive, sorted by norm.
pub fn enumerate_lipschitz(max_norm: u64, primitive_only: bool, cap: u64) -> Result<Vec<IntQuat>> {
    let r = isqrt(max_norm);
    let mut out: Vec<(i64, [i64; 4])> = Vec::new();
    for a in 0..=r {
        for b in -r..=r {
            for c in -r..=r {
                let partial = a * a + b * b + c * c;
                if partial as u64 > max_norm {
                    continue;
                }
                for d in -r..=r {
                    let n = partial + d * d;
                    let q = [a, b, c, d];
                    if n == 0 || n as u64 > max_norm || !positive_lead(&q) {
                        continue;
                    }
                    if primitive_only && q.iter().fold(0, |g, &x| gcd(g, x)) != 1 {
                        continue;
                    }
                    out.push((n, q));
                    cap_check(out.len(), cap)?;
                }
            }
        }
    }
    out.sort();
    Ok(out.into_iter().map(|(_, [a, b, c, d])| IntQuat::from_i64(a, b, c, d)).collect())
}

/// Hurwitz quaternions with `1 ≤ |q|² ≤ max_norm`, one per sign class.
/// Primitive means: not divisible by any rational integer > 1 inside J.
pub fn enumerate_hurwitz(max_norm: u64, primitive_only: bool, cap: u64) -> Result<Vec<Hurwitz>> {
    let r = 2 * isqrt(max_norm);
    let bound = 4 * max_norm as i64;
    let mut out: Vec<(i64, [i64; 4])> = Vec::new();
    for a in 0..=r {
        for b in -r..=r {
            for c in -r..=r {
                let partial = a * a + b * b + c * c;
                if partial > bound {
                    continue;
                }
                for d in -r..=r {
                    let q = [a, b, c, d];
                    let n = partial + d * d;
                    let odd = q.iter().filter(|x| x.rem_euclid(2) == 1).count();
                    if n == 0 || n > bound || (odd != 0 && odd != 4) || !positive_lead(&q) {
                        continue;
                    }
                    if primitive_only {
                        // q/p ∈ J for an odd prime p iff p | 2q; q/2 ∈ J iff 2q/2 has uniform parity
                        let g = q.iter().fold(0, |g, &x| gcd(g, x));
                        let half_ok = q.iter().all(|x| x % 2 == 0) && {
                            let h = q.map(|x| x / 2);
                            let o = h.iter().filter(|x| x.rem_euclid(2) == 1).count();
                            o == 0 || o == 4
                        };
                        let odd_g = {
                            let mut g = g;
                            while g % 2 == 0 && g > 0 {
                                g /= 2;
                            }
                            g
                        };
                        if half_ok || odd_g > 1 {
                            continue;
                        }
                    }
                    out.push((n, q));
                    cap_check(out.len(), cap)?;
                }
            }
        }
    }
    out.sort();
    Ok(out
        .into_iter()
        .map(|(_, [a, b, c, d])| Hurwitz::from_doubled(IntQuat::from_i64(a, b, c, d)).expect("parity checked"))
        .collect())
}

/// `a + bτ` with machine integers, for the inner enumeration loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct G64(i64, i64);

impl G64 {
    fn add(self, o: G64) -> G64 {
        G64(self.0 + o.0, self.1 + o.1)
    }
    fn mul(self, o: G64) -> G64 {
        let bd = self.1 * o.1;
        G64(self.0 * o.0 + bd, self.0 * o.1 + self.1 * o.0 + bd)
    }
    fn conj(self) -> G64 {
        G64(self.0 + self.1, -self.1)
    }
    fn norm(self) -> i64 {
        self.0 * self.0 + self.0 * self.1 - self.1 * self.1
    }
    /// Sign in the standard embedding: `a + bτ = ((2a+b) + b√5)/2`.
    fn sign1(self) -> Ordering {
        let (u, v) = (2 * self.0 + self.1, self.1);
        match (u.cmp(&0), v.cmp(&0)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            (su, _) => {
                if u * u > 5 * v * v {
                    su
                } else {
                    su.reverse()
                }
            }
        }
    }
}

const TAU2: G64 = G64(1, 1);

/// Totally positive `x` with `τ⁻² ≤ x/x' < τ²`: one representative of
/// each class `{τ^(2k)·x}`.
fn balanced(x: G64) -> bool {
    let xc = x.conj();
    let lo = x.mul(TAU2).add(G64(-xc.0, -xc.1));
    let hi = x.add(G64(-TAU2.mul(xc).0, -TAU2.mul(xc).1));
    lo.sign1() != Ordering::Less && hi.sign1() == Ordering::Less
}

/// All integer vectors `x` with `xᵀ A x ≤ bound` for a positive definite
/// `A` (Fincke–Pohst). `A` is given exactly and scaled by `scale`.
fn short_vectors(a: &[[i64; 8]; 8], scale: f64, bound: f64, mut visit: impl FnMut(&[i64; 8])) {
    const N: usize = 8;
    let af: Vec<Vec<f64>> = a.iter().map(|r| r.iter().map(|&x| x as f64 / scale).collect()).collect();
    // q[i][i] = squared pivots, q[i][j] = normalized off-diagonal (j > i)
    let mut q = af.clone();
    for i in 0..N {
        for j in i + 1..N {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for k in i + 1..N {
            for l in k..N {
                q[k][l] -= q[k][i] * q[i][l];
            }
        }
    }
    let bound = bound * (1.0 + 1e-9) + 1e-9;
    let mut x = [0i64; N];
    let mut rem = [0.0f64; N + 1];
    rem[N] = bound;
    fn rec(i: usize, q: &[Vec<f64>], x: &mut [i64; 8], rem: &mut [f64; 9], visit: &mut dyn FnMut(&[i64; 8])) {
        let c: f64 = -(i + 1..8).map(|j| q[i][j] * x[j] as f64).sum::<f64>();
        let r = (rem[i + 1] / q[i][i]).max(0.0).sqrt();
        let (lo, hi) = ((c - r).ceil() as i64, (c + r).floor() as i64);
        for v in lo..=hi {
            x[i] = v;
            let t = v as f64 - c;
            rem[i] = rem[i + 1] - q[i][i] * t * t;
            if rem[i] < -1e-9 {
                continue;
            }
            if i == 0 {
                visit(x);
            } else {
                rec(i - 1, q, x, rem, visit);
            }
        }
        x[i] = 0;
    }
    rec(N - 1, &q, &mut x, &mut rem, &mut visit);
}

/// Icosians `q` with `N(|q|²) ≤ max_norm` and `|q|²` balanced (so that each
/// class `q·τ^k` appears once), one per sign class, sorted by `N(|q|²)`.
/// The trace bound `Tr|q|² ≤ √5·√max_norm` holds on balanced elements and
/// makes the coordinate search finite.
pub fn enumerate_icosians(max_norm: u64, primitive_only: bool, cap: u64) -> Result<Vec<Icosian>> {
    let basis = icosian_basis();
    let b: Vec<Vec<i64>> = (0..8)
        .map(|i| (0..8).map(|j| i64::try_from(basis.get(i, j)).expect("small basis")).collect())
        .collect();
    let gram = icosian_gram4();
    let bound = (5.0 * max_norm as f64).sqrt();
    let mut out: Vec<(i64, [i64; 8])> = Vec::new();
    let mut overflow = false;
    short_vectors(&gram, 4.0, bound, |x| {
        if overflow {
            return;
        }
        let d: [i64; 8] = std::array::from_fn(|i| (0..8).map(|j| b[i][j] * x[j]).sum());
        let comps: [G64; 4] = std::array::from_fn(|k| G64(d[2 * k], d[2 * k + 1]));
        let lead = comps.iter().find(|g| g.0 != 0 || g.1 != 0);
        if lead.is_none_or(|g| g.sign1() != Ordering::Greater) {
            return;
        }
        let n4 = comps.iter().fold(G64(0, 0), |acc, &g| acc.add(g.mul(g)));
        debug_assert!(n4.0 % 4 == 0 && n4.1 % 4 == 0);
        let n = G64(n4.0 / 4, n4.1 / 4);
        let norm = n.norm();
        if norm < 1 || norm as u64 > max_norm || !balanced(n) {
            return;
        }
        out.push((norm, d));
        if out.len() as u64 > cap {
            overflow = true;
        }
    });
    if overflow {
        return Err(Error::CapExceeded { cap, resume: None });
    }
    out.sort();
    let mut res = Vec::with_capacity(out.len());
    for (_, d) in out {
        let q = GoldenQuat::from_fn(|k| GoldenInt::new(d[2 * k], d[2 * k + 1]));
        if primitive_only {
            // a common divisor of the components shows up in the gcd of their norms
            let g = (0..4).fold(0, |g, k| gcd(g, G64(d[2 * k], d[2 * k + 1]).norm()));
            if g != 1 {
                let ic = Icosian::from_doubled(q.clone()).expect("lattice vector");
                if !ic.is_primitive() {
                    continue;
                }
            }
        }
        res.push(Icosian::from_doubled(q).expect("lattice vector"));
    }
    Ok(res)
}

/// Dispatcher returning field-valued quaternions. The bound is on `|q|²`
/// for the rational orders and on `N(|q|²)` for icosians.
pub fn enumerate_quaternions(ring: QuatRing, bound: u64, primitive_only: bool, cap: u64) -> Result<Vec<QuadQuat>> {
    Ok(match ring {
        QuatRing::Lipschitz => enumerate_lipschitz(bound, primitive_only, cap)?.iter().map(|q| q.to_quad()).collect(),
        QuatRing::Hurwitz => enumerate_hurwitz(bound, primitive_only, cap)?.iter().map(|q| q.to_quad()).collect(),
        QuatRing::Icosian => enumerate_icosians(bound, primitive_only, cap)?.iter().map(|q| q.to_quad()).collect(),
    })
}

#[allow(dead_code)]
fn to_big(q: &[i64; 4]) -> Quat<BigInt> {
    IntQuat::from_i64(q[0], q[1], q[2], q[3])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use num_traits::ToPrimitive;
    use std::collections::HashSet;

    const CAP: u64 = 10_000_000;

    fn r4(m: i64) -> usize {
        let r = (m as f64).sqrt() as i64 + 1;
        let mut n = 0;
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    for d in -r..=r {
                        if a * a + b * b + c * c + d * d == m {
                            n += 1;
                        }
                    }
                }
            }
        }
        n
    }

    #[test]
    fn lipschitz_counts_match_four_squares() {
        let all = enumerate_lipschitz(200, false, CAP).unwrap();
        let mut by_norm = vec![0usize; 201];
        for q in &all {
            by_norm[q.norm().to_usize().unwrap()] += 1;
        }
        for m in 1..=200 {
            assert_eq!(2 * by_norm[m], r4(m as i64), "m = {m}");
            // Jacobi: r₄(m) = 8 Σ_{d | m, 4 ∤ d} d
            let jac: usize = (1..=m).filter(|d| m % d == 0 && d % 4 != 0).sum::<usize>() * 8;
            assert_eq!(2 * by_norm[m], jac);
        }
        let set: HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn small_examples() {
        assert_eq!(enumerate_lipschitz(1, true, CAP).unwrap().len(), 4);
        assert!(enumerate_lipschitz(4, false, CAP).unwrap().contains(&IntQuat::from_i64(1, 1, 1, 1)));
        assert!(!enumerate_lipschitz(4, true, CAP).unwrap().contains(&IntQuat::from_i64(2, 0, 0, 0)));
        assert_eq!(enumerate_hurwitz(1, true, CAP).unwrap().len(), 12);
        assert!(enumerate_lipschitz(100, false, 10).is_err());
    }

    #[test]
    fn hurwitz_counts() {
        // |J ∩ {|q|² = m}| = 24 σ(odd part of m)
        let all = enumerate_hurwitz(30, false, CAP).unwrap();
        for m in 1..=30u64 {
            let n = all.iter().filter(|q| q.norm() == BigInt::from(m)).count();
            let mut o = m;
            while o % 2 == 0 {
                o /= 2;
            }
            let s: u64 = (1..=o).filter(|d| o % d == 0).sum();
            assert_eq!(2 * n as u64, 24 * s, "m = {m}");
        }
    }

    #[test]
    fn unit_icosians() {
        let u = enumerate_icosians(1, true, CAP).unwrap();
        assert_eq!(u.len(), 60);
        assert!(u.iter().all(|q| q.norm() == GoldenInt::one()));
    }

    #[test]
    fn icosian_shells_are_complete() {
        // brute force over a box of doubled coordinates; the bound holds
        // because each component of 2q is bounded by 2σ(|q|) in both embeddings
        let m = 5u64;
        let got: HashSet<Icosian> = enumerate_icosians(m, false, CAP).unwrap().into_iter().collect();
        let mut want = HashSet::new();
        let bound = 2.0 * (crate::arith::golden::TAU * (m as f64).sqrt()).sqrt();
        let r = (bound * 1.5) as i64 + 1;
        let vals: Vec<G64> = (-r..=r)
            .flat_map(|a| (-r..=r).map(move |b| G64(a, b)))
            .filter(|g| {
                let (s1, s2) = GoldenInt::new(g.0, g.1).embeddings();
                s1.abs() <= bound + 1e-9 && s2.abs() <= bound + 1e-9
            })
            .collect();
        for a in &vals {
            for b in &vals {
                for c in &vals {
                    for d in &vals {
                        let cs = [*a, *b, *c, *d];
                        let q = GoldenQuat::from_fn(|k| GoldenInt::new(cs[k].0, cs[k].1));
                        let Some(ic) = Icosian::from_doubled(q) else { continue };
                        let n4 = cs.iter().fold(G64(0, 0), |acc, &g| acc.add(g.mul(g)));
                        let n = G64(n4.0 / 4, n4.1 / 4);
                        if n.norm() < 1 || n.norm() as u64 > m || !balanced(n) {
                            continue;
                        }
                        if positive_lead(&[cs[0], cs[1], cs[2], cs[3]].map(|g| match g.sign1() {
                            Ordering::Greater => 1,
                            Ordering::Less => -1,
                            Ordering::Equal => 0,
                        })) {
                            want.insert(ic);
                        }
                    }
                }
            }
        }
        assert_eq!(got, want);
    }
}
