//! Hermite and Smith normal forms.
//!
//! Convention: a lattice is the column span of its basis matrix. The Hermite
//! form is lower triangular with positive diagonal, and every entry left of
//! the diagonal lies in `[0, h_ii)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMat;

/// Canonical basis of a full-rank sublattice of Zⁿ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HnfForm {
    n: usize,
    /// Row-major lower-triangular entries.
    h: Vec<BigInt>,
}

impl HnfForm {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.h[i * self.n + j]
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    /// Index in Zⁿ: the product of the diagonal.
    pub fn det(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).product()
    }

    pub fn matrix(&self) -> IntMat {
        IntMat::from_vec(self.n, self.n, self.h.clone())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_matrix_unchecked(&IntMat::identity(n))
    }

    pub(crate) fn from_matrix_unchecked(m: &IntMat) -> Self {
        HnfForm { n: m.rows(), h: m.entries().to_vec() }
    }

    /// Accepts a matrix already in Hermite form, rejecting anything else.
    pub fn from_matrix(m: &IntMat) -> Result<Self> {
        let f = hnf(m)?;
        if f.matrix() != *m {
            return Err(Error::Domain("matrix is not in Hermite normal form".into()));
        }
        Ok(f)
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n).map(|i| self.h[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    /// Does the lattice contain the integer vector `v`?
    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solve(v).is_some()
    }

    /// Integer coordinates of `v` in the Hermite basis, by forward
    /// substitution.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut r: Vec<BigInt> = v.to_vec();
        let mut x = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let d = self.get(i, i);
            if !(&r[i] % d).is_zero() {
                return None;
            }
            let c = &r[i] / d;
            if !c.is_zero() {
                for k in i..self.n {
                    r[k] -= &c * self.get(k, i);
                }
            }
            x.push(c);
        }
        Some(x)
    }
}

impl fmt::Display for HnfForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix())
    }
}

/// Hermite normal form of the column span of `m` (which must have full row
/// rank).
pub fn hnf(m: &IntMat) -> Result<HnfForm> {
    let n = m.rows();
    let mut cols = m.col_vecs();
    if cols.len() < n {
        return Err(Error::RankDeficient);
    }
    for i in 0..n {
        loop {
            let piv = (i..cols.len())
                .filter(|&k| !cols[k][i].is_zero())
                .min_by(|&a, &b| cols[a][i].abs().cmp(&cols[b][i].abs()));
            let Some(p) = piv else {
                return Err(Error::RankDeficient);
            };
            cols.swap(i, p);
            let mut done = true;
            for k in i + 1..cols.len() {
                if cols[k][i].is_zero() {
                    continue;
                }
                let q = cols[k][i].div_floor(&cols[i][i]);
                let (head, tail) = cols.split_at_mut(k);
                for (x, y) in tail[0][i..].iter_mut().zip(&head[i][i..]) {
                    *x -= &q * y;
                }
                if !tail[0][i].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if cols[i][i].is_negative() {
            for x in cols[i].iter_mut() {
                *x = -&*x;
            }
        }
        reduce_left(&mut cols, i);
    }
    let mut h = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            h.push(cols[c][r].clone());
        }
    }
    Ok(HnfForm { n, h })
}

fn reduce_left(cols: &mut [Vec<BigInt>], i: usize) {
    let d = cols[i][i].clone();
    let (head, tail) = cols.split_at_mut(i);
    let piv = &tail[0];
    for col in head.iter_mut() {
        let q = col[i].div_floor(&d);
        if !q.is_zero() {
            for (x, y) in col[i..].iter_mut().zip(&piv[i..]) {
                *x -= &q * y;
            }
        }
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1, mut s0, mut s1, mut t0, mut t1) = (a, b, 1i128, 0i128, 0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Hermite form of the lattice spanned by `gens` together with `d·Zⁿ`,
/// computed with all entries reduced modulo `d`. `gens` are columns of
/// length `n`. Returns `None` when the arithmetic would not fit in `i128`.
pub fn hnf_modular(gens: &[Vec<i128>], n: usize, d: i128) -> Option<Vec<Vec<i128>>> {
    if d <= 0 || d > (1i128 << 60) {
        return None;
    }
    let mut pool: Vec<Vec<i128>> =
        gens.iter().map(|v| v.iter().map(|x| x.rem_euclid(d)).collect()).collect();
    let mut out: Vec<Vec<i128>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut p = vec![0i128; n];
        p[i] = d;
        for c in pool.iter_mut() {
            if c[i] == 0 {
                continue;
            }
            let (g, s, t) = ext_gcd(p[i], c[i]);
            let (u, v) = (c[i] / g, p[i] / g);
            for k in i..n {
                let (pk, ck) = (p[k], c[k]);
                p[k] = (s * pk + t * ck).rem_euclid(d);
                c[k] = (u * pk - v * ck).rem_euclid(d);
            }
            p[i] = g;
        }
        out.push(p);
        let hii = out[i][i];
        for j in 0..i {
            let q = out[j][i].div_euclid(hii);
            if q != 0 {
                for k in i..n {
                    out[j][k] -= q * out[i][k];
                }
            }
        }
    }
    // columns -> rows
    Some((0..n).map(|r| (0..n).map(|c| out[c][r]).collect()).collect())
}

/// Converts a row-major `i128` Hermite matrix to an `HnfForm`.
pub fn hnf_from_i128(rows: &[Vec<i128>]) -> HnfForm {
    let n = rows.len();
    HnfForm { n, h: rows.iter().flatten().map(|&x| BigInt::from(x)).collect() }
}

/// Smith normal form diagonal `d₁ | d₂ | … | dₙ` of a square nonsingular
/// integer matrix.
pub fn smith_diagonal(m: &IntMat) -> Result<Vec<BigInt>> {
    if !m.is_square() {
        return Err(Error::Dimension("Smith form needs a square matrix".into()));
    }
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i)).collect();
    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block as pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if !a[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Err(Error::RankDeficient);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..n {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..n {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for i in t..n {
                        let v = &q * &a[i][t];
                        a[i][j] -= v;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    let row = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
    }
    let d: Vec<BigInt> = (0..n).map(|i| a[i][i].abs()).collect();
    debug_assert!(d.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    Ok(d)
}
