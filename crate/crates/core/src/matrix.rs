//! Dense exact matrices over Z, Q and Q(√d).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quadratic::Quad;

pub type IntMat = Matrix<BigInt>;
pub type RatMat = Matrix<BigRational>;
pub type QuadMat = Matrix<Quad>;

/// Exact field arithmetic, as needed for elimination. Implemented only for
/// genuine fields so that integer matrices cannot reach elimination code.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl Field for BigRational {}
impl Field for Quad {}

/// Row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "shape mismatch");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<T>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|v| v.len() != r) {
            return Err(Error::Dimension("ragged columns".into()));
        }
        let data = (0..r).flat_map(|i| cols.iter().map(move |v| v[i].clone())).collect();
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U, F: FnMut(&T) -> Option<U>>(&self, f: F) -> Option<Matrix<U>> {
        let data = self.data.iter().map(f).collect::<Option<Vec<U>>>()?;
        Some(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// Horizontal concatenation `[self | o]`.
    pub fn hcat(&self, o: &Self) -> Result<Self> {
        if self.rows != o.rows {
            return Err(Error::Dimension("hcat row mismatch".into()));
        }
        let mut cols = self.col_vecs();
        cols.extend(o.col_vecs());
        Self::from_cols(&cols)
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[Self]) -> Self
    where
        T: Zero,
    {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix { rows: n, cols: m, data: vec![T::zero(); n * m] };
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn is_identity(&self) -> bool
    where
        T: PartialEq,
    {
        self.is_square() && *self == Self::identity(self.rows)
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut s = T::zero();
                for k in 0..self.cols {
                    s = s + self.get(i, k).clone() * o.get(k, j).clone();
                }
                data.push(s);
            }
        }
        Ok(Matrix { rows: self.rows, cols: o.cols, data })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(T::zero(), |s, k| s + self.get(i, k).clone() * v[k].clone())
            })
            .collect()
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }
}

impl<T: Clone + Add<Output = T>> Matrix<T> {
    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Dimension("add shape mismatch".into()));
        }
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }
}

impl<T: Field> Matrix<T> {
    /// Determinant by exact Gaussian elimination.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else {
                return Ok(T::zero());
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let piv = a.get(c, c).clone();
            det = det * piv.clone();
            for r in c + 1..n {
                let f = a.get(r, c).clone() / piv.clone();
                if f.is_zero() {
                    continue;
                }
                for k in c..n {
                    let v = a.get(r, k).clone() - f.clone() * a.get(c, k).clone();
                    a.set(r, k, v);
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a.get(r, c).is_zero()).ok_or(Error::RankDeficient)?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let piv = a.get(c, c).clone();
            for k in 0..n {
                a.set(c, k, a.get(c, k).clone() / piv.clone());
                inv.set(c, k, inv.get(c, k).clone() / piv.clone());
            }
            for r in 0..n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                for k in 0..n {
                    a.set(r, k, a.get(r, k).clone() - f.clone() * a.get(c, k).clone());
                    inv.set(r, k, inv.get(r, k).clone() - f.clone() * inv.get(c, k).clone());
                }
            }
        }
        Ok(inv)
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a.get(r, c).is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            let piv = a.get(rank, c).clone();
            for r in rank + 1..self.rows {
                let f = a.get(r, c).clone() / piv.clone();
                for k in c..self.cols {
                    let v = a.get(r, k).clone() - f.clone() * a.get(rank, k).clone();
                    a.set(r, k, v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// `M Mᵀ = 1`.
    pub fn is_orthogonal(&self) -> bool {
        self.is_square()
            && self.mul(&self.transpose()).map(|p| p.is_identity()).unwrap_or(false)
    }
}

impl<T> Matrix<T> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }
}

impl RatMat {
    pub fn from_int(m: &IntMat) -> Self {
        m.map(|x| BigRational::from_integer(x.clone()))
    }

    /// Least positive integer `k` with `k·M` integral.
    pub fn denominator(&self) -> BigInt {
        self.data.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_int(&self) -> Option<IntMat> {
        self.try_map(|x| x.is_integer().then(|| x.to_integer()))
    }

    pub fn to_quad(&self) -> QuadMat {
        self.map(|x| Quad::rational(x.clone()))
    }

    pub fn parse(s: &str) -> Result<Self> {
        QuadMat::parse(s)?
            .to_rational()
            .ok_or_else(|| Error::Parse(format!("irrational entries in {s:?}")))
    }
}

impl QuadMat {
    pub fn to_rational(&self) -> Option<RatMat> {
        self.try_map(Quad::to_rational)
    }

    /// The common radicand of all irrational entries (1 if rational).
    pub fn radicand(&self) -> u64 {
        self.data.iter().map(Quad::radicand).max().unwrap_or(1)
    }

    /// Parses `"a,b;c,d"`: rows split on `;`, entries on `,`.
    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|r| r.split(',').map(Quad::parse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = Self::from_rows(rows).map_err(|_| Error::Parse(format!("ragged matrix {s:?}")))?;
        let d = m.radicand();
        if m.data.iter().any(|x| x.radicand() != 1 && x.radicand() != d) {
            return Err(Error::Unsupported(format!("entries from several quadratic fields in {s:?}")));
        }
        Ok(m)
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(";")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> RatMat {
        RatMat::parse(s).unwrap()
    }

    #[test]
    fn basics() {
        let m = r("4/5,-3/5;3/5,4/5");
        assert!(m.is_orthogonal());
        assert_eq!(m.det().unwrap(), BigRational::one());
        assert_eq!(m.denominator(), BigInt::from(5));
        assert_eq!(m.to_string(), "4/5,-3/5;3/5,4/5");
        assert_eq!(m.inverse().unwrap(), m.transpose());
        assert!(RatMat::parse("1,2;3").is_err());
        assert!(RatMat::parse("sqrt(2)").is_err());
        let q = QuadMat::parse("1/2*sqrt(2),-1/2*sqrt(2);1/2*sqrt(2),1/2*sqrt(2)").unwrap();
        assert!(q.is_orthogonal());
        assert!(q.to_rational().is_none());
        assert_eq!(r("1,2;2,4").rank(), 1);
        assert!(r("1,2;2,4").inverse().is_err());
    }

    fn small_mat(n: usize) -> impl Strategy<Value = RatMat> {
        prop::collection::vec(-9i64..9, n * n).prop_map(move |v| {
            RatMat::from_vec(n, n, v.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
        })
    }

    proptest! {
        #[test]
        fn det_multiplicative(a in small_mat(4), b in small_mat(4)) {
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
            if !a.det().unwrap().is_zero() {
                prop_assert!(a.mul(&a.inverse().unwrap()).unwrap().is_identity());
            }
        }
    }
}
