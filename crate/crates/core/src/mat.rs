//! Dense row-major matrices over a [`FiniteField`] and the elimination
//! routines built on top of them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitmat;
use crate::error::{Error, Result};
use crate::field::{FiniteField, Scalar};
use crate::subspace::Subspace;

/// Largest row or column count accepted by the elimination routines.
pub const MAX_MAT_DIM: usize = 1 << 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (i, x) in self.row(r).iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

impl Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<Scalar>> = Vec::deserialize(d)?;
        let cols = rows.first().map_or(0, Vec::len);
        Mat::from_rows(rows.len(), cols, &rows).map_err(serde::de::Error::custom)
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Self { rows, cols, data }
    }

    /// Build from nested rows. `cols` is needed to represent `k x 0` and `0 x k`
    /// shapes unambiguously.
    pub fn from_rows<R: AsRef<[Scalar]>>(rows: usize, cols: usize, src: &[R]) -> Result<Self> {
        if src.len() != rows {
            return Err(Error::DimensionMismatch(format!(
                "expected {rows} rows, found {}",
                src.len()
            )));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for (i, r) in src.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Self { rows, cols, data })
    }

    /// A single row vector.
    pub fn row_vector(v: &[Scalar]) -> Self {
        Self::from_vec(1, v.len(), v.to_vec())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [Scalar] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn check_entries(&self, f: &FiniteField) -> Result<()> {
        match self.data.iter().find(|&&x| !f.is_valid(x)) {
            Some(&value) => Err(Error::InvalidScalar { value, q: f.q() }),
            None => Ok(()),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat, f: &FiniteField) -> Mat {
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        if f.uses_packed() {
            return bitmat::mul(self, other);
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let src = other.row(k);
                let dst = out.row_mut(i);
                for (d, &b) in dst.iter_mut().zip(src) {
                    if b != 0 {
                        *d = f.add(*d, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[Scalar], f: &FiniteField) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (d, &b) in out.iter_mut().zip(self.row(k)) {
                if b != 0 {
                    *d = f.add(*d, f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat, f: &FiniteField) -> Mat {
        assert_eq!(self.shape(), other.shape());
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Mat::from_vec(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Mat, f: &FiniteField) -> Mat {
        assert_eq!(self.shape(), other.shape());
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Mat::from_vec(self.rows, self.cols, data)
    }

    pub fn scale(&self, s: Scalar, f: &FiniteField) -> Mat {
        let data = self.data.iter().map(|&a| f.mul(s, a)).collect();
        Mat::from_vec(self.rows, self.cols, data)
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: Scalar, other: &Mat, f: &FiniteField) {
        assert_eq!(self.shape(), other.shape());
        if s == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            if b != 0 {
                *a = f.add(*a, f.mul(s, b));
            }
        }
    }

    pub fn hstack(parts: &[&Mat]) -> Mat {
        let rows = parts.first().map_or(0, |m| m.rows);
        assert!(parts.iter().all(|m| m.rows == rows), "hstack row mismatch");
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(rows, cols);
        for r in 0..rows {
            let mut off = 0;
            for m in parts {
                out.row_mut(r)[off..off + m.cols].copy_from_slice(m.row(r));
                off += m.cols;
            }
        }
        out
    }

    pub fn vstack(parts: &[&Mat]) -> Mat {
        let cols = parts.first().map_or(0, |m| m.cols);
        assert!(
            parts.iter().all(|m| m.cols == cols),
            "vstack column mismatch"
        );
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            data.extend_from_slice(&m.data);
        }
        Mat::from_vec(rows, cols, data)
    }

    /// Block-diagonal matrix.
    pub fn block_diag(parts: &[&Mat]) -> Mat {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for m in parts {
            for r in 0..m.rows {
                out.row_mut(ro + r)[co..co + m.cols].copy_from_slice(m.row(r));
            }
            ro += m.rows;
            co += m.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat::from_vec(idx.len(), self.cols, data)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Rows `start..end`.
    pub fn row_range(&self, start: usize, end: usize) -> Mat {
        Mat::from_vec(
            end - start,
            self.cols,
            self.data[start * self.cols..end * self.cols].to_vec(),
        )
    }

    /// Columns `start..end`.
    pub fn col_range(&self, start: usize, end: usize) -> Mat {
        let idx: Vec<usize> = (start..end).collect();
        self.select_cols(&idx)
    }

    /// Entries read row by row as one vector.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }
}

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub r: Mat,
    pub pivots: Vec<usize>,
}

fn check_dims(m: &Mat) -> Result<()> {
    if m.rows > MAX_MAT_DIM || m.cols > MAX_MAT_DIM {
        return Err(Error::SizeCap {
            what: "matrix dimension",
            size: m.rows.max(m.cols) as u128,
            cap: MAX_MAT_DIM as u128,
        });
    }
    Ok(())
}

pub(crate) fn rref_generic(m: &Mat, f: &FiniteField) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a.get(i, c) != 0) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                a.data.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(a.get(r, c)).expect("pivot is nonzero");
        if inv != 1 {
            for x in a.row_mut(r) {
                *x = f.mul(*x, inv);
            }
        }
        let pivot_row = a.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c);
            if factor == 0 {
                continue;
            }
            let neg = f.neg(factor);
            for (x, &y) in a.row_mut(i).iter_mut().zip(&pivot_row) {
                if y != 0 {
                    *x = f.add(*x, f.mul(neg, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        rank: r,
        r: a,
        pivots,
    }
}

/// Reduced row echelon form. Dispatches to the bit-packed kernel over `F_2`
/// when the field asks for it.
pub fn rref(m: &Mat, f: &FiniteField) -> Rref {
    if f.uses_packed() {
        bitmat::rref(m)
    } else {
        rref_generic(m, f)
    }
}

pub fn rank(m: &Mat, f: &FiniteField) -> usize {
    rref(m, f).rank
}

/// One solution `X` of `A X = B`, free variables set to zero.
pub fn solve(a: &Mat, b: &Mat, f: &FiniteField) -> Result<Option<Mat>> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "A has {} rows but B has {}",
            a.rows, b.rows
        )));
    }
    check_dims(a)?;
    let aug = Mat::hstack(&[a, b]);
    let red = rref(&aug, f);
    if red.pivots.iter().any(|&c| c >= a.cols) {
        return Ok(None);
    }
    let mut x = Mat::zeros(a.cols, b.cols);
    for (r, &c) in red.pivots.iter().enumerate() {
        x.row_mut(c).copy_from_slice(&red.r.row(r)[a.cols..]);
    }
    Ok(Some(x))
}

/// One solution `X` of `X A = B` (row-vector convention).
pub fn solve_left(a: &Mat, b: &Mat, f: &FiniteField) -> Result<Option<Mat>> {
    if a.cols != b.cols {
        return Err(Error::DimensionMismatch(format!(
            "A has {} columns but B has {}",
            a.cols, b.cols
        )));
    }
    Ok(solve(&a.transpose(), &b.transpose(), f)?.map(|x| x.transpose()))
}

/// `{x : A x = 0}` as a subspace of column vectors (stored as rows).
pub fn nullspace(a: &Mat, f: &FiniteField) -> Subspace {
    let red = rref(a, f);
    let cols = a.cols;
    let mut is_pivot = vec![false; cols];
    for &c in &red.pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut basis = Mat::zeros(free.len(), cols);
    for (i, &fc) in free.iter().enumerate() {
        basis.set(i, fc, 1);
        for (r, &pc) in red.pivots.iter().enumerate() {
            let v = red.r.get(r, fc);
            if v != 0 {
                basis.set(i, pc, f.neg(v));
            }
        }
    }
    Subspace::from_rows(&basis, f)
}

/// `{x : x A = 0}` as a subspace of row vectors.
pub fn left_nullspace(a: &Mat, f: &FiniteField) -> Subspace {
    nullspace(&a.transpose(), f)
}

pub fn inverse(m: &Mat, f: &FiniteField) -> Option<Mat> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows;
    if n == 0 {
        return Some(Mat::zeros(0, 0));
    }
    let red = rref(&Mat::hstack(&[m, &Mat::identity(n)]), f);
    if red.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.r.col_range(n, 2 * n))
}

pub fn is_invertible(m: &Mat, f: &FiniteField) -> bool {
    m.is_square() && rank(m, f) == m.rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Kernel;

    fn m(rows: &[&[u32]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows(rows.len(), cols, rows).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = FiniteField::gf2();
        let id = Mat::identity(3);
        let r = rref(&id, &f);
        assert_eq!(r.rank, 3);
        assert_eq!(r.r, id);
        let z = Mat::zeros(2, 4);
        assert_eq!(rref(&z, &f).rank, 0);
    }

    #[test]
    fn rref_all_ones_over_f2() {
        for kernel in [Kernel::Generic, Kernel::BitPacked] {
            let f = FiniteField::gf2().with_kernel(kernel);
            let r = rref(&m(&[&[1, 1], &[1, 1]]), &f);
            assert_eq!(r.rank, 1);
            assert_eq!(r.r, m(&[&[1, 1], &[0, 0]]));
            assert_eq!(r.pivots, vec![0]);
        }
    }

    #[test]
    fn solve_trivial_cases() {
        let f = FiniteField::prime(3).unwrap();
        let b = m(&[&[1, 2], &[0, 1], &[2, 2]]);
        assert_eq!(solve(&Mat::identity(3), &b, &f).unwrap(), Some(b.clone()));
        assert_eq!(solve(&Mat::zeros(3, 3), &b, &f).unwrap(), None);
        assert!(solve(&Mat::identity(2), &b, &f).is_err());
    }

    #[test]
    fn nullspace_examples() {
        let f = FiniteField::gf2();
        assert_eq!(nullspace(&Mat::identity(3), &f).dim(), 0);
        assert_eq!(nullspace(&Mat::zeros(2, 3), &f).dim(), 3);
        let ns = nullspace(&m(&[&[1, 1]]), &f);
        // enumerate the four vectors of F_2^2 by hand: only (0,0) and (1,1) are killed
        assert_eq!(ns.basis().to_rows(), vec![vec![1, 1]]);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = FiniteField::prime(5).unwrap();
        let a = m(&[&[1, 2, 0], &[0, 1, 4], &[3, 0, 2]]);
        let inv = inverse(&a, &f).unwrap();
        assert_eq!(a.mul(&inv, &f), Mat::identity(3));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]]), &f).is_none());
        assert_eq!(inverse(&Mat::zeros(0, 0), &f), Some(Mat::zeros(0, 0)));
    }
}
