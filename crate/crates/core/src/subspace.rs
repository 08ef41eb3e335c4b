//! Subspaces of `F_q^n` held in canonical reduced echelon form, so equality
//! of subspaces is equality of the stored basis.

use crate::error::{Error, Result};
use crate::field::{FiniteField, Scalar};
use crate::mat::{self, Mat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Mat::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Mat::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Mat, f: &FiniteField) -> Self {
        let red = mat::rref(m, f);
        Self {
            ambient: m.cols(),
            basis: red.r.row_range(0, red.rank),
            pivots: red.pivots,
        }
    }

    pub fn from_vectors(ambient: usize, vs: &[Vec<Scalar>], f: &FiniteField) -> Self {
        let m = Mat::from_rows(vs.len(), ambient, vs).expect("vectors have ambient length");
        Self::from_rows(&m, f)
    }

    /// Wrap rows already in reduced echelon form with the given pivots.
    pub(crate) fn from_echelon(basis: Mat, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.rows(), pivots.len());
        Self {
            ambient: basis.cols(),
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot columns; the matching standard vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus its component along the subspace, taken against the pivot
    /// coordinates. Zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar], f: &FiniteField) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out[p];
            if c != 0 {
                let neg = f.neg(c);
                for (x, &b) in out.iter_mut().zip(self.basis.row(r)) {
                    if b != 0 {
                        *x = f.add(*x, f.mul(neg, b));
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar], f: &FiniteField) -> bool {
        self.reduce(v, f).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if outside.
    pub fn coordinates(&self, v: &[Scalar], f: &FiniteField) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p]).collect();
        let rebuilt = self.basis.left_apply(&coords, f);
        (rebuilt == v).then_some(coords)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn contains_subspace(&self, other: &Subspace, f: &FiniteField) -> Result<bool> {
        self.check_ambient(other)?;
        Ok((0..other.dim()).all(|r| self.contains(other.basis.row(r), f)))
    }

    pub fn sum(&self, other: &Subspace, f: &FiniteField) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_rows(
            &Mat::vstack(&[&self.basis, &other.basis]),
            f,
        ))
    }

    /// Intersection through the kernel of the stacked basis: `(a, b)` with
    /// `a U + b V = 0` gives `a U` in both.
    pub fn intersect(&self, other: &Subspace, f: &FiniteField) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let stacked = Mat::vstack(&[&self.basis, &other.basis]);
        let kernel = mat::left_nullspace(&stacked, f);
        let coeffs = kernel.basis().col_range(0, self.dim());
        Ok(Subspace::from_rows(&coeffs.mul(&self.basis, f), f))
    }

    /// Image of the subspace under `v -> v M`.
    pub fn image(&self, m: &Mat, f: &FiniteField) -> Subspace {
        Subspace::from_rows(&self.basis.mul(m, f), f)
    }

    /// `{c : u . c = 0 for all u}` as column vectors, returned as the columns
    /// of a matrix: `v` lies in the subspace iff `v * annihilator() == 0`.
    pub fn annihilator(&self, f: &FiniteField) -> Mat {
        mat::nullspace(&self.basis, f).basis().transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_with_zero_and_self_intersection() {
        let f = FiniteField::prime(3).unwrap();
        let u = Subspace::from_vectors(3, &[vec![1, 2, 0], vec![0, 1, 1]], &f);
        let z = Subspace::zero(3);
        assert_eq!(u.sum(&z, &f).unwrap(), u);
        assert_eq!(u.intersect(&u, &f).unwrap(), u);
    }

    #[test]
    fn two_lines_in_the_plane() {
        let f = FiniteField::gf2();
        let a = Subspace::from_vectors(2, &[vec![1, 0]], &f);
        let b = Subspace::from_vectors(2, &[vec![1, 1]], &f);
        assert_eq!(a.sum(&b, &f).unwrap(), Subspace::full(2));
        assert!(a.intersect(&b, &f).unwrap().is_zero());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let f = FiniteField::gf2();
        assert!(Subspace::full(2).sum(&Subspace::full(3), &f).is_err());
        assert!(Subspace::full(2).intersect(&Subspace::zero(3), &f).is_err());
    }

    #[test]
    fn canonical_form_makes_equal_spans_equal() {
        let f = FiniteField::prime(5).unwrap();
        let a = Subspace::from_vectors(3, &[vec![1, 2, 3], vec![0, 1, 4]], &f);
        let b = Subspace::from_vectors(3, &[vec![1, 3, 2], vec![2, 4, 1]], &f);
        // b's rows are a0 + a1 and 2 a0
        assert_eq!(a, b);
        let coords = a.coordinates(&[1, 3, 2], &f).unwrap();
        assert_eq!(a.basis().left_apply(&coords, &f), vec![1, 3, 2]);
    }

    #[test]
    fn annihilator_detects_membership() {
        let f = FiniteField::gf2();
        let u = Subspace::from_vectors(3, &[vec![1, 1, 0]], &f);
        let ann = u.annihilator(&f);
        assert!(Mat::row_vector(&[1, 1, 0]).mul(&ann, &f).is_zero());
        assert!(!Mat::row_vector(&[1, 0, 0]).mul(&ann, &f).is_zero());
    }
}
