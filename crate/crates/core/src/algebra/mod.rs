//! Finite-dimensional unital associative algebras given by structure
//! constants over a [`FiniteField`].
//!
//! Elements are coordinate rows with respect to the basis `b_0, .., b_{d-1}`.
//! The table entry `(i, j)` holds the coordinates of `b_i * b_j`.

mod idempotent;
mod radical;
mod split;
mod structure;
mod units;
mod wedderburn;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use idempotent::{count_f2_quotients, lift_idempotent};
pub use radical::{radical, radical_power_chain};
pub use split::{boolean_two_good_split, unit_stable_subring_split, RingDecomposition};
pub use structure::{semisimple_quotient, Ideal, Quotient};
pub use units::{is_sum_of_two_units, is_unit, units, TwoUnitSearch};
pub use wedderburn::{
    center, central_idempotents, nontrivial_idempotent, primitive_below, primitive_idempotents,
    wedderburn_blocks, WedderburnBlock,
};

use crate::error::{Error, Result};
use crate::field::{FiniteField, Scalar};
use crate::mat::{self, Mat};
use crate::subspace::Subspace;

/// Coordinates of an algebra element.
pub type Elem = Vec<Scalar>;

/// Cap on `|A| = q^d` for element enumeration.
pub const ENUMERATION_CAP: u128 = 1 << 20;

pub struct Algebra {
    field: FiniteField,
    labels: Vec<String>,
    dim: usize,
    /// `table[(i * d + j) * d + k]` = coefficient of `b_k` in `b_i b_j`.
    table: Vec<Scalar>,
    one: Elem,
    radical: OnceLock<Subspace>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Self {
            field: self.field.clone(),
            labels: self.labels.clone(),
            dim: self.dim,
            table: self.table.clone(),
            one: self.one.clone(),
            radical: self.radical.clone(),
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.table == other.table
            && self.one == other.one
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra(dim {} over {}, basis {:?})",
            self.dim, self.field, self.labels
        )
    }
}

impl Algebra {
    /// Build and validate. `table[i][j]` is the coordinate row of `b_i b_j`.
    pub fn new(
        field: FiniteField,
        labels: Vec<String>,
        table: &[Vec<Vec<Scalar>>],
        one: Elem,
    ) -> Result<Self> {
        let d = labels.len();
        if table.len() != d || table.iter().any(|row| row.len() != d) {
            return Err(Error::DimensionMismatch(format!(
                "multiplication table must be {d} x {d}"
            )));
        }
        if one.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "unity must have {d} coordinates"
            )));
        }
        let mut flat = Vec::with_capacity(d * d * d);
        for row in table {
            for entry in row {
                if entry.len() != d {
                    return Err(Error::DimensionMismatch(format!(
                        "product coordinates must have length {d}"
                    )));
                }
                flat.extend_from_slice(entry);
            }
        }
        let a = Self::from_flat(field, labels, flat, one);
        a.check_scalars()?;
        a.validate()?;
        Ok(a)
    }

    pub(crate) fn from_flat(
        field: FiniteField,
        labels: Vec<String>,
        table: Vec<Scalar>,
        one: Elem,
    ) -> Self {
        let dim = labels.len();
        debug_assert_eq!(table.len(), dim * dim * dim);
        Self {
            field,
            labels,
            dim,
            table,
            one,
            radical: OnceLock::new(),
        }
    }

    fn check_scalars(&self) -> Result<()> {
        let q = self.field.q();
        if let Some(&value) = self.table.iter().chain(&self.one).find(|&&x| x >= q) {
            return Err(Error::InvalidScalar { value, q });
        }
        Ok(())
    }

    /// Associativity on all basis triples and two-sided unity on all basis
    /// elements. Reports the first failing triple in `(i, j, k)` order.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let left = self.mul_by_basis_right(ij, k);
                    let jk = self.basis_product(j, k);
                    let right = self.mul_by_basis_left(i, jk);
                    if left != right {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        for i in 0..d {
            let b = self.basis_element(i);
            if self.mul(&self.one, &b) != b || self.mul(&b, &self.one) != b {
                return Err(Error::NotUnital { index: i });
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn one(&self) -> &Elem {
        &self.one
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Elem {
        let mut e = self.zero();
        e[i] = 1;
        e
    }

    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let d = self.dim;
        &self.table[(i * d + j) * d..(i * d + j + 1) * d]
    }

    /// Nested-row form of the structure constants.
    pub fn table_rows(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.basis_product(i, j).to_vec())
                    .collect()
            })
            .collect()
    }

    fn mul_by_basis_right(&self, x: &[Scalar], k: usize) -> Elem {
        let f = &self.field;
        let mut out = self.zero();
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                for (o, &t) in out.iter_mut().zip(self.basis_product(i, k)) {
                    if t != 0 {
                        *o = f.add(*o, f.mul(c, t));
                    }
                }
            }
        }
        out
    }

    fn mul_by_basis_left(&self, i: usize, x: &[Scalar]) -> Elem {
        let f = &self.field;
        let mut out = self.zero();
        for (j, &c) in x.iter().enumerate() {
            if c != 0 {
                for (o, &t) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if t != 0 {
                        *o = f.add(*o, f.mul(c, t));
                    }
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        let f = &self.field;
        let mut out = self.zero();
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let c = f.mul(a, b);
                for (o, &t) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if t != 0 {
                        *o = f.add(*o, f.mul(c, t));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect()
    }

    pub fn sub(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect()
    }

    pub fn neg(&self, x: &[Scalar]) -> Elem {
        x.iter().map(|&a| self.field.neg(a)).collect()
    }

    pub fn scale(&self, s: Scalar, x: &[Scalar]) -> Elem {
        x.iter().map(|&a| self.field.mul(s, a)).collect()
    }

    pub fn pow(&self, x: &[Scalar], mut e: u64) -> Elem {
        let mut acc = self.one.clone();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero_elem(x: &[Scalar]) -> bool {
        x.iter().all(|&c| c == 0)
    }

    pub fn is_idempotent(&self, x: &[Scalar]) -> bool {
        self.mul(x, x) == x
    }

    /// `x^d = 0` decides nilpotency since the regular representation is faithful.
    pub fn is_nilpotent(&self, x: &[Scalar]) -> bool {
        Self::is_zero_elem(&self.pow(x, self.dim.max(1) as u64))
    }

    /// Matrix of `y -> x y` in the row convention (`y * L`).
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Mat {
        let d = self.dim;
        let mut m = Mat::zeros(d, d);
        for j in 0..d {
            let row = self.mul_by_basis_right(x, j);
            m.row_mut(j).copy_from_slice(&row);
        }
        m
    }

    /// Matrix of `y -> y x` in the row convention (`y * R`).
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Mat {
        let d = self.dim;
        let mut m = Mat::zeros(d, d);
        for i in 0..d {
            let row = self.mul_by_basis_left(i, x);
            m.row_mut(i).copy_from_slice(&row);
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Opposite algebra: `b_i *op b_j = b_j b_i`.
    pub fn opposite(&self) -> Algebra {
        let d = self.dim;
        let mut table = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                table.extend_from_slice(self.basis_product(j, i));
            }
        }
        let op = Algebra::from_flat(
            self.field.clone(),
            self.labels.clone(),
            table,
            self.one.clone(),
        );
        debug_assert!(op.validate().is_ok());
        op
    }

    /// Same algebra over the same field with a different elimination kernel.
    pub fn with_field(&self, field: FiniteField) -> Algebra {
        assert!(field == self.field);
        let mut a = self.clone();
        a.field = field;
        a
    }

    pub fn element_count(&self) -> u128 {
        (self.field.q() as u128).saturating_pow(self.dim as u32)
    }

    pub fn check_enumerable(&self, what: &'static str) -> Result<u64> {
        let size = self.element_count();
        if size > ENUMERATION_CAP {
            return Err(Error::SizeCap {
                what,
                size,
                cap: ENUMERATION_CAP,
            });
        }
        Ok(size as u64)
    }

    /// The element with base-`q` digits of `index` as coordinates
    /// (coordinate 0 least significant).
    pub fn element(&self, mut index: u64) -> Elem {
        let q = self.field.q() as u64;
        (0..self.dim)
            .map(|_| {
                let c = (index % q) as Scalar;
                index /= q;
                c
            })
            .collect()
    }

    pub fn elements(&self) -> Result<impl Iterator<Item = Elem> + '_> {
        let n = self.check_enumerable("algebra enumeration")?;
        Ok((0..n).map(move |i| self.element(i)))
    }

    /// Span of `{x}` closed under left and right multiplication by the basis.
    pub fn two_sided_ideal_generated(&self, gens: &[Elem]) -> Subspace {
        let f = &self.field;
        let mut space = Subspace::from_vectors(self.dim, gens, f);
        loop {
            let basis = space.basis().to_rows();
            let mut vecs = basis.clone();
            for v in &basis {
                for i in 0..self.dim {
                    vecs.push(self.mul_by_basis_left(i, v));
                    vecs.push(self.mul_by_basis_right(v, i));
                }
            }
            let next = Subspace::from_vectors(self.dim, &vecs, f);
            if next == space {
                return space;
            }
            space = next;
        }
    }

    pub fn is_two_sided_ideal(&self, space: &Subspace) -> bool {
        let f = &self.field;
        (0..space.dim()).all(|r| {
            let v = space.basis().row(r);
            (0..self.dim).all(|i| {
                space.contains(&self.mul_by_basis_left(i, v), f)
                    && space.contains(&self.mul_by_basis_right(v, i), f)
            })
        })
    }

    pub fn is_right_ideal(&self, space: &Subspace) -> bool {
        let f = &self.field;
        (0..space.dim()).all(|r| {
            let v = space.basis().row(r);
            (0..self.dim).all(|i| space.contains(&self.mul_by_basis_right(v, i), f))
        })
    }

    /// Is `space` closed under multiplication (checked on basis pairs)?
    pub fn is_multiplicatively_closed(&self, space: &Subspace) -> bool {
        let f = &self.field;
        let rows = space.basis().to_rows();
        rows.iter()
            .all(|x| rows.iter().all(|y| space.contains(&self.mul(x, y), f)))
    }

    /// The algebra structure on a multiplicatively closed subspace with its
    /// own identity `unit` (which may differ from the ambient one). Basis =
    /// canonical basis of `space`.
    pub fn subalgebra(&self, space: &Subspace, unit: &[Scalar]) -> Result<Algebra> {
        let f = &self.field;
        let rows = space.basis().to_rows();
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n * n);
        for x in &rows {
            for y in &rows {
                let coords = space
                    .coordinates(&self.mul(x, y), f)
                    .ok_or_else(|| Error::NotSubring("not closed under multiplication".into()))?;
                table.extend(coords);
            }
        }
        let one = space
            .coordinates(unit, f)
            .ok_or_else(|| Error::NotSubring("unit does not lie in the subspace".into()))?;
        let labels = (0..n).map(|i| format!("s{i}")).collect();
        let sub = Algebra::from_flat(f.clone(), labels, table, one);
        sub.validate().map_err(|e| {
            Error::NotSubring(format!("induced structure is not a unital algebra: {e}"))
        })?;
        Ok(sub)
    }

    /// Quotient by a two-sided ideal; the complement basis is given by the
    /// free columns of the ideal's echelon basis. Returns the algebra and the
    /// `d x (d - dim I)` projection matrix.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, Mat)> {
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::Precondition(
                "quotient by a subspace that is not a two-sided ideal".into(),
            ));
        }
        let f = &self.field;
        let free = ideal.free_columns();
        let n = free.len();
        let project = |v: &[Scalar]| -> Elem {
            let r = ideal.reduce(v, f);
            free.iter().map(|&c| r[c]).collect()
        };
        let mut table = Vec::with_capacity(n * n * n);
        for &a in &free {
            for &b in &free {
                table.extend(project(self.basis_product(a, b)));
            }
        }
        let one = project(&self.one);
        let labels = free.iter().map(|&c| self.labels[c].clone()).collect();
        let quot = Algebra::from_flat(f.clone(), labels, table, one);
        quot.validate()?;
        let mut proj = Mat::zeros(self.dim, n);
        for i in 0..self.dim {
            proj.row_mut(i)
                .copy_from_slice(&project(&self.basis_element(i)));
        }
        Ok((quot, proj))
    }

    /// The same ring viewed as an algebra over the prime field, with basis
    /// `a^j b_i` at index `i k + j` where `a` generates `F_q` over `F_p`.
    pub fn restrict_scalars(&self) -> Algebra {
        let f = &self.field;
        let k = f.k() as usize;
        if k == 1 {
            return self.clone();
        }
        let fp = FiniteField::prime(f.p())
            .expect("prime")
            .with_kernel(f.kernel());
        let d = self.dim;
        let n = d * k;
        let alpha = f.power_basis_generator();
        let mut table = vec![0; n * n * n];
        for i in 0..d {
            for j in 0..k {
                for m in 0..d {
                    for l in 0..k {
                        let s = f.pow(alpha, (j + l) as u64);
                        let prod = self.basis_product(i, m);
                        let base = ((i * k + j) * n + (m * k + l)) * n;
                        for (t, &c) in prod.iter().enumerate() {
                            let digits = f.to_prime_coords(f.mul(s, c));
                            table[base + t * k..base + t * k + k].copy_from_slice(&digits);
                        }
                    }
                }
            }
        }
        let labels = (0..d)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .map(|(i, j)| {
                if j == 0 {
                    self.labels[i].clone()
                } else {
                    format!("a^{j}*{}", self.labels[i])
                }
            })
            .collect();
        let one = self.to_prime_coords(&self.one);
        Algebra::from_flat(fp, labels, table, one)
    }

    /// Coordinates of `x` in the basis of [`Algebra::restrict_scalars`].
    pub fn to_prime_coords(&self, x: &[Scalar]) -> Vec<Scalar> {
        x.iter()
            .flat_map(|&c| self.field.to_prime_coords(c))
            .collect()
    }

    pub fn from_prime_coords(&self, x: &[Scalar]) -> Elem {
        let k = self.field.k() as usize;
        x.chunks(k)
            .map(|c| self.field.from_prime_coords(c))
            .collect()
    }

    /// Structure constants of the algebra spanned by the given matrices
    /// (assumed linearly independent and closed under products, containing
    /// the identity).
    pub fn from_matrix_basis(
        field: FiniteField,
        labels: Vec<String>,
        mats: &[Mat],
    ) -> Result<Algebra> {
        let n = mats.len();
        if labels.len() != n {
            return Err(Error::DimensionMismatch(
                "one label per basis matrix".into(),
            ));
        }
        let Some(first) = mats.first() else {
            return Ok(Algebra::from_flat(field, labels, Vec::new(), Vec::new()));
        };
        let size = first.rows();
        let stacked = Mat::from_rows(
            n,
            size * size,
            &mats.iter().map(Mat::flatten).collect::<Vec<_>>(),
        )?;
        let coords_of = |m: &Mat| -> Result<Elem> {
            let sol = mat::solve_left(&stacked, &Mat::row_vector(&m.flatten()), &field)?
                .ok_or_else(|| {
                    Error::NotSubring("matrix span is not closed under products".into())
                })?;
            Ok(sol.row(0).to_vec())
        };
        if mat::rank(&stacked, &field) != n {
            return Err(Error::DimensionMismatch(
                "basis matrices are linearly dependent".into(),
            ));
        }
        let mut table = Vec::with_capacity(n * n * n);
        for a in mats {
            for b in mats {
                table.extend(coords_of(&a.mul(b, &field))?);
            }
        }
        let one = coords_of(&Mat::identity(size))?;
        let alg = Algebra::from_flat(field, labels, table, one);
        alg.validate()?;
        Ok(alg)
    }

    /// The unital subalgebra of `M_n(F_q)` generated by the given matrices.
    pub fn generated_by(field: FiniteField, gens: &[Mat]) -> Result<Algebra> {
        let basis = Self::generated_basis(&field, gens)?;
        let labels = (0..basis.len()).map(|i| format!("g{i}")).collect();
        Algebra::from_matrix_basis(field, labels, &basis)
    }

    /// The basis matrices behind [`Algebra::generated_by`], in the same order,
    /// so `v -> v B_i` is the natural right module.
    pub fn generated_basis(field: &FiniteField, gens: &[Mat]) -> Result<Vec<Mat>> {
        let Some(first) = gens.first() else {
            return Err(Error::Precondition(
                "at least one generator is required".into(),
            ));
        };
        let n = first.rows();
        let mut basis: Vec<Mat> = Vec::new();
        let mut space = Subspace::zero(n * n);
        let mut frontier = vec![Mat::identity(n)];
        frontier.extend(gens.iter().cloned());
        while let Some(m) = frontier.pop() {
            let flat = m.flatten();
            if space.contains(&flat, field) {
                continue;
            }
            space = space.sum(&Subspace::from_vectors(n * n, &[flat], field), field)?;
            for b in basis.clone() {
                frontier.push(b.mul(&m, field));
                frontier.push(m.mul(&b, field));
            }
            frontier.push(m.mul(&m, field));
            basis.push(m);
        }
        Ok(space
            .basis()
            .to_rows()
            .iter()
            .map(|r| Mat::from_vec(n, n, r.clone()))
            .collect())
    }

    /// Direct product; basis is the concatenation of the factor bases.
    pub fn direct_product(parts: &[&Algebra]) -> Result<Algebra> {
        let Some(first) = parts.first() else {
            return Err(Error::Precondition("empty product".into()));
        };
        let field = first.field.clone();
        if parts.iter().any(|p| p.field != field) {
            return Err(Error::AlgebraMismatch);
        }
        let n: usize = parts.iter().map(|p| p.dim).sum();
        let mut table = vec![0; n * n * n];
        let mut one = Vec::with_capacity(n);
        let mut labels = Vec::with_capacity(n);
        let mut off = 0;
        for (idx, p) in parts.iter().enumerate() {
            for i in 0..p.dim {
                for j in 0..p.dim {
                    let base = ((off + i) * n + off + j) * n + off;
                    table[base..base + p.dim].copy_from_slice(p.basis_product(i, j));
                }
                labels.push(format!("{}_{}", p.labels[i], idx));
            }
            one.extend_from_slice(&p.one);
            off += p.dim;
        }
        Ok(Algebra::from_flat(field, labels, table, one))
    }

    /// `F_q[x] / (f)` for a monic `f` given low-to-high (leading 1 included).
    pub fn polynomial_quotient(field: FiniteField, modulus: &[Scalar]) -> Result<Algebra> {
        let n = modulus.len().saturating_sub(1);
        if n == 0 || *modulus.last().unwrap() != 1 {
            return Err(Error::Precondition(
                "modulus must be monic of positive degree".into(),
            ));
        }
        let mut table = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                // reduce x^{i+j}
                let mut poly = vec![0; i + j + 1];
                poly[i + j] = 1;
                for top in (n..poly.len()).rev() {
                    let c = poly[top];
                    if c == 0 {
                        continue;
                    }
                    for (t, &m) in modulus.iter().enumerate() {
                        let idx = top - n + t;
                        poly[idx] = field.sub(poly[idx], field.mul(c, m));
                    }
                }
                poly.resize(n, 0);
                table.extend_from_slice(&poly[..n]);
            }
        }
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let mut one = vec![0; n];
        one[0] = 1;
        Ok(Algebra::from_flat(field, labels, table, one))
    }

    /// Full matrix algebra `M_n(F_q)` with matrix-unit basis `e_ij`.
    pub fn matrix_algebra(field: FiniteField, n: usize) -> Algebra {
        let mut mats = Vec::with_capacity(n * n);
        let mut labels = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut m = Mat::zeros(n, n);
                m.set(i, j, 1);
                mats.push(m);
                labels.push(format!("e{}{}", i + 1, j + 1));
            }
        }
        Algebra::from_matrix_basis(field, labels, &mats).expect("matrix units form an algebra")
    }

    /// Upper-triangular `n x n` matrices.
    pub fn upper_triangular(field: FiniteField, n: usize) -> Algebra {
        let mut mats = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut m = Mat::zeros(n, n);
                m.set(i, j, 1);
                mats.push(m);
                labels.push(format!("e{}{}", i + 1, j + 1));
            }
        }
        Algebra::from_matrix_basis(field, labels, &mats)
            .expect("upper triangular matrices form an algebra")
    }
}

/// Shared handle; modules refer to their algebra through it.
pub type AlgebraRef = Arc<Algebra>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional_field_validates() {
        let f2 = FiniteField::gf2();
        let a = Algebra::new(f2, vec!["1".into()], &[vec![vec![1]]], vec![1]).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn matrix_algebra_validates() {
        let a = Algebra::matrix_algebra(FiniteField::gf2(), 2);
        assert!(a.validate().is_ok());
        assert_eq!(a.dim(), 4);
        assert!(!a.is_commutative());
    }

    #[test]
    fn broken_table_reports_first_triple() {
        let good = Algebra::matrix_algebra(FiniteField::gf2(), 2);
        let mut table = good.table_rows();
        // e11 * e11 := e12
        table[0][0] = vec![0, 1, 0, 0];
        let err = Algebra::new(
            good.field().clone(),
            good.labels().to_vec(),
            &table,
            good.one().clone(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotAssociative { i: 0, j: 0, k: 0 }));
    }

    #[test]
    fn opposite_of_commutative_is_identical_and_involutive() {
        let f2 = FiniteField::gf2();
        let a = Algebra::polynomial_quotient(f2.clone(), &[0, 0, 1]).unwrap();
        assert_eq!(a.opposite(), a);
        let u = Algebra::upper_triangular(f2, 2);
        assert_ne!(u.opposite(), u);
        assert_eq!(u.opposite().opposite(), u);
    }

    #[test]
    fn upper_triangular_opposite_is_lower_pattern() {
        let u = Algebra::upper_triangular(FiniteField::gf2(), 2);
        let op = u.opposite();
        // basis e11, e12, e22. In U: e11 e12 = e12, e12 e11 = 0.
        // In U^op: e12 * e11 = e11 e12 = e12 and e11 * e12 = 0.
        assert_eq!(op.basis_product(1, 0), &[0, 1, 0]);
        assert_eq!(op.basis_product(0, 1), &[0, 0, 0]);
    }

    #[test]
    fn restrict_scalars_of_f4_is_a_two_dimensional_field() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let a = Algebra::new(f4, vec!["1".into()], &[vec![vec![1]]], vec![1]).unwrap();
        let r = a.restrict_scalars();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.field().q(), 2);
        assert!(r.validate().is_ok());
        assert!(r.is_commutative());
        // every nonzero element is invertible
        for x in r.elements().unwrap().skip(1) {
            assert!(is_unit(&r, &x));
        }
    }

    #[test]
    fn polynomial_quotient_multiplies_mod_f() {
        let f3 = FiniteField::prime(3).unwrap();
        // F_3[x]/(x^2 + 1) is F_9
        let a = Algebra::polynomial_quotient(f3, &[1, 0, 1]).unwrap();
        assert_eq!(a.mul(&[0, 1], &[0, 1]), vec![2, 0]);
        assert!(a.validate().is_ok());
    }
}
