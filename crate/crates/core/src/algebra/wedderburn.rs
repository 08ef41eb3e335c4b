//! Center, primitive central idempotents and the block structure of
//! semisimple algebras.

use super::{radical, Algebra, Elem};
use crate::error::{Error, Result};
use crate::mat::{self, Mat};
use crate::subspace::Subspace;

/// A simple factor `M_n(F_{q'})` of a semisimple algebra, carved out by the
/// central idempotent `idempotent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnBlock {
    pub idempotent: Elem,
    /// Dimension of the block over the base field.
    pub dim: usize,
    pub n: usize,
    /// Degree of the block's center over the base field.
    pub center_degree: usize,
    /// `q' = q^center_degree`.
    pub q_prime: u64,
}

impl WedderburnBlock {
    pub fn is_f2(&self) -> bool {
        self.n == 1 && self.q_prime == 2
    }
}

/// `Z(A)` as a subspace of `A`.
pub fn center(a: &Algebra) -> Subspace {
    let f = a.field();
    let d = a.dim();
    if d == 0 {
        return Subspace::zero(0);
    }
    let blocks: Vec<Mat> = (0..d)
        .map(|i| {
            let b = a.basis_element(i);
            a.right_mul_matrix(&b).sub(&a.left_mul_matrix(&b), f)
        })
        .collect();
    let refs: Vec<&Mat> = blocks.iter().collect();
    mat::left_nullspace(&Mat::hstack(&refs), f)
}

fn require_semisimple(a: &Algebra) -> Result<()> {
    let j = radical(a);
    if !j.is_zero() {
        return Err(Error::NotSemisimple(j.dim()));
    }
    Ok(())
}

/// Primitive central idempotents of a semisimple algebra, sorted by
/// coordinates.
///
/// The fixed points of `z -> z^q` on the center form `F_q^r`, one copy per
/// block; splitting `1` along the eigenvalues of a basis of that subalgebra
/// separates all blocks.
pub fn central_idempotents(a: &Algebra) -> Result<Vec<Elem>> {
    require_semisimple(a)?;
    let f = a.field();
    let d = a.dim();
    if d == 0 {
        return Ok(Vec::new());
    }
    let z = center(a);
    let zb = z.basis().to_rows();
    let q = f.q() as u64;
    let frob_minus_id: Vec<Elem> = zb
        .iter()
        .map(|x| {
            let image = z
                .coordinates(&a.pow(x, q), f)
                .expect("center is closed under powers");
            let mut id = vec![0; zb.len()];
            id[zb.iter().position(|y| y == x).unwrap()] = 1;
            image.iter().zip(&id).map(|(&u, &v)| f.sub(u, v)).collect()
        })
        .collect();
    let m = Mat::from_rows(zb.len(), zb.len(), &frob_minus_id)?;
    let fixed = mat::left_nullspace(&m, f);
    let fixed_elems: Vec<Elem> = fixed
        .basis()
        .to_rows()
        .iter()
        .map(|c| z.basis().left_apply(c, f))
        .collect();

    let mut idems = vec![a.one().clone()];
    for b in &fixed_elems {
        if idems.len() == fixed_elems.len() {
            break;
        }
        let mut next = Vec::new();
        for e in &idems {
            let mut remaining = e.clone();
            for c in f.elements() {
                if Algebra::is_zero_elem(&remaining) {
                    break;
                }
                // e (1 - (b - c)^{q-1}) keeps the components where b = c
                let shifted = a.sub(b, &a.scale(c, a.one()));
                let mask = a.sub(a.one(), &a.pow(&shifted, q - 1));
                let part = a.mul(e, &mask);
                if !Algebra::is_zero_elem(&part) {
                    remaining = a.sub(&remaining, &part);
                    next.push(part);
                }
            }
            if !Algebra::is_zero_elem(&remaining) {
                return Err(Error::Invariant(
                    "central splitting lost a component".into(),
                ));
            }
        }
        idems = next;
    }
    if idems.len() != fixed_elems.len() {
        return Err(Error::Invariant(format!(
            "found {} central idempotents for {} blocks",
            idems.len(),
            fixed_elems.len()
        )));
    }
    idems.sort();
    Ok(idems)
}

/// Blocks of a semisimple algebra, in the order of [`central_idempotents`].
pub fn wedderburn_blocks(a: &Algebra) -> Result<Vec<WedderburnBlock>> {
    let f = a.field();
    let z = center(a);
    central_idempotents(a)?
        .into_iter()
        .map(|e| {
            let block = ideal_of(a, &e);
            let center_part = z.intersect(&block, f)?;
            let m = center_part.dim();
            let dim = block.dim();
            let n = (1..=dim).find(|n| n * n * m == dim).ok_or_else(|| {
                Error::Invariant(format!("block of dimension {dim} over a center of degree {m} is not a full matrix ring"))
            })?;
            Ok(WedderburnBlock {
                idempotent: e,
                dim,
                n,
                center_degree: m,
                q_prime: (f.q() as u64).saturating_pow(m as u32),
            })
        })
        .collect()
}

/// `A e` for a central idempotent `e`.
pub(crate) fn ideal_of(a: &Algebra, e: &[u32]) -> Subspace {
    let rows: Vec<Elem> = (0..a.dim())
        .map(|i| a.mul(&a.basis_element(i), e))
        .collect();
    Subspace::from_vectors(a.dim(), &rows, a.field())
}

/// An idempotent other than `0` and `1`, or `None` when the semisimple
/// algebra is a division ring.
pub fn nontrivial_idempotent(a: &Algebra) -> Result<Option<Elem>> {
    let centrals = central_idempotents(a)?;
    if centrals.len() > 1 {
        return Ok(Some(centrals[0].clone()));
    }
    if centrals.is_empty() {
        return Ok(None);
    }
    let z = center(a);
    if z.dim() == a.dim() {
        return Ok(None);
    }
    // A simple non-division algebra: a zero divisor x gives the proper right
    // ideal xA = fA with f idempotent.
    let f = a.field();
    let d = a.dim();
    let count = a.element_count().min(u64::MAX as u128) as u64;
    for index in 1..count {
        let x = a.element(index);
        let r = mat::rank(&a.left_mul_matrix(&x), f);
        if r == 0 || r == d {
            continue;
        }
        let e = left_identity_of_right_ideal(a, &x)?;
        return Ok(Some(e));
    }
    Err(Error::Invariant(
        "simple algebra without zero divisors is not a field".into(),
    ))
}

/// The idempotent `f` with `f r = r` on `xA`, for `A` semisimple.
fn left_identity_of_right_ideal(a: &Algebra, x: &[u32]) -> Result<Elem> {
    let f = a.field();
    let d = a.dim();
    let rows: Vec<Elem> = (0..d).map(|i| a.mul(x, &a.basis_element(i))).collect();
    let ideal = Subspace::from_vectors(d, &rows, f);
    let r = ideal.basis().to_rows();
    let k = r.len();
    // coefficient row c: sum_s c_s (r_s r_t) = r_t for every t
    let mut lhs = Mat::zeros(k, k * d);
    for (s, rs) in r.iter().enumerate() {
        for (t, rt) in r.iter().enumerate() {
            lhs.row_mut(s)[t * d..(t + 1) * d].copy_from_slice(&a.mul(rs, rt));
        }
    }
    let rhs = Mat::row_vector(&r.concat());
    let c = mat::solve_left(&lhs, &rhs, f)?.ok_or_else(|| {
        Error::Invariant("right ideal of a semisimple algebra has no left identity".into())
    })?;
    let e = ideal.basis().left_apply(c.row(0), f);
    if !a.is_idempotent(&e) {
        return Err(Error::Invariant(
            "left identity of a right ideal is not idempotent".into(),
        ));
    }
    Ok(e)
}

/// A complete set of orthogonal primitive idempotents summing to 1.
pub fn primitive_idempotents(a: &Algebra) -> Result<Vec<Elem>> {
    require_semisimple(a)?;
    let mut out = Vec::new();
    let mut stack = vec![a.one().clone()];
    while let Some(e) = stack.pop() {
        if Algebra::is_zero_elem(&e) {
            continue;
        }
        match split_in_corner(a, &e)? {
            Some(g) => {
                stack.push(a.sub(&e, &g));
                stack.push(g);
            }
            None => out.push(e),
        }
    }
    Ok(out)
}

/// A primitive idempotent below the idempotent `e`.
pub fn primitive_below(a: &Algebra, e: &[u32]) -> Result<Elem> {
    let mut current = e.to_vec();
    while let Some(g) = split_in_corner(a, &current)? {
        current = g;
    }
    Ok(current)
}

/// A nontrivial idempotent of the corner `eAe`, expressed in `A`.
fn split_in_corner(a: &Algebra, e: &[u32]) -> Result<Option<Elem>> {
    let f = a.field();
    let rows: Vec<Elem> = (0..a.dim())
        .map(|i| a.mul(&a.mul(e, &a.basis_element(i)), e))
        .collect();
    let space = Subspace::from_vectors(a.dim(), &rows, f);
    let corner = a.subalgebra(&space, e)?;
    Ok(nontrivial_idempotent(&corner)?.map(|g| space.basis().left_apply(&g, f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    fn field_as_algebra(f: FiniteField) -> Algebra {
        Algebra::new(f, vec!["1".into()], &[vec![vec![1]]], vec![1]).unwrap()
    }

    #[test]
    fn single_field_block() {
        let a = field_as_algebra(FiniteField::gf2());
        let blocks = wedderburn_blocks(&a).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!((blocks[0].n, blocks[0].q_prime), (1, 2));
    }

    #[test]
    fn matrix_algebra_is_one_block() {
        let a = Algebra::matrix_algebra(FiniteField::gf2(), 2);
        let blocks = wedderburn_blocks(&a).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!((blocks[0].n, blocks[0].q_prime), (2, 2));
        let prims = primitive_idempotents(&a).unwrap();
        assert_eq!(prims.len(), 2);
        for (i, x) in prims.iter().enumerate() {
            assert!(a.is_idempotent(x));
            for (j, y) in prims.iter().enumerate() {
                if i != j {
                    assert!(Algebra::is_zero_elem(&a.mul(x, y)));
                }
            }
        }
    }

    #[test]
    fn f2_times_f4_as_f2_algebra() {
        let f2 = field_as_algebra(FiniteField::gf2());
        let f4 = field_as_algebra(FiniteField::new(2, 2).unwrap()).restrict_scalars();
        let a = Algebra::direct_product(&[&f2, &f4]).unwrap();
        let mut profile: Vec<(usize, u64)> = wedderburn_blocks(&a)
            .unwrap()
            .iter()
            .map(|b| (b.n, b.q_prime))
            .collect();
        profile.sort();
        assert_eq!(profile, vec![(1, 2), (1, 4)]);
    }

    #[test]
    fn non_semisimple_input_is_rejected() {
        let a = Algebra::polynomial_quotient(FiniteField::gf2(), &[0, 0, 1]).unwrap();
        assert!(matches!(
            wedderburn_blocks(&a),
            Err(Error::NotSemisimple(1))
        ));
    }

    #[test]
    fn matrix_algebra_over_f3_has_idempotents() {
        let a = Algebra::matrix_algebra(FiniteField::prime(3).unwrap(), 2);
        let e = nontrivial_idempotent(&a).unwrap().unwrap();
        assert!(a.is_idempotent(&e));
        assert_ne!(&e, a.one());
        assert!(!Algebra::is_zero_elem(&e));
    }
}
