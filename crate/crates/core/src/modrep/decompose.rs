use super::{end_ring, hom, ModuleRep, Submodule};
use crate::algebra::{lift_idempotent, nontrivial_idempotent};
use crate::error::{Error, Result};
use crate::mat::{self, Mat};
use crate::subspace::Subspace;

/// An indecomposable direct summand: its span inside the parent and the
/// summand as a module in the canonical basis of that span.
#[derive(Clone, Debug)]
pub struct Summand {
    pub sub: Submodule,
    pub module: ModuleRep,
}

/// A nontrivial idempotent endomorphism of `m`, if `End(m)` has one.
fn splitting_idempotent(m: &ModuleRep) -> Result<Option<Mat>> {
    let end = end_ring(m)?;
    let Some(bar) = nontrivial_idempotent(&end.quotient().algebra)? else {
        return Ok(None);
    };
    let e = lift_idempotent(end.algebra(), &end.quotient().lift(&bar))?;
    Ok(Some(end.to_matrix(&e)))
}

pub fn is_indecomposable(m: &ModuleRep) -> Result<bool> {
    Ok(m.dim() > 0 && splitting_idempotent(m)?.is_none())
}

/// Krull-Schmidt decomposition by repeatedly splitting along lifted
/// idempotents of `End/J`. Each summand has local endomorphism ring.
pub fn decompose(m: &ModuleRep) -> Result<Vec<Summand>> {
    let f = m.field();
    let mut out = Vec::new();
    let mut stack = vec![Subspace::full(m.dim())];
    while let Some(space) = stack.pop() {
        if space.is_zero() {
            continue;
        }
        let sub = ModuleRep::submodule_unchecked(space.clone());
        let piece = m.restrict(&sub);
        match splitting_idempotent(&piece)? {
            None => out.push(Summand { sub, module: piece }),
            Some(e) => {
                let rest = Mat::identity(piece.dim()).sub(&e, f);
                // images in piece coordinates, mapped back through the basis
                for part in [&rest, &e] {
                    let image = Subspace::from_rows(part, f);
                    let inside = image.basis().mul(space.basis(), f);
                    stack.push(Subspace::from_rows(&inside, f));
                }
            }
        }
    }
    let total: usize = out.iter().map(|s| s.module.dim()).sum();
    if total != m.dim() {
        return Err(Error::Invariant("summand dimensions do not add up".into()));
    }
    Ok(out)
}

/// Isomorphism test for indecomposables. If `X ~ Y` some basis composite
/// `f_s g_t` is a unit of the local ring `End(X)` (otherwise every composite
/// lies in `J`); such an `f_s` is then an isomorphism.
pub fn indecomposable_iso(x: &ModuleRep, y: &ModuleRep) -> Result<Option<Mat>> {
    x.same_algebra(y)?;
    if x.dim() != y.dim() {
        return Ok(None);
    }
    let f = x.field();
    let there = hom(x, y)?;
    let back = hom(y, x)?;
    for fs in there.basis() {
        if !mat::is_invertible(fs, f) {
            continue;
        }
        return Ok(Some(fs.clone()));
    }
    for fs in there.basis() {
        for gt in back.basis() {
            if mat::is_invertible(&fs.mul(gt, f), f) {
                return Ok(Some(fs.clone()));
            }
        }
    }
    Ok(None)
}

/// An isomorphism `m -> n` (a `dim m x dim n` intertwiner), or `None`.
/// Matches indecomposable summands pairwise, which is complete by
/// Krull-Schmidt.
pub fn is_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<Option<Mat>> {
    m.same_algebra(n)?;
    if m.dim() != n.dim() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(Mat::zeros(0, 0)));
    }
    if m == n {
        return Ok(Some(Mat::identity(m.dim())));
    }
    let f = m.field();
    let left = decompose(m)?;
    let right = decompose(n)?;
    if left.len() != right.len() {
        return Ok(None);
    }
    let mut used = vec![false; right.len()];
    let mut pieces = Vec::with_capacity(left.len());
    let mut order = Vec::with_capacity(left.len());
    for s in &left {
        let mut found = None;
        for (j, t) in right.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(phi) = indecomposable_iso(&s.module, &t.module)? {
                found = Some((j, phi));
                break;
            }
        }
        let Some((j, phi)) = found else {
            return Ok(None);
        };
        used[j] = true;
        pieces.push(phi);
        order.push(j);
    }
    // m-coordinates -> summand coordinates -> matched summands -> n-coordinates
    let pm = Mat::vstack(&left.iter().map(|s| s.sub.inclusion()).collect::<Vec<_>>());
    let pn = Mat::vstack(
        &order
            .iter()
            .map(|&j| right[j].sub.inclusion())
            .collect::<Vec<_>>(),
    );
    let pm_inv =
        mat::inverse(&pm, f).ok_or_else(|| Error::Invariant("summands do not span".into()))?;
    let diag = Mat::block_diag(&pieces.iter().collect::<Vec<_>>());
    let witness = pm_inv.mul(&diag, f).mul(&pn, f);
    if !m.is_hom_to(n, &witness) || !mat::is_invertible(&witness, f) {
        return Err(Error::Invariant(
            "assembled isomorphism fails to verify".into(),
        ));
    }
    Ok(Some(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::FiniteField;
    use std::sync::Arc;

    #[test]
    fn regular_upper_triangular_splits_in_two() {
        let a = Arc::new(Algebra::upper_triangular(FiniteField::gf2(), 2));
        let r = ModuleRep::regular(a);
        let parts = decompose(&r).unwrap();
        assert_eq!(parts.len(), 2);
        let mut dims: Vec<usize> = parts.iter().map(|p| p.module.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2]);
    }

    #[test]
    fn conjugate_module_is_isomorphic() {
        let f3 = FiniteField::prime(3).unwrap();
        let a = Arc::new(Algebra::upper_triangular(f3.clone(), 2));
        let r = ModuleRep::regular(a);
        let p = Mat::from_rows(3, 3, &[vec![1, 2, 0], vec![0, 1, 1], vec![2, 0, 1]]).unwrap();
        assert!(mat::is_invertible(&p, &f3));
        let c = r.change_basis(&p).unwrap();
        let w = is_isomorphic(&r, &c).unwrap().expect("witness");
        assert!(r.is_hom_to(&c, &w));
    }

    #[test]
    fn matrix_algebra_regular_module_is_two_copies_of_the_simple() {
        let a = Arc::new(Algebra::matrix_algebra(FiniteField::gf2(), 2));
        let r = ModuleRep::regular(a);
        let parts = decompose(&r).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(is_isomorphic(&parts[0].module, &parts[1].module)
            .unwrap()
            .is_some());
    }
}
