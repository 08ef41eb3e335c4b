use std::collections::BTreeSet;

use super::{ModuleRep, Submodule};
use crate::algebra::{self, semisimple_quotient, wedderburn_blocks, Ideal};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::mat::{self, Mat};
use crate::subspace::Subspace;

/// Cap on `q^dim M` for exhaustive submodule enumeration.
pub const SUBMODULE_CAP: u128 = 1 << 16;

fn radical_actions(m: &ModuleRep) -> Vec<Mat> {
    algebra::radical(m.algebra())
        .basis_elements()
        .iter()
        .map(|j| m.rho(j))
        .collect()
}

/// `Soc(M) = { v : v rho(j) = 0 for j in J }`.
pub fn socle(m: &ModuleRep) -> Submodule {
    let acts = radical_actions(m);
    if acts.is_empty() || m.dim() == 0 {
        return m.whole();
    }
    let refs: Vec<&Mat> = acts.iter().collect();
    ModuleRep::submodule_unchecked(mat::left_nullspace(&Mat::hstack(&refs), m.field()))
}

/// `M J`.
pub fn radical_submodule(m: &ModuleRep) -> Submodule {
    let acts = radical_actions(m);
    if acts.is_empty() || m.dim() == 0 {
        return ModuleRep::submodule_unchecked(Subspace::zero(m.dim()));
    }
    let refs: Vec<&Mat> = acts.iter().collect();
    ModuleRep::submodule_unchecked(Subspace::from_rows(&Mat::vstack(&refs), m.field()))
}

/// `M / M J` with its projection.
pub fn top(m: &ModuleRep) -> (ModuleRep, Mat) {
    m.quotient(&radical_submodule(m))
}

/// Over a finite-dimensional algebra `N` is essential iff it contains the socle.
pub fn is_essential(m: &ModuleRep, n: &Submodule) -> bool {
    n.space()
        .contains_subspace(socle(m).space(), m.field())
        .unwrap_or(false)
}

/// Number of simple summands of the socle: per block of `A/J`, the
/// dimension of `Soc(M) e` divided by the dimension `n [F_q' : F_q]` of the
/// block's simple module.
pub fn goldie_dimension(m: &ModuleRep) -> usize {
    let a = m.algebra();
    let f = m.field();
    let soc = socle(m);
    if soc.dim() == 0 {
        return 0;
    }
    let quotient = semisimple_quotient(a);
    let blocks = wedderburn_blocks(&quotient.algebra).expect("semisimple quotient");
    blocks
        .iter()
        .map(|b| {
            let e = quotient.lift(&b.idempotent);
            let part = soc.space().image(&m.rho(&e), f);
            part.dim() / (b.n * b.center_degree)
        })
        .sum()
}

/// `ann(M) = { x : rho(x) = 0 }` as an ideal of the algebra.
pub fn annihilator(m: &ModuleRep) -> Ideal {
    let a = m.algebra();
    let rows: Vec<Vec<Scalar>> = m.action().iter().map(Mat::flatten).collect();
    let stacked = Mat::from_rows(rows.len(), m.dim() * m.dim(), &rows).expect("flattened actions");
    Ideal::new(a, mat::left_nullspace(&stacked, a.field()))
        .expect("annihilators are two-sided ideals")
}

/// Every submodule, sorted canonically. Each submodule is a sum of cyclic
/// ones, so the lattice is the closure of the cyclic submodules under sums.
pub fn submodules(m: &ModuleRep) -> Result<Vec<Submodule>> {
    let f = m.field();
    let q = f.q() as u64;
    let size = (q as u128).saturating_pow(m.dim() as u32);
    if size > SUBMODULE_CAP {
        return Err(Error::SizeCap {
            what: "submodule enumeration",
            size,
            cap: SUBMODULE_CAP,
        });
    }
    let mut cyclic: BTreeSet<Subspace> = BTreeSet::new();
    for idx in 1..size as u64 {
        let mut rest = idx;
        let v: Vec<Scalar> = (0..m.dim())
            .map(|_| {
                let c = (rest % q) as Scalar;
                rest /= q;
                c
            })
            .collect();
        // one generator per line: leading nonzero coordinate equal to 1
        if v.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        cyclic.insert(m.generated(&[v]).space);
    }
    let cyclic: Vec<Subspace> = cyclic.into_iter().collect();
    let mut all: BTreeSet<Subspace> = BTreeSet::new();
    all.insert(Subspace::zero(m.dim()));
    let mut frontier: Vec<Subspace> = vec![Subspace::zero(m.dim())];
    while let Some(s) = frontier.pop() {
        for c in &cyclic {
            if s.contains_subspace(c, f)? {
                continue;
            }
            let t = s.sum(c, f)?;
            if all.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    Ok(all
        .into_iter()
        .map(ModuleRep::submodule_unchecked)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::FiniteField;
    use std::sync::Arc;

    #[test]
    fn dual_numbers_have_three_ideals() {
        let a = Arc::new(Algebra::polynomial_quotient(FiniteField::gf2(), &[0, 0, 1]).unwrap());
        let r = ModuleRep::regular(a);
        assert_eq!(submodules(&r).unwrap().len(), 3);
        assert_eq!(socle(&r).dim(), 1);
        assert_eq!(goldie_dimension(&r), 1);
        assert_eq!(top(&r).0.dim(), 1);
        assert!(is_essential(&r, &socle(&r)));
        assert!(!is_essential(
            &r,
            &ModuleRep::submodule_unchecked(Subspace::zero(2))
        ));
    }

    #[test]
    fn semisimple_module_is_its_own_socle() {
        let a = Arc::new(Algebra::matrix_algebra(FiniteField::gf2(), 2));
        let r = ModuleRep::regular(a);
        assert_eq!(socle(&r).dim(), 4);
        assert_eq!(goldie_dimension(&r), 2);
        assert!(annihilator(&r).is_zero());
    }
}
