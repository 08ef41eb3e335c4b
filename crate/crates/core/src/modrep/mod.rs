//! Right modules given by action matrices of the algebra basis.
//!
//! Elements are coordinate rows and the algebra acts on the right:
//! `v . a = v * rho(a)`. Left modules are right modules over the opposite
//! algebra.

mod decompose;
mod hom;
mod lattice;

use std::fmt;
use std::sync::Arc;

pub use decompose::{decompose, indecomposable_iso, is_indecomposable, is_isomorphic, Summand};
pub use hom::{end_ring, hom, EndRing, MapSpace};
pub use lattice::{
    annihilator, goldie_dimension, is_essential, radical_submodule, socle, submodules, top,
    SUBMODULE_CAP,
};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{FiniteField, Scalar};
use crate::mat::{self, Mat};
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Eq)]
pub struct ModuleRep {
    alg: Arc<Algebra>,
    dim: usize,
    action: Vec<Mat>,
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleRep")
            .field("dim", &self.dim)
            .field("action", &self.action)
            .finish()
    }
}

/// An action-invariant subspace of some module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Submodule {
    space: Subspace,
}

impl Submodule {
    /// Wrap a subspace already known to be invariant.
    pub fn from_canonical(space: Subspace) -> Self {
        Self { space }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Inclusion into the parent, as a `dim x parent_dim` matrix.
    pub fn inclusion(&self) -> &Mat {
        self.space.basis()
    }
}

impl ModuleRep {
    /// Validate dimensions, scalars, `rho(1) = I` and
    /// `rho(b_i) rho(b_j) = rho(b_i b_j)` on all basis pairs.
    pub fn new(alg: Arc<Algebra>, action: Vec<Mat>) -> Result<Self> {
        if action.len() != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} action matrices, got {}",
                alg.dim(),
                action.len()
            )));
        }
        let dim = action.first().map_or(0, Mat::rows);
        for (i, m) in action.iter().enumerate() {
            if m.shape() != (dim, dim) {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix {i} must be {dim} x {dim}"
                )));
            }
            m.check_entries(alg.field())?;
        }
        let module = Self { alg, dim, action };
        module.validate()?;
        Ok(module)
    }

    pub(crate) fn new_unchecked(alg: Arc<Algebra>, dim: usize, action: Vec<Mat>) -> Self {
        Self { alg, dim, action }
    }

    pub fn validate(&self) -> Result<()> {
        let a = &*self.alg;
        let f = a.field();
        if self.rho(a.one()) != Mat::identity(self.dim) {
            return Err(Error::NotModule(
                "the unity does not act as the identity".into(),
            ));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action[i].mul(&self.action[j], f);
                if lhs != self.rho(a.basis_product(i, j)) {
                    return Err(Error::NotModule(format!(
                        "rho({}) rho({}) differs from rho({} * {})",
                        a.labels()[i],
                        a.labels()[j],
                        a.labels()[i],
                        a.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn algebra_ref(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> &FiniteField {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// `rho(x)` for an algebra element `x`.
    pub fn rho(&self, x: &[Scalar]) -> Mat {
        let f = self.field();
        let mut out = Mat::zeros(self.dim, self.dim);
        for (m, &c) in self.action.iter().zip(x) {
            if c != 0 {
                out.add_scaled(c, m, f);
            }
        }
        out
    }

    /// `v . x`.
    pub fn act(&self, v: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        self.rho(x).left_apply(v, self.field())
    }

    /// `A_A` with the algebra acting by right multiplication.
    pub fn regular(alg: Arc<Algebra>) -> Self {
        let action = (0..alg.dim())
            .map(|i| alg.right_mul_matrix(&alg.basis_element(i)))
            .collect();
        Self::new_unchecked(alg.clone(), alg.dim(), action)
    }

    /// The zero module.
    pub fn zero(alg: Arc<Algebra>) -> Self {
        let action = vec![Mat::zeros(0, 0); alg.dim()];
        Self::new_unchecked(alg, 0, action)
    }

    pub fn same_algebra(&self, other: &ModuleRep) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) || *self.alg == *other.alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn direct_sum(parts: &[&ModuleRep]) -> Result<ModuleRep> {
        let Some(first) = parts.first() else {
            return Err(Error::Precondition("empty direct sum".into()));
        };
        for p in parts {
            first.same_algebra(p)?;
        }
        let action = (0..first.alg.dim())
            .map(|i| Mat::block_diag(&parts.iter().map(|p| &p.action[i]).collect::<Vec<_>>()))
            .collect();
        let dim = parts.iter().map(|p| p.dim).sum();
        Ok(Self::new_unchecked(first.alg.clone(), dim, action))
    }

    /// Is `space` invariant under the action?
    pub fn submodule(&self, space: Subspace) -> Result<Submodule> {
        if space.ambient() != self.dim {
            return Err(Error::AmbientMismatch {
                left: space.ambient(),
                right: self.dim,
            });
        }
        let f = self.field();
        for (i, m) in self.action.iter().enumerate() {
            if !(0..space.dim()).all(|r| space.contains(&m.left_apply(space.basis().row(r), f), f))
            {
                return Err(Error::NotSubmodule(i));
            }
        }
        Ok(Submodule { space })
    }

    pub(crate) fn submodule_unchecked(space: Subspace) -> Submodule {
        Submodule { space }
    }

    pub fn whole(&self) -> Submodule {
        Submodule {
            space: Subspace::full(self.dim),
        }
    }

    /// Smallest submodule containing the given vectors.
    pub fn generated(&self, vs: &[Vec<Scalar>]) -> Submodule {
        let f = self.field();
        let mut rows = Vec::with_capacity(vs.len() * self.action.len());
        for v in vs {
            for m in &self.action {
                rows.push(m.left_apply(v, f));
            }
        }
        Submodule {
            space: Subspace::from_vectors(self.dim, &rows, f),
        }
    }

    /// The submodule as a module in its canonical basis.
    pub fn restrict(&self, sub: &Submodule) -> ModuleRep {
        let f = self.field();
        let basis = sub.space.basis();
        let k = sub.dim();
        let action = self
            .action
            .iter()
            .map(|m| {
                let image = basis.mul(m, f);
                let mut out = Mat::zeros(k, k);
                for r in 0..k {
                    let coords = sub
                        .space
                        .coordinates(image.row(r), f)
                        .expect("submodule is invariant");
                    out.row_mut(r).copy_from_slice(&coords);
                }
                out
            })
            .collect();
        Self::new_unchecked(self.alg.clone(), k, action)
    }

    /// `M / N` on the complement spanned by the free columns of `N`, with the
    /// `dim M x dim(M/N)` projection.
    pub fn quotient(&self, sub: &Submodule) -> (ModuleRep, Mat) {
        let f = self.field();
        let free = sub.space.free_columns();
        let n = free.len();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = sub.space.reduce(v, f);
            free.iter().map(|&c| r[c]).collect()
        };
        let action = self
            .action
            .iter()
            .map(|m| {
                let mut out = Mat::zeros(n, n);
                for (r, &c) in free.iter().enumerate() {
                    out.row_mut(r).copy_from_slice(&project(m.row(c)));
                }
                out
            })
            .collect();
        let mut proj = Mat::zeros(self.dim, n);
        for i in 0..self.dim {
            let mut e = vec![0; self.dim];
            e[i] = 1;
            proj.row_mut(i).copy_from_slice(&project(&e));
        }
        (Self::new_unchecked(self.alg.clone(), n, action), proj)
    }

    /// `Hom_F(M, F)` as a right module over the opposite algebra:
    /// `rho*(b) = rho(b)^T`.
    pub fn dual(&self) -> ModuleRep {
        let op = Arc::new(self.alg.opposite());
        self.dual_over(op)
    }

    /// [`ModuleRep::dual`] with a caller-supplied opposite algebra handle.
    pub fn dual_over(&self, op: Arc<Algebra>) -> ModuleRep {
        debug_assert!(*op == self.alg.opposite());
        let action = self.action.iter().map(Mat::transpose).collect();
        Self::new_unchecked(op, self.dim, action)
    }

    /// The same module in the basis given by the rows of the invertible `p`
    /// (new coordinates `w` correspond to old coordinates `w p`).
    pub fn change_basis(&self, p: &Mat) -> Result<ModuleRep> {
        let f = self.field();
        let inv = mat::inverse(p, f)
            .ok_or_else(|| Error::Precondition("change of basis must be invertible".into()))?;
        let action = self
            .action
            .iter()
            .map(|m| p.mul(m, f).mul(&inv, f))
            .collect();
        Ok(Self::new_unchecked(self.alg.clone(), self.dim, action))
    }

    /// Does `f` (a `dim M x dim N` matrix) intertwine the actions?
    pub fn is_hom_to(&self, target: &ModuleRep, map: &Mat) -> bool {
        let f = self.field();
        map.shape() == (self.dim, target.dim)
            && self
                .action
                .iter()
                .zip(&target.action)
                .all(|(a, b)| a.mul(map, f) == map.mul(b, f))
    }

    /// Same module over another (equal) algebra handle.
    pub fn rebind(&self, alg: Arc<Algebra>) -> Result<ModuleRep> {
        if *alg != *self.alg {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Self::new_unchecked(alg, self.dim, self.action.clone()))
    }
}
