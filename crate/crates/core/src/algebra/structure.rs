use super::{radical, Algebra, Elem};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::mat::Mat;
use crate::subspace::Subspace;

/// A two-sided ideal of a given algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    space: Subspace,
}

impl Ideal {
    pub fn new(a: &Algebra, space: Subspace) -> Result<Self> {
        if space.ambient() != a.dim() {
            return Err(Error::AmbientMismatch {
                left: space.ambient(),
                right: a.dim(),
            });
        }
        if !a.is_two_sided_ideal(&space) {
            return Err(Error::Precondition(
                "subspace is not a two-sided ideal".into(),
            ));
        }
        Ok(Self { space })
    }

    pub(crate) fn new_unchecked(space: Subspace) -> Self {
        Self { space }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn basis_elements(&self) -> Vec<Elem> {
        self.space.basis().to_rows()
    }
}

/// `A / I` with the projection `A -> A/I` (a `d x d'` matrix) and the
/// section `A/I -> A` (a `d' x d` matrix) picking standard complement vectors.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    pub projection: Mat,
    pub section: Mat,
}

impl Quotient {
    pub fn project(&self, x: &[Scalar]) -> Elem {
        self.projection.left_apply(x, self.algebra.field())
    }

    pub fn lift(&self, y: &[Scalar]) -> Elem {
        self.section.left_apply(y, self.algebra.field())
    }
}

pub(crate) fn quotient_by(a: &Algebra, ideal: &Subspace) -> Result<Quotient> {
    let (algebra, projection) = a.quotient(ideal)?;
    let free = ideal.free_columns();
    let mut section = Mat::zeros(free.len(), a.dim());
    for (r, &c) in free.iter().enumerate() {
        section.set(r, c, 1);
    }
    Ok(Quotient {
        algebra,
        projection,
        section,
    })
}

/// `A / J(A)`.
pub fn semisimple_quotient(a: &Algebra) -> Quotient {
    let j = radical(a);
    quotient_by(a, j.space()).expect("the radical is a two-sided ideal")
}
