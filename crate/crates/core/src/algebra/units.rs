use std::collections::HashSet;

use super::{Algebra, Elem};
use crate::error::Result;
use crate::field::Scalar;
use crate::mat;
use crate::par;

/// `x` is a unit iff left multiplication by `x` is invertible.
pub fn is_unit(a: &Algebra, x: &[Scalar]) -> bool {
    mat::is_invertible(&a.left_mul_matrix(x), a.field())
}

/// All units in enumeration order.
pub fn units(a: &Algebra) -> Result<Vec<Elem>> {
    let n = a.check_enumerable("unit enumeration")?;
    Ok(par::filter_map_range(n, |i| {
        let x = a.element(i);
        is_unit(a, &x).then_some(x)
    }))
}

/// The unit group, held for repeated sum-of-two-units queries.
pub struct TwoUnitSearch {
    units: Vec<Elem>,
    lookup: HashSet<Elem>,
}

impl TwoUnitSearch {
    pub fn new(a: &Algebra) -> Result<Self> {
        let units = units(a)?;
        let lookup = units.iter().cloned().collect();
        Ok(Self { units, lookup })
    }

    pub fn units(&self) -> &[Elem] {
        &self.units
    }

    /// Units `(u, v)` with `u + v = x`, taking the first `u` in enumeration order.
    pub fn witness(&self, a: &Algebra, x: &[Scalar]) -> Option<(Elem, Elem)> {
        self.units.iter().find_map(|u| {
            let v = a.sub(x, u);
            self.lookup.contains(&v).then(|| (u.clone(), v))
        })
    }
}

pub fn is_sum_of_two_units(a: &Algebra, x: &[Scalar]) -> Result<Option<(Elem, Elem)>> {
    Ok(TwoUnitSearch::new(a)?.witness(a, x))
}
