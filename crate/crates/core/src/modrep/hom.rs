use std::sync::Arc;

use super::ModuleRep;
use crate::algebra;
use crate::algebra::{
    semisimple_quotient, wedderburn_blocks, Algebra, Elem, Ideal, Quotient, WedderburnBlock,
};
use crate::error::Result;
use crate::field::Scalar;
use crate::mat::{self, Mat};
use crate::subspace::Subspace;

/// A basis of a space of module homomorphisms `source -> target`, each a
/// `dim source x dim target` matrix with `rho_s(b) F = F rho_t(b)`.
#[derive(Clone, Debug)]
pub struct MapSpace {
    source: ModuleRep,
    target: ModuleRep,
    /// Flattened matrices in canonical echelon form.
    space: Subspace,
    basis: Vec<Mat>,
}

impl MapSpace {
    pub fn source(&self) -> &ModuleRep {
        &self.source
    }

    pub fn target(&self) -> &ModuleRep {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    /// `sum c_i F_i`.
    pub fn combine(&self, coords: &[Scalar]) -> Mat {
        let flat = self.space.basis().left_apply(coords, self.source.field());
        Mat::from_vec(self.source.dim(), self.target.dim(), flat)
    }

    pub fn coordinates(&self, map: &Mat) -> Option<Elem> {
        self.space.coordinates(&map.flatten(), self.source.field())
    }

    pub fn contains(&self, map: &Mat) -> bool {
        self.space.contains(&map.flatten(), self.source.field())
    }

    /// The flattened span, for subspace arithmetic.
    pub fn flat_space(&self) -> &Subspace {
        &self.space
    }
}

/// `Hom_A(M, N)`: the nullspace of the commuting system.
pub fn hom(m: &ModuleRep, n: &ModuleRep) -> Result<MapSpace> {
    m.same_algebra(n)?;
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    let gens = m.action().len();
    // unknown (k, c) at k * dn + c; equation (i, r, c) at (i * dm + r) * dn + c
    let mut system = Mat::zeros(unknowns, gens * dm * dn);
    for i in 0..gens {
        let (rm, rn) = (&m.action()[i], &n.action()[i]);
        for r in 0..dm {
            for c in 0..dn {
                let eq = (i * dm + r) * dn + c;
                for k in 0..dm {
                    let v = rm.get(r, k);
                    if v != 0 {
                        let idx = k * dn + c;
                        system.set(idx, eq, f.add(system.get(idx, eq), v));
                    }
                }
                for k in 0..dn {
                    let v = rn.get(k, c);
                    if v != 0 {
                        let idx = r * dn + k;
                        system.set(idx, eq, f.sub(system.get(idx, eq), v));
                    }
                }
            }
        }
    }
    let space = if gens == 0 {
        Subspace::full(unknowns)
    } else {
        mat::left_nullspace(&system, f)
    };
    let basis = space
        .basis()
        .to_rows()
        .into_iter()
        .map(|row| Mat::from_vec(dm, dn, row))
        .collect();
    Ok(MapSpace {
        source: m.clone(),
        target: n.clone(),
        space,
        basis,
    })
}

/// `End(M)` with its algebra structure. The product of basis elements is
/// the matrix product `F_s F_t`, i.e. apply `F_s` first.
#[derive(Clone, Debug)]
pub struct EndRing {
    maps: MapSpace,
    algebra: Arc<Algebra>,
    quotient: Quotient,
    blocks: Vec<WedderburnBlock>,
}

pub fn end_ring(m: &ModuleRep) -> Result<EndRing> {
    let maps = hom(m, m)?;
    let labels = (0..maps.dim()).map(|i| format!("f{i}")).collect();
    let algebra = Arc::new(Algebra::from_matrix_basis(
        m.field().clone(),
        labels,
        maps.basis(),
    )?);
    let quotient = semisimple_quotient(&algebra);
    let blocks = wedderburn_blocks(&quotient.algebra)?;
    Ok(EndRing {
        maps,
        algebra,
        quotient,
        blocks,
    })
}

impl EndRing {
    pub fn module(&self) -> &ModuleRep {
        self.maps.source()
    }

    pub fn maps(&self) -> &MapSpace {
        &self.maps
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn algebra_ref(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.maps.dim()
    }

    pub fn radical(&self) -> Ideal {
        algebra::radical(&self.algebra)
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    /// Blocks of `End(M)/J`.
    pub fn blocks(&self) -> &[WedderburnBlock] {
        &self.blocks
    }

    pub fn to_matrix(&self, x: &[Scalar]) -> Mat {
        self.maps.combine(x)
    }

    pub fn to_element(&self, map: &Mat) -> Option<Elem> {
        self.maps.coordinates(map)
    }

    /// Matrices spanning `J(End M)`.
    pub fn radical_matrices(&self) -> Vec<Mat> {
        self.radical()
            .basis_elements()
            .iter()
            .map(|x| self.to_matrix(x))
            .collect()
    }

    /// `End(M)/J` is a division ring, i.e. `M` is indecomposable.
    pub fn is_local(&self) -> bool {
        self.blocks.len() == 1 && self.blocks[0].n == 1
    }

    /// `End(M)/J = F_2`.
    pub fn quotient_is_f2(&self) -> bool {
        self.blocks.len() == 1 && self.blocks[0].is_f2()
    }

    /// Number of `F_2` blocks of `End(M)/J`.
    pub fn f2_quotients(&self) -> usize {
        self.blocks.iter().filter(|b| b.is_f2()).count()
    }

    /// `(n, q')` for each block of `End(M)/J`.
    pub fn block_profile(&self) -> Vec<(usize, u64)> {
        self.blocks.iter().map(|b| (b.n, b.q_prime)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    #[test]
    fn end_of_regular_module_has_algebra_dimension() {
        let a = Arc::new(Algebra::upper_triangular(FiniteField::gf2(), 2));
        let r = ModuleRep::regular(a.clone());
        let e = end_ring(&r).unwrap();
        assert_eq!(e.dim(), a.dim());
        assert!(e.maps().contains(&Mat::identity(3)));
        // End(A_A) is left multiplication by A
        for i in 0..a.dim() {
            assert!(e.maps().contains(&a.left_mul_matrix(&a.basis_element(i))));
        }
    }

    #[test]
    fn hom_between_simples_of_different_blocks_vanishes() {
        let a = Arc::new(Algebra::upper_triangular(FiniteField::gf2(), 2));
        let r = ModuleRep::regular(a.clone());
        // e22 acts as 1 on e12 A and as 0 on A / (e12 A + e22 A)
        let e12a = r.generated(&[vec![0, 1, 0]]);
        let s1 = r.restrict(&e12a);
        let (s2, _) = r.quotient(&r.generated(&[vec![0, 1, 0], vec![0, 0, 1]]));
        assert_eq!(hom(&s1, &s2).unwrap().dim(), 0);
        assert_eq!(hom(&s1, &s1).unwrap().dim(), 1);
    }
}
