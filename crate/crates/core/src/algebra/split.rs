use super::wedderburn::ideal_of;
use super::{units, wedderburn_blocks, Algebra, Elem, TwoUnitSearch};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::mat::Mat;
use crate::par;
use crate::subspace::Subspace;

/// `R = R_1 x R_2` with `R_1` Boolean and every element of `R_2` a sum of two
/// units. Part elements are coordinates in the part's own basis; the
/// inclusion matrices map them into the parent.
#[derive(Clone, Debug)]
pub struct RingDecomposition {
    pub e1: Elem,
    pub e2: Elem,
    pub boolean_part: Algebra,
    pub boolean_inclusion: Mat,
    pub two_good_part: Algebra,
    pub two_good_inclusion: Mat,
    /// `(x, u, v)` with `u + v = x`, `u`, `v` units, one per element of the
    /// two-good part.
    pub two_good_certificate: Vec<(Elem, Elem, Elem)>,
}

impl RingDecomposition {
    /// Re-check all invariants against the parent ring.
    pub fn verify(&self, parent: &Algebra) -> Result<()> {
        let f = parent.field();
        let check = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::Invariant(format!("ring decomposition: {what}")))
            }
        };
        check(
            parent.add(&self.e1, &self.e2) == *parent.one(),
            "e1 + e2 != 1",
        )?;
        check(
            Algebra::is_zero_elem(&parent.mul(&self.e1, &self.e2)),
            "e1 e2 != 0",
        )?;
        for e in [&self.e1, &self.e2] {
            check(parent.is_idempotent(e), "idempotent expected")?;
            for i in 0..parent.dim() {
                let b = parent.basis_element(i);
                check(
                    parent.mul(e, &b) == parent.mul(&b, e),
                    "idempotent is not central",
                )?;
            }
        }
        let boolean = &self.boolean_part;
        let n = boolean.check_enumerable("boolean part")?;
        check(
            par::all_range(n, |i| boolean.is_idempotent(&boolean.element(i))),
            "boolean part has a non-idempotent",
        )?;
        let good = &self.two_good_part;
        check(
            self.two_good_certificate.len() as u128 == good.element_count(),
            "certificate is incomplete",
        )?;
        let mut all_ok = true;
        for (x, u, v) in &self.two_good_certificate {
            all_ok &= good.add(u, v) == *x && super::is_unit(good, u) && super::is_unit(good, v);
        }
        check(all_ok, "bad two-units witness")?;
        check(
            self.boolean_inclusion.rows() + self.two_good_inclusion.rows() == parent.dim()
                && Subspace::from_rows(
                    &Mat::vstack(&[&self.boolean_inclusion, &self.two_good_inclusion]),
                    f,
                )
                .is_full(),
            "parts do not span the ring",
        )?;
        Ok(())
    }
}

fn part(a: &Algebra, e: &[Scalar]) -> Result<(Algebra, Mat)> {
    let space = ideal_of(a, e);
    let alg = a.subalgebra(&space, e)?;
    Ok((alg, space.basis().clone()))
}

fn two_good_certificate(good: &Algebra) -> Result<Vec<(Elem, Elem, Elem)>> {
    let search = TwoUnitSearch::new(good)?;
    let n = good.check_enumerable("two-good certificate")?;
    let witnesses = par::map_range(n, |i| {
        let x = good.element(i);
        search.witness(good, &x).map(|(u, v)| (x, u, v))
    });
    witnesses
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| {
            Error::Invariant("element of the complementary factor is not a sum of two units".into())
        })
}

/// Split a finite semisimple algebra into its `F_2`-blocks and the rest.
pub fn boolean_two_good_split(a: &Algebra) -> Result<RingDecomposition> {
    let blocks = wedderburn_blocks(a)?;
    let mut e1 = a.zero();
    for b in blocks.iter().filter(|b| b.is_f2()) {
        e1 = a.add(&e1, &b.idempotent);
    }
    let e2 = a.sub(a.one(), &e1);
    let (boolean_part, boolean_inclusion) = part(a, &e1)?;
    let (two_good_part, two_good_inclusion) = part(a, &e2)?;
    let two_good_certificate = two_good_certificate(&two_good_part)?;
    let dec = RingDecomposition {
        e1,
        e2,
        boolean_part,
        boolean_inclusion,
        two_good_part,
        two_good_inclusion,
        two_good_certificate,
    };
    dec.verify(a)?;
    Ok(dec)
}

/// Split a unital subring `T` of a semisimple `S` that is stable under left
/// multiplication by the units of `S`: `T_2` is the two-good factor `S_2` of
/// `S` and `T_1 = T e_1` is Boolean.
pub fn unit_stable_subring_split(s: &Algebra, t: &Subspace) -> Result<RingDecomposition> {
    let f = s.field();
    if t.ambient() != s.dim() {
        return Err(Error::AmbientMismatch {
            left: t.ambient(),
            right: s.dim(),
        });
    }
    if !t.contains(s.one(), f) {
        return Err(Error::NotSubring("does not contain the identity".into()));
    }
    if !s.is_multiplicatively_closed(t) {
        return Err(Error::NotSubring("not closed under multiplication".into()));
    }
    let unit_list = units(s)?;
    let t_basis = t.basis().to_rows();
    if let Some(u) = par::find_first(&unit_list, |u| {
        t_basis
            .iter()
            .any(|x| !t.contains(&s.mul(u, x), f))
            .then(|| u.clone())
    }) {
        return Err(Error::NotUnitStable { witness: u });
    }

    let whole = boolean_two_good_split(s)?;
    let s2 = Subspace::from_rows(&whole.two_good_inclusion, f);
    if !t.contains_subspace(&s2, f)? {
        return Err(Error::Invariant(
            "unit-stable subring does not contain the two-good factor".into(),
        ));
    }
    let e1 = whole.e1.clone();
    let t1_rows: Vec<Elem> = t_basis.iter().map(|x| s.mul(x, &e1)).collect();
    let t1 = Subspace::from_vectors(s.dim(), &t1_rows, f);
    let boolean_part = s.subalgebra(&t1, &e1)?;
    let dec = RingDecomposition {
        e1,
        e2: whole.e2,
        boolean_part,
        boolean_inclusion: t1.basis().clone(),
        two_good_part: whole.two_good_part,
        two_good_inclusion: whole.two_good_inclusion,
        two_good_certificate: whole.two_good_certificate,
    };
    dec.verify_in_subring(s, t)?;
    Ok(dec)
}

impl RingDecomposition {
    /// As [`RingDecomposition::verify`], for a decomposition of a subring `t`.
    pub fn verify_in_subring(&self, parent: &Algebra, t: &Subspace) -> Result<()> {
        let f = parent.field();
        let parts = Mat::vstack(&[&self.boolean_inclusion, &self.two_good_inclusion]);
        let span = Subspace::from_rows(&parts, f);
        if span != *t || parts.rows() != t.dim() {
            return Err(Error::Invariant("T_1 and T_2 do not decompose T".into()));
        }
        let boolean = &self.boolean_part;
        let n = boolean.check_enumerable("boolean part")?;
        if !par::all_range(n, |i| boolean.is_idempotent(&boolean.element(i))) {
            return Err(Error::Invariant("T_1 is not Boolean".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    fn scalar_field(f: FiniteField) -> Algebra {
        Algebra::new(f, vec!["1".into()], &[vec![vec![1]]], vec![1]).unwrap()
    }

    #[test]
    fn f2_squared_is_boolean() {
        let f2 = scalar_field(FiniteField::gf2());
        let a = Algebra::direct_product(&[&f2, &f2]).unwrap();
        let dec = boolean_two_good_split(&a).unwrap();
        assert_eq!(dec.boolean_part.dim(), 2);
        assert_eq!(dec.two_good_part.dim(), 0);
    }

    #[test]
    fn m2_f2_is_two_good() {
        let a = Algebra::matrix_algebra(FiniteField::gf2(), 2);
        let dec = boolean_two_good_split(&a).unwrap();
        assert_eq!(dec.boolean_part.dim(), 0);
        assert_eq!(dec.two_good_certificate.len(), 16);
    }

    #[test]
    fn mixed_product_over_f2() {
        let f2 = scalar_field(FiniteField::gf2());
        let m2 = Algebra::matrix_algebra(FiniteField::gf2(), 2);
        let f4 = scalar_field(FiniteField::new(2, 2).unwrap()).restrict_scalars();
        let a = Algebra::direct_product(&[&f2, &m2, &f4]).unwrap();
        let dec = boolean_two_good_split(&a).unwrap();
        assert_eq!(dec.boolean_part.dim(), 1);
        assert_eq!(dec.two_good_part.dim(), 6);
        assert_eq!(dec.e1, vec![1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn whole_ring_recovers_the_plain_split() {
        let f2 = scalar_field(FiniteField::gf2());
        let m2 = Algebra::matrix_algebra(FiniteField::gf2(), 2);
        let s = Algebra::direct_product(&[&f2, &m2]).unwrap();
        let dec = unit_stable_subring_split(&s, &Subspace::full(5)).unwrap();
        let plain = boolean_two_good_split(&s).unwrap();
        assert_eq!(dec.e1, plain.e1);
        assert_eq!(dec.boolean_part, plain.boolean_part);
    }

    #[test]
    fn non_stable_subring_reports_a_unit() {
        // diagonal matrices inside M_2(F_2) form a unital subring that is not
        // stable under the unit [[0,1],[1,0]]
        let s = Algebra::matrix_algebra(FiniteField::gf2(), 2);
        let f = s.field().clone();
        let diag = Subspace::from_vectors(4, &[vec![1, 0, 0, 0], vec![0, 0, 0, 1]], &f);
        match unit_stable_subring_split(&s, &diag) {
            Err(Error::NotUnitStable { witness }) => {
                assert!(super::super::is_unit(&s, &witness));
                let moved = diag
                    .basis()
                    .to_rows()
                    .iter()
                    .any(|x| !diag.contains(&s.mul(&witness, x), &f));
                assert!(moved);
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn non_subring_is_rejected() {
        let s = Algebra::matrix_algebra(FiniteField::gf2(), 2);
        let f = s.field().clone();
        let t = Subspace::from_vectors(
            4,
            &[vec![1, 0, 0, 1], vec![0, 1, 0, 0], vec![0, 0, 1, 0]],
            &f,
        );
        assert!(matches!(
            unit_stable_subring_split(&s, &t),
            Err(Error::NotSubring(_))
        ));
    }
}
