//! Exhaustive reference implementations. They are exponential and exist to
//! cross-check the production algorithms on tiny inputs.

use std::collections::HashMap;

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::mat::{self, Mat};
use crate::modrep::{self, ModuleRep};
use crate::subspace::Subspace;

/// Cap on `|A|` for [`radical`].
pub const RADICAL_CAP: u128 = 1 << 12;

/// `J(A)` as the set of `x` whose two-sided ideal `AxA` is nil.
pub fn radical(a: &Algebra) -> Result<Subspace> {
    let size = a.element_count();
    if size > RADICAL_CAP {
        return Err(Error::SizeCap {
            what: "brute-force radical",
            size,
            cap: RADICAL_CAP,
        });
    }
    let f = a.field();
    let mut verdicts: HashMap<Subspace, bool> = HashMap::new();
    let mut members = Vec::new();
    for x in a.elements()? {
        let ideal = a.two_sided_ideal_generated(std::slice::from_ref(&x));
        let nil = *verdicts
            .entry(ideal.clone())
            .or_insert_with(|| is_nil(a, &ideal));
        if nil {
            members.push(x);
        }
    }
    let span = Subspace::from_vectors(a.dim(), &members, f);
    if members.len() as u128 != (f.q() as u128).pow(span.dim() as u32) {
        return Err(Error::Invariant(
            "nil elements do not form a subspace".into(),
        ));
    }
    Ok(span)
}

fn is_nil(a: &Algebra, ideal: &Subspace) -> bool {
    let f = a.field();
    let q = f.q() as u64;
    let count = q.pow(ideal.dim() as u32);
    (0..count).all(|mut idx| {
        let coords: Vec<u32> = (0..ideal.dim())
            .map(|_| {
                let c = (idx % q) as u32;
                idx /= q;
                c
            })
            .collect();
        a.is_nilpotent(&ideal.basis().left_apply(&coords, f))
    })
}

/// Number of ring homomorphisms `A -> F_2` preserving `1` (all surjective).
pub fn count_f2_surjections(a: &Algebra) -> Result<usize> {
    if a.field().p() != 2 {
        return Ok(0);
    }
    let ap = a.restrict_scalars();
    let n = ap.dim();
    if n > 20 {
        return Err(Error::SizeCap {
            what: "F_2 functional enumeration",
            size: 1u128 << n,
            cap: 1 << 20,
        });
    }
    let one = ap.one().clone();
    let eval = |phi: u32, x: &[u32]| -> u32 {
        x.iter()
            .enumerate()
            .map(|(i, &c)| c & (phi >> i) & 1)
            .sum::<u32>()
            & 1
    };
    let products: Vec<(usize, usize, Elem)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, ap.basis_product(i, j).to_vec()))
        .collect();
    let count = (0..1u32 << n)
        .filter(|&phi| eval(phi, &one) == 1)
        .filter(|&phi| {
            products
                .iter()
                .all(|(i, j, prod)| eval(phi, prod) == ((phi >> i) & (phi >> j) & 1))
        })
        .count();
    Ok(count)
}

/// All subspaces of `F_q^n` closed under `x -> x M` for each `M`, by
/// enumerating every subspace. Tiny inputs only.
pub fn invariant_subspaces_brute(
    n: usize,
    actions: &[Mat],
    f: &FiniteField,
) -> Result<Vec<Subspace>> {
    let q = f.q() as u64;
    let total = (q as u128).pow(n as u32);
    if total > 1 << 10 {
        return Err(Error::SizeCap {
            what: "brute-force subspace enumeration",
            size: total,
            cap: 1 << 10,
        });
    }
    let vectors: Vec<Elem> = (0..total as u64)
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let c = (idx % q) as u32;
                    idx /= q;
                    c
                })
                .collect()
        })
        .collect();
    // every subspace is spanned by at most n vectors; grow spans breadth first
    let mut seen: std::collections::BTreeSet<Subspace> = std::collections::BTreeSet::new();
    let mut frontier = vec![Subspace::zero(n)];
    seen.insert(Subspace::zero(n));
    while let Some(s) = frontier.pop() {
        for v in &vectors {
            if s.contains(v, f) {
                continue;
            }
            let bigger = s.sum(&Subspace::from_vectors(n, std::slice::from_ref(v), f), f)?;
            if seen.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    Ok(seen
        .into_iter()
        .filter(|s| {
            actions
                .iter()
                .all(|m| (0..s.dim()).all(|r| s.contains(&m.left_apply(s.basis().row(r), f), f)))
        })
        .collect())
}

/// Cap on `|M|` for the module-level oracles below.
pub const MODULE_CAP: u128 = 1 << 10;

/// Cap on the number of maps enumerated per hom space.
pub const MAP_CAP: u128 = 1 << 16;

fn coordinate_vector(mut idx: u64, len: usize, q: u64) -> Elem {
    (0..len)
        .map(|_| {
            let c = (idx % q) as u32;
            idx /= q;
            c
        })
        .collect()
}

fn check_module_size(m: &ModuleRep, what: &'static str) -> Result<()> {
    let size = (m.field().q() as u128).saturating_pow(m.dim() as u32);
    if size > MODULE_CAP {
        return Err(Error::SizeCap {
            what,
            size,
            cap: MODULE_CAP,
        });
    }
    Ok(())
}

/// Number of intertwiners `M -> N`, counted by testing every matrix.
pub fn hom_count(m: &ModuleRep, n: &ModuleRep) -> Result<u128> {
    let f = m.field();
    let q = f.q() as u64;
    let entries = m.dim() * n.dim();
    let total = (q as u128).saturating_pow(entries as u32);
    if total > MAP_CAP {
        return Err(Error::SizeCap {
            what: "brute-force hom enumeration",
            size: total,
            cap: MAP_CAP,
        });
    }
    let count = (0..total as u64)
        .filter(|&idx| {
            let map = Mat::from_vec(m.dim(), n.dim(), coordinate_vector(idx, entries, q));
            m.is_hom_to(n, &map)
        })
        .count();
    Ok(count as u128)
}

/// A submodule `N` of `M` and a map `N -> M` (in the canonical basis of `N`)
/// that no endomorphism of `M` extends. Only injective maps are tried when
/// `monos_only` is set.
pub fn non_extendable_map(m: &ModuleRep, monos_only: bool) -> Result<Option<(Subspace, Mat)>> {
    check_module_size(m, "extension oracle")?;
    let f = m.field();
    let q = f.q() as u64;
    let ends = modrep::hom(m, m)?;
    for sub in modrep::submodules(m)? {
        if sub.dim() == 0 {
            continue;
        }
        let n = m.restrict(&sub);
        let maps = modrep::hom(&n, m)?;
        let total = (q as u128).saturating_pow(maps.dim() as u32);
        if total > MAP_CAP {
            return Err(Error::SizeCap {
                what: "extension oracle maps",
                size: total,
                cap: MAP_CAP,
            });
        }
        // restrictions of endomorphisms to N, flattened
        let rows: Vec<Elem> = ends
            .basis()
            .iter()
            .map(|e| sub.inclusion().mul(e, f).flatten())
            .collect();
        let restrictions = Subspace::from_vectors(n.dim() * m.dim(), &rows, f);
        for idx in 0..total as u64 {
            let phi = maps.combine(&coordinate_vector(idx, maps.dim(), q));
            if monos_only && mat::rank(&phi, f) < n.dim() {
                continue;
            }
            if !restrictions.contains(&phi.flatten(), f) {
                return Ok(Some((sub.space().clone(), phi)));
            }
        }
    }
    Ok(None)
}

/// Every monomorphism from a submodule into `M` extends to an endomorphism.
pub fn is_pseudo_injective(m: &ModuleRep) -> Result<bool> {
    Ok(non_extendable_map(m, true)?.is_none())
}

/// Every map from a submodule into `M` extends to an endomorphism.
pub fn is_quasi_injective(m: &ModuleRep) -> Result<bool> {
    Ok(non_extendable_map(m, false)?.is_none())
}

/// Isomorphism by trying every invertible matrix.
pub fn are_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<bool> {
    if m.dim() != n.dim() {
        return Ok(false);
    }
    let f = m.field();
    let q = f.q() as u64;
    let entries = m.dim() * m.dim();
    let total = (q as u128).saturating_pow(entries as u32);
    if total > MAP_CAP {
        return Err(Error::SizeCap {
            what: "brute-force isomorphism search",
            size: total,
            cap: MAP_CAP,
        });
    }
    Ok((0..total as u64).any(|idx| {
        let map = Mat::from_vec(m.dim(), m.dim(), coordinate_vector(idx, entries, q));
        mat::is_invertible(&map, f) && m.is_hom_to(n, &map)
    }))
}
