mod common;

use autinv_core::modrep::{
    self, decompose, hom, is_indecomposable, is_isomorphic, socle, submodules,
};
use autinv_core::{oracle, ModuleRep, Subspace};

const SEEDS: u64 = 30;

/// The natural module with its submodules and quotients.
fn family(seed: u64) -> Vec<ModuleRep> {
    let (_, natural) = common::random_algebra(seed);
    let mut out = vec![natural.clone()];
    for sub in submodules(&natural).unwrap() {
        if sub.dim() > 0 && sub.dim() < natural.dim() {
            out.push(natural.restrict(&sub));
            out.push(natural.quotient(&sub).0);
        }
    }
    out
}

#[test]
fn hom_dimension_matches_map_count() {
    for seed in 0..SEEDS {
        let mods = family(seed);
        let q = mods[0].field().q() as u128;
        for m in &mods {
            for n in &mods {
                let d = hom(m, n).unwrap().dim();
                assert_eq!(
                    q.pow(d as u32),
                    oracle::hom_count(m, n).unwrap(),
                    "seed {seed}"
                );
            }
        }
    }
}

#[test]
fn submodule_lattice_matches_brute_force() {
    for seed in 0..SEEDS {
        for m in family(seed) {
            let mut fast: Vec<Subspace> = submodules(&m)
                .unwrap()
                .into_iter()
                .map(|s| s.space().clone())
                .collect();
            let mut brute =
                oracle::invariant_subspaces_brute(m.dim(), m.action(), m.field()).unwrap();
            fast.sort_by(|a, b| a.basis().data().cmp(b.basis().data()));
            brute.sort_by(|a, b| a.basis().data().cmp(b.basis().data()));
            fast.dedup();
            assert_eq!(fast, brute, "seed {seed}");
        }
    }
}

#[test]
fn socle_and_radical_match_the_lattice() {
    for seed in 0..SEEDS {
        for m in family(seed) {
            let f = m.field().clone();
            let subs = oracle::invariant_subspaces_brute(m.dim(), m.action(), &f).unwrap();
            let nonzero: Vec<&Subspace> = subs.iter().filter(|s| !s.is_zero()).collect();
            let minimal = nonzero.iter().filter(|s| {
                !nonzero
                    .iter()
                    .any(|t| t.dim() < s.dim() && s.contains_subspace(t, &f).unwrap())
            });
            let soc = minimal.fold(Subspace::zero(m.dim()), |acc, s| acc.sum(s, &f).unwrap());
            assert_eq!(*socle(&m).space(), soc, "seed {seed}");

            let proper: Vec<&Subspace> = subs.iter().filter(|s| !s.is_full()).collect();
            let maximal = proper.iter().filter(|s| {
                !proper
                    .iter()
                    .any(|t| t.dim() > s.dim() && t.contains_subspace(s, &f).unwrap())
            });
            let rad = maximal.fold(Subspace::full(m.dim()), |acc, s| {
                acc.intersect(s, &f).unwrap()
            });
            assert_eq!(*modrep::radical_submodule(&m).space(), rad, "seed {seed}");
        }
    }
}

#[test]
fn isomorphism_test_agrees_with_brute_force() {
    for seed in 0..SEEDS {
        let mods = family(seed);
        for m in &mods {
            for n in &mods {
                let fast = is_isomorphic(m, n).unwrap();
                assert_eq!(
                    fast.is_some(),
                    oracle::are_isomorphic(m, n).unwrap(),
                    "seed {seed}"
                );
                if let Some(map) = fast {
                    assert!(m.is_hom_to(n, &map));
                    assert!(autinv_core::mat::is_invertible(&map, m.field()));
                }
            }
        }
    }
}

#[test]
fn change_of_basis_is_detected_as_isomorphic() {
    for seed in 0..SEEDS {
        let (_, natural) = common::random_algebra(seed);
        let mut rng = common::rng(seed + 1000);
        let p = common::random_invertible(&mut rng, natural.field(), natural.dim());
        let other = natural.change_basis(&p).unwrap();
        let map = is_isomorphic(&natural, &other)
            .unwrap()
            .expect("isomorphic");
        assert!(natural.is_hom_to(&other, &map));
    }
}

#[test]
fn decomposition_recovers_direct_summands() {
    for seed in 0..SEEDS {
        let mods = family(seed);
        let m = &mods[0];
        let n = mods.last().unwrap();
        let sum = ModuleRep::direct_sum(&[m, n]).unwrap();
        let parts = decompose(&sum).unwrap();
        let expected = decompose(m).unwrap().len() + decompose(n).unwrap().len();
        assert_eq!(parts.len(), expected, "seed {seed}");
        assert_eq!(
            parts.iter().map(|p| p.module.dim()).sum::<usize>(),
            sum.dim()
        );
        let f = sum.field().clone();
        let mut span = Subspace::zero(sum.dim());
        for p in &parts {
            assert!(is_indecomposable(&p.module).unwrap());
            span = span.sum(p.sub.space(), &f).unwrap();
        }
        assert!(span.is_full());
    }
}
