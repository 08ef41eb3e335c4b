mod common;

use std::sync::Arc;

use autinv_core::envelopes::{
    baer_test, dual_exchange_check, indecomposable_injectives, injective_envelope,
    projective_cover, verify_envelope, AlgebraContext,
};
use autinv_core::modrep::submodules;
use autinv_core::workbench::corpus;
use autinv_core::{oracle, ModuleRep, Scalar};

const SEEDS: u64 = 25;

/// Every shipped module and every natural module of a random algebra, with
/// its context.
fn cases() -> Vec<(Arc<AlgebraContext>, ModuleRep)> {
    let mut out = Vec::new();
    for name in corpus::NAMES {
        let wb = corpus::load(name).unwrap();
        let ctx = Arc::new(AlgebraContext::new(wb.algebra.clone()).unwrap());
        for (_, m) in &wb.modules {
            out.push((ctx.clone(), m.clone()));
        }
    }
    for seed in 0..SEEDS {
        let (alg, natural) = common::random_algebra(seed);
        let ctx = Arc::new(AlgebraContext::new(alg).unwrap());
        out.push((ctx, natural));
    }
    out
}

fn vectors(dim: usize, q: Scalar) -> impl Iterator<Item = Vec<Scalar>> {
    (0..(q as u64).pow(dim as u32)).map(move |mut k| {
        (0..dim)
            .map(|_| {
                let d = (k % q as u64) as Scalar;
                k /= q as u64;
                d
            })
            .collect()
    })
}

fn small(m: &ModuleRep) -> bool {
    (m.field().q() as u128).pow(m.dim() as u32) <= 1 << 6
}

#[test]
fn envelopes_verify_and_are_essential_by_brute_force() {
    for (ctx, m) in cases() {
        let env = injective_envelope(&ctx, &m).unwrap();
        verify_envelope(&ctx, &env).unwrap();
        if !small(&env.outer) {
            continue;
        }
        let f = m.field();
        let image = env.image();
        for s in oracle::invariant_subspaces_brute(env.outer.dim(), env.outer.action(), f).unwrap()
        {
            if !s.is_zero() {
                assert!(!s.intersect(&image, f).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn cover_kernels_are_superfluous_by_brute_force() {
    for (ctx, m) in cases() {
        let cover = projective_cover(&ctx, &m).unwrap();
        assert!(cover.outer.is_hom_to(&m, &cover.projection));
        let f = m.field();
        assert_eq!(autinv_core::mat::rank(&cover.projection, f), m.dim());
        assert_eq!(cover.kernel.dim() + m.dim(), cover.outer.dim());
        if !small(&cover.outer) {
            continue;
        }
        let k = cover.kernel.space();
        for l in
            oracle::invariant_subspaces_brute(cover.outer.dim(), cover.outer.action(), f).unwrap()
        {
            if k.sum(&l, f).unwrap().is_full() {
                assert!(l.is_full());
            }
        }
    }
}

#[test]
fn envelope_of_dual_is_dual_of_cover() {
    for (ctx, m) in cases() {
        let op = ctx.opposite().unwrap();
        let ex = dual_exchange_check(&ctx, &op, &m).unwrap();
        assert!(ex.holds);
        assert_eq!(ex.envelope_dim, ex.cover_dim);
    }
}

#[test]
fn baer_test_matches_envelope_size() {
    for (ctx, m) in cases() {
        let cert = baer_test(&ctx, &m).unwrap();
        let env = injective_envelope(&ctx, &m).unwrap();
        assert_eq!(cert.injective, env.outer.dim() == m.dim());
        if let Some((ideal, g)) = cert.witness {
            // no m in M with g(x) = m x on the ideal
            let f = m.field();
            let extends = vectors(m.dim(), f.q()).any(|v| {
                ideal
                    .basis()
                    .to_rows()
                    .iter()
                    .enumerate()
                    .all(|(i, x)| m.act(&v, x) == g.row(i))
            });
            assert!(!extends);
        }
    }
}

#[test]
fn indecomposable_injectives_pass_baer_and_are_uniform() {
    for name in corpus::NAMES {
        let wb = corpus::load(name).unwrap();
        let ctx = AlgebraContext::new(wb.algebra.clone()).unwrap();
        for e in indecomposable_injectives(&ctx) {
            assert!(baer_test(&ctx, &e).unwrap().injective, "{name}");
            assert!(socle_is_simple(&e), "{name}");
        }
    }
}

/// Only the zero module and itself inside the socle.
fn socle_is_simple(e: &ModuleRep) -> bool {
    let soc = autinv_core::modrep::socle(e);
    submodules(&e.restrict(&soc)).unwrap().len() == 2
}

#[test]
fn regular_module_of_a_non_selfinjective_algebra_fails_baer() {
    let alg = Arc::new(corpus::ex_3_1_algebra());
    let ctx = AlgebraContext::new(alg.clone()).unwrap();
    let cert = baer_test(&ctx, &ModuleRep::regular(alg)).unwrap();
    assert!(!cert.injective);
    assert!(cert.witness.is_some());
}
