use std::sync::Arc;

use autinv_core::envelopes::{injective_envelope, projective_cover, AlgebraContext};
use autinv_core::invariance::{
    is_automorphism_invariant, is_quasi_injective, is_quasi_projective, stabilizer,
    struct_decompose, theorem_suite, StabilizerRing,
};
use autinv_core::modrep::{is_isomorphic, socle};
use autinv_core::workbench::{all_modules, corpus};
use autinv_core::{oracle, Algebra, FiniteField, Mat, ModuleRep};

const FILES: &[&str] = &[
    "ex_3_1",
    "ex_3_2",
    "f2_xy_square_zero",
    "f3_dual_numbers",
    "f2_x3",
];

fn enumerate(name: &str, max_dim: usize) -> (AlgebraContext, Vec<ModuleRep>) {
    let wb = corpus::load(name).unwrap();
    let ctx = AlgebraContext::new(wb.algebra.clone()).unwrap();
    let mods = all_modules(&ctx, max_dim)
        .unwrap()
        .into_iter()
        .map(|c| c.module)
        .collect();
    (ctx, mods)
}

fn small(m: &ModuleRep) -> bool {
    (m.field().q() as u128).pow(m.dim() as u32) <= 1 << 8
}

#[test]
fn checkers_agree_with_extension_oracles() {
    for name in FILES {
        let (ctx, mods) = enumerate(name, 3);
        for m in mods.iter().filter(|m| small(m)) {
            let env = injective_envelope(&ctx, m).unwrap();
            assert_eq!(
                is_quasi_injective(&env).unwrap().holds,
                oracle::is_quasi_injective(m).unwrap(),
                "{name}"
            );
            assert_eq!(
                is_automorphism_invariant(&env).unwrap().holds,
                oracle::is_pseudo_injective(m).unwrap(),
                "{name}"
            );
        }
    }
}

#[test]
fn stabilizer_is_a_unital_subring_containing_the_radical_when_invariant() {
    for name in FILES {
        let (ctx, mods) = enumerate(name, 3);
        for m in &mods {
            let env = injective_envelope(&ctx, m).unwrap();
            let t = stabilizer(&env).unwrap();
            t.check_subring().unwrap();
            let ai = is_automorphism_invariant(&env).unwrap();
            if ai.holds {
                assert!(t.contains_radical(), "{name}");
            }
            let qi = is_quasi_injective(&env).unwrap();
            assert!(!qi.holds || ai.holds, "{name}");
            for (v, unit) in [(&qi, false), (&ai, true)] {
                if let Some(g) = &v.witness {
                    t.verify_witness(g, unit).unwrap();
                }
            }
        }
    }
}

#[test]
fn fully_invariant_subspaces_have_full_stabilizer() {
    for name in corpus::NAMES {
        let wb = corpus::load(name).unwrap();
        let ctx = AlgebraContext::new(wb.algebra.clone()).unwrap();
        for (_, m) in &wb.modules {
            let e = injective_envelope(&ctx, m).unwrap().outer;
            let whole = StabilizerRing::new(&e, autinv_core::Subspace::full(e.dim())).unwrap();
            assert!(whole.is_everything());
            let soc = StabilizerRing::new(&e, socle(&e).space().clone()).unwrap();
            assert!(soc.is_everything(), "{name}");
        }
    }
}

#[test]
fn injective_and_projective_modules_pass_their_checks() {
    for name in corpus::NAMES {
        let wb = corpus::load(name).unwrap();
        let ctx = AlgebraContext::new(wb.algebra.clone()).unwrap();
        for b in ctx.blocks() {
            let env = injective_envelope(&ctx, &b.injective).unwrap();
            assert!(is_quasi_injective(&env).unwrap().holds);
            let cover = projective_cover(&ctx, &b.projective).unwrap();
            assert!(is_quasi_projective(&cover).unwrap().holds);
        }
    }
}

#[test]
fn enumerated_modules_satisfy_the_implication_suite() {
    for name in FILES {
        let (ctx, mods) = enumerate(name, 3);
        let named: Vec<(String, ModuleRep)> = mods
            .into_iter()
            .enumerate()
            .map(|(i, m)| (format!("m{i}"), m))
            .collect();
        let report = theorem_suite(&ctx, &named).unwrap();
        let bad: Vec<_> = report.violations().collect();
        assert!(bad.is_empty(), "{name}: {bad:?}");
    }
}

/// Pull a module back along the projection of a product onto one factor.
fn inflate(alg: &Arc<Algebra>, m: &ModuleRep, offset: usize) -> ModuleRep {
    let zero = Mat::zeros(m.dim(), m.dim());
    let action = (0..alg.dim())
        .map(|i| match i.checked_sub(offset) {
            Some(j) if j < m.action().len() => m.action()[j].clone(),
            _ => zero.clone(),
        })
        .collect();
    ModuleRep::new(alg.clone(), action).unwrap()
}

#[test]
fn split_puts_the_larger_field_part_into_l() {
    let wb = corpus::ex_3_1();
    let f4 = Algebra::polynomial_quotient(FiniteField::gf2(), &[1, 1, 1]).unwrap();
    let alg = Arc::new(Algebra::direct_product(&[&wb.algebra, &f4]).unwrap());
    let ctx = AlgebraContext::new(alg.clone()).unwrap();
    let m = inflate(&alg, wb.module("M").unwrap(), 0);
    let q = inflate(&alg, &ModuleRep::regular(Arc::new(f4)), wb.algebra.dim());
    let sum = ModuleRep::direct_sum(&[&m, &q]).unwrap();

    let env = injective_envelope(&ctx, &sum).unwrap();
    assert!(is_automorphism_invariant(&env).unwrap().holds);
    assert!(!is_quasi_injective(&env).unwrap().holds);
    let dec = struct_decompose(&ctx, &env).unwrap();
    assert!(dec.certified());
    assert!(is_isomorphic(&dec.n, &m).unwrap().is_some());
    assert!(is_isomorphic(&dec.l, &q).unwrap().is_some());
}
