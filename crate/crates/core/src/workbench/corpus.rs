//! The shipped example files and the builders that produce them.

use std::sync::Arc;

use super::format::{load_str, NamedSubmodule, Workbench};
use crate::algebra::{Algebra, Elem};
use crate::field::{FiniteField, Scalar};
use crate::mat::Mat;
use crate::modrep::ModuleRep;
use crate::subspace::Subspace;

/// Names of the shipped files, in a fixed order.
pub const NAMES: &[&str] = &[
    "ex_3_1",
    "ex_3_2",
    "ex_5_1",
    "f2_dual_numbers",
    "f2_x3",
    "f3_dual_numbers",
    "f2_xy_square_zero",
    "f2_times_f2",
];

/// The commutative files.
pub const COMMUTATIVE: &[&str] = &[
    "f2_dual_numbers",
    "f2_x3",
    "f3_dual_numbers",
    "f2_xy_square_zero",
    "f2_times_f2",
];

pub fn shipped_json(name: &str) -> Option<&'static str> {
    Some(match name {
        "ex_3_1" => include_str!("../../../../corpus/ex_3_1.json"),
        "ex_3_2" => include_str!("../../../../corpus/ex_3_2.json"),
        "ex_5_1" => include_str!("../../../../corpus/ex_5_1.json"),
        "f2_dual_numbers" => include_str!("../../../../corpus/f2_dual_numbers.json"),
        "f2_x3" => include_str!("../../../../corpus/f2_x3.json"),
        "f3_dual_numbers" => include_str!("../../../../corpus/f3_dual_numbers.json"),
        "f2_xy_square_zero" => include_str!("../../../../corpus/f2_xy_square_zero.json"),
        "f2_times_f2" => include_str!("../../../../corpus/f2_times_f2.json"),
        _ => return None,
    })
}

/// Load a shipped file.
pub fn load(name: &str) -> Option<Workbench> {
    shipped_json(name).map(|text| load_str(text).expect("shipped corpus files validate"))
}

/// Build a shipped file from scratch.
pub fn build(name: &str) -> Option<Workbench> {
    Some(match name {
        "ex_3_1" => ex_3_1(),
        "ex_3_2" => ex_3_2(),
        "ex_5_1" => ex_5_1(),
        "f2_dual_numbers" => truncated_polynomial("f2_dual_numbers", 2, 2),
        "f2_x3" => truncated_polynomial("f2_x3", 2, 3),
        "f3_dual_numbers" => truncated_polynomial("f3_dual_numbers", 3, 2),
        "f2_xy_square_zero" => xy_square_zero(),
        "f2_times_f2" => f2_times_f2(),
        _ => return None,
    })
}

fn from_product(
    field: FiniteField,
    labels: &[&str],
    one: Elem,
    mul: impl Fn(&[Scalar], &[Scalar]) -> Elem,
) -> Algebra {
    let d = labels.len();
    let table: Vec<Vec<Vec<Scalar>>> = (0..d)
        .map(|i| (0..d).map(|j| mul(&unit(d, i), &unit(d, j))).collect())
        .collect();
    Algebra::new(
        field,
        labels.iter().map(|s| s.to_string()).collect(),
        &table,
        one,
    )
    .expect("valid algebra")
}

fn regular_submodule(alg: &Arc<Algebra>, gens: &[Elem]) -> ModuleRep {
    let r = ModuleRep::regular(alg.clone());
    r.restrict(&r.generated(gens))
}

fn unit(d: usize, i: usize) -> Elem {
    let mut e = vec![0; d];
    e[i] = 1;
    e
}

fn named(name: &str, module: &str, space: Subspace) -> NamedSubmodule {
    NamedSubmodule {
        name: name.into(),
        module: module.into(),
        space,
    }
}

/// The ring spanned by `e11, e12, e13, e22, e33` in `M_3(F_2)`.
pub fn ex_3_1_algebra() -> Algebra {
    let positions = [(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)];
    let mats: Vec<Mat> = positions
        .iter()
        .map(|&(r, c)| {
            let mut m = Mat::zeros(3, 3);
            m.set(r, c, 1);
            m
        })
        .collect();
    let labels = ["e11", "e12", "e13", "e22", "e33"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Algebra::from_matrix_basis(FiniteField::gf2(), labels, &mats).expect("matrix units span a ring")
}

pub fn ex_3_1() -> Workbench {
    let alg = Arc::new(ex_3_1_algebra());
    let f = alg.field().clone();
    let r = ModuleRep::regular(alg.clone());
    // e11 R = span(e11, e12, e13), in that order
    let m = regular_submodule(&alg, &[unit(5, 0)]);
    Workbench {
        name: "ex_3_1".into(),
        description:
            "R = F_2-span of e11, e12, e13, e22, e33 in M_3(F_2); M = e11 R; S1 = e12 R, S2 = e13 R"
                .into(),
        algebra: alg,
        modules: vec![("M".into(), m), ("R".into(), r)],
        submodules: vec![
            named("S1", "M", Subspace::from_vectors(3, &[vec![0, 1, 0]], &f)),
            named("S2", "M", Subspace::from_vectors(3, &[vec![0, 0, 1]], &f)),
        ],
    }
}

/// Lower-triangular `[[a, 0], [b, c]]` with `a, b` in `F_2[x]/(x)` and `c` in
/// `F_2[x]/(x^2)`; basis `e11, e21, e22, x22`.
pub fn ex_3_2_algebra() -> Algebra {
    from_product(
        FiniteField::gf2(),
        &["e11", "e21", "e22", "x22"],
        vec![1, 0, 1, 0],
        |u, v| {
            let (a, b, c0, c1) = (u[0], u[1], u[2], u[3]);
            let (a2, b2, c02, c12) = (v[0], v[1], v[2], v[3]);
            vec![
                a & a2,
                (b & a2) ^ (c0 & b2),
                c0 & c02,
                (c0 & c12) ^ (c1 & c02),
            ]
        },
    )
}

pub fn ex_3_2() -> Workbench {
    let alg = Arc::new(ex_3_2_algebra());
    let f = alg.field().clone();
    let r = ModuleRep::regular(alg.clone());
    // e22 R = span(e21, e22, x22), in that order
    let m = regular_submodule(&alg, &[unit(4, 2)]);
    Workbench {
        name: "ex_3_2".into(),
        description: "R = [[F_2[x]/(x), 0], [F_2[x]/(x), F_2[x]/(x^2)]]; M = e22 R; S1 = e21 F_2, S2 = x e22 F_2".into(),
        algebra: alg,
        modules: vec![("M".into(), m), ("R".into(), r)],
        submodules: vec![
            named("S1", "M", Subspace::from_vectors(3, &[vec![1, 0, 0]], &f)),
            named("S2", "M", Subspace::from_vectors(3, &[vec![0, 0, 1]], &f)),
        ],
    }
}

/// The dual of `e11 R` from `ex_3_1`, a right module over the opposite ring.
pub fn ex_5_1() -> Workbench {
    let base = ex_3_1();
    let op = Arc::new(base.algebra.opposite());
    let m = base.module("M").expect("M").dual_over(op.clone());
    Workbench {
        name: "ex_5_1".into(),
        description:
            "Hom(e11 R, F_2) for the ex_3_1 ring, as a right module over the opposite ring".into(),
        algebra: op.clone(),
        modules: vec![("DM".into(), m), ("Rop".into(), ModuleRep::regular(op))],
        submodules: Vec::new(),
    }
}

fn truncated_polynomial(name: &str, p: u32, degree: usize) -> Workbench {
    let field = FiniteField::prime(p).expect("prime");
    let mut modulus = vec![0; degree + 1];
    modulus[degree] = 1;
    let alg = Arc::new(Algebra::polynomial_quotient(field, &modulus).expect("monic"));
    let r = ModuleRep::regular(alg.clone());
    let mut modules = vec![("R".into(), r.clone())];
    for k in 1..degree {
        let (q, _) = r.quotient(&r.generated(&[unit(degree, k)]));
        modules.push((format!("R_mod_x{k}"), q));
    }
    Workbench {
        name: name.into(),
        description: format!("F_{p}[x]/(x^{degree})"),
        algebra: alg,
        modules,
        submodules: Vec::new(),
    }
}

fn xy_square_zero() -> Workbench {
    let alg = Arc::new(from_product(
        FiniteField::gf2(),
        &["1", "x", "y"],
        vec![1, 0, 0],
        |u, v| {
            vec![
                u[0] & v[0],
                (u[0] & v[1]) ^ (u[1] & v[0]),
                (u[0] & v[2]) ^ (u[2] & v[0]),
            ]
        },
    ));
    let r = ModuleRep::regular(alg.clone());
    let (k, _) = r.quotient(&r.generated(&[vec![0, 1, 0], vec![0, 0, 1]]));
    let d = r.dual().rebind(alg.clone()).expect("commutative");
    Workbench {
        name: "f2_xy_square_zero".into(),
        description: "F_2[x, y]/(x, y)^2; DR is the dual of the regular module".into(),
        algebra: alg,
        modules: vec![("R".into(), r), ("k".into(), k), ("DR".into(), d)],
        submodules: Vec::new(),
    }
}

fn f2_times_f2() -> Workbench {
    let alg = Arc::new(from_product(
        FiniteField::gf2(),
        &["e1", "e2"],
        vec![1, 1],
        |u, v| vec![u[0] & v[0], u[1] & v[1]],
    ));
    let r = ModuleRep::regular(alg.clone());
    Workbench {
        name: "f2_times_f2".into(),
        description: "F_2 x F_2".into(),
        algebra: alg,
        modules: vec![("R".into(), r)],
        submodules: Vec::new(),
    }
}

/// Semisimple algebras assembled from `M_n(F_q)`, `q` in {2, 3, 4}, `n` in
/// {1, 2}: every block on its own, plus mixed products over a common field.
pub fn semisimple_algebras() -> Vec<(String, Algebra)> {
    let f2 = FiniteField::gf2();
    let f3 = FiniteField::prime(3).expect("prime");
    let f4 = FiniteField::new(2, 2).expect("prime power");
    let mut out = Vec::new();
    for f in [&f2, &f3, &f4] {
        for n in 1..=2 {
            out.push((
                format!("M{n}(F{})", f.q()),
                Algebra::matrix_algebra(f.clone(), n),
            ));
        }
    }
    let m = |f: &FiniteField, n| Algebra::matrix_algebra(f.clone(), n);
    let prod = |parts: &[&Algebra]| Algebra::direct_product(parts).expect("common field");
    let f4_over_f2 = m(&f4, 1).restrict_scalars();
    out.push(("F2 x F2".into(), prod(&[&m(&f2, 1), &m(&f2, 1)])));
    out.push(("F2 x M2(F2)".into(), prod(&[&m(&f2, 1), &m(&f2, 2)])));
    out.push((
        "F2 x F2 x M2(F2)".into(),
        prod(&[&m(&f2, 1), &m(&f2, 1), &m(&f2, 2)]),
    ));
    out.push(("F2 x F4".into(), prod(&[&m(&f2, 1), &f4_over_f2])));
    out.push((
        "F2 x M2(F2) x F4".into(),
        prod(&[&m(&f2, 1), &m(&f2, 2), &f4_over_f2]),
    ));
    out.push(("F3 x M2(F3)".into(), prod(&[&m(&f3, 1), &m(&f3, 2)])));
    out.push(("F4 x M2(F4)".into(), prod(&[&m(&f4, 1), &m(&f4, 2)])));
    out
}
