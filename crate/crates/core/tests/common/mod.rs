#![allow(dead_code)]

use std::sync::Arc;

use autinv_core::{Algebra, FiniteField, Mat, ModuleRep};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_mat(rng: &mut ChaCha8Rng, f: &FiniteField, rows: usize, cols: usize) -> Mat {
    Mat::from_vec(
        rows,
        cols,
        (0..rows * cols).map(|_| rng.gen_range(0..f.q())).collect(),
    )
}

/// A random unital matrix algebra with its natural module, small enough for
/// the brute-force oracles (`|A| <= 2^12`).
pub fn random_algebra(seed: u64) -> (Arc<Algebra>, ModuleRep) {
    let mut rng = rng(seed);
    loop {
        let f = if rng.gen_bool(0.7) {
            FiniteField::gf2()
        } else {
            FiniteField::prime(3).unwrap()
        };
        let n = rng.gen_range(2..=3);
        // sparse generators give more interesting (non-full) algebras
        let gens: Vec<Mat> = (0..rng.gen_range(1..=2))
            .map(|_| {
                let mut m = random_mat(&mut rng, &f, n, n);
                for r in 0..n {
                    for c in 0..n {
                        if rng.gen_bool(0.4) {
                            m.set(r, c, 0);
                        }
                    }
                }
                m
            })
            .collect();
        let basis = Algebra::generated_basis(&f, &gens).unwrap();
        let size = (f.q() as u128).pow(basis.len() as u32);
        if size > 1 << 12 {
            continue;
        }
        let labels = (0..basis.len()).map(|i| format!("g{i}")).collect();
        let alg = Arc::new(Algebra::from_matrix_basis(f, labels, &basis).unwrap());
        let natural = ModuleRep::new(alg.clone(), basis).unwrap();
        return (alg, natural);
    }
}

pub fn random_invertible(rng: &mut ChaCha8Rng, f: &FiniteField, n: usize) -> Mat {
    loop {
        let m = random_mat(rng, f, n, n);
        if autinv_core::mat::is_invertible(&m, f) {
            return m;
        }
    }
}
