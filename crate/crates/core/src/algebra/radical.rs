//! Jacobson radical by the trace method of Cohen, Ivanyos and Wales.
//!
//! Over `F_p` with `n = dim A`, set `I_{-1} = A` and for `0 <= i <= log_p n`
//!
//! ```text
//! I_i = { a in I_{i-1} : g_i(a b) = 0 for all b in A },
//! g_i(x) = (Tr(X^{p^i}) mod p^{i+1}) / p^i,
//! ```
//!
//! where `X` is the integer lift of the regular representation matrix of
//! `x`. The last `I_i` is `J(A)`. Algebras over `F_q`, `q = p^k`, are first
//! viewed as `F_p`-algebras.

use super::{Algebra, Elem, Ideal};
use crate::field::Scalar;
use crate::mat::{self, Mat};
use crate::subspace::Subspace;

/// `J(A)`, computed once per algebra and cached.
pub fn radical(a: &Algebra) -> Ideal {
    Ideal::new_unchecked(a.radical.get_or_init(|| trace_radical(a)).clone())
}

/// `J, J^2, ..., J^m = 0`; the last entry is always the zero subspace.
pub fn radical_power_chain(a: &Algebra) -> Vec<Subspace> {
    let f = a.field();
    let j = radical(a).space().clone();
    let j_basis = j.basis().to_rows();
    let mut chain = vec![j.clone()];
    let mut current = j;
    while !current.is_zero() {
        let rows = current.basis().to_rows();
        let products: Vec<Elem> = rows
            .iter()
            .flat_map(|x| j_basis.iter().map(move |y| a.mul(x, y)))
            .collect();
        let next = Subspace::from_vectors(a.dim(), &products, f);
        assert!(
            next.dim() < current.dim(),
            "radical powers must strictly decrease"
        );
        chain.push(next.clone());
        current = next;
    }
    chain
}

fn trace_radical(a: &Algebra) -> Subspace {
    let n0 = a.dim();
    if n0 == 0 {
        return Subspace::zero(0);
    }
    let ap = a.restrict_scalars();
    let fp = ap.field().clone();
    let p = fp.p() as u64;
    let n = ap.dim();
    let regs: Vec<Mat> = (0..n)
        .map(|t| ap.right_mul_matrix(&ap.basis_element(t)))
        .collect();

    let mut levels = 0u32;
    while p.pow(levels + 1) <= n as u64 {
        levels += 1;
    }

    let mut current: Vec<Elem> = Mat::identity(n).to_rows();
    for i in 0..=levels {
        if current.is_empty() {
            break;
        }
        let exp = p.pow(i);
        let modulus = exp * p;
        let mut g = Mat::zeros(current.len(), n);
        for (s, x) in current.iter().enumerate() {
            for t in 0..n {
                let xb = ap.mul(x, &ap.basis_element(t));
                g.set(s, t, trace_functional(&regs, &xb, exp, modulus, p));
            }
        }
        let kernel = mat::left_nullspace(&g, &fp);
        let span = Mat::from_rows(current.len(), n, &current).expect("rows have length n");
        let next = kernel.basis().mul(&span, &fp);
        current = Subspace::from_rows(&next, &fp).basis().to_rows();
    }

    let back: Vec<Elem> = current.iter().map(|v| a.from_prime_coords(v)).collect();
    Subspace::from_vectors(n0, &back, a.field())
}

/// `g_i(x)` for the element `x` with `exp = p^i`, `modulus = p^{i+1}`.
fn trace_functional(regs: &[Mat], x: &[Scalar], exp: u64, modulus: u64, p: u64) -> Scalar {
    let n = regs[0].rows();
    let mut m = vec![0u64; n * n];
    for (reg, &c) in regs.iter().zip(x) {
        if c == 0 {
            continue;
        }
        for (acc, &r) in m.iter_mut().zip(reg.data()) {
            *acc = (*acc + c as u64 * r as u64) % p;
        }
    }
    let power = int_mat_pow(&m, n, exp, modulus);
    let trace = (0..n).fold(0u64, |acc, d| (acc + power[d * n + d]) % modulus);
    debug_assert_eq!(
        trace % exp,
        0,
        "trace of p^i-th power must be divisible by p^i"
    );
    ((trace / exp) % p) as Scalar
}

fn int_mat_mul(a: &[u64], b: &[u64], n: usize, modulus: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = (out[i * n + j] + aik * b[k * n + j]) % modulus;
            }
        }
    }
    out
}

fn int_mat_pow(m: &[u64], n: usize, mut e: u64, modulus: u64) -> Vec<u64> {
    let mut acc = vec![0u64; n * n];
    for d in 0..n {
        acc[d * n + d] = 1 % modulus;
    }
    let mut base: Vec<u64> = m.iter().map(|&x| x % modulus).collect();
    while e > 0 {
        if e & 1 == 1 {
            acc = int_mat_mul(&acc, &base, n, modulus);
        }
        e >>= 1;
        if e > 0 {
            base = int_mat_mul(&base, &base, n, modulus);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    #[test]
    fn semisimple_algebras_have_zero_radical() {
        for (p, k) in [(2, 1), (3, 1), (2, 2)] {
            let f = FiniteField::new(p, k).unwrap();
            for n in 1..=2 {
                let a = Algebra::matrix_algebra(f.clone(), n);
                assert!(radical(&a).is_zero(), "M_{n}(F_{})", f.q());
            }
        }
    }

    #[test]
    fn upper_triangular_radical_is_strict_part() {
        let a = Algebra::upper_triangular(FiniteField::gf2(), 2);
        let j = radical(&a);
        assert_eq!(j.basis_elements(), vec![vec![0, 1, 0]]);
    }

    #[test]
    fn truncated_polynomials() {
        for p in [2, 3, 5] {
            let f = FiniteField::prime(p).unwrap();
            for deg in 1..=4usize {
                let mut modulus = vec![0; deg + 1];
                modulus[deg] = 1;
                let a = Algebra::polynomial_quotient(f.clone(), &modulus).unwrap();
                let chain = radical_power_chain(&a);
                assert_eq!(radical(&a).dim(), deg - 1);
                // (x)^i has codimension i
                assert_eq!(chain.len(), deg);
            }
        }
    }

    #[test]
    fn radical_over_extension_field() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let a = Algebra::polynomial_quotient(f4.clone(), &[0, 0, 1]).unwrap();
        assert_eq!(radical(&a).basis_elements(), vec![vec![0, 1]]);
        let u = Algebra::upper_triangular(f4, 3);
        assert_eq!(radical(&u).dim(), 3);
    }

    #[test]
    fn f3_polynomial_with_repeated_factor() {
        // x^3 - x^2 = x^2 (x - 1), so the radical is generated by x (x - 1)
        let f3 = FiniteField::prime(3).unwrap();
        let a = Algebra::polynomial_quotient(f3.clone(), &[0, 0, 2, 1]).unwrap();
        let j = radical(&a);
        assert_eq!(j.dim(), 1);
        let x = vec![0, 1, 0];
        let xm1 = vec![2, 1, 0];
        let gen = a.mul(&x, &xm1);
        assert!(j.space().contains(&gen, &f3));
    }
}
