use super::{radical, semisimple_quotient, wedderburn_blocks, Algebra, Elem};
use crate::error::{Error, Result};
use crate::field::Scalar;

/// Lift an idempotent of `A/J` to `A`.
///
/// Iterates `x <- x^p` until idempotent. Writing `x = s + n` with `s`
/// semisimple and `n` nilpotent (both polynomials in `x`), `x^{p^k} = s^{p^k}`
/// once `p^k` exceeds the nilpotency index, and `s` is idempotent because
/// `s^2 - s` is both semisimple and nilpotent. Plain squaring only works in
/// characteristic 2: over `F_3`, `(1 + n)^{2^k}` never reaches `1`.
pub fn lift_idempotent(a: &Algebra, x: &[Scalar]) -> Result<Elem> {
    let f = a.field();
    let j = radical(a);
    let defect = a.sub(&a.mul(x, x), x);
    if !j.space().contains(&defect, f) {
        return Err(Error::NotIdempotentModRadical);
    }
    let p = f.p() as u64;
    let mut e = x.to_vec();
    let mut steps = 0;
    while !a.is_idempotent(&e) {
        e = a.pow(&e, p);
        steps += 1;
        if steps > a.dim() + 1 {
            return Err(Error::Invariant(
                "idempotent lifting did not stabilize".into(),
            ));
        }
    }
    if !j.space().contains(&a.sub(&e, x), f) {
        return Err(Error::Invariant(
            "lifted idempotent does not reduce to its input".into(),
        ));
    }
    Ok(e)
}

/// Number of blocks of `A/J` isomorphic to `F_2`, which is the number of ring
/// surjections `A -> F_2`.
pub fn count_f2_quotients(a: &Algebra) -> usize {
    let quotient = semisimple_quotient(a);
    wedderburn_blocks(&quotient.algebra)
        .expect("the semisimple quotient has zero radical")
        .iter()
        .filter(|b| b.is_f2())
        .count()
}
