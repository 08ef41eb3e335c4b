//! Arithmetic in small finite fields `F_q`, `q = p^k <= 2^16`.
//!
//! Elements are encoded as integers `0..q`. For `k > 1` the integer
//! `sum c_j p^j` stands for the residue `sum c_j a^j` where `a` is a root of
//! the defining polynomial (the lexicographically first monic irreducible of
//! degree `k`). Multiplication goes through exp/log tables built from a
//! primitive element.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Scalar type. Always a canonical representative in `0..q`.
pub type Scalar = u32;

pub const MAX_FIELD_SIZE: u32 = 1 << 16;

/// Which elimination kernel the matrix routines use for this field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kernel {
    /// Scalar-by-scalar Gauss-Jordan through the field tables.
    Generic,
    /// 64-bit word rows with XOR elimination. Only meaningful over `F_2`;
    /// other fields silently use [`Kernel::Generic`].
    BitPacked,
}

struct Tables {
    p: u32,
    k: u32,
    q: u32,
    /// Coefficients (low to high, monic, length k+1) of the defining polynomial.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

#[derive(Clone)]
pub struct FiniteField {
    tables: Arc<Tables>,
    kernel: Kernel,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.tables.p == other.tables.p
            && self.tables.k == other.tables.k
            && self.tables.modulus == other.tables.modulus
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q())
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q())
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over F_p, coefficients low to high.
fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    // m is monic
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let idx = shift + i;
            r[idx] = ((r[idx] as u64 + p as u64 - (lead as u64 * c as u64) % p as u64) % p as u64)
                as u32;
        }
        poly_trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    poly_rem(&prod, m, p)
}

fn poly_powmod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn digits(mut x: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Monic polynomials of exactly degree `deg`, in lexicographic order of the
/// lower coefficients read as a base-p integer.
fn monic_of_degree(deg: u32, p: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = p.pow(deg);
    (0..count).map(move |idx| {
        let mut c = digits(idx, p, deg);
        c.push(1);
        c
    })
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = (f.len() - 1) as u32;
    for d in 1..=deg / 2 {
        for g in monic_of_degree(d, p) {
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// The field with `p^k` elements.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be >= 1".into()));
        }
        let q = (p as u64)
            .checked_pow(k)
            .filter(|&q| q <= MAX_FIELD_SIZE as u64);
        let Some(q) = q else {
            return Err(Error::InvalidField(format!(
                "{p}^{k} exceeds the field size cap {MAX_FIELD_SIZE}"
            )));
        };
        let q = q as u32;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            monic_of_degree(k, p)
                .find(|f| f[0] != 0 && is_irreducible(f, p))
                .expect("irreducible polynomials exist in every degree")
        };
        let order = q - 1;
        let factors = prime_factors(order.max(1));
        let elem_poly = |x: u32| {
            let mut c = digits(x, p, k);
            poly_trim(&mut c);
            c
        };
        let generator = (1..q)
            .find(|&g| {
                if q == 2 {
                    return true;
                }
                let gp = elem_poly(g);
                factors
                    .iter()
                    .all(|&r| poly_powmod(&gp, (order / r) as u64, &modulus, p) != vec![1])
            })
            .expect("multiplicative group of a finite field is cyclic");
        let gpoly = elem_poly(generator);
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![1u32];
        for (i, slot) in exp.iter_mut().enumerate() {
            let mut padded = cur.clone();
            padded.resize(k as usize, 0);
            let v = undigits(&padded, p);
            *slot = v;
            log[v as usize] = i as u32;
            cur = poly_mulmod(&cur, &gpoly, &modulus, p);
        }
        Ok(Self {
            tables: Arc::new(Tables {
                p,
                k,
                q,
                modulus,
                exp,
                log,
            }),
            kernel: Kernel::BitPacked,
        })
    }

    pub fn gf2() -> Self {
        Self::new(2, 1).expect("F_2 exists")
    }

    /// Prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    /// Same field, different elimination kernel.
    pub fn with_kernel(&self, kernel: Kernel) -> Self {
        Self {
            tables: Arc::clone(&self.tables),
            kernel,
        }
    }

    pub fn kernel(&self) -> Kernel {
        self.kernel
    }

    /// True when the bit-packed kernel is in effect.
    pub fn uses_packed(&self) -> bool {
        self.kernel == Kernel::BitPacked && self.tables.q == 2
    }

    pub fn p(&self) -> u32 {
        self.tables.p
    }

    pub fn k(&self) -> u32 {
        self.tables.k
    }

    pub fn q(&self) -> u32 {
        self.tables.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.tables.modulus
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let t = &*self.tables;
        if t.p == 2 {
            a ^ b
        } else if t.k == 1 {
            let s = a + b;
            if s >= t.p {
                s - t.p
            } else {
                s
            }
        } else {
            let (mut a, mut b) = (a, b);
            let mut out = 0;
            let mut scale = 1;
            for _ in 0..t.k {
                out += ((a % t.p + b % t.p) % t.p) * scale;
                a /= t.p;
                b /= t.p;
                scale *= t.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        let t = &*self.tables;
        if t.p == 2 || a == 0 {
            a
        } else if t.k == 1 {
            t.p - a
        } else {
            let mut a = a;
            let mut out = 0;
            let mut scale = 1;
            for _ in 0..t.k {
                out += ((t.p - a % t.p) % t.p) * scale;
                a /= t.p;
                scale *= t.p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.tables;
        if t.k == 1 {
            return ((a as u64 * b as u64) % t.p as u64) as u32;
        }
        let order = t.q - 1;
        let s = t.log[a as usize] + t.log[b as usize];
        t.exp[(if s >= order { s - order } else { s }) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Scalar) -> Option<Scalar> {
        if a == 0 {
            return None;
        }
        let t = &*self.tables;
        let order = t.q - 1;
        let l = t.log[a as usize];
        Some(t.exp[((order - l) % order) as usize])
    }

    pub fn pow(&self, a: Scalar, e: u64) -> Scalar {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &*self.tables;
        let order = (t.q - 1) as u64;
        let l = t.log[a as usize] as u64;
        t.exp[((l * (e % order)) % order) as usize]
    }

    /// The class of the integer `n` in the prime subfield.
    pub fn from_int(&self, n: i64) -> Scalar {
        n.rem_euclid(self.tables.p as i64) as u32
    }

    /// All field elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        0..self.tables.q
    }

    /// Coordinates of `a` over the prime field in the power basis `1, a, ..., a^{k-1}`.
    pub fn to_prime_coords(&self, a: Scalar) -> Vec<u32> {
        digits(a, self.tables.p, self.tables.k)
    }

    pub fn from_prime_coords(&self, c: &[u32]) -> Scalar {
        undigits(c, self.tables.p)
    }

    /// The generator `a` of the power basis (the class of `x`).
    pub fn power_basis_generator(&self) -> Scalar {
        if self.tables.k == 1 {
            1
        } else {
            self.tables.p
        }
    }

    pub fn is_valid(&self, a: Scalar) -> bool {
        a < self.tables.q
    }
}
