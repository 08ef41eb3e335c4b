//! Bit-packed `F_2` kernels. Rows are stored as little-endian `u64` words,
//! column `c` living in bit `c % 64` of word `c / 64`.

use crate::field::Scalar;
use crate::mat::{Mat, Rref};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMat {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        Self {
            rows,
            cols,
            words,
            bits: vec![0; rows * words],
        }
    }

    pub fn pack(m: &Mat) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for r in 0..m.rows() {
            for (c, &x) in m.row(r).iter().enumerate() {
                if x & 1 == 1 {
                    out.bits[r * out.words + c / 64] |= 1 << (c % 64);
                }
            }
        }
        out
    }

    pub fn unpack(&self) -> Mat {
        let mut data: Vec<Scalar> = Vec::with_capacity(self.rows * self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                data.push(self.get(r, c) as Scalar);
            }
        }
        Mat::from_vec(self.rows, self.cols, data)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.bits[r * self.words + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.words {
            self.bits.swap(a * self.words + w, b * self.words + w);
        }
    }

    /// `row[dst] ^= row[src]`
    #[inline]
    fn xor_row(&mut self, dst: usize, src: usize) {
        let w = self.words;
        let (d, s) = (dst * w, src * w);
        for i in 0..w {
            let v = self.bits[s + i];
            self.bits[d + i] ^= v;
        }
    }

    pub fn rref(&self) -> (BitMat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(piv) = (r..a.rows).find(|&i| a.get(i, c)) else {
                continue;
            };
            a.swap_rows(piv, r);
            for i in 0..a.rows {
                if i != r && a.get(i, c) {
                    a.xor_row(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn mul(&self, other: &BitMat) -> BitMat {
        assert_eq!(self.cols, other.rows);
        let mut out = BitMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let src = other.row_words(k);
                    let base = i * out.words;
                    for (w, &v) in src.iter().enumerate() {
                        out.bits[base + w] ^= v;
                    }
                }
            }
        }
        out
    }
}

pub(crate) fn rref(m: &Mat) -> Rref {
    let (red, pivots) = BitMat::pack(m).rref();
    Rref {
        rank: pivots.len(),
        r: red.unpack(),
        pivots,
    }
}

pub(crate) fn mul(a: &Mat, b: &Mat) -> Mat {
    BitMat::pack(a).mul(&BitMat::pack(b)).unpack()
}
