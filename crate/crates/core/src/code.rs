//! Binary linear block codes: generator, parity-check, and right-inverse matrices.

use crate::error::{Error, Result};
use crate::gf2::{gf2_matmul, parity_check_from_generator, right_inverse, BitMatrix, BitVector};

/// An `(n, k)` binary linear code.
///
/// Invariants checked on construction: `H·Gᵀ = 0`, `G·G⁻¹ = I_k`,
/// `rank(G) = k`, `rank(H) = n − k`.
#[derive(Clone, Debug)]
pub struct LinearCode {
    name: String,
    n: usize,
    k: usize,
    g: BitMatrix,
    h: BitMatrix,
    ginv: BitMatrix,
    checks: ParityColumns,
}

impl LinearCode {
    /// Derives `H` and `G⁻¹` from a full-row-rank generator.
    pub fn from_generator(name: impl Into<String>, g: BitMatrix) -> Result<Self> {
        let h = parity_check_from_generator(&g)?;
        Self::from_generator_and_check(name, g, h)
    }

    /// Uses the supplied `H`; `G⁻¹` is derived. Both invariants are checked.
    pub fn from_generator_and_check(
        name: impl Into<String>,
        g: BitMatrix,
        h: BitMatrix,
    ) -> Result<Self> {
        let ginv = right_inverse(&g)?;
        Self::from_parts(name, g, h, ginv)
    }

    pub fn from_parts(
        name: impl Into<String>,
        g: BitMatrix,
        h: BitMatrix,
        ginv: BitMatrix,
    ) -> Result<Self> {
        let n = g.cols();
        let k = g.rows();
        if n == 0 {
            return Err(Error::CorruptCode("code length is zero".into()));
        }
        if h.cols() != n || h.rows() != n - k {
            return Err(Error::CorruptCode(format!(
                "H is {}x{}, expected {}x{n}",
                h.rows(),
                h.cols(),
                n - k
            )));
        }
        if ginv.rows() != n || ginv.cols() != k {
            return Err(Error::CorruptCode(format!(
                "G⁻¹ is {}x{}, expected {n}x{k}",
                ginv.rows(),
                ginv.cols()
            )));
        }
        if !gf2_matmul(&h, &g.transpose())?.is_zero() {
            return Err(Error::CorruptCode("H·Gᵀ is not zero".into()));
        }
        if !gf2_matmul(&g, &ginv)?.is_identity() {
            return Err(Error::CorruptCode("G·G⁻¹ is not the identity".into()));
        }
        if h.rank() != n - k {
            return Err(Error::CorruptCode(format!(
                "rank(H) = {}, expected {}",
                h.rank(),
                n - k
            )));
        }
        let checks = ParityColumns::new(&h);
        Ok(Self {
            name: name.into(),
            n,
            k,
            g,
            h,
            ginv,
            checks,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.g
    }

    pub fn parity_check(&self) -> &BitMatrix {
        &self.h
    }

    pub fn right_inverse(&self) -> &BitMatrix {
        &self.ginv
    }

    pub(crate) fn parity_columns(&self) -> &ParityColumns {
        &self.checks
    }

    /// `u · G`.
    pub fn encode(&self, message: &BitVector) -> Result<BitVector> {
        self.g.left_mul(message)
    }

    pub fn is_codeword(&self, v: &BitVector) -> Result<bool> {
        Ok(self.h.mul_vec(v)?.is_zero())
    }

    /// `c · G⁻¹`, refusing vectors outside the code.
    pub fn recover_message(&self, c: &BitVector) -> Result<BitVector> {
        if !self.is_codeword(c)? {
            return Err(Error::NotCodeword);
        }
        self.ginv.left_mul(c)
    }
}

/// Columns of `H` packed as words so that the syndrome of `ŷ ⊕ e` is the
/// syndrome of `ŷ` XOR the columns of the flipped positions.
#[derive(Clone, Debug)]
pub(crate) struct ParityColumns {
    stride: usize,
    data: Vec<u64>,
}

impl ParityColumns {
    fn new(h: &BitMatrix) -> Self {
        let stride = h.rows().div_ceil(64).max(1);
        let mut data = vec![0u64; h.cols() * stride];
        for r in 0..h.rows() {
            for c in h.row(r).ones() {
                data[c * stride + (r >> 6)] |= 1u64 << (r & 63);
            }
        }
        Self { stride, data }
    }

    #[inline]
    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub(crate) fn column(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Syndrome words of `v`.
    pub(crate) fn syndrome_words(&self, v: &BitVector) -> Vec<u64> {
        let mut acc = vec![0u64; self.stride];
        for i in v.ones() {
            for (a, c) in acc.iter_mut().zip(self.column(i)) {
                *a ^= *c;
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming74() -> LinearCode {
        let g = BitMatrix::from_rows(&[
            [1u8, 0, 0, 0, 1, 1, 0],
            [0, 1, 0, 0, 1, 0, 1],
            [0, 0, 1, 0, 0, 1, 1],
            [0, 0, 0, 1, 1, 1, 1],
        ])
        .unwrap();
        LinearCode::from_generator("hamming(7,4)", g).unwrap()
    }

    #[test]
    fn encode_recover_roundtrip() {
        let code = hamming74();
        for m in 0u8..16 {
            let u = BitVector::from_bits(&[(m & 1), (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1]);
            let c = code.encode(&u).unwrap();
            assert!(code.is_codeword(&c).unwrap());
            assert_eq!(code.recover_message(&c).unwrap(), u);
        }
    }

    #[test]
    fn recover_rejects_non_codeword() {
        let code = hamming74();
        let mut c = code.encode(&BitVector::from_bits(&[1, 0, 1, 1])).unwrap();
        c.flip(2);
        assert!(matches!(code.recover_message(&c), Err(Error::NotCodeword)));
    }

    #[test]
    fn corrupt_parity_check_is_rejected() {
        let code = hamming74();
        let mut h = code.parity_check().clone();
        h.set(0, 0, !h.get(0, 0));
        let err = LinearCode::from_generator_and_check("bad", code.generator().clone(), h);
        assert!(matches!(err, Err(Error::CorruptCode(_))));
    }

    #[test]
    fn column_syndromes_match_matrix_product() {
        let code = hamming74();
        let v = BitVector::from_bits(&[1, 1, 0, 1, 0, 0, 1]);
        let s = code.parity_check().mul_vec(&v).unwrap();
        let words = code.parity_columns().syndrome_words(&v);
        assert_eq!(BitVector::from_words(s.len(), words), s);
    }
}
