//! Dense GF(2) vectors and matrices packed into `u64` words.
//!
//! Bit `i` of a vector lives in word `i / 64` at bit position `i % 64`.
//! Matrices are stored row-major with every row padded to a whole number of
//! words, so row operations are plain word-wise XORs.

use std::fmt;

use crate::error::{Error, Result};

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// A packed vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector from 0/1 bytes. Any nonzero byte counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub(crate) fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut v = Self { len, words };
        v.clear_padding();
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }

    /// Lexicographic comparison on `(b_0, b_1, ...)` with 0 < 1.
    pub fn lex_cmp(&self, other: &BitVector) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    fn clear_padding(&mut self) {
        let rem = self.len & 63;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector[")?;
        for b in self.iter() {
            write!(f, "{}", u8::from(b))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            write!(f, "{}", u8::from(b))?;
        }
        Ok(())
    }
}

/// A dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 bytes. All rows must have equal length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            for (j, &b) in r.iter().enumerate() {
                if b > 1 {
                    return Err(Error::InvalidInput(format!(
                        "entry ({i},{j}) is {b}, expected 0 or 1"
                    )));
                }
                m.set(i, j, b == 1);
            }
        }
        Ok(m)
    }

    pub fn from_row_vectors(cols: usize, rows: &[BitVector]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            m.row_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.data[r * self.stride + (c >> 6)] >> (c & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.stride + (c >> 6)];
        let mask = 1u64 << (c & 63);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BitVector {
        BitVector::from_words(self.cols, self.row_words(r).to_vec())
    }

    pub fn column(&self, c: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&lo[src * s..src * s + s], &mut hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&hi[..s], &mut lo[dst * s..dst * s + s])
        };
        for (d, x) in b.iter_mut().zip(a) {
            *d ^= *x;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row(r).ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == BitMatrix::identity(self.rows)
    }

    /// `v · self` for a row vector `v` of length `rows`.
    pub fn left_mul(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.rows {
            return Err(Error::Shape(format!(
                "vector of length {} times {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut acc = vec![0u64; self.stride];
        for r in v.ones() {
            for (a, w) in acc.iter_mut().zip(self.row_words(r)) {
                *a ^= *w;
            }
        }
        Ok(BitVector::from_words(self.cols, acc))
    }

    /// `self · vᵀ` for a vector `v` of length `cols`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            let parity = self
                .row_words(r)
                .iter()
                .zip(v.words())
                .fold(0u32, |p, (a, b)| p ^ (a & b).count_ones())
                & 1;
            if parity == 1 {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        Reduced::new(self).pivots.len()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of a matrix together with the row transform that
/// produced it (`transform · original = reduced`, restricted to the first
/// `pivots.len()` rows being nonzero).
struct Reduced {
    reduced: BitMatrix,
    transform: BitMatrix,
    pivots: Vec<usize>,
}

impl Reduced {
    fn new(m: &BitMatrix) -> Self {
        let mut reduced = m.clone();
        let mut transform = BitMatrix::identity(m.rows);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| reduced.get(r, col)) else {
                continue;
            };
            reduced.swap_rows(p, row);
            transform.swap_rows(p, row);
            for r in 0..m.rows {
                if r != row && reduced.get(r, col) {
                    reduced.xor_row_into(row, r);
                    transform.xor_row_into(row, r);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Self {
            reduced,
            transform,
            pivots,
        }
    }
}

/// Matrix product over GF(2).
pub fn gf2_matmul(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
    if a.cols != b.rows {
        return Err(Error::Shape(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = BitMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for t in a.row(i).ones() {
            let src = b.row_words(t);
            for (d, s) in out.row_mut(i).iter_mut().zip(src) {
                *d ^= *s;
            }
        }
    }
    Ok(out)
}

/// An `n × k` matrix `R` with `G · R = I_k`, for a full-row-rank `k × n` generator.
pub fn right_inverse(g: &BitMatrix) -> Result<BitMatrix> {
    let red = Reduced::new(g);
    if red.pivots.len() != g.rows {
        return Err(Error::Singular {
            rank: red.pivots.len(),
            expected: g.rows,
        });
    }
    // T·G = RREF and RREF·S = I where S selects the pivot columns, so G·(S·T) = I.
    let mut out = BitMatrix::zeros(g.cols, g.rows);
    for (i, &p) in red.pivots.iter().enumerate() {
        out.row_mut(p).copy_from_slice(red.transform.row_words(i));
    }
    Ok(out)
}

/// `H · vᵀ`.
pub fn syndrome(h: &BitMatrix, v: &BitVector) -> Result<BitVector> {
    h.mul_vec(v)
}

/// A parity-check matrix of rank `n − k` whose null space is the row space of `g`.
///
/// One check row per non-pivot column of the reduced form of `g`; columns stay in
/// their original order.
pub fn parity_check_from_generator(g: &BitMatrix) -> Result<BitMatrix> {
    let red = Reduced::new(g);
    let k = red.pivots.len();
    if k != g.rows {
        return Err(Error::Singular {
            rank: k,
            expected: g.rows,
        });
    }
    let mut is_pivot = vec![false; g.cols];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..g.cols).filter(|&c| !is_pivot[c]).collect();
    let mut h = BitMatrix::zeros(free.len(), g.cols);
    for (r, &f) in free.iter().enumerate() {
        h.set(r, f, true);
        for (i, &p) in red.pivots.iter().enumerate() {
            if red.reduced.get(i, f) {
                h.set(r, p, true);
            }
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> BitMatrix {
        BitMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn identity_times_matrix() {
        let a = m(&[&[1, 0, 1, 1], &[0, 1, 1, 0], &[1, 1, 1, 1]]);
        assert_eq!(gf2_matmul(&BitMatrix::identity(3), &a).unwrap(), a);
    }

    #[test]
    fn small_product_by_hand() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let b = m(&[&[1, 0], &[1, 1]]);
        assert_eq!(gf2_matmul(&a, &b).unwrap(), m(&[&[0, 1], &[1, 1]]));
    }

    #[test]
    fn matmul_shape_error() {
        let a = BitMatrix::zeros(2, 3);
        let b = BitMatrix::zeros(2, 3);
        assert!(matches!(gf2_matmul(&a, &b), Err(Error::Shape(_))));
    }

    #[test]
    fn right_inverse_of_systematic_generator() {
        let g = m(&[&[1, 0, 0, 1, 1], &[0, 1, 0, 0, 1], &[0, 0, 1, 1, 0]]);
        let r = right_inverse(&g).unwrap();
        let expected = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(r, expected);
    }

    #[test]
    fn right_inverse_non_systematic() {
        let g = m(&[
            &[1, 1, 0, 1, 0, 0, 1],
            &[0, 1, 1, 0, 1, 0, 1],
            &[1, 1, 1, 0, 0, 1, 0],
        ]);
        let r = right_inverse(&g).unwrap();
        assert!(gf2_matmul(&g, &r).unwrap().is_identity());
    }

    #[test]
    fn repeated_row_is_singular() {
        let g = m(&[&[1, 0, 1, 1], &[1, 0, 1, 1]]);
        assert!(matches!(
            right_inverse(&g),
            Err(Error::Singular {
                rank: 1,
                expected: 2
            })
        ));
        assert!(matches!(
            parity_check_from_generator(&g),
            Err(Error::Singular { .. })
        ));
    }

    #[test]
    fn standard_form_duality() {
        // G = [I | P]  =>  H = [Pᵀ | I]
        let g = m(&[&[1, 0, 0, 1, 1], &[0, 1, 0, 0, 1], &[0, 0, 1, 1, 0]]);
        let h = parity_check_from_generator(&g).unwrap();
        assert_eq!(h, m(&[&[1, 0, 1, 1, 0], &[1, 1, 0, 0, 1]]));
    }

    #[test]
    fn full_rate_has_empty_parity_check() {
        let h = parity_check_from_generator(&BitMatrix::identity(5)).unwrap();
        assert_eq!((h.rows(), h.cols()), (0, 5));
        let s = syndrome(&h, &BitVector::from_bits(&[1, 0, 1, 1, 0])).unwrap();
        assert!(s.is_empty() && s.is_zero());
    }

    #[test]
    fn hamming_7_4_parity_columns_are_all_nonzero_triples() {
        let g = m(&[
            &[1, 0, 0, 0, 1, 1, 0],
            &[0, 1, 0, 0, 1, 0, 1],
            &[0, 0, 1, 0, 0, 1, 1],
            &[0, 0, 0, 1, 1, 1, 1],
        ]);
        let h = parity_check_from_generator(&g).unwrap();
        assert_eq!(h.rows(), 3);
        let mut cols: Vec<u8> = (0..7)
            .map(|c| (0..3).fold(0u8, |acc, r| acc << 1 | u8::from(h.get(r, c))))
            .collect();
        cols.sort_unstable();
        assert_eq!(cols, vec![1, 2, 3, 4, 5, 6, 7]);

        // Brute-force null space: exactly the 16 codewords.
        let null: Vec<u8> = (0u8..128)
            .filter(|v| {
                let bits: Vec<u8> = (0..7).map(|i| (v >> i) & 1).collect();
                syndrome(&h, &BitVector::from_bits(&bits))
                    .unwrap()
                    .is_zero()
            })
            .collect();
        assert_eq!(null.len(), 16);
    }

    #[test]
    fn syndrome_of_single_flip_is_column() {
        let g = m(&[&[1, 0, 0, 1, 1], &[0, 1, 0, 0, 1], &[0, 0, 1, 1, 0]]);
        let h = parity_check_from_generator(&g).unwrap();
        let c = g.left_mul(&BitVector::from_bits(&[1, 1, 0])).unwrap();
        assert!(syndrome(&h, &c).unwrap().is_zero());
        for i in 0..5 {
            let mut v = c.clone();
            v.flip(i);
            assert_eq!(syndrome(&h, &v).unwrap(), h.column(i));
        }
    }

    #[test]
    fn syndrome_length_mismatch() {
        let h = BitMatrix::zeros(2, 5);
        assert!(matches!(
            syndrome(&h, &BitVector::zeros(4)),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn wide_vectors_cross_word_boundaries() {
        let mut v = BitVector::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.weight(), 3);
        let w = BitVector::from_words(70, vec![u64::MAX, u64::MAX]);
        assert_eq!(w.weight(), 70);
    }
}
