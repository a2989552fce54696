use std::fmt;

use super::poly::Gf2Poly;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// A CRC generator polynomial with nonzero leading and constant terms.
#[derive(Clone, PartialEq, Eq)]
pub struct CrcPolynomial {
    poly: Gf2Poly,
    degree: usize,
}

impl CrcPolynomial {
    /// From a full polynomial value, leading term included (`0xE21` is
    /// `x^11 + x^10 + x^9 + x^5 + 1`).
    pub fn from_full(value: u64) -> Result<Self> {
        Self::from_poly(Gf2Poly::from_u64(value))
    }

    /// From the usual CRC notation where the `x^degree` term is implicit
    /// (`0x1021` with degree 16 is `x^16 + x^12 + x^5 + 1`).
    pub fn from_implicit(value: u64, degree: usize) -> Result<Self> {
        if degree == 0 || degree > 63 {
            return Err(Error::InvalidParameter(format!(
                "CRC degree {degree} outside 1..=63"
            )));
        }
        if value >> degree != 0 {
            return Err(Error::InvalidParameter(format!(
                "{value:#x} does not fit below the implicit x^{degree} term"
            )));
        }
        Self::from_poly(Gf2Poly::from_u64(value | (1u64 << degree)))
    }

    /// Parses a hex literal (`0x` prefix optional) in implicit-leading-term
    /// notation. Without an explicit degree it is four bits per hex digit, so
    /// `0x1021` has degree 16 and `0xB2B117` degree 24.
    pub fn parse_hex(s: &str, degree: Option<usize>) -> Result<Self> {
        let digits = s
            .trim()
            .strip_prefix("0x")
            .or_else(|| s.trim().strip_prefix("0X"))
            .unwrap_or(s.trim());
        if digits.is_empty() || digits.len() > 15 {
            return Err(Error::InvalidParameter(format!("bad CRC polynomial `{s}`")));
        }
        let value = u64::from_str_radix(digits, 16)
            .map_err(|_| Error::InvalidParameter(format!("bad CRC polynomial `{s}`")))?;
        Self::from_implicit(value, degree.unwrap_or(4 * digits.len()))
    }

    pub fn from_poly(poly: Gf2Poly) -> Result<Self> {
        let degree = match poly.degree() {
            Some(d) if d >= 1 => d,
            _ => {
                return Err(Error::InvalidParameter(
                    "CRC polynomial must have degree at least 1".into(),
                ))
            }
        };
        if !poly.coeff(0) {
            return Err(Error::InvalidParameter(format!(
                "CRC polynomial {poly:?} has no constant term"
            )));
        }
        Ok(Self { poly, degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn poly(&self) -> &Gf2Poly {
        &self.poly
    }

    /// CRC bits of a message: coefficients of `m(x)·x^r mod g(x)`, highest
    /// degree first, where message bit 0 is the highest-degree coefficient.
    pub fn remainder_bits(&self, message: &[bool]) -> Vec<bool> {
        let r = self.degree;
        let mut reg = vec![false; r];
        for &bit in message {
            let feedback = bit ^ reg[0];
            reg.rotate_left(1);
            reg[r - 1] = false;
            if feedback {
                for (t, slot) in reg.iter_mut().enumerate() {
                    *slot ^= self.poly.coeff(r - 1 - t);
                }
            }
        }
        reg
    }

    /// Hex in implicit-leading-term notation.
    pub fn to_hex(&self) -> String {
        let low = (0..self.degree)
            .filter(|&i| self.poly.coeff(i))
            .fold(0u64, |acc, i| acc | (1 << i));
        format!("{:#0width$X}", low, width = 2 + self.degree.div_ceil(4)).replacen("0X", "0x", 1)
    }
}

impl fmt::Debug for CrcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CrcPolynomial({})", self.to_hex())
    }
}

/// Systematic CRC code: `[message | m(x)·x^r mod g(x)]`.
pub fn crc_code(n: usize, poly: &CrcPolynomial) -> Result<LinearCode> {
    if poly.degree() >= n {
        return Err(Error::InvalidParameter(format!(
            "CRC degree {} must be below the code length {n}",
            poly.degree()
        )));
    }
    let name = format!("CRC({n},{}) {}", n - poly.degree(), poly.to_hex());
    cyclic_systematic_code(name, n, poly.poly())
}

/// Systematic code with generator polynomial `g`: message bit `i` is the
/// coefficient of `x^(n-1-i)` and parity column `k + t` holds the coefficient of
/// `x^(r-1-t)` of the remainder. `H = [Pᵀ | I_r]`, so the syndrome of a word is
/// its polynomial remainder modulo `g`.
pub fn cyclic_systematic_code(name: String, n: usize, g: &Gf2Poly) -> Result<LinearCode> {
    let r = g
        .degree()
        .ok_or_else(|| Error::InvalidParameter("zero generator polynomial".into()))?;
    if r >= n {
        return Err(Error::InvalidParameter(format!(
            "generator degree {r} must be below the code length {n}"
        )));
    }
    let k = n - r;

    // remainders[j] = x^j mod g as r coefficient bits (index = power)
    let mut remainders: Vec<Vec<bool>> = Vec::with_capacity(n);
    let mut cur = vec![false; r.max(1)];
    if r > 0 {
        cur[0] = true;
    }
    for _ in 0..n {
        remainders.push(cur.clone());
        if r == 0 {
            continue;
        }
        let carry = cur[r - 1];
        cur.rotate_right(1);
        cur[0] = false;
        if carry {
            for (i, c) in cur.iter_mut().enumerate() {
                *c ^= g.coeff(i);
            }
        }
    }

    let mut gen = BitMatrix::zeros(k, n);
    let mut h = BitMatrix::zeros(r, n);
    for i in 0..k {
        gen.set(i, i, true);
        let rem = &remainders[n - 1 - i];
        for t in 0..r {
            if rem[r - 1 - t] {
                gen.set(i, k + t, true);
                h.set(t, i, true);
            }
        }
    }
    for t in 0..r {
        h.set(t, k + t, true);
    }
    let mut ginv = BitMatrix::zeros(n, k);
    for i in 0..k {
        ginv.set(i, i, true);
    }
    LinearCode::from_parts(name, gen, h, ginv)
}

/// Independent long-division remainder of a received word, highest degree
/// first; bit `j` of the word is the coefficient of `x^(n-1-j)`.
pub fn long_division_remainder(word: &BitVector, g: &Gf2Poly) -> Vec<bool> {
    let n = word.len();
    let mut p = Gf2Poly::zero();
    for j in word.ones() {
        p.set(n - 1 - j, true);
    }
    let rem = p.rem(g);
    let r = g.degree().unwrap_or(0);
    (0..r).map(|t| rem.coeff(r - 1 - t)).collect()
}
