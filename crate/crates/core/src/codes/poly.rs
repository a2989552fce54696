use std::fmt;

/// A polynomial over GF(2); bit `i` is the coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    pub fn from_u64(v: u64) -> Self {
        let mut p = Self { words: vec![v] };
        p.trim();
        p
    }

    /// `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut p = Self::zero();
        p.set(d, true);
        p
    }

    pub fn from_coeffs(coeffs: &[bool]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c {
                p.set(i, true);
            }
        }
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i >> 6)
            .is_some_and(|w| (w >> (i & 63)) & 1 == 1)
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if i >> 6 >= self.words.len() {
            if !value {
                return;
            }
            self.words.resize((i >> 6) + 1, 0);
        }
        let mask = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
            self.trim();
        }
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let len = self.words.len().max(other.words.len());
        let mut words = vec![0u64; len];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0);
        }
        let mut p = Self { words };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut out = Gf2Poly::zero();
        let Some(db) = other.degree() else {
            return out;
        };
        for i in 0..=db {
            if other.coeff(i) {
                out = out.add(&self.shl(i));
            }
        }
        out
    }

    pub fn shl(&self, s: usize) -> Gf2Poly {
        let Some(d) = self.degree() else {
            return Gf2Poly::zero();
        };
        let mut out = Gf2Poly {
            words: vec![0; (d + s) / 64 + 1],
        };
        for i in 0..=d {
            if self.coeff(i) {
                out.set(i + s, true);
            }
        }
        out.trim();
        out
    }

    /// Remainder of `self` divided by `divisor`. Panics on a zero divisor.
    pub fn rem(&self, divisor: &Gf2Poly) -> Gf2Poly {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            r = r.add(&divisor.shl(dr - dd));
        }
        r
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let terms: Vec<String> = (0..=d)
            .rev()
            .filter(|&i| self.coeff(i))
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
