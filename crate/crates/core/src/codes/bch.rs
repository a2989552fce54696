use super::crc::cyclic_systematic_code;
use super::poly::Gf2Poly;
use crate::code::LinearCode;
use crate::error::{Error, Result};

const PRIMITIVE_TABLE: &str = include_str!("../../assets/primitive_polynomials.txt");

/// Primitive polynomial (leading term included) for GF(2^m) from the shipped table.
pub fn primitive_polynomial(m: u32) -> Option<u32> {
    PRIMITIVE_TABLE
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .find_map(|l| {
            let mut it = l.split_whitespace();
            let deg: u32 = it.next()?.parse().ok()?;
            let hex = it.next()?.trim_start_matches("0x");
            (deg == m)
                .then(|| u32::from_str_radix(hex, 16).ok())
                .flatten()
        })
}

/// GF(2^m) with log/antilog tables over the powers of a primitive element α.
#[derive(Clone, Debug)]
pub struct GaloisField {
    m: u32,
    order: usize,
    exp: Vec<u16>,
    log: Vec<u16>,
}

impl GaloisField {
    pub fn new(m: u32) -> Result<Self> {
        let poly = primitive_polynomial(m).ok_or_else(|| {
            Error::InvalidParameter(format!("no primitive polynomial for m = {m}"))
        })?;
        Self::with_polynomial(m, poly)
    }

    pub fn with_polynomial(m: u32, poly: u32) -> Result<Self> {
        if !(2..=15).contains(&m) || poly >> m != 1 {
            return Err(Error::InvalidParameter(format!(
                "{poly:#x} is not a degree-{m} polynomial"
            )));
        }
        let order = (1usize << m) - 1;
        let mut exp = vec![0u16; 2 * order];
        let mut log = vec![0u16; order + 1];
        let mut x: u32 = 1;
        for (i, slot) in exp.iter_mut().take(order).enumerate() {
            if i > 0 && x == 1 {
                return Err(Error::InvalidParameter(format!(
                    "{poly:#x} is not primitive: α has order {i}"
                )));
            }
            *slot = x as u16;
            log[x as usize] = i as u16;
            x <<= 1;
            if x >> m & 1 == 1 {
                x ^= poly;
            }
        }
        if x != 1 {
            return Err(Error::InvalidParameter(format!(
                "{poly:#x} is not primitive"
            )));
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        Ok(Self { m, order, exp, log })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of nonzero elements, `2^m − 1`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// α^i.
    pub fn alpha_pow(&self, i: usize) -> u16 {
        self.exp[i % self.order]
    }

    pub fn log(&self, x: u16) -> Option<usize> {
        (x != 0).then(|| self.log[x as usize] as usize)
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
    }

    /// Evaluates a binary polynomial at a field element.
    pub fn eval(&self, p: &Gf2Poly, x: u16) -> u16 {
        let Some(d) = p.degree() else { return 0 };
        (0..=d)
            .rev()
            .fold(0u16, |acc, i| self.mul(acc, x) ^ u16::from(p.coeff(i)))
    }

    /// Cyclotomic coset of `i` modulo `2^m − 1`.
    pub fn cyclotomic_coset(&self, i: usize) -> Vec<usize> {
        let mut coset = vec![i % self.order];
        let mut j = (2 * i) % self.order;
        while j != coset[0] {
            coset.push(j);
            j = (2 * j) % self.order;
        }
        coset
    }

    /// Minimal polynomial of α^i over GF(2): ∏ (x − α^c) over the coset of `i`.
    pub fn minimal_polynomial(&self, i: usize) -> Gf2Poly {
        // coefficients in GF(2^m), index = power of x
        let mut acc: Vec<u16> = vec![1];
        for c in self.cyclotomic_coset(i) {
            let root = self.alpha_pow(c);
            let mut next = vec![0u16; acc.len() + 1];
            for (p, &a) in acc.iter().enumerate() {
                next[p + 1] ^= a;
                next[p] ^= self.mul(a, root);
            }
            acc = next;
        }
        let coeffs: Vec<bool> = acc
            .iter()
            .map(|&c| {
                debug_assert!(c <= 1, "minimal polynomial coefficient outside GF(2)");
                c == 1
            })
            .collect();
        Gf2Poly::from_coeffs(&coeffs)
    }
}

/// Generator polynomial of the narrow-sense primitive BCH code of length
/// `2^m − 1` with designed distance `2t + 1`: the lcm of the minimal polynomials
/// of α, α², …, α^{2t}.
pub fn bch_generator(field: &GaloisField, t: usize) -> Result<Gf2Poly> {
    let n = field.order();
    if t == 0 || 2 * t >= n {
        return Err(Error::InvalidParameter(format!(
            "t = {t} invalid for BCH length {n}"
        )));
    }
    let mut covered = vec![false; n];
    let mut g = Gf2Poly::one();
    for i in 1..=2 * t {
        if covered[i % n] {
            continue;
        }
        for c in field.cyclotomic_coset(i) {
            covered[c] = true;
        }
        g = g.mul(&field.minimal_polynomial(i));
    }
    Ok(g)
}

/// Narrow-sense primitive binary BCH code in systematic form.
pub fn bch_code(m: u32, t: usize) -> Result<LinearCode> {
    if !(2..=10).contains(&m) {
        return Err(Error::InvalidParameter(format!("m = {m} outside 2..=10")));
    }
    let field = GaloisField::new(m)?;
    let g = bch_generator(&field, t)?;
    let n = field.order();
    let deg = g.degree().unwrap_or(0);
    if deg >= n {
        return Err(Error::InvalidParameter(format!(
            "t = {t} too large: generator degree {deg} ≥ n = {n}"
        )));
    }
    cyclic_systematic_code(format!("BCH({n},{})", n - deg), n, &g)
}
