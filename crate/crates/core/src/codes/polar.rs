use super::crc::CrcPolynomial;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

const NR_SEQUENCE: &str = include_str!("../../assets/nr_polar_sequence.txt");

/// `x^11 + x^10 + x^9 + x^5 + 1`, the 5G NR uplink CRC-11, in full notation.
pub const NR_CRC11: u64 = 0xE21;

/// The 5G NR polar reliability sequence for N = 1024, least reliable first.
pub fn nr_reliability_sequence() -> Vec<usize> {
    NR_SEQUENCE
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace)
        .map(|t| t.parse().expect("malformed polar sequence asset"))
        .collect()
}

/// The `count` most reliable positions of a length-`n` polar code under the
/// 5G NR sequence, ascending.
pub fn nr_info_indices(n: usize, count: usize) -> Result<Vec<usize>> {
    if !n.is_power_of_two() || n > 1024 {
        return Err(Error::InvalidParameter(format!(
            "polar length {n} is not a power of two up to 1024"
        )));
    }
    if count > n {
        return Err(Error::InvalidParameter(format!(
            "{count} information bits exceed N = {n}"
        )));
    }
    let seq: Vec<usize> = nr_reliability_sequence()
        .into_iter()
        .filter(|&i| i < n)
        .collect();
    let mut info = seq[n - count..].to_vec();
    info.sort_unstable();
    Ok(info)
}

/// Parameters of a CRC-aided polar code.
#[derive(Clone, Debug)]
pub struct PolarSpec {
    pub n: usize,
    /// Message bits before CRC precoding.
    pub k: usize,
    /// Positions carrying the `k + crc_degree` precoded bits.
    pub info_indices: Vec<usize>,
    pub crc: Option<CrcPolynomial>,
}

impl PolarSpec {
    /// Information set from the shipped 5G NR reliability sequence.
    pub fn nr(n: usize, k: usize, crc: Option<CrcPolynomial>) -> Result<Self> {
        let r = crc.as_ref().map_or(0, CrcPolynomial::degree);
        Ok(Self {
            n,
            k,
            info_indices: nr_info_indices(n, k + r)?,
            crc,
        })
    }

    fn crc_degree(&self) -> usize {
        self.crc.as_ref().map_or(0, CrcPolynomial::degree)
    }

    fn validate(&self) -> Result<()> {
        if !self.n.is_power_of_two() || self.n < 2 {
            return Err(Error::InvalidParameter(format!(
                "polar length {} is not a power of two",
                self.n
            )));
        }
        if self.k == 0 {
            return Err(Error::InvalidParameter("polar code with k = 0".into()));
        }
        if self.info_indices.len() != self.k + self.crc_degree() {
            return Err(Error::InvalidParameter(format!(
                "{} information positions, expected k + crc = {}",
                self.info_indices.len(),
                self.k + self.crc_degree()
            )));
        }
        let mut seen = vec![false; self.n];
        for &i in &self.info_indices {
            if i >= self.n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidParameter(format!(
                    "information index {i} out of range or repeated"
                )));
            }
        }
        Ok(())
    }
}

/// In-place `x ← x · F^{⊗log2 N}` with kernel `F = [[1,0],[1,1]]`.
pub fn polar_transform(x: &mut [bool]) {
    let n = x.len();
    debug_assert!(n.is_power_of_two());
    let mut half = 1;
    while half < n {
        for block in (0..n).step_by(2 * half) {
            for i in block..block + half {
                x[i] ^= x[i + half];
            }
        }
        half *= 2;
    }
}

/// Polar codeword of a message: CRC-precode, place at the information
/// positions (ascending), then apply the Kronecker transform.
pub fn polar_encode(spec: &PolarSpec, message: &[bool]) -> Vec<bool> {
    let mut info = message.to_vec();
    if let Some(crc) = &spec.crc {
        info.extend(crc.remainder_bits(message));
    }
    let mut positions: Vec<usize> = spec.info_indices.clone();
    positions.sort_unstable();
    let mut u = vec![false; spec.n];
    for (&p, &b) in positions.iter().zip(&info) {
        u[p] = b;
    }
    polar_transform(&mut u);
    u
}

/// Effective `(N, k)` linear code of a CRC-aided polar construction.
pub fn polar_ca_code(spec: &PolarSpec) -> Result<LinearCode> {
    spec.validate()?;
    let rows: Vec<BitVector> = (0..spec.k)
        .map(|i| {
            let mut m = vec![false; spec.k];
            m[i] = true;
            BitVector::from_bools(&polar_encode(spec, &m))
        })
        .collect();
    let g = BitMatrix::from_row_vectors(spec.n, &rows)?;
    let name = match &spec.crc {
        Some(c) => format!("CA-Polar({},{}+{})", spec.n, spec.k, c.degree()),
        None => format!("Polar({},{})", spec.n, spec.k),
    };
    LinearCode::from_generator(name, g)
}
