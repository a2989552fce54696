use std::fmt;
use std::path::PathBuf;

use super::{
    bch_code, crc_code, hamming_code, load_code, polar_ca_code, CrcPolynomial, PolarSpec, NR_CRC11,
};
use crate::code::LinearCode;
use crate::error::Result;

/// A code family and its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeSpec {
    /// CRC polynomial in implicit-leading-term hex notation.
    Crc {
        n: usize,
        poly: String,
    },
    Bch {
        m: u32,
        t: usize,
    },
    Hamming {
        m: u32,
    },
    /// CA-polar code on the 5G NR information set; `crc` is a full
    /// polynomial value (leading term included), [`NR_CRC11`] by default.
    Polar {
        n: usize,
        k: usize,
        crc: Option<u64>,
    },
    File {
        path: PathBuf,
    },
}

impl CodeSpec {
    pub fn build(&self) -> Result<LinearCode> {
        match self {
            CodeSpec::Crc { n, poly } => crc_code(*n, &CrcPolynomial::parse_hex(poly, None)?),
            CodeSpec::Bch { m, t } => bch_code(*m, *t),
            CodeSpec::Hamming { m } => hamming_code(*m),
            CodeSpec::Polar { n, k, crc } => {
                let crc = CrcPolynomial::from_full(crc.unwrap_or(NR_CRC11))?;
                polar_ca_code(&PolarSpec::nr(*n, *k, Some(crc))?)
            }
            CodeSpec::File { path } => load_code(path),
        }
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeSpec::Crc { n, poly } => write!(f, "crc n={n} poly={poly}"),
            CodeSpec::Bch { m, t } => write!(f, "bch m={m} t={t}"),
            CodeSpec::Hamming { m } => write!(f, "hamming m={m}"),
            CodeSpec::Polar { n, k, crc } => {
                write!(f, "polar n={n} k={k} crc={:#X}", crc.unwrap_or(NR_CRC11))
            }
            CodeSpec::File { path } => write!(f, "file {}", path.display()),
        }
    }
}
