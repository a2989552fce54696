//! Constructors for the code families used in the experiments: CRC codes from
//! generator polynomials, narrow-sense BCH codes, CRC-aided polar codes, and
//! codes loaded from matrix files.

mod bch;
mod crc;
mod io;
mod polar;
mod poly;
mod spec;

pub use bch::{bch_code, bch_generator, primitive_polynomial, GaloisField};
pub use crc::{crc_code, cyclic_systematic_code, long_division_remainder, CrcPolynomial};
pub use io::{load_code, parse_matrices, save_code, write_matrix};
pub use polar::{
    nr_info_indices, nr_reliability_sequence, polar_ca_code, polar_encode, polar_transform,
    PolarSpec, NR_CRC11,
};
pub use poly::Gf2Poly;
pub use spec::CodeSpec;

use crate::code::LinearCode;
use crate::error::Result;

/// Hamming `(2^m − 1, 2^m − 1 − m)` code, i.e. the single-error-correcting BCH code.
pub fn hamming_code(m: u32) -> Result<LinearCode> {
    let mut code = bch_code(m, 1)?;
    code.rename(format!("Hamming({},{})", code.n(), code.k()));
    Ok(code)
}
