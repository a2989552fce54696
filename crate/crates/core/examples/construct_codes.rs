//! Builds the experiment codes, checks their matrix invariants, and
//! round-trips one through the plain-text matrix format.

use grand::codes::{
    bch_code, crc_code, load_code, polar_ca_code, save_code, CrcPolynomial, PolarSpec, NR_CRC11,
};
use grand::gf2::gf2_matmul;
use grand::LinearCode;

fn report(code: &LinearCode) -> grand::Result<()> {
    let g = code.generator();
    let dual = gf2_matmul(code.parity_check(), &g.transpose())?.is_zero();
    let inverse = gf2_matmul(g, code.right_inverse())?.is_identity();
    println!(
        "{:<24} n={:<4} k={:<4} rate={:.3}  H·Gᵀ=0: {dual}  G·G⁻¹=I: {inverse}",
        code.name(),
        code.n(),
        code.k(),
        code.rate()
    );
    Ok(())
}

fn main() -> grand::Result<()> {
    let codes = [
        bch_code(7, 3)?,
        bch_code(7, 2)?,
        crc_code(128, &CrcPolynomial::parse_hex("0xB2B117", None)?)?,
        crc_code(128, &CrcPolynomial::parse_hex("0x1021", None)?)?,
        polar_ca_code(&PolarSpec::nr(
            128,
            105,
            Some(CrcPolynomial::from_full(NR_CRC11)?),
        )?)?,
    ];
    for code in &codes {
        report(code)?;
    }

    let path = std::env::temp_dir().join("grand-crc-128-112.txt");
    save_code(&path, &codes[3])?;
    let loaded = load_code(&path)?;
    println!(
        "round trip through {}: G equal {}, H equal {}",
        path.display(),
        loaded.generator() == codes[3].generator(),
        loaded.parity_check() == codes[3].parity_check()
    );
    std::fs::remove_file(&path)?;
    Ok(())
}
