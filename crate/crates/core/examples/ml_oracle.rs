//! SGRAND against exhaustive maximum-likelihood decoding on Hamming(15,11).

use grand::channel::{frame_rng, transmit_frame, ChannelConfig};
use grand::codes::hamming_code;
use grand::decoders::decode_sgrand;
use grand::oracle::{correlation, ml_decode_bruteforce};
use grand::patterns::sort_reliability;

fn main() -> grand::Result<()> {
    let code = hamming_code(4)?;
    let cfg = ChannelConfig::for_code(&code, 3.0, 11)?;
    let (mut same, mut ties, mut ml_errors) = (0, 0, 0);
    let frames = 10_000;
    for i in 0..frames {
        let f = transmit_frame(&code, &cfg, &mut frame_rng(cfg.seed, i))?;
        let r = decode_sgrand(&sort_reliability(&f.llr)?, &code, None)?;
        let ml = ml_decode_bruteforce(&f.llr, &code)?;
        if r.codeword == ml {
            same += 1;
        } else if (correlation(&f.llr, &r.codeword) - correlation(&f.llr, &ml)).abs() < 1e-9 {
            ties += 1;
        } else {
            println!("frame {i}: SGRAND and ML disagree");
        }
        ml_errors += u32::from(ml != f.codeword);
    }
    println!("{} at 3 dB, {frames} frames", code.name());
    println!("  identical decisions: {same}, equal-metric ties: {ties}");
    println!(
        "  ML frame error rate: {:.3e}",
        f64::from(ml_errors) / frames as f64
    );
    Ok(())
}
