//! One noisy BPSK/AWGN frame through all four decoders.
//!
//! cargo run --release --example decode_frame -- [ebn0_db] [frame_index]

use grand::channel::{frame_rng, transmit_frame, ChannelConfig};
use grand::codes::{crc_code, CrcPolynomial};
use grand::decoders::{DecoderSpec, LgrandParams};
use grand::patterns::sort_reliability;

fn main() -> grand::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ebn0: f64 = args
        .first()
        .map_or(4.0, |s| s.parse().expect("Eb/N0 in dB"));
    let index: u64 = args.get(1).map_or(7, |s| s.parse().expect("frame index"));

    let code = crc_code(128, &CrcPolynomial::parse_hex("0x1021", None)?)?;
    let cfg = ChannelConfig::for_code(&code, ebn0, 1)?;
    let frame = transmit_frame(&code, &cfg, &mut frame_rng(cfg.seed, index))?;
    let ord = sort_reliability(&frame.llr)?;
    let flipped = ord.hard().xor(&frame.codeword);
    println!(
        "{} at {ebn0} dB, frame {index}: {} hard-decision errors at {:?}",
        code.name(),
        flipped.weight(),
        flipped.ones().collect::<Vec<_>>()
    );

    let decoders = [
        DecoderSpec::Grandab { ab: 2 },
        DecoderSpec::Orbgrand {
            lw_max: 96,
            hw_cap: 8,
        },
        DecoderSpec::Sgrand { budget: None },
        DecoderSpec::Lgrand(LgrandParams::new(96, 8, 15)),
    ];
    for d in decoders {
        let r = d.decode(&ord, &code)?;
        let verdict = if r.abandoned {
            "abandoned"
        } else if r.message == frame.message {
            "correct"
        } else {
            "wrong codeword"
        };
        println!(
            "  {:<36} {verdict:<14} queries {:<7} list {:<2} flips {:?} soft weight {:.3}",
            d.to_string(),
            r.queries,
            r.list_size,
            r.pattern.support,
            r.soft_weight
        );
    }
    Ok(())
}
