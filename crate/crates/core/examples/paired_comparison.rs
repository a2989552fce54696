//! List-GRAND against ORBGRAND on shared noise, with a McNemar test.
//!
//! cargo run --release --example paired_comparison -- [ebn0_db] [min_errors] [max_frames]

use grand::channel::{run_paired, ChannelConfig, StopRule};
use grand::codes::{crc_code, CrcPolynomial};
use grand::decoders::{DecoderSpec, LgrandParams};

fn main() -> grand::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ebn0: f64 = args
        .first()
        .map_or(5.0, |s| s.parse().expect("Eb/N0 in dB"));
    let min_errors: u64 = args.get(1).map_or(50, |s| s.parse().expect("error count"));
    let max_frames: u64 = args
        .get(2)
        .map_or(200_000, |s| s.parse().expect("frame count"));

    let code = crc_code(128, &CrcPolynomial::parse_hex("0x1021", None)?)?;
    let arms = [
        DecoderSpec::Orbgrand {
            lw_max: 96,
            hw_cap: 8,
        },
        DecoderSpec::Lgrand(LgrandParams::new(96, 8, 15)),
    ];
    let cfg = ChannelConfig::for_code(&code, ebn0, 2024)?;
    let stats = run_paired(&code, &arms, &cfg, &StopRule::new(min_errors, max_frames)?)?;

    println!("{} at {ebn0} dB", code.name());
    for (spec, s) in arms.iter().zip(&stats.arms) {
        println!(
            "  {spec:<32} FER {:.3e} ({} / {} frames), {:.2} queries/frame, list {:.2}",
            s.fer(),
            s.frame_errors,
            s.frames,
            s.avg_queries(),
            s.avg_list_size()
        );
    }
    println!(
        "  frames only ORBGRAND got wrong: {}, only List-GRAND got wrong: {}",
        stats.discordant[1][0], stats.discordant[0][1]
    );
    println!(
        "  McNemar z = {:.2} (one-sided 95% threshold 1.645)",
        stats.mcnemar_z(1, 0)
    );
    println!(
        "  query ratio List-GRAND / ORBGRAND = {:.2}",
        stats.arms[1].avg_queries() / stats.arms[0].avg_queries()
    );
    Ok(())
}
