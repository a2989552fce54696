//! A short FER / queries-per-frame sweep written as CSV to stdout.
//!
//! cargo run --release --example fer_sweep -- [min_errors]

use grand::channel::{run_sweep, write_csv, StopRule};
use grand::codes::bch_code;
use grand::decoders::DecoderSpec;

fn main() -> grand::Result<()> {
    let min_errors: u64 = std::env::args()
        .nth(1)
        .map_or(50, |s| s.parse().expect("error count"));
    let code = bch_code(7, 2)?;
    let decoder = DecoderSpec::Orbgrand {
        lw_max: 64,
        hw_cap: 6,
    };
    let stop = StopRule::new(min_errors, 1_000_000)?;
    let stats = run_sweep(&code, &decoder, &[2.0, 3.0, 4.0, 5.0], 1, &stop)?;
    eprintln!("{} with {decoder}", code.name());
    write_csv(&mut std::io::stdout().lock(), &stats)?;
    Ok(())
}
