//! BPSK over AWGN and the Monte-Carlo FER harness.
//!
//! Frame `i` of a run with seed `s` draws its message and noise from
//! `ChaCha8Rng` seeded with `s` on stream `i`, so every frame is reproducible
//! on its own. Frames are decoded in fixed-size batches (in parallel when a
//! rayon pool is available) and folded into the statistics in frame order;
//! the stop rule is checked after each frame, so results do not depend on the
//! worker count.

use std::fmt::Write as _;
use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::code::LinearCode;
use crate::decoders::DecoderSpec;
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::patterns::sort_reliability;

/// Frames decoded per parallel batch.
const BATCH: u64 = 512;

/// Names of the random generators, for run metadata.
pub const RNG_DESCRIPTION: &str = "ChaCha8Rng::seed_from_u64(seed), stream = frame index";
pub const GAUSSIAN_DESCRIPTION: &str = "rand_distr::StandardNormal (ziggurat) scaled by sigma";

/// `σ² = 1 / (2·R·10^(Eb/N0 / 10))`.
pub fn noise_variance(ebn0_db: f64, rate: f64) -> f64 {
    1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelConfig {
    pub ebn0_db: f64,
    pub rate: f64,
    pub seed: u64,
    /// Skip the noise: `r = s` exactly, LLRs scaled by the nominal `σ²`.
    pub noiseless: bool,
}

impl ChannelConfig {
    pub fn new(ebn0_db: f64, rate: f64, seed: u64) -> Result<Self> {
        if !(rate > 0.0 && rate <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "rate {rate} outside (0, 1]"
            )));
        }
        if !ebn0_db.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Eb/N0 {ebn0_db} dB is not finite"
            )));
        }
        Ok(Self {
            ebn0_db,
            rate,
            seed,
            noiseless: false,
        })
    }

    pub fn for_code(code: &LinearCode, ebn0_db: f64, seed: u64) -> Result<Self> {
        Self::new(ebn0_db, code.rate(), seed)
    }

    pub fn noiseless(mut self) -> Self {
        self.noiseless = true;
        self
    }

    pub fn noise_variance(&self) -> f64 {
        noise_variance(self.ebn0_db, self.rate)
    }
}

/// One transmitted frame.
#[derive(Clone, Debug)]
pub struct Frame {
    pub message: BitVector,
    pub codeword: BitVector,
    pub llr: Vec<f64>,
}

/// The generator for frame `index` of a run seeded with `seed`.
pub fn frame_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Random message, `c = u·G`, `s = 1 − 2c`, `r = s + n`, `llr = 2r/σ²`.
pub fn transmit_frame<R: Rng + ?Sized>(
    code: &LinearCode,
    cfg: &ChannelConfig,
    rng: &mut R,
) -> Result<Frame> {
    let bits: Vec<bool> = (0..code.k()).map(|_| rng.random()).collect();
    let message = BitVector::from_bools(&bits);
    let codeword = code.encode(&message)?;
    let var = cfg.noise_variance();
    let sigma = var.sqrt();
    let llr = codeword
        .iter()
        .map(|c| {
            let s = if c { -1.0 } else { 1.0 };
            let r = if cfg.noiseless {
                s
            } else {
                let z: f64 = rng.sample(StandardNormal);
                s + sigma * z
            };
            2.0 * r / var
        })
        .collect();
    Ok(Frame {
        message,
        codeword,
        llr,
    })
}

/// Aggregates over the frames of one Eb/N0 point.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SnrStats {
    pub ebn0_db: f64,
    pub frames: u64,
    pub frame_errors: u64,
    pub bit_errors: u64,
    /// Message bits transmitted (`frames · k`).
    pub bits: u64,
    pub total_queries: u64,
    pub total_list_size: u64,
    pub abandoned: u64,
}

impl SnrStats {
    pub fn new(ebn0_db: f64) -> Self {
        Self {
            ebn0_db,
            ..Self::default()
        }
    }

    pub fn record(&mut self, f: &FrameOutcome) {
        self.frames += 1;
        self.frame_errors += u64::from(f.frame_error);
        self.bit_errors += f.bit_errors;
        self.bits += f.bits;
        self.total_queries += f.queries;
        self.total_list_size += f.list_size;
        self.abandoned += u64::from(f.abandoned);
    }

    pub fn merge(&mut self, other: &SnrStats) {
        self.frames += other.frames;
        self.frame_errors += other.frame_errors;
        self.bit_errors += other.bit_errors;
        self.bits += other.bits;
        self.total_queries += other.total_queries;
        self.total_list_size += other.total_list_size;
        self.abandoned += other.abandoned;
    }

    fn ratio(a: u64, b: u64) -> f64 {
        if b == 0 {
            0.0
        } else {
            a as f64 / b as f64
        }
    }

    pub fn fer(&self) -> f64 {
        Self::ratio(self.frame_errors, self.frames)
    }

    pub fn ber(&self) -> f64 {
        Self::ratio(self.bit_errors, self.bits)
    }

    pub fn avg_queries(&self) -> f64 {
        Self::ratio(self.total_queries, self.frames)
    }

    pub fn avg_list_size(&self) -> f64 {
        Self::ratio(self.total_list_size, self.frames)
    }
}

/// Decode outcome of one frame as seen by the harness.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FrameOutcome {
    /// Abandoned, or `û ≠ u`.
    pub frame_error: bool,
    pub bit_errors: u64,
    pub bits: u64,
    pub queries: u64,
    pub list_size: u64,
    pub abandoned: bool,
}

/// Stop after `min_frame_errors` frame errors or `max_frames` frames.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StopRule {
    pub min_frame_errors: u64,
    pub max_frames: u64,
}

impl Default for StopRule {
    fn default() -> Self {
        Self {
            min_frame_errors: 100,
            max_frames: 10_000_000,
        }
    }
}

impl StopRule {
    pub fn new(min_frame_errors: u64, max_frames: u64) -> Result<Self> {
        let rule = Self {
            min_frame_errors,
            max_frames,
        };
        rule.validate()?;
        Ok(rule)
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_frame_errors == 0 || self.max_frames == 0 {
            return Err(Error::InvalidParameter(
                "stop rule needs min_frame_errors >= 1 and max_frames >= 1".into(),
            ));
        }
        Ok(())
    }

    fn done(&self, frames: u64, errors: u64) -> bool {
        errors >= self.min_frame_errors || frames >= self.max_frames
    }
}

/// Transmits frame `index` and decodes it with every decoder in `decoders`.
pub fn simulate_frame(
    code: &LinearCode,
    decoders: &[DecoderSpec],
    cfg: &ChannelConfig,
    index: u64,
) -> Result<Vec<FrameOutcome>> {
    let frame = transmit_frame(code, cfg, &mut frame_rng(cfg.seed, index))?;
    let ord = sort_reliability(&frame.llr)?;
    decoders
        .iter()
        .map(|d| {
            let r = d.decode(&ord, code)?;
            let bit_errors = if r.abandoned {
                code.k() as u64
            } else {
                r.message.xor(&frame.message).weight() as u64
            };
            Ok(FrameOutcome {
                frame_error: r.abandoned || r.message != frame.message,
                bit_errors,
                bits: code.k() as u64,
                queries: r.queries,
                list_size: r.list_size as u64,
                abandoned: r.abandoned,
            })
        })
        .collect()
}

/// Several decoders run on identical frames.
#[derive(Clone, Debug, PartialEq)]
pub struct PairedStats {
    pub arms: Vec<SnrStats>,
    /// `discordant[a][b]`: frames where arm `a` was correct and arm `b` was not.
    pub discordant: Vec<Vec<u64>>,
}

impl PairedStats {
    /// McNemar statistic for "arm `better` errs less often than arm `worse`":
    /// `(b − c)/√(b + c)` with `b` the frames only `worse` got wrong and `c`
    /// the frames only `better` got wrong. Compare against 1.645 for a
    /// one-sided 95% test.
    pub fn mcnemar_z(&self, better: usize, worse: usize) -> f64 {
        let b = self.discordant[better][worse] as f64;
        let c = self.discordant[worse][better] as f64;
        if b + c == 0.0 {
            0.0
        } else {
            (b - c) / (b + c).sqrt()
        }
    }
}

/// Runs all decoders on shared frames until every arm has `min_frame_errors`
/// errors or `max_frames` frames were sent.
pub fn run_paired(
    code: &LinearCode,
    decoders: &[DecoderSpec],
    cfg: &ChannelConfig,
    stop: &StopRule,
) -> Result<PairedStats> {
    stop.validate()?;
    if decoders.is_empty() {
        return Err(Error::InvalidParameter("no decoders to run".into()));
    }
    for d in decoders {
        d.validate(code.n())?;
    }
    let arms = decoders.len();
    let mut out = PairedStats {
        arms: vec![SnrStats::new(cfg.ebn0_db); arms],
        discordant: vec![vec![0; arms]; arms],
    };
    let done = |s: &PairedStats| {
        let frames = s.arms[0].frames;
        let errors = s.arms.iter().map(|a| a.frame_errors).min().unwrap_or(0);
        stop.done(frames, errors)
    };
    let mut next = 0u64;
    while !done(&out) {
        let end = (next + BATCH).min(stop.max_frames);
        let batch: Vec<Vec<FrameOutcome>> = (next..end)
            .into_par_iter()
            .map(|i| simulate_frame(code, decoders, cfg, i))
            .collect::<Result<_>>()?;
        for outcomes in &batch {
            if done(&out) {
                break;
            }
            for (a, o) in outcomes.iter().enumerate() {
                out.arms[a].record(o);
                for (b, p) in outcomes.iter().enumerate() {
                    if !o.frame_error && p.frame_error {
                        out.discordant[a][b] += 1;
                    }
                }
            }
        }
        next = end;
    }
    Ok(out)
}

/// Runs one decoder at one Eb/N0 point.
pub fn run_point(
    code: &LinearCode,
    decoder: &DecoderSpec,
    cfg: &ChannelConfig,
    stop: &StopRule,
) -> Result<SnrStats> {
    Ok(run_paired(code, std::slice::from_ref(decoder), cfg, stop)?.arms[0])
}

/// Runs one decoder at each Eb/N0 point, all with the same seed.
pub fn run_sweep(
    code: &LinearCode,
    decoder: &DecoderSpec,
    ebn0_db: &[f64],
    seed: u64,
    stop: &StopRule,
) -> Result<Vec<SnrStats>> {
    if ebn0_db.is_empty() {
        return Err(Error::InvalidParameter("empty Eb/N0 list".into()));
    }
    ebn0_db
        .iter()
        .map(|&snr| {
            run_point(
                code,
                decoder,
                &ChannelConfig::for_code(code, snr, seed)?,
                stop,
            )
        })
        .collect()
}

pub const CSV_HEADER: &str = "ebn0_db,fer,ber,avg_queries,avg_list_size,frames,frame_errors";

pub fn write_csv<W: Write>(w: &mut W, stats: &[SnrStats]) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for s in stats {
        writeln!(
            w,
            "{},{:.6e},{:.6e},{:.6},{:.6},{},{}",
            s.ebn0_db,
            s.fer(),
            s.ber(),
            s.avg_queries(),
            s.avg_list_size(),
            s.frames,
            s.frame_errors
        )?;
    }
    Ok(())
}

/// Provenance of a sweep, written next to its CSV.
#[derive(Clone, Debug)]
pub struct RunMetadata {
    pub code: String,
    pub n: usize,
    pub k: usize,
    pub decoder: String,
    pub seed: u64,
    pub stop: StopRule,
}

impl RunMetadata {
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "version = {}", env!("CARGO_PKG_VERSION"));
        let _ = writeln!(s, "code = {} (n={}, k={})", self.code, self.n, self.k);
        let _ = writeln!(s, "decoder = {}", self.decoder);
        let _ = writeln!(s, "seed = {}", self.seed);
        let _ = writeln!(s, "min_frame_errors = {}", self.stop.min_frame_errors);
        let _ = writeln!(s, "max_frames = {}", self.stop.max_frames);
        let _ = writeln!(
            s,
            "channel = BPSK over AWGN, sigma^2 = 1/(2 R 10^(EbN0/10)), llr = 2r/sigma^2"
        );
        let _ = writeln!(s, "rng = {RNG_DESCRIPTION}");
        let _ = writeln!(s, "gaussian = {GAUSSIAN_DESCRIPTION}");
        s
    }
}
