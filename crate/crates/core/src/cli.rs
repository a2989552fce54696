//! The `grand` command line.
//!
//! Exit codes: 0 on success, 1 on usage or validation errors, 2 on runtime
//! failures (I/O, failed verification suites).

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::channel::{run_point, write_csv, ChannelConfig, RunMetadata};
use crate::codes::{write_matrix, CodeSpec};
use crate::config::ExperimentConfig;
use crate::decoders::DecoderSpec;
use crate::error::{Error, Result};
use crate::patterns::{grandab_pattern_count, orbgrand_pattern_count, sort_reliability};
use crate::verify::{run_all, run_suite, VerifyOptions};

#[derive(Debug, Parser)]
#[command(
    name = "grand",
    version,
    about = "GRAND-family decoders for binary linear block codes"
)]
pub struct Cli {
    /// Worker threads for frame decoding (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and write its G and H matrices.
    ConstructCode(ConstructArgs),
    /// Decode one LLR vector and print the result.
    DecodeOne(DecodeArgs),
    /// Run a Monte-Carlo sweep described by a config file.
    Sweep(SweepArgs),
    /// Count the test patterns of a GRANDAB or ORBGRAND schedule.
    CountPatterns(CountArgs),
    /// Run the oracle-equivalence suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    Crc,
    Bch,
    Hamming,
    Polar,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub family: Family,
    /// Code length (crc, polar).
    #[arg(long)]
    pub n: Option<usize>,
    /// CRC polynomial, hex with implicit leading term (crc).
    #[arg(long)]
    pub poly: Option<String>,
    /// Field degree (bch, hamming).
    #[arg(long)]
    pub m: Option<u32>,
    /// Designed correction capability (bch).
    #[arg(long)]
    pub t: Option<usize>,
    /// Message length (polar).
    #[arg(long)]
    pub k: Option<usize>,
    /// CRC precoder, full hex value including the leading term (polar).
    #[arg(long)]
    pub crc: Option<String>,
    /// Output file; stdout when absent.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    /// Code: crc:N:POLY, bch:M:T, hamming:M, polar:N:K[:CRC], or file:PATH.
    #[arg(long)]
    pub code: String,
    /// Decoder: grandab:AB, orbgrand:LW_MAX:HW_MAX, sgrand[:BUDGET], lgrand:LW_MAX:HW_MAX:DELTA.
    #[arg(long)]
    pub decoder: String,
    /// File of n LLRs separated by whitespace or commas; `#` starts a comment.
    #[arg(long)]
    pub llr: PathBuf,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    pub config: PathBuf,
    /// Overrides `sweep.output_dir`.
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
    /// Overrides `sweep.max_frames`.
    #[arg(long)]
    pub max_frames: Option<u64>,
    /// Overrides `sweep.min_frame_errors`.
    #[arg(long)]
    pub min_frame_errors: Option<u64>,
    /// Only run decoders with these labels.
    #[arg(long = "only")]
    pub only: Vec<String>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    /// GRANDAB abandonment weight.
    #[arg(long, conflicts_with_all = ["lw_max", "hw_cap"])]
    pub ab: Option<usize>,
    /// ORBGRAND maximum logistic weight.
    #[arg(long, requires = "hw_cap")]
    pub lw_max: Option<usize>,
    /// ORBGRAND Hamming-weight cap.
    #[arg(long, requires = "lw_max")]
    pub hw_cap: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One suite; all when absent.
    #[arg(long)]
    pub suite: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 2000)]
    pub frames: u64,
    #[arg(long, default_value_t = 500)]
    pub prefix: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    Validation(String),
    Runtime(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Runtime(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Singular { .. } | Error::NotCodeword | Error::EmptyList => {
                Failure::Runtime(e.to_string())
            }
            _ => Failure::Validation(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Validation(m) => eprintln!("error: {m}"),
                Failure::Runtime(m) => eprintln!("failure: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

pub fn run(cli: Cli) -> CmdResult {
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(Failure::Validation("--workers must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    match cli.command {
        Command::ConstructCode(a) => construct_code(a),
        Command::DecodeOne(a) => decode_one(a),
        Command::Sweep(a) => sweep(a),
        Command::CountPatterns(a) => count_patterns(a),
        Command::Verify(a) => verify(a),
    }
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> std::result::Result<T, Failure> {
    v.ok_or_else(|| Failure::Validation(format!("{family} codes need --{flag}")))
}

fn construct_code(a: ConstructArgs) -> CmdResult {
    let spec = match a.family {
        Family::Crc => CodeSpec::Crc {
            n: need(a.n, "n", "crc")?,
            poly: need(a.poly, "poly", "crc")?,
        },
        Family::Bch => CodeSpec::Bch {
            m: need(a.m, "m", "bch")?,
            t: need(a.t, "t", "bch")?,
        },
        Family::Hamming => CodeSpec::Hamming {
            m: need(a.m, "m", "hamming")?,
        },
        Family::Polar => {
            let crc = match a.crc {
                None => None,
                Some(h) => Some(
                    u64::from_str_radix(h.trim_start_matches("0x").trim_start_matches("0X"), 16)
                        .map_err(|_| Failure::Validation(format!("bad --crc `{h}`")))?,
                ),
            };
            CodeSpec::Polar {
                n: need(a.n, "n", "polar")?,
                k: need(a.k, "k", "polar")?,
                crc,
            }
        }
    };
    let code = spec.build()?;
    let mut buf = Vec::new();
    writeln!(buf, "# {}", code.name())?;
    write_matrix(&mut buf, code.generator())?;
    write_matrix(&mut buf, code.parity_check())?;
    match &a.out {
        Some(p) => fs::write(p, &buf)?,
        None => io::stdout().write_all(&buf)?,
    }
    eprintln!("{}: n={} k={}", code.name(), code.n(), code.k());
    Ok(())
}

fn read_llr(path: &Path) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let v: f64 = tok.parse().map_err(|_| Error::Parse {
                path: path.to_path_buf(),
                line: i + 1,
                msg: format!("`{tok}` is not a number"),
            })?;
            out.push(v);
        }
    }
    Ok(out)
}

fn decode_one(a: DecodeArgs) -> CmdResult {
    let code = a.code.parse::<CodeSpec>()?.build()?;
    let decoder: DecoderSpec = a.decoder.parse()?;
    decoder.validate(code.n())?;
    let llr = read_llr(&a.llr)?;
    if llr.len() != code.n() {
        return Err(Failure::Validation(format!(
            "{} has {} LLRs, code length is {}",
            a.llr.display(),
            llr.len(),
            code.n()
        )));
    }
    let ord = sort_reliability(&llr)?;
    let r = decoder.decode(&ord, &code)?;
    let support: Vec<String> = r.pattern.support.iter().map(|p| p.to_string()).collect();
    let mut out = io::stdout().lock();
    writeln!(out, "code: {}", code.name())?;
    writeln!(out, "decoder: {decoder}")?;
    writeln!(out, "abandoned: {}", r.abandoned)?;
    writeln!(out, "queries: {}", r.queries)?;
    writeln!(out, "list_size: {}", r.list_size)?;
    writeln!(out, "soft_weight: {}", r.soft_weight)?;
    writeln!(out, "logistic_weight: {}", r.pattern.logistic_weight)?;
    writeln!(out, "hamming_weight: {}", r.pattern.hamming_weight())?;
    writeln!(out, "pattern: {}", support.join(" "))?;
    writeln!(out, "codeword: {}", r.codeword)?;
    writeln!(out, "message: {}", r.message)?;
    Ok(())
}

fn sweep(a: SweepArgs) -> CmdResult {
    let mut config = ExperimentConfig::load(&a.config)?;
    if let Some(dir) = a.output_dir {
        config.sweep.output_dir = dir;
    }
    if let Some(m) = a.max_frames {
        config.sweep.stop.max_frames = m;
    }
    if let Some(m) = a.min_frame_errors {
        config.sweep.stop.min_frame_errors = m;
    }
    config.sweep.stop.validate()?;
    for label in &a.only {
        if !config.decoders.iter().any(|d| &d.label == label) {
            return Err(Failure::Validation(format!(
                "--only: no decoder labelled `{label}`"
            )));
        }
    }
    let x = config.resolve()?;
    let sweep = &x.config.sweep;
    fs::create_dir_all(&sweep.output_dir)?;
    for d in &x.config.decoders {
        if !a.only.is_empty() && !a.only.contains(&d.label) {
            continue;
        }
        let code = x.code(&d.code);
        let mut rows = Vec::new();
        for &snr in &sweep.ebn0_db {
            let cfg = ChannelConfig::for_code(code, snr, sweep.seed)?;
            let s = run_point(code, &d.spec, &cfg, &sweep.stop)?;
            eprintln!(
                "{} {} dB: FER {:.3e} over {} frames, {:.2} queries/frame",
                d.label,
                snr,
                s.fer(),
                s.frames,
                s.avg_queries()
            );
            rows.push(s);
        }
        let mut csv = Vec::new();
        write_csv(&mut csv, &rows)?;
        fs::write(sweep.output_dir.join(format!("{}.csv", d.label)), csv)?;
        let meta = RunMetadata {
            code: code.name().to_string(),
            n: code.n(),
            k: code.k(),
            decoder: d.spec.to_string(),
            seed: sweep.seed,
            stop: sweep.stop,
        };
        fs::write(
            sweep.output_dir.join(format!("{}.meta.txt", d.label)),
            meta.render(),
        )?;
    }
    Ok(())
}

fn count_patterns(a: CountArgs) -> CmdResult {
    match (a.ab, a.lw_max, a.hw_cap) {
        (Some(ab), _, _) => {
            if ab > a.n {
                return Err(Failure::Validation(format!(
                    "--ab {ab} exceeds --n {}",
                    a.n
                )));
            }
            let c = grandab_pattern_count(a.n, ab);
            println!(
                "grandab n={} ab={ab}: {c} non-zero patterns ({} with the zero pattern)",
                a.n,
                c + 1
            );
        }
        (None, Some(lw), Some(hw)) => {
            DecoderSpec::Orbgrand {
                lw_max: lw,
                hw_cap: hw,
            }
            .validate(a.n)?;
            let c = orbgrand_pattern_count(a.n, lw, hw);
            println!(
                "orbgrand n={} lw_max={lw} hw_cap={hw}: {} non-zero patterns ({c} with the zero pattern)",
                a.n,
                c - 1
            );
        }
        _ => {
            return Err(Failure::Validation(
                "give --ab, or --lw-max with --hw-cap".into(),
            ))
        }
    }
    Ok(())
}

fn verify(a: VerifyArgs) -> CmdResult {
    let opts = VerifyOptions {
        n: a.n,
        seed: a.seed,
        trials: a.trials,
        frames: a.frames,
        prefix: a.prefix,
    };
    let reports = match &a.suite {
        Some(s) => vec![run_suite(s, &opts)?],
        None => run_all(&opts)?,
    };
    let mut failed = 0;
    for r in &reports {
        println!("{r}");
        failed += usize::from(!r.passed());
    }
    if failed > 0 {
        return Err(Failure::Runtime(format!("{failed} suite(s) failed")));
    }
    Ok(())
}
