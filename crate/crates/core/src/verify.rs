//! Oracle-equivalence suites behind `grand verify`.
//!
//! Each suite compares a production component against the exhaustive
//! references in [`crate::oracle`] and reports the first counterexample.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::channel::{frame_rng, transmit_frame, ChannelConfig};
use crate::code::LinearCode;
use crate::codes::{long_division_remainder, CodeSpec, Gf2Poly};
use crate::decoders::decode_sgrand;
use crate::error::{Error, Result};
use crate::gf2::{gf2_matmul, BitVector};
use crate::oracle::{
    correlation, count_distinct_partitions, ml_decode_bruteforce, reliability_ranks,
    sort_all_patterns, Metric,
};
use crate::patterns::{
    distinct_partitions, grandab_pattern_count, grandab_stream, max_logistic_weight,
    orbgrand_stream, sgrand_stream, sort_reliability, ReliabilityOrder, TestErrorPattern,
};

/// Names accepted by `--suite`.
pub const SUITES: &[&str] = &[
    "partitions",
    "logistic-order",
    "sgrand-ml",
    "ml-decode",
    "codes",
    "grandab-count",
];

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Code length for the order suites; each suite has its own default.
    pub n: Option<usize>,
    pub seed: u64,
    /// Random reliability orders per order suite.
    pub trials: usize,
    /// Frames for `ml-decode`.
    pub frames: u64,
    /// Prefix length for `sgrand-ml`.
    pub prefix: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            n: None,
            seed: 1,
            trials: 20,
            frames: 2000,
            prefix: 500,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checks: u64,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} ({} checks)", self.name, self.checks),
            Some(c) => write!(f, "FAIL {} after {} checks: {c}", self.name, self.checks),
        }
    }
}

/// Outcome of one suite body: checks performed, or a counterexample.
type Check = std::result::Result<u64, (u64, String)>;

fn report(name: &str, r: Check) -> SuiteReport {
    match r {
        Ok(checks) => SuiteReport {
            name: name.into(),
            checks,
            counterexample: None,
        },
        Err((checks, c)) => SuiteReport {
            name: name.into(),
            checks,
            counterexample: Some(c),
        },
    }
}

pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<SuiteReport> {
    let r = match name {
        "partitions" => partitions_suite(),
        "logistic-order" => {
            return logistic_order_suite_with(opts, |ord, lw, hw| {
                Ok(orbgrand_stream(ord, lw, hw)?.collect())
            })
        }
        "sgrand-ml" => sgrand_ml_suite(opts)?,
        "ml-decode" => ml_decode_suite(opts)?,
        "codes" => codes_suite(opts)?,
        "grandab-count" => grandab_count_suite(),
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown suite `{other}`; expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(report(name, r))
}

pub fn run_all(opts: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|s| run_suite(s, opts)).collect()
}

fn random_llr(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-4.0..4.0)).collect()
}

fn partitions_suite() -> Check {
    let mut checks = 0;
    for m in 0..=30 {
        for max_part in [1, 2, 4, 7, 12, 30] {
            for max_parts in [1, 2, 3, 5, 8, 30] {
                let mut count = 0u64;
                let mut prev: Option<Vec<usize>> = None;
                for p in distinct_partitions(m, max_part, max_parts) {
                    let parts = p.parts();
                    let ok = p.sum() == m
                        && parts.windows(2).all(|w| w[0] > w[1])
                        && parts.first().is_none_or(|&x| x <= max_part)
                        && parts.len() <= max_parts
                        && prev.as_deref().is_none_or(|q| q > parts);
                    if !ok {
                        return Err((checks, format!("m={m} max_part={max_part} max_parts={max_parts}: bad partition {parts:?}")));
                    }
                    prev = Some(parts.to_vec());
                    count += 1;
                }
                let expected = count_distinct_partitions(m, max_part, max_parts).expect("m <= 60");
                checks += 1;
                if count != expected {
                    return Err((
                        checks,
                        format!("m={m} max_part={max_part} max_parts={max_parts}: stream has {count}, oracle {expected}"),
                    ));
                }
            }
        }
    }
    Ok(checks)
}

/// Checks that `stream` holds every subset of `0..n` exactly once, with
/// logistic weights that match an independent rank computation and never
/// decrease.
pub fn check_logistic_order(
    llr: &[f64],
    stream: &[TestErrorPattern],
) -> std::result::Result<(), String> {
    let n = llr.len();
    let ranks = reliability_ranks(llr);
    let mut seen = vec![false; 1 << n];
    let mut prev = 0;
    for (idx, e) in stream.iter().enumerate() {
        let lw: usize = e.support.iter().map(|&i| ranks[i]).sum();
        if lw != e.logistic_weight {
            return Err(format!(
                "llr={llr:?}: pattern #{idx} {:?} reports LW {} but its ranks sum to {lw}",
                e.support, e.logistic_weight
            ));
        }
        if lw < prev {
            return Err(format!(
                "llr={llr:?}: pattern #{idx} {:?} has LW {lw} after LW {prev}",
                e.support
            ));
        }
        prev = lw;
        let mask = e.support.iter().fold(0usize, |m, &i| m | 1 << i);
        if std::mem::replace(&mut seen[mask], true) {
            return Err(format!(
                "llr={llr:?}: pattern {:?} emitted twice",
                e.support
            ));
        }
    }
    if let Some(mask) = seen.iter().position(|&s| !s) {
        let missing: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        return Err(format!("llr={llr:?}: subset {missing:?} never emitted"));
    }
    Ok(())
}

/// The logistic-order suite over any full-length stream generator
/// `(ord, LW_max, HW_cap) → patterns`.
pub fn logistic_order_suite_with<F>(opts: &VerifyOptions, mut generate: F) -> Result<SuiteReport>
where
    F: FnMut(&ReliabilityOrder, usize, usize) -> Result<Vec<TestErrorPattern>>,
{
    let lengths: Vec<usize> = match opts.n {
        Some(n) if n <= 12 => vec![n],
        Some(n) => {
            return Err(Error::OracleLimit(format!(
                "logistic-order needs n <= 12, got {n}"
            )))
        }
        None => (1..=8).collect(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut checks = 0;
    for &n in &lengths {
        for _ in 0..opts.trials {
            let llr = random_llr(&mut rng, n);
            let ord = sort_reliability(&llr)?;
            let stream = generate(&ord, max_logistic_weight(n), n)?;
            checks += 1;
            if let Err(c) = check_logistic_order(&llr, &stream) {
                return Ok(report("logistic-order", Err((checks, c))));
            }
        }
    }
    Ok(report("logistic-order", Ok(checks)))
}

const TIE_EPS: f64 = 1e-9;

fn sgrand_ml_suite(opts: &VerifyOptions) -> Result<Check> {
    let lengths: Vec<usize> = match opts.n {
        Some(n) if n <= 20 => vec![n],
        Some(n) => {
            return Err(Error::OracleLimit(format!(
                "sgrand-ml needs n <= 20, got {n}"
            )))
        }
        None => (1..=12).collect(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut checks = 0;
    for &n in &lengths {
        for trial in 0..opts.trials {
            // every other trial quantizes to force ties
            let mut llr = random_llr(&mut rng, n);
            if trial % 2 == 1 {
                llr.iter_mut().for_each(|x| *x = (*x * 2.0).round() / 2.0);
            }
            let ord = sort_reliability(&llr)?;
            let oracle = sort_all_patterns(&llr, Metric::Soft)?;
            let prefix = opts.prefix.min(oracle.len());
            let got: Vec<TestErrorPattern> = sgrand_stream(&ord, prefix as u64).collect();
            checks += 1;
            if got.len() != prefix {
                return Ok(Err((
                    checks,
                    format!(
                        "llr={llr:?}: SGRAND emitted {} of {prefix} patterns",
                        got.len()
                    ),
                )));
            }
            let mut seen = std::collections::HashSet::new();
            for (i, (e, o)) in got.iter().zip(&oracle).enumerate() {
                let w = e.support.iter().fold(0.0, |acc, &p| acc + llr[p].abs());
                if !seen.insert(e.support.clone()) {
                    return Ok(Err((
                        checks,
                        format!("llr={llr:?}: {:?} emitted twice", e.support),
                    )));
                }
                if (w - o.metric).abs() > TIE_EPS || (w - e.soft_weight).abs() > TIE_EPS {
                    return Ok(Err((
                        checks,
                        format!(
                            "llr={llr:?}: position {i}: SGRAND {:?} (soft weight {w}) vs oracle {:?} ({})",
                            e.support, o.support, o.metric
                        ),
                    )));
                }
            }
        }
    }
    Ok(Ok(checks))
}

fn ml_decode_suite(opts: &VerifyOptions) -> Result<Check> {
    let code = CodeSpec::Hamming { m: 4 }.build()?;
    let cfg = ChannelConfig::for_code(&code, 3.0, opts.seed)?;
    let mut checks = 0;
    for i in 0..opts.frames {
        let frame = transmit_frame(&code, &cfg, &mut frame_rng(cfg.seed, i))?;
        checks += 1;
        if let Some(c) = ml_disagreement(&code, &frame.llr)? {
            return Ok(Err((checks, format!("frame {i}: {c}"))));
        }
    }
    Ok(Ok(checks))
}

/// Compares unlimited SGRAND with the brute-force ML decision on one frame.
/// Different codewords are accepted only when their correlations tie.
pub fn ml_disagreement(code: &LinearCode, llr: &[f64]) -> Result<Option<String>> {
    let ord = sort_reliability(llr)?;
    let r = decode_sgrand(&ord, code, None)?;
    let ml = ml_decode_bruteforce(llr, code)?;
    if r.abandoned {
        return Ok(Some(format!("llr={llr:?}: SGRAND abandoned")));
    }
    if r.codeword != ml {
        let (a, b) = (correlation(llr, &r.codeword), correlation(llr, &ml));
        if (a - b).abs() > TIE_EPS * (1.0 + b.abs()) {
            return Ok(Some(format!(
                "llr={llr:?}: SGRAND {} (corr {a}) vs ML {} (corr {b})",
                r.codeword, ml
            )));
        }
    }
    Ok(None)
}

/// The experiment codes and their expected dimensions.
pub fn paper_codes() -> Vec<(CodeSpec, usize, usize)> {
    vec![
        (CodeSpec::Bch { m: 7, t: 3 }, 127, 106),
        (CodeSpec::Bch { m: 7, t: 2 }, 127, 113),
        (
            CodeSpec::Crc {
                n: 128,
                poly: "0x1021".into(),
            },
            128,
            112,
        ),
        (
            CodeSpec::Crc {
                n: 128,
                poly: "0xB2B117".into(),
            },
            128,
            104,
        ),
        (
            CodeSpec::Polar {
                n: 128,
                k: 105,
                crc: None,
            },
            128,
            105,
        ),
        (CodeSpec::Hamming { m: 4 }, 15, 11),
    ]
}

fn codes_suite(opts: &VerifyOptions) -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut checks = 0;
    for (spec, n, k) in paper_codes() {
        let code = spec.build()?;
        checks += 1;
        if (code.n(), code.k()) != (n, k) {
            return Ok(Err((
                checks,
                format!(
                    "{spec}: got ({},{}), expected ({n},{k})",
                    code.n(),
                    code.k()
                ),
            )));
        }
        let g = code.generator();
        if !gf2_matmul(code.parity_check(), &g.transpose())?.is_zero()
            || !gf2_matmul(g, code.right_inverse())?.is_identity()
        {
            return Ok(Err((checks, format!("{spec}: matrix invariants violated"))));
        }
        for _ in 0..100 {
            let bits: Vec<bool> = (0..k).map(|_| rng.random()).collect();
            let u = BitVector::from_bools(&bits);
            let c = code.encode(&u)?;
            checks += 1;
            if !code.is_codeword(&c)? || code.recover_message(&c)? != u {
                return Ok(Err((
                    checks,
                    format!("{spec}: encode/recover fails for u={u}"),
                )));
            }
        }
        if let CodeSpec::Crc { poly, .. } = &spec {
            let g = crate::codes::CrcPolynomial::parse_hex(poly, None)?;
            for _ in 0..100 {
                let bits: Vec<bool> = (0..n).map(|_| rng.random()).collect();
                let v = BitVector::from_bools(&bits);
                let syndrome_zero = code.is_codeword(&v)?;
                let rem = long_division_remainder(&v, g.poly());
                checks += 1;
                if syndrome_zero != rem.iter().all(|&b| !b) {
                    return Ok(Err((
                        checks,
                        format!("{spec}: syndrome and long division disagree on {v}"),
                    )));
                }
            }
        }
    }
    // x^n - 1 divisible by each BCH generator
    for (m, t) in [(7u32, 3usize), (7, 2), (4, 1)] {
        let field = crate::codes::GaloisField::new(m)?;
        let g = crate::codes::bch_generator(&field, t)?;
        let n = field.order();
        let xn1 = Gf2Poly::monomial(n).add(&Gf2Poly::one());
        checks += 1;
        if !xn1.rem(&g).is_zero() {
            return Ok(Err((
                checks,
                format!("BCH m={m} t={t}: g(x) does not divide x^{n} - 1"),
            )));
        }
    }
    Ok(Ok(checks))
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn grandab_count_suite() -> Check {
    let mut checks = 0;
    let cases = (1..=32usize)
        .flat_map(|n| (0..=4usize.min(n)).map(move |ab| (n, ab)))
        .chain([(128, 3)]);
    for (n, ab) in cases {
        let expected: u128 = (1..=ab as u128).map(|w| binomial(n as u128, w)).sum();
        let mut s = grandab_stream(n, ab).expect("ab <= n");
        let mut streamed = 0u128;
        while s.advance().is_some() {
            streamed += 1;
        }
        checks += 1;
        let formula = grandab_pattern_count(n, ab);
        if streamed != expected + 1 || formula != expected {
            return Err((
                checks,
                format!(
                    "n={n} AB={ab}: stream {} non-zero, formula {formula}, binomial sum {expected}",
                    streamed - 1
                ),
            ));
        }
    }
    Ok(checks)
}
