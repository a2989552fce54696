//! Exhaustive reference implementations for small parameters.
//!
//! Nothing here shares code with the decoders or pattern generators beyond
//! the GF(2) types, so agreement is meaningful.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Size bounds enforced before any exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimit {
    pub max_k: usize,
    pub max_n_subsets: u64,
}

impl Default for OracleLimit {
    fn default() -> Self {
        Self {
            max_k: 20,
            max_n_subsets: 1 << 20,
        }
    }
}

/// `Σ_i (1 − 2c_i)·llr_i`; larger is more likely.
pub fn correlation(llr: &[f64], c: &BitVector) -> f64 {
    llr.iter()
        .enumerate()
        .fold(0.0, |acc, (i, &l)| if c.get(i) { acc - l } else { acc + l })
}

/// Every codeword, in Gray-code order of the message.
pub fn all_codewords(code: &LinearCode, limit: &OracleLimit) -> Result<Vec<BitVector>> {
    let k = code.k();
    if k > limit.max_k {
        return Err(Error::OracleLimit(format!(
            "k = {k} exceeds {}",
            limit.max_k
        )));
    }
    let g = code.generator();
    let mut c = BitVector::zeros(code.n());
    let mut out = Vec::with_capacity(1 << k);
    out.push(c.clone());
    for step in 1u64..1 << k {
        c.xor_assign(&g.row(step.trailing_zeros() as usize));
        out.push(c.clone());
    }
    Ok(out)
}

/// Maximum-likelihood codeword by scoring all `2^k` codewords; ties go to the
/// lexicographically smallest codeword.
pub fn ml_decode_bruteforce(llr: &[f64], code: &LinearCode) -> Result<BitVector> {
    ml_decode_bruteforce_with(llr, code, &OracleLimit::default())
}

pub fn ml_decode_bruteforce_with(
    llr: &[f64],
    code: &LinearCode,
    limit: &OracleLimit,
) -> Result<BitVector> {
    if llr.len() != code.n() {
        return Err(Error::Shape(format!(
            "{} LLRs for a code of length {}",
            llr.len(),
            code.n()
        )));
    }
    let mut best: Option<(f64, BitVector)> = None;
    for c in all_codewords(code, limit)? {
        let score = correlation(llr, &c);
        let better = match &best {
            None => true,
            Some((s, b)) => score > *s || (score == *s && c.lex_cmp(b).is_lt()),
        };
        if better {
            best = Some((score, c));
        }
    }
    Ok(best.expect("a code has at least the zero codeword").1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    /// Sum of `|llr|` over the subset.
    Soft,
    /// Sum of 1-based reliability ranks over the subset.
    Logistic,
}

/// A subset of positions and its metric value.
#[derive(Clone, Debug, PartialEq)]
pub struct RankedSubset {
    pub support: Vec<usize>,
    pub metric: f64,
}

/// 1-based ranks by ascending `|llr|`, ties by position, computed by counting.
pub fn reliability_ranks(llr: &[f64]) -> Vec<usize> {
    (0..llr.len())
        .map(|i| {
            1 + (0..llr.len())
                .filter(|&j| {
                    let (a, b) = (llr[j].abs(), llr[i].abs());
                    a < b || (a == b && j < i)
                })
                .count()
        })
        .collect()
}

/// All `2^n` subsets of positions sorted by `metric`, then Hamming weight,
/// then lexicographic support.
pub fn sort_all_patterns(llr: &[f64], metric: Metric) -> Result<Vec<RankedSubset>> {
    let n = llr.len();
    let limit = OracleLimit::default();
    if n > 63 || 1u64 << n > limit.max_n_subsets {
        return Err(Error::OracleLimit(format!(
            "2^{n} subsets exceed {}",
            limit.max_n_subsets
        )));
    }
    let value: Vec<f64> = match metric {
        Metric::Soft => llr.iter().map(|l| l.abs()).collect(),
        Metric::Logistic => reliability_ranks(llr)
            .into_iter()
            .map(|r| r as f64)
            .collect(),
    };
    let mut out: Vec<RankedSubset> = (0u64..1 << n)
        .map(|mask| {
            let support: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let metric = support.iter().fold(0.0, |acc, &i| acc + value[i]);
            RankedSubset { support, metric }
        })
        .collect();
    out.sort_by(|a, b| {
        a.metric
            .total_cmp(&b.metric)
            .then(a.support.len().cmp(&b.support.len()))
            .then_with(|| a.support.cmp(&b.support))
    });
    Ok(out)
}

/// Number of distinct partitions of `m` with parts at most `max_part` and at
/// most `max_parts` parts, by depth-first subset enumeration.
pub fn count_distinct_partitions(m: usize, max_part: usize, max_parts: usize) -> Result<u64> {
    if m > 60 {
        return Err(Error::OracleLimit(format!("m = {m} exceeds 60")));
    }
    fn go(rest: usize, largest: usize, slots: usize) -> u64 {
        if rest == 0 {
            return 1;
        }
        if slots == 0 {
            return 0;
        }
        (1..=largest.min(rest))
            .rev()
            .map(|p| go(rest - p, p - 1, slots - 1))
            .sum()
    }
    Ok(go(m, max_part, max_parts))
}
