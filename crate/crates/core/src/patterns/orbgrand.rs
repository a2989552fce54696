use super::{DistinctPartitions, ReliabilityOrder, TestErrorPattern};
use crate::error::{Error, Result};

/// `n(n+1)/2`, the logistic weight of flipping every position.
pub fn max_logistic_weight(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Patterns in nondecreasing logistic weight: for each weight `0..=lw_max`,
/// the distinct partitions with at most `hw_cap` parts, each mapped through the
/// reliability order.
#[derive(Clone, Debug)]
pub struct OrbgrandStream<'a> {
    ord: &'a ReliabilityOrder,
    lw_max: usize,
    hw_cap: usize,
    weight: usize,
    parts: DistinctPartitions,
}

pub fn orbgrand_stream(
    ord: &ReliabilityOrder,
    lw_max: usize,
    hw_cap: usize,
) -> Result<OrbgrandStream<'_>> {
    let bound = max_logistic_weight(ord.n());
    if lw_max > bound {
        return Err(Error::InvalidParameter(format!(
            "LW_max = {lw_max} exceeds n(n+1)/2 = {bound}"
        )));
    }
    Ok(OrbgrandStream {
        ord,
        lw_max,
        hw_cap,
        weight: 0,
        parts: DistinctPartitions::new(0, ord.n(), hw_cap),
    })
}

impl OrbgrandStream<'_> {
    /// Next pattern as `(logistic weight, 1-based ranks)` without allocating.
    pub fn advance(&mut self) -> Option<(usize, &[usize])> {
        loop {
            if self.parts.advance().is_some() {
                break;
            }
            if self.weight >= self.lw_max {
                return None;
            }
            self.weight += 1;
            self.parts = DistinctPartitions::new(self.weight, self.ord.n(), self.hw_cap);
        }
        Some((self.weight, self.parts.current()))
    }
}

impl Iterator for OrbgrandStream<'_> {
    type Item = TestErrorPattern;

    fn next(&mut self) -> Option<TestErrorPattern> {
        let ord = self.ord;
        let (_, ranks) = self.advance()?;
        Some(ord.pattern_from_ranks(ranks))
    }
}

/// Number of patterns `orbgrand_stream(·, lw_max, hw_cap)` yields for length
/// `n`, zero pattern included. Saturates at `u128::MAX`.
pub fn orbgrand_pattern_count(n: usize, lw_max: usize, hw_cap: usize) -> u128 {
    let lw_max = lw_max.min(max_logistic_weight(n));
    let cap = hw_cap.min(n);
    // ways[c][s]: subsets of the ranks seen so far with c parts summing to s
    let mut ways = vec![vec![0u128; lw_max + 1]; cap + 1];
    ways[0][0] = 1;
    for part in 1..=n.min(lw_max) {
        for c in (1..=cap).rev() {
            for s in (part..=lw_max).rev() {
                let add = ways[c - 1][s - part];
                ways[c][s] = ways[c][s].saturating_add(add);
            }
        }
    }
    ways.iter()
        .flatten()
        .fold(0u128, |acc, &w| acc.saturating_add(w))
}
