//! Test error pattern generation.
//!
//! Positions are ranked by ascending `|llr|` (rank 1 is the least reliable).
//! Four orders are provided:
//!
//! - [`grandab_stream`]: ascending Hamming weight up to an abandonment weight,
//!   lexicographic within a weight.
//! - [`orbgrand_stream`]: ascending logistic weight (sum of 1-based ranks),
//!   produced from distinct integer partitions of each weight.
//! - [`sgrand_stream`]: ascending soft weight (sum of `|llr|` over flipped
//!   positions), i.e. exact maximum-likelihood order, via a best-first search.
//! - [`distinct_partitions`]: the partition generator underlying the logistic order.

mod grandab;
mod orbgrand;
mod partitions;
mod reliability;
mod sgrand;

pub use grandab::{grandab_pattern_count, grandab_stream, GrandabStream};
pub use orbgrand::{max_logistic_weight, orbgrand_pattern_count, orbgrand_stream, OrbgrandStream};
pub use partitions::{distinct_partitions, DistinctPartitions, IntegerPartition};
pub use reliability::{sort_reliability, ReliabilityOrder};
pub use sgrand::{sgrand_stream, SgrandStream};

use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// A candidate noise vector.
///
/// `support` is sorted and uses original (channel) positions. The logistic and
/// soft weights are relative to the reliability order the pattern was drawn
/// under; patterns from the order-free GRANDAB stream carry zeros until
/// [`annotate`](Self::annotate)d.
#[derive(Clone, Debug, PartialEq)]
pub struct TestErrorPattern {
    pub support: Vec<usize>,
    pub logistic_weight: usize,
    pub soft_weight: f64,
}

impl TestErrorPattern {
    pub fn zero() -> Self {
        Self {
            support: Vec::new(),
            logistic_weight: 0,
            soft_weight: 0.0,
        }
    }

    pub fn from_support(mut support: Vec<usize>) -> Self {
        support.sort_unstable();
        Self {
            support,
            logistic_weight: 0,
            soft_weight: 0.0,
        }
    }

    pub fn hamming_weight(&self) -> usize {
        self.support.len()
    }

    /// Fills in logistic and soft weights under `ord`.
    pub fn annotate(mut self, ord: &ReliabilityOrder) -> Self {
        self.logistic_weight = self.support.iter().map(|&i| ord.rank_of(i)).sum();
        self.soft_weight = soft_weight(&self.support, ord.llr());
        self
    }

    /// `ŷ ⊕ e`.
    pub fn apply(&self, hard: &BitVector) -> BitVector {
        let mut v = hard.clone();
        for &i in &self.support {
            v.flip(i);
        }
        v
    }
}

/// `Σ_{i ∈ support} |llr[i]|`: the negative log-likelihood penalty of flipping
/// those hard decisions under BPSK/AWGN.
pub fn soft_weight(support: &[usize], llr: &[f64]) -> f64 {
    support.iter().fold(0.0, |acc, &i| acc + llr[i].abs())
}

/// Maps a partition `λ` of reliability ranks to the pattern flipping
/// `ind[λ_i − 1]` for each part.
pub fn pattern_from_partition(
    p: &IntegerPartition,
    ord: &ReliabilityOrder,
) -> Result<TestErrorPattern> {
    if let Some(&largest) = p.parts().first() {
        if largest > ord.n() {
            return Err(Error::InvalidPartition(format!(
                "part {largest} exceeds the code length {}",
                ord.n()
            )));
        }
    }
    Ok(ord.pattern_from_ranks(p.parts()))
}
