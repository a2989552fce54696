use super::{ReliabilityOrder, TestErrorPattern};
use crate::error::{Error, Result};

/// Patterns of Hamming weight 0, 1, …, `ab` over `n` positions; lexicographic
/// by support within a weight.
#[derive(Clone, Debug)]
pub struct GrandabStream<'a> {
    n: usize,
    ab: usize,
    comb: Vec<usize>,
    started: bool,
    order: Option<&'a ReliabilityOrder>,
}

pub fn grandab_stream(n: usize, ab: usize) -> Result<GrandabStream<'static>> {
    if ab > n {
        return Err(Error::InvalidParameter(format!(
            "abandonment weight {ab} exceeds n = {n}"
        )));
    }
    Ok(GrandabStream {
        n,
        ab,
        comb: Vec::with_capacity(ab),
        started: false,
        order: None,
    })
}

impl<'a> GrandabStream<'a> {
    /// Same order, with logistic and soft weights filled in from `ord`.
    pub fn ranked(ord: &'a ReliabilityOrder, ab: usize) -> Result<Self> {
        let mut s = grandab_stream(ord.n(), ab)?;
        s.order = Some(ord);
        Ok(s)
    }

    /// Advances to the next support, lending it.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if !self.started {
            self.started = true;
            return Some(&self.comb);
        }
        let w = self.comb.len();
        let n = self.n;
        if let Some(i) = (0..w).rev().find(|&i| self.comb[i] < n - w + i) {
            self.comb[i] += 1;
            for j in i + 1..w {
                self.comb[j] = self.comb[j - 1] + 1;
            }
            return Some(&self.comb);
        }
        if w < self.ab {
            self.comb = (0..=w).collect();
            return Some(&self.comb);
        }
        None
    }
}

impl Iterator for GrandabStream<'_> {
    type Item = TestErrorPattern;

    fn next(&mut self) -> Option<TestErrorPattern> {
        let order = self.order;
        let support = self.advance()?.to_vec();
        let e = TestErrorPattern::from_support(support);
        Some(match order {
            Some(ord) => e.annotate(ord),
            None => e,
        })
    }
}

/// `Σ_{w=1..ab} C(n, w)`: the non-zero patterns a GRANDAB run can test.
pub fn grandab_pattern_count(n: usize, ab: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    for w in 1..=ab.min(n) {
        binom = binom * (n - w + 1) as u128 / w as u128;
        total += binom;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_stream_order() {
        let got: Vec<Vec<usize>> = grandab_stream(4, 2).unwrap().map(|e| e.support).collect();
        let expected: Vec<Vec<usize>> = vec![
            vec![],
            vec![0],
            vec![1],
            vec![2],
            vec![3],
            vec![0, 1],
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
        ];
        assert_eq!(got, expected);
        assert_eq!(grandab_pattern_count(4, 2), 10);
    }

    #[test]
    fn zero_weight_only() {
        let got: Vec<_> = grandab_stream(5, 0).unwrap().collect();
        assert_eq!(got, vec![TestErrorPattern::zero()]);
    }

    #[test]
    fn full_weight_covers_everything() {
        assert_eq!(grandab_stream(6, 6).unwrap().count(), 64);
    }

    #[test]
    fn ab_above_n_rejected() {
        assert!(grandab_stream(3, 4).is_err());
    }

    #[test]
    fn binomial_sum() {
        assert_eq!(grandab_pattern_count(128, 3), 128 + 8128 + 341_376);
    }
}
