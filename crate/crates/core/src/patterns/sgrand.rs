use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{ReliabilityOrder, TestErrorPattern};

/// A heap entry: a set of 0-based reliability ranks and its cached keys.
#[derive(Debug)]
struct Node {
    soft_weight: f64,
    ranks: Vec<usize>,
    support: Vec<usize>,
}

impl Node {
    fn new(ord: &ReliabilityOrder, ranks: Vec<usize>) -> Self {
        let soft_weight = ranks
            .iter()
            .fold(0.0, |acc, &r| acc + ord.magnitude_at_rank(r));
        let mut support: Vec<usize> = ranks.iter().map(|&r| ord.ind()[r]).collect();
        support.sort_unstable();
        Self {
            soft_weight,
            ranks,
            support,
        }
    }

    /// Ascending (soft weight, Hamming weight, support).
    fn key_cmp(&self, other: &Self) -> Ordering {
        self.soft_weight
            .total_cmp(&other.soft_weight)
            .then(self.ranks.len().cmp(&other.ranks.len()))
            .then_with(|| self.support.cmp(&other.support))
    }
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.key_cmp(other) == Ordering::Equal
    }
}

impl Eq for Node {}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Node {
    // reversed so the max-heap pops the smallest key
    fn cmp(&self, other: &Self) -> Ordering {
        other.key_cmp(self)
    }
}

/// Patterns in nondecreasing soft weight (maximum-likelihood order).
///
/// Every subset of ranks has a unique parent: drop its largest rank `j` when
/// `j − 1` is also present ("extend"), otherwise lower `j` to `j − 1`
/// ("slide"); `{0}` hangs off the empty set. Children never weigh less than
/// their parent, so a best-first walk of this tree from the empty set emits
/// every subset exactly once in key order.
#[derive(Debug)]
pub struct SgrandStream<'a> {
    ord: &'a ReliabilityOrder,
    heap: BinaryHeap<Node>,
    remaining: u64,
}

/// At most `budget` patterns in ML order (`u64::MAX` for no practical limit).
pub fn sgrand_stream(ord: &ReliabilityOrder, budget: u64) -> SgrandStream<'_> {
    let mut heap = BinaryHeap::new();
    heap.push(Node::new(ord, Vec::new()));
    SgrandStream {
        ord,
        heap,
        remaining: budget,
    }
}

impl SgrandStream<'_> {
    /// Number of patterns waiting in the frontier.
    pub fn frontier_len(&self) -> usize {
        self.heap.len()
    }
}

impl Iterator for SgrandStream<'_> {
    type Item = TestErrorPattern;

    fn next(&mut self) -> Option<TestErrorPattern> {
        if self.remaining == 0 {
            return None;
        }
        let node = self.heap.pop()?;
        self.remaining -= 1;
        let n = self.ord.n();
        let next_rank = node.ranks.last().map_or(0, |&j| j + 1);
        if next_rank < n {
            let mut extend = node.ranks.clone();
            extend.push(next_rank);
            self.heap.push(Node::new(self.ord, extend));
            if let Some((_, head)) = node.ranks.split_last() {
                let mut slide = head.to_vec();
                slide.push(next_rank);
                self.heap.push(Node::new(self.ord, slide));
            }
        }
        Some(TestErrorPattern {
            logistic_weight: node.ranks.iter().map(|r| r + 1).sum(),
            soft_weight: node.soft_weight,
            support: node.support,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::sort_reliability;

    #[test]
    fn three_position_order() {
        let ord = sort_reliability(&[0.1, -0.2, 0.4]).unwrap();
        let got: Vec<(Vec<usize>, f64)> = sgrand_stream(&ord, u64::MAX)
            .map(|e| (e.support, e.soft_weight))
            .collect();
        let expected = [
            (vec![], 0.0),
            (vec![0], 0.1),
            (vec![1], 0.2),
            (vec![0, 1], 0.3),
            (vec![2], 0.4),
            (vec![0, 2], 0.5),
            (vec![1, 2], 0.6),
            (vec![0, 1, 2], 0.7),
        ];
        assert_eq!(got.len(), expected.len());
        for ((s, w), (es, ew)) in got.iter().zip(&expected) {
            assert_eq!(s, es);
            assert!((w - ew).abs() < 1e-12);
        }
    }

    #[test]
    fn budget_truncates() {
        let ord = sort_reliability(&[0.3, 0.2, 0.1, 0.5]).unwrap();
        assert_eq!(sgrand_stream(&ord, 5).count(), 5);
        assert_eq!(sgrand_stream(&ord, u64::MAX).count(), 16);
    }

    #[test]
    fn ties_resolved_by_hamming_weight_then_support() {
        // |llr| = 1, 1, 2: {2} and {0,1} both weigh 2
        let ord = sort_reliability(&[1.0, -1.0, 2.0]).unwrap();
        let got: Vec<Vec<usize>> = sgrand_stream(&ord, u64::MAX).map(|e| e.support).collect();
        assert_eq!(
            got,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1, 2]
            ]
        );
    }
}
