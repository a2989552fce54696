//! Distinct-part integer partitions in descending lexicographic order.

/// A partition of `m` into strictly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    /// Panics unless `parts` is strictly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] > w[1]) && parts.last().is_none_or(|&p| p > 0),
            "parts must be strictly decreasing and positive: {parts:?}"
        );
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The partitioned integer `m`.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `P`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Largest sum of at most `count` distinct parts drawn from `1..=largest`.
#[inline]
fn max_sum(largest: usize, count: usize) -> usize {
    let j = count.min(largest);
    j * largest - j * j.saturating_sub(1) / 2
}

/// Lazy generator of the distinct partitions of `m` with every part at most
/// `max_part` and at most `max_parts` parts.
///
/// Order: descending largest part, then recursively descending on the rest.
/// [`advance`](Self::advance) lends the current parts without allocating; the
/// `Iterator` impl clones them.
#[derive(Clone, Debug)]
pub struct DistinctPartitions {
    m: usize,
    max_part: usize,
    max_parts: usize,
    parts: Vec<usize>,
    started: bool,
    done: bool,
}

impl DistinctPartitions {
    pub fn new(m: usize, max_part: usize, max_parts: usize) -> Self {
        Self {
            m,
            max_part,
            max_parts,
            parts: Vec::with_capacity(max_parts.min(64)),
            started: false,
            done: false,
        }
    }

    pub fn max_parts(&self) -> usize {
        self.max_parts
    }

    /// Parts of the most recently emitted partition.
    pub fn current(&self) -> &[usize] {
        &self.parts
    }

    /// Greedy (lexicographically largest) completion of `rest` with parts at
    /// most `largest`. Caller guarantees feasibility.
    fn fill(&mut self, mut rest: usize, mut largest: usize) {
        while rest > 0 {
            let x = largest.min(rest);
            self.parts.push(x);
            rest -= x;
            largest = x - 1;
        }
    }

    fn first(&mut self) -> bool {
        let top = self.max_part.min(self.m);
        if self.m > max_sum(top, self.max_parts) {
            return false;
        }
        self.fill(self.m, top);
        true
    }

    fn step(&mut self) -> bool {
        let mut suffix = 0;
        for i in (0..self.parts.len()).rev() {
            let p = self.parts[i];
            suffix += p;
            if p == 1 {
                continue;
            }
            let v = p - 1;
            let rest = suffix - v;
            let slots = self.max_parts - (i + 1);
            if rest <= max_sum(v - 1, slots) {
                self.parts.truncate(i);
                self.parts.push(v);
                self.fill(rest, v - 1);
                return true;
            }
        }
        false
    }

    /// Moves to the next partition and returns its parts.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        let ok = if self.started {
            self.step()
        } else {
            self.started = true;
            self.first()
        };
        if ok {
            Some(&self.parts)
        } else {
            self.done = true;
            None
        }
    }
}

impl Iterator for DistinctPartitions {
    type Item = IntegerPartition;

    fn next(&mut self) -> Option<IntegerPartition> {
        self.advance()
            .map(|p| IntegerPartition { parts: p.to_vec() })
    }
}

pub fn distinct_partitions(m: usize, max_part: usize, max_parts: usize) -> DistinctPartitions {
    DistinctPartitions::new(m, max_part, max_parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(m: usize, a: usize, b: usize) -> Vec<Vec<usize>> {
        distinct_partitions(m, a, b)
            .map(|p| p.parts().to_vec())
            .collect()
    }

    /// Subset-sum enumeration over {1..=max_part}, sorted descending lex.
    fn subset_oracle(m: usize, max_part: usize, max_parts: usize) -> Vec<Vec<usize>> {
        let top = max_part.min(m);
        let mut out: Vec<Vec<usize>> = (0u32..1 << top)
            .map(|mask| {
                (1..=top)
                    .rev()
                    .filter(|&p| mask >> (p - 1) & 1 == 1)
                    .collect::<Vec<_>>()
            })
            .filter(|ps| ps.iter().sum::<usize>() == m && ps.len() <= max_parts)
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    #[test]
    fn five() {
        assert_eq!(collect(5, 5, 5), vec![vec![5], vec![4, 1], vec![3, 2]]);
        assert_eq!(collect(5, 5, 5), subset_oracle(5, 5, 5));
    }

    #[test]
    fn zero_is_the_empty_partition() {
        assert_eq!(collect(0, 4, 4), vec![Vec::<usize>::new()]);
        assert_eq!(collect(0, 1, 1), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn part_count_cap() {
        assert_eq!(collect(3, 3, 1), vec![vec![3]]);
        assert_eq!(
            collect(10, 10, 2),
            vec![vec![10], vec![9, 1], vec![8, 2], vec![7, 3], vec![6, 4]]
        );
    }

    #[test]
    fn part_size_cap() {
        assert_eq!(collect(6, 3, 6), vec![vec![3, 2, 1]]);
        assert!(collect(7, 3, 6).is_empty());
    }

    #[test]
    fn matches_subset_oracle_order_and_content() {
        for m in 0..=20 {
            for max_part in [1, 3, 5, 8, 20] {
                for max_parts in [1, 2, 3, 6, 20] {
                    assert_eq!(
                        collect(m, max_part, max_parts),
                        subset_oracle(m, max_part, max_parts),
                        "m={m} max_part={max_part} max_parts={max_parts}"
                    );
                }
            }
        }
    }

    #[test]
    fn max_sum_closed_form() {
        assert_eq!(max_sum(5, 2), 9);
        assert_eq!(max_sum(3, 10), 6);
        assert_eq!(max_sum(0, 3), 0);
        assert_eq!(max_sum(7, 0), 0);
    }
}
