use super::TestErrorPattern;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Channel LLRs together with their hard decision and reliability ranking.
#[derive(Clone, Debug)]
pub struct ReliabilityOrder {
    llr: Vec<f64>,
    hard: BitVector,
    /// `ind[r]` is the position with the `(r+1)`-th smallest `|llr|`.
    ind: Vec<usize>,
    /// 1-based rank of each position.
    rank: Vec<usize>,
    /// `|llr[ind[r]]|`, nondecreasing.
    magnitude: Vec<f64>,
}

/// Sorts positions by ascending `|llr|`, ties by ascending position.
/// The hard decision is 1 exactly where `llr < 0`.
pub fn sort_reliability(llr: &[f64]) -> Result<ReliabilityOrder> {
    if llr.is_empty() {
        return Err(Error::InvalidInput("empty LLR vector".into()));
    }
    if let Some(i) = llr.iter().position(|x| !x.is_finite()) {
        return Err(Error::InvalidInput(format!("LLR {i} is not finite")));
    }
    let n = llr.len();
    let mut ind: Vec<usize> = (0..n).collect();
    ind.sort_by(|&a, &b| llr[a].abs().total_cmp(&llr[b].abs()).then(a.cmp(&b)));
    let mut rank = vec![0; n];
    for (r, &i) in ind.iter().enumerate() {
        rank[i] = r + 1;
    }
    let magnitude = ind.iter().map(|&i| llr[i].abs()).collect();
    let mut hard = BitVector::zeros(n);
    for (i, &x) in llr.iter().enumerate() {
        if x < 0.0 {
            hard.set(i, true);
        }
    }
    Ok(ReliabilityOrder {
        llr: llr.to_vec(),
        hard,
        ind,
        rank,
        magnitude,
    })
}

impl ReliabilityOrder {
    pub fn n(&self) -> usize {
        self.llr.len()
    }

    pub fn llr(&self) -> &[f64] {
        &self.llr
    }

    pub fn hard(&self) -> &BitVector {
        &self.hard
    }

    pub fn ind(&self) -> &[usize] {
        &self.ind
    }

    /// 1-based reliability rank of `position`.
    pub fn rank_of(&self, position: usize) -> usize {
        self.rank[position]
    }

    /// `|llr|` of the position with 0-based rank `r`.
    pub fn magnitude_at_rank(&self, r: usize) -> f64 {
        self.magnitude[r]
    }

    /// Pattern flipping the positions with the given 1-based ranks.
    pub fn pattern_from_ranks(&self, ranks: &[usize]) -> TestErrorPattern {
        let mut support: Vec<usize> = ranks.iter().map(|&r| self.ind[r - 1]).collect();
        support.sort_unstable();
        let soft_weight = ranks
            .iter()
            .rev()
            .fold(0.0, |acc, &r| acc + self.magnitude[r - 1]);
        TestErrorPattern {
            support,
            logistic_weight: ranks.iter().sum(),
            soft_weight,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_ascending_is_identity() {
        let ord = sort_reliability(&[0.1, -0.2, 0.3, 4.0]).unwrap();
        assert_eq!(ord.ind(), &[0, 1, 2, 3]);
    }

    #[test]
    fn hand_sorted_example() {
        let ord = sort_reliability(&[-0.1, 0.9, -0.3]).unwrap();
        assert_eq!(ord.ind(), &[0, 2, 1]);
        assert_eq!(ord.hard().to_bits(), vec![1, 0, 1]);
        assert_eq!((ord.rank_of(0), ord.rank_of(1), ord.rank_of(2)), (1, 3, 2));
    }

    #[test]
    fn ties_break_by_position() {
        let ord = sort_reliability(&[0.5, -0.5]).unwrap();
        assert_eq!(ord.ind(), &[0, 1]);
    }

    #[test]
    fn rejects_empty_and_non_finite() {
        assert!(matches!(sort_reliability(&[]), Err(Error::InvalidInput(_))));
        assert!(matches!(
            sort_reliability(&[1.0, f64::NAN]),
            Err(Error::InvalidInput(_))
        ));
    }
}
