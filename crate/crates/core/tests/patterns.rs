use std::collections::HashSet;

use grand::oracle::{count_distinct_partitions, reliability_ranks, sort_all_patterns, Metric};
use grand::patterns::{
    distinct_partitions, grandab_pattern_count, grandab_stream, max_logistic_weight,
    orbgrand_pattern_count, orbgrand_stream, pattern_from_partition, sgrand_stream,
    sort_reliability, GrandabStream, IntegerPartition,
};
use proptest::prelude::*;

fn llr_vec(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<f64>> {
    n.prop_flat_map(|n| proptest::collection::vec(prop_oneof![-8.0..-0.01f64, 0.01..8.0f64], n))
}

#[test]
fn sort_reliability_examples() {
    let ord = sort_reliability(&[0.5, -0.1, 2.0, -0.3]).unwrap();
    assert_eq!(ord.ind(), &[1, 3, 0, 2]);
    assert_eq!(
        (1..=4).map(|r| ord.ind()[r - 1]).collect::<Vec<_>>(),
        vec![1, 3, 0, 2]
    );
    assert_eq!(ord.hard().to_bits(), vec![0, 1, 0, 1]);
    assert_eq!(ord.rank_of(0), 3);

    let ties = sort_reliability(&[0.2, -0.2, 0.2]).unwrap();
    assert_eq!(ties.ind(), &[0, 1, 2]);
    assert!(sort_reliability(&[]).is_err());
    assert!(sort_reliability(&[0.1, f64::NAN]).is_err());
}

#[test]
fn grandab_counts() {
    assert_eq!(grandab_stream(4, 2).unwrap().count(), 1 + 10);
    for n in 1..=32 {
        for ab in 0..=4.min(n) {
            let emitted = grandab_stream(n, ab).unwrap().count() as u128;
            assert_eq!(emitted, 1 + grandab_pattern_count(n, ab), "n={n} ab={ab}");
        }
    }
    assert!(grandab_stream(3, 4).is_err());
}

#[test]
fn grandab_is_weight_then_lexicographic() {
    let supports: Vec<Vec<usize>> = grandab_stream(4, 2).unwrap().map(|e| e.support).collect();
    assert_eq!(
        supports,
        vec![
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
            vec![2, 3]
        ]
    );
}

#[test]
fn partitions_match_counting_oracle() {
    for m in 0..=30 {
        for max_parts in [1, 2, 3, 5, 30] {
            for max_part in [m, m / 2 + 1, 8] {
                let parts: Vec<Vec<usize>> = distinct_partitions(m, max_part, max_parts)
                    .map(|p| p.parts().to_vec())
                    .collect();
                let expected = count_distinct_partitions(m, max_part, max_parts).unwrap();
                assert_eq!(
                    parts.len() as u64,
                    expected,
                    "m={m} max_part={max_part} max_parts={max_parts}"
                );
                for p in &parts {
                    assert_eq!(p.iter().sum::<usize>(), m);
                    assert!(p.windows(2).all(|w| w[0] > w[1]));
                    assert!(p.len() <= max_parts);
                    assert!(p.first().is_none_or(|&x| x <= max_part));
                }
                assert!(
                    parts.windows(2).all(|w| w[0] > w[1]),
                    "descending lexicographic"
                );
            }
        }
    }
}

#[test]
fn partition_larger_than_length_is_rejected() {
    let ord = sort_reliability(&[0.1, 0.2, 0.3]).unwrap();
    assert!(pattern_from_partition(&IntegerPartition::new(vec![4]), &ord).is_err());
}

#[test]
fn orbgrand_covers_every_subset_once_for_small_n() {
    for n in 1..=8 {
        let llr: Vec<f64> = (0..n)
            .map(|i| ((i * 7 + 3) % 11) as f64 * 0.13 + 0.05)
            .collect();
        let ord = sort_reliability(&llr).unwrap();
        let all: Vec<Vec<usize>> = orbgrand_stream(&ord, max_logistic_weight(n), n)
            .unwrap()
            .map(|e| e.support)
            .collect();
        assert_eq!(all.len(), 1 << n);
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 1 << n);
    }
}

#[test]
fn orbgrand_rejects_excessive_weight() {
    let ord = sort_reliability(&[0.1, 0.2, 0.3]).unwrap();
    assert!(orbgrand_stream(&ord, 7, 3).is_err());
}

#[test]
fn orbgrand_count_matches_emitted() {
    let llr: Vec<f64> = (0..20).map(|i| 0.1 + i as f64).collect();
    let ord = sort_reliability(&llr).unwrap();
    for (lw, hw) in [(0, 5), (10, 2), (40, 4), (60, 20)] {
        let emitted = orbgrand_stream(&ord, lw, hw).unwrap().count() as u128;
        assert_eq!(
            emitted,
            orbgrand_pattern_count(20, lw, hw),
            "lw={lw} hw={hw}"
        );
    }
}

#[test]
fn grandab_ranked_annotates_weights() {
    let ord = sort_reliability(&[0.4, -0.1, 0.3]).unwrap();
    let e: Vec<_> = GrandabStream::ranked(&ord, 1).unwrap().collect();
    assert_eq!(e[1].support, vec![0]);
    assert_eq!(e[1].logistic_weight, 3);
    assert!((e[2].soft_weight - 0.1).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbgrand_logistic_weight_is_nondecreasing_and_exact(llr in llr_vec(1..=24), hw in 1usize..6) {
        let n = llr.len();
        let ord = sort_reliability(&llr).unwrap();
        let ranks = reliability_ranks(&llr);
        let lw_max = max_logistic_weight(n).min(40);
        let mut last = 0;
        let mut seen = HashSet::new();
        for e in orbgrand_stream(&ord, lw_max, hw).unwrap() {
            let lw: usize = e.support.iter().map(|&i| ranks[i]).sum();
            prop_assert_eq!(lw, e.logistic_weight);
            prop_assert!(lw >= last);
            prop_assert!(lw <= lw_max);
            prop_assert!(e.hamming_weight() <= hw);
            prop_assert!(seen.insert(e.support.clone()));
            last = lw;
        }
    }

    #[test]
    fn orbgrand_matches_logistic_oracle_for_small_n(llr in llr_vec(1..=8)) {
        let n = llr.len();
        let ord = sort_reliability(&llr).unwrap();
        let got: Vec<_> = orbgrand_stream(&ord, max_logistic_weight(n), n).unwrap().collect();
        let oracle = sort_all_patterns(&llr, Metric::Logistic).unwrap();
        prop_assert_eq!(got.len(), oracle.len());
        let got_set: HashSet<Vec<usize>> = got.iter().map(|e| e.support.clone()).collect();
        let oracle_set: HashSet<Vec<usize>> = oracle.iter().map(|s| s.support.clone()).collect();
        prop_assert_eq!(got_set, oracle_set);
        for (e, o) in got.iter().zip(&oracle) {
            prop_assert_eq!(e.logistic_weight as f64, o.metric);
        }
    }

    #[test]
    fn sgrand_prefix_matches_soft_oracle(llr in llr_vec(1..=12)) {
        let ord = sort_reliability(&llr).unwrap();
        let oracle = sort_all_patterns(&llr, Metric::Soft).unwrap();
        let prefix = oracle.len().min(500);
        let got: Vec<_> = sgrand_stream(&ord, prefix as u64).collect();
        prop_assert_eq!(got.len(), prefix);
        for (e, o) in got.iter().zip(&oracle) {
            prop_assert!((e.soft_weight - o.metric).abs() <= 1e-9, "{} vs {}", e.soft_weight, o.metric);
            if e.support != o.support {
                // only a tie may reorder patterns
                let w = oracle.iter().find(|s| s.support == e.support).unwrap().metric;
                prop_assert!((w - o.metric).abs() <= 1e-9);
            }
        }
        let distinct: HashSet<Vec<usize>> = got.iter().map(|e| e.support.clone()).collect();
        prop_assert_eq!(distinct.len(), prefix);
    }

    #[test]
    fn sgrand_soft_weight_is_nondecreasing(llr in llr_vec(16..=64)) {
        let ord = sort_reliability(&llr).unwrap();
        let weights: Vec<f64> = sgrand_stream(&ord, 2000).map(|e| e.soft_weight).collect();
        prop_assert!(weights.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(weights[0], 0.0);
    }
}
