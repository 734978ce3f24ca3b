mod common;

use std::collections::HashSet;

use wiener_core::canonical_string;
use wiener_core::extremal::{enumerate_trees, EnumerationQuery};

/// Free trees on n vertices, n = 0..=16.
const FREE_TREE_COUNTS: [usize; 17] = [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320];

#[test]
fn census_oracle_matches_known_counts() {
    for n in 1..=8 {
        assert_eq!(common::census(n), FREE_TREE_COUNTS[n], "oracle census n = {n}");
    }
}

#[test]
fn generator_matches_census_up_to_eight() {
    for n in 1..=8 {
        let count = enumerate_trees(&EnumerationQuery::new(n)).unwrap().count();
        assert_eq!(count, common::census(n), "n = {n}");
    }
}

#[test]
fn generator_counts_up_to_sixteen() {
    for n in 9..=16 {
        let count = enumerate_trees(&EnumerationQuery::new(n)).unwrap().count();
        assert_eq!(count, FREE_TREE_COUNTS[n], "n = {n}");
    }
}

#[test]
fn generator_is_duplicate_free() {
    for n in 1..=10 {
        let trees: Vec<_> = enumerate_trees(&EnumerationQuery::new(n)).unwrap().collect();
        let oracle: HashSet<_> = trees.iter().map(common::tree_key).collect();
        let canon: HashSet<_> = trees.iter().map(canonical_string).collect();
        assert_eq!(oracle.len(), trees.len(), "oracle duplicates at n = {n}");
        assert_eq!(canon.len(), trees.len(), "canonical duplicates at n = {n}");
        assert!(trees.iter().all(|t| t.order() == n));
    }
}

#[test]
fn canonical_form_agrees_with_oracle_key() {
    // two trees share a canonical string exactly when they share an oracle key
    let n = 7;
    let mut pairs = HashSet::new();
    let mut seq = vec![0usize; n - 2];
    for code in 0..7usize.pow(5) {
        let mut c = code;
        for s in seq.iter_mut() {
            *s = c % n;
            c /= n;
        }
        let t = wiener_core::Tree::from_edges(n, &common::prufer_edges(&seq, n)).unwrap();
        pairs.insert((canonical_string(&t), common::tree_key(&t)));
    }
    let canon: HashSet<_> = pairs.iter().map(|p| &p.0).collect();
    let oracle: HashSet<_> = pairs.iter().map(|p| &p.1).collect();
    assert_eq!(pairs.len(), 11);
    assert_eq!(canon.len(), 11);
    assert_eq!(oracle.len(), 11);
}

#[test]
fn delta_filter_partitions_each_order() {
    for n in 3..=11 {
        let total = FREE_TREE_COUNTS[n];
        let by_delta: usize = (2..n)
            .map(|d| {
                let trees: Vec<_> = enumerate_trees(&EnumerationQuery::new(n).with_delta(d)).unwrap().collect();
                assert!(trees.iter().all(|t| t.max_degree() == d));
                trees.len()
            })
            .sum();
        assert_eq!(by_delta, total, "n = {n}");
    }
}
