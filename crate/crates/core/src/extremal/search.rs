use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::enumerate::{enumerate_trees, EnumerationQuery};
use super::starlike::{generate_starlike, starlike_compositions, starlike_tw_closed, StarlikeSpec};
use crate::canonical::canonical_string;
use crate::error::{Error, Result};
use crate::index::terminal_wiener_edge_cut;

/// Default largest order accepted by [`min_tw_search`].
pub const DEFAULT_SEARCH_CAP: usize = 12;

/// Result of an exhaustive minimum-TW search over trees of order `n` with
/// maximum degree `delta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub delta: usize,
    #[serde(with = "crate::decimal")]
    pub min_tw: BigUint,
    /// `(n - 1)(delta - 1)`.
    #[serde(with = "crate::decimal")]
    pub bound: BigUint,
    pub bound_attained: bool,
    /// Canonical edge lists of every minimizer, sorted.
    pub minimizers: Vec<String>,
    pub class_size: usize,
    /// Minimizers are exactly the starlike trees with these parameters.
    pub starlike_characterized: bool,
}

impl ExtremalReport {
    pub fn verified(&self) -> bool {
        self.bound_attained && self.starlike_characterized
    }
}

pub fn min_tw_search(n: usize, delta: usize) -> Result<ExtremalReport> {
    min_tw_search_capped(n, delta, DEFAULT_SEARCH_CAP)
}

pub fn min_tw_search_capped(n: usize, delta: usize, cap: usize) -> Result<ExtremalReport> {
    if n > cap {
        return Err(Error::SizeCap { requested: n.to_string(), cap });
    }
    if n < 4 || delta < 3 || delta > n - 1 {
        return Err(Error::InvalidSpec(format!("need 4 ≤ n and 3 ≤ Δ ≤ n - 1, got n = {n}, Δ = {delta}")));
    }
    let query = EnumerationQuery::new(n).with_delta(delta).with_cap(cap);
    let mut class_size = 0;
    let mut min_tw: Option<BigUint> = None;
    let mut minimizers = BTreeSet::new();
    for t in enumerate_trees(&query)? {
        class_size += 1;
        let tw = terminal_wiener_edge_cut(&t)?.value;
        match &min_tw {
            Some(m) if tw > *m => continue,
            Some(m) if tw == *m => {}
            _ => {
                min_tw = Some(tw);
                minimizers.clear();
            }
        }
        minimizers.insert(canonical_string(&t));
    }
    let min_tw = min_tw.ok_or(Error::EmptyClass { n, delta })?;
    let starlike: BTreeSet<String> = starlike_compositions(n, delta)
        .into_iter()
        .map(|lengths| {
            let spec = StarlikeSpec::new(n, delta, lengths)?;
            Ok(canonical_string(&generate_starlike(&spec)?))
        })
        .collect::<Result<_>>()?;
    let bound = starlike_tw_closed(n, delta)?.value;
    Ok(ExtremalReport {
        n,
        delta,
        bound_attained: min_tw == bound,
        min_tw,
        bound,
        starlike_characterized: minimizers == starlike,
        minimizers: minimizers.into_iter().collect(),
        class_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_five() {
        let r = min_tw_search(5, 3).unwrap();
        assert_eq!(r.min_tw, BigUint::from(8u32));
        assert_eq!(r.class_size, 1);
        assert_eq!(r.minimizers.len(), 1);
        assert!(r.verified());
    }

    #[test]
    fn order_four_star() {
        let r = min_tw_search(4, 3).unwrap();
        assert_eq!(r.min_tw, BigUint::from(6u32));
        assert!(r.verified());
    }

    #[test]
    fn star_classes_are_singletons() {
        for n in 4..=10 {
            let r = min_tw_search(n, n - 1).unwrap();
            assert_eq!(r.class_size, 1);
            assert_eq!(r.min_tw, BigUint::from((n - 1) * (n - 2)));
        }
    }

    #[test]
    fn preconditions() {
        assert!(matches!(min_tw_search(13, 3), Err(Error::SizeCap { .. })));
        assert!(min_tw_search_capped(13, 12, 13).is_ok());
        assert!(min_tw_search(3, 2).is_err());
        assert!(min_tw_search(6, 2).is_err());
        assert!(min_tw_search(6, 6).is_err());
    }
}
