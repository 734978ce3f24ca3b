//! Isomorph-free generation of free trees.
//!
//! Trees are walked as level sequences of rooted trees in reverse
//! lexicographic order (Beyer–Hedetniemi successor), keeping only the
//! sequences that are canonical for the free tree: rooted at a center,
//! with the first root subtree no taller, no larger, and not
//! lexicographically after the rest (Wright–Richmond–Odlyzko–McKay).
//! Non-canonical stretches are skipped with a single jump.

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Default largest order accepted by [`enumerate_trees`].
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub n: usize,
    /// Keep only trees whose maximum degree is exactly this.
    pub delta: Option<usize>,
    pub cap: usize,
}

impl EnumerationQuery {
    pub fn new(n: usize) -> Self {
        EnumerationQuery { n, delta: None, cap: DEFAULT_ENUMERATION_CAP }
    }

    pub fn with_delta(mut self, delta: usize) -> Self {
        self.delta = Some(delta);
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("tree order must be at least 1".into()));
        }
        if self.n > self.cap {
            return Err(Error::SizeCap { requested: self.n.to_string(), cap: self.cap });
        }
        if let Some(delta) = self.delta {
            let max = self.n.saturating_sub(1);
            if delta > max || (delta == 0 && self.n > 1) {
                return Err(Error::InvalidSpec(format!(
                    "maximum degree {delta} impossible for order {}",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// All free trees of order `n` (filtered by maximum degree), one per
/// isomorphism class.
pub fn enumerate_trees(q: &EnumerationQuery) -> Result<FreeTrees> {
    q.validate()?;
    Ok(FreeTrees { sequences: LevelSequences::new(q.n), delta: q.delta })
}

/// Deterministic slice `part` of `parts` of the enumeration stream, for
/// splitting sweeps across workers. Slices are disjoint and their union is
/// the full stream.
pub fn enumerate_partition(
    q: &EnumerationQuery,
    part: usize,
    parts: usize,
) -> Result<impl Iterator<Item = Tree>> {
    if parts == 0 || part >= parts {
        return Err(Error::InvalidSpec(format!("partition {part} of {parts}")));
    }
    q.validate()?;
    let delta = q.delta;
    Ok(LevelSequences::new(q.n)
        .enumerate()
        .filter(move |(i, _)| i % parts == part)
        .map(|(_, seq)| tree_from_levels(&seq))
        .filter(move |t| delta.is_none_or(|d| t.max_degree() == d)))
}

pub struct FreeTrees {
    sequences: LevelSequences,
    delta: Option<usize>,
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        loop {
            let seq = self.sequences.next()?;
            let t = tree_from_levels(&seq);
            if self.delta.is_none_or(|d| t.max_degree() == d) {
                return Some(t);
            }
        }
    }
}

/// Canonical level sequences (root at level 0) of free trees of order `n`.
pub struct LevelSequences {
    current: Option<Vec<usize>>,
    /// Orders 1 and 2 are emitted directly.
    small: Option<Vec<usize>>,
}

impl LevelSequences {
    pub fn new(n: usize) -> Self {
        if n <= 2 {
            let small = (0..n).collect::<Vec<_>>();
            return LevelSequences { current: None, small: (n > 0).then_some(small) };
        }
        // path rooted at its center
        let mut start: Vec<usize> = (0..=n / 2).collect();
        start.extend(1..n.div_ceil(2));
        LevelSequences { current: Some(start), small: None }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if let Some(s) = self.small.take() {
            return Some(s);
        }
        let mut candidate = self.current.take()?;
        loop {
            match validate_or_jump(candidate) {
                Step::Valid(seq) => {
                    self.current = next_rooted(&seq, None);
                    return Some(seq);
                }
                Step::Jump(Some(next)) => candidate = next,
                Step::Jump(None) => return None,
            }
        }
    }
}

enum Step {
    Valid(Vec<usize>),
    Jump(Option<Vec<usize>>),
}

/// Splits off the first subtree of the root.
///
/// Returns `(left, rest)` where `left` is that subtree's level sequence
/// (relative to its own root) and `rest` is the tree without it.
fn split(seq: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = seq[2..]
        .iter()
        .position(|&l| l == 1)
        .map_or(seq.len(), |i| i + 2);
    let left = seq[1..m].iter().map(|&l| l - 1).collect();
    let mut rest = Vec::with_capacity(seq.len() - m + 1);
    rest.push(0);
    rest.extend_from_slice(&seq[m..]);
    (left, rest)
}

fn validate_or_jump(candidate: Vec<usize>) -> Step {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let valid = rest_height > left_height
        || (rest_height == left_height
            && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return Step::Valid(candidate);
    }
    let p = left.len();
    let Some(mut next) = next_rooted(&candidate, Some(p)) else {
        return Step::Jump(None);
    };
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        // tail becomes a path 1, 2, ..., h + 1 hanging off the root
        for (slot, level) in next[len - (h + 1)..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Step::Jump(Some(next))
}

/// Beyer–Hedetniemi successor of a rooted level sequence; `None` after the
/// star. With `p` given, the step starts at that position.
fn next_rooted(seq: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => seq.iter().rposition(|&l| l != 1)?,
    };
    if p == 0 {
        return None;
    }
    let target = seq[p] - 1;
    let q = seq[..p].iter().rposition(|&l| l == target)?;
    let mut next = seq.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Tree whose preorder depths are `levels` (vertex `i` at depth
/// `levels[i]`, root first).
pub fn tree_from_levels(levels: &[usize]) -> Tree {
    let mut parent = vec![None; levels.len()];
    let mut last_at: Vec<usize> = Vec::new();
    for (v, &l) in levels.iter().enumerate() {
        last_at.truncate(l);
        if l > 0 {
            parent[v] = Some(last_at[l - 1]);
        }
        last_at.push(v);
    }
    Tree::from_parents(&parent).expect("level sequence describes a tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize) -> usize {
        enumerate_trees(&EnumerationQuery::new(n)).unwrap().count()
    }

    #[test]
    fn small_orders() {
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 1);
        assert_eq!(count(3), 1);
        assert_eq!(count(4), 2);
        assert_eq!(count(7), 11);
    }

    #[test]
    fn order_four_is_path_and_star() {
        let trees: Vec<_> = enumerate_trees(&EnumerationQuery::new(4)).unwrap().collect();
        let mut degrees: Vec<_> = trees.iter().map(Tree::max_degree).collect();
        degrees.sort();
        assert_eq!(degrees, vec![2, 3]);
    }

    #[test]
    fn delta_filter() {
        let trees: Vec<_> = enumerate_trees(&EnumerationQuery::new(5).with_delta(3)).unwrap().collect();
        assert_eq!(trees.len(), 1);
        let mut deg: Vec<_> = (0..5).map(|v| trees[0].degree(v)).collect();
        deg.sort();
        assert_eq!(deg, vec![1, 1, 1, 2, 3]);
    }

    #[test]
    fn query_validation() {
        assert!(matches!(enumerate_trees(&EnumerationQuery::new(17)), Err(Error::SizeCap { .. })));
        assert!(enumerate_trees(&EnumerationQuery::new(17).with_cap(17)).is_ok());
        assert!(enumerate_trees(&EnumerationQuery::new(0)).is_err());
        assert!(enumerate_trees(&EnumerationQuery::new(5).with_delta(5)).is_err());
        assert!(enumerate_trees(&EnumerationQuery::new(5).with_delta(0)).is_err());
        assert!(enumerate_trees(&EnumerationQuery::new(1).with_delta(0)).is_ok());
    }

    #[test]
    fn partitions_cover_the_stream() {
        let q = EnumerationQuery::new(9);
        let full: Vec<_> = enumerate_trees(&q).unwrap().collect();
        let mut merged: Vec<Tree> = (0..3)
            .flat_map(|p| enumerate_partition(&q, p, 3).unwrap().collect::<Vec<_>>())
            .collect();
        assert_eq!(merged.len(), full.len());
        let key = |t: &Tree| t.serialize();
        merged.sort_by_key(key);
        let mut sorted = full.clone();
        sorted.sort_by_key(key);
        assert_eq!(merged, sorted);
        assert!(enumerate_partition(&q, 3, 3).is_err());
    }

    #[test]
    fn levels_to_tree() {
        let t = tree_from_levels(&[0, 1, 2, 1, 1]);
        assert_eq!(t.edges(), &[(0, 1), (0, 3), (0, 4), (1, 2)]);
    }
}
