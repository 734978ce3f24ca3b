use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::index::{IndexKind, IndexValue, Method};
use crate::tree::Tree;

/// A spider: one center of degree `delta` with pendant paths of the given
/// lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarlikeSpec {
    pub n: usize,
    pub delta: usize,
    pub lengths: Vec<usize>,
}

impl StarlikeSpec {
    pub fn new(n: usize, delta: usize, lengths: Vec<usize>) -> Result<Self> {
        let spec = StarlikeSpec { n, delta, lengths };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.delta < 3 {
            return Err(Error::InvalidSpec(format!("starlike trees need Δ ≥ 3, got {}", self.delta)));
        }
        if self.lengths.len() != self.delta {
            return Err(Error::InvalidSpec(format!(
                "expected {} branch lengths, got {}",
                self.delta,
                self.lengths.len()
            )));
        }
        if self.lengths.contains(&0) {
            return Err(Error::InvalidSpec("branch lengths must be ≥ 1".into()));
        }
        let total: usize = self.lengths.iter().sum();
        if total + 1 != self.n {
            return Err(Error::InvalidSpec(format!(
                "branch lengths sum to {total}, need n - 1 = {}",
                self.n.saturating_sub(1)
            )));
        }
        Ok(())
    }
}

/// Center is vertex 0; each branch is numbered outward.
pub fn generate_starlike(spec: &StarlikeSpec) -> Result<Tree> {
    spec.validate()?;
    let mut edges = Vec::with_capacity(spec.n - 1);
    let mut next = 1;
    for &len in &spec.lengths {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::from_edges(spec.n, &edges)
}

/// `(n - 1)(Δ - 1)`, shared by every starlike tree of order `n` and
/// maximum degree `Δ`.
pub fn starlike_tw_closed(n: usize, delta: usize) -> Result<IndexValue> {
    if delta < 3 || n < delta + 1 {
        return Err(Error::InvalidSpec(format!("starlike tree needs n ≥ Δ + 1 ≥ 4, got n = {n}, Δ = {delta}")));
    }
    let value = BigUint::from(n - 1) * BigUint::from(delta - 1);
    Ok(IndexValue::new(IndexKind::TerminalWiener, value, Method::ClosedForm))
}

/// Branch-length multisets for order `n` and maximum degree `delta`, each
/// listed non-increasing.
pub fn starlike_compositions(n: usize, delta: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, parts: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if remaining == 0 {
                out.push(acc.clone());
            }
            return;
        }
        // leave at least one for each remaining part
        let hi = max.min(remaining.saturating_sub(parts - 1));
        for first in (1..=hi).rev() {
            if first * parts < remaining {
                break;
            }
            acc.push(first);
            rec(remaining - first, parts - 1, first, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if delta >= 1 && n > delta {
        rec(n - 1, delta, n - 1, &mut Vec::new(), &mut out);
    }
    out
}
