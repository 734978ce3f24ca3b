//! The `T(a, b)` transformation: a rooted tree `R` with two pendant paths
//! of lengths `a` and `b` attached at its root `r`, and the move to
//! `T(a-1, b+1)` that shifts one vertex from the shorter path to the
//! longer one.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index::{terminal_wiener_edge_cut, wiener_edge_cut};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabConfig {
    /// `R`, with at least two vertices.
    pub r_tree: Tree,
    /// Root `r` of `R`.
    pub r: usize,
    pub a: usize,
    pub b: usize,
}

impl TabConfig {
    pub fn new(r_tree: Tree, r: usize, a: usize, b: usize) -> Result<Self> {
        let cfg = TabConfig { r_tree, r, a, b };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.r_tree.order() < 2 {
            return Err(Error::InvalidSpec("R needs at least two vertices".into()));
        }
        self.r_tree.check_vertex(self.r)?;
        if !(self.b > self.a && self.a >= 1) {
            return Err(Error::InvalidSpec(format!("need b > a ≥ 1, got a = {}, b = {}", self.a, self.b)));
        }
        Ok(())
    }
}

/// `R` plus paths `r - u_1 - ... - u_a` and `r - v_1 - ... - v_b`.
///
/// `R` keeps its ids; `u_i` gets id `|R| + i - 1` and `v_j` gets
/// `|R| + a + j - 1`. Either length may be zero.
pub fn attach_paths(r_tree: &Tree, r: usize, a: usize, b: usize) -> Result<Tree> {
    r_tree.check_vertex(r)?;
    let base = r_tree.order();
    let mut edges = r_tree.edges().to_vec();
    let mut next = base;
    for len in [a, b] {
        let mut prev = r;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::from_edges(next, &edges)
}

pub fn build_tab(cfg: &TabConfig) -> Result<Tree> {
    cfg.validate()?;
    attach_paths(&cfg.r_tree, cfg.r, cfg.a, cfg.b)
}

/// `T(a-1, b+1)` on the same `R`; at `a = 1` the short path disappears.
pub fn shift_tab(cfg: &TabConfig) -> Result<Tree> {
    cfg.validate()?;
    attach_paths(&cfg.r_tree, cfg.r, cfg.a - 1, cfg.b + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// `W(T(a,b)) < W(T(a-1,b+1))` for `b > a ≥ 1`.
    WienerIncreases,
    /// `TW(T(a,b)) = TW(T(a-1,b+1))` for `b > a > 1`.
    TerminalWienerInvariant,
    /// `TW(T(1,b)) > TW(T(0,b+1))` for `b > 1`.
    TerminalWienerDrops,
}

/// Outcome of one lemma check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaRecord {
    pub lemma: Lemma,
    pub a: usize,
    pub b: usize,
    /// Index of `T(a, b)`.
    #[serde(with = "crate::decimal")]
    pub before: BigUint,
    /// Index of `T(a-1, b+1)`.
    #[serde(with = "crate::decimal")]
    pub after: BigUint,
    /// Predicted `before - after` where the lemma gives one.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::decimal::option")]
    pub expected_drop: Option<BigUint>,
    pub holds: bool,
}

fn counterexample(rec: LemmaRecord, cfg: &TabConfig) -> Error {
    Error::Counterexample(format!(
        "{:?} fails for R = {:?}, r = {}, a = {}, b = {}: before {}, after {}{}",
        rec.lemma,
        cfg.r_tree.serialize(),
        cfg.r,
        rec.a,
        rec.b,
        rec.before,
        rec.after,
        rec.expected_drop.map(|d| format!(", expected drop {d}")).unwrap_or_default()
    ))
}

fn finish(rec: LemmaRecord, cfg: &TabConfig) -> Result<LemmaRecord> {
    if rec.holds {
        Ok(rec)
    } else {
        Err(counterexample(rec, cfg))
    }
}

pub fn check_lemma_41(cfg: &TabConfig) -> Result<LemmaRecord> {
    let before = wiener_edge_cut(&build_tab(cfg)?).value;
    let after = wiener_edge_cut(&shift_tab(cfg)?).value;
    let holds = before < after;
    let rec = LemmaRecord { lemma: Lemma::WienerIncreases, a: cfg.a, b: cfg.b, before, after, expected_drop: None, holds };
    finish(rec, cfg)
}

pub fn check_lemma_42(cfg: &TabConfig) -> Result<LemmaRecord> {
    cfg.validate()?;
    if cfg.a < 2 {
        return Err(Error::InvalidSpec(format!("invariance needs a > 1, got a = {}", cfg.a)));
    }
    let before = terminal_wiener_edge_cut(&build_tab(cfg)?)?.value;
    let after = terminal_wiener_edge_cut(&shift_tab(cfg)?)?.value;
    let holds = before == after;
    let rec = LemmaRecord {
        lemma: Lemma::TerminalWienerInvariant,
        a: cfg.a,
        b: cfg.b,
        before,
        after,
        expected_drop: Some(BigUint::default()),
        holds,
    };
    finish(rec, cfg)
}

/// Also checks the size of the drop: the distances from `r` to the
/// pendants lying in `R`, plus `b + 1`.
pub fn check_lemma_43(cfg: &TabConfig) -> Result<LemmaRecord> {
    cfg.validate()?;
    if cfg.a != 1 {
        return Err(Error::InvalidSpec(format!("drop lemma needs a = 1, got a = {}", cfg.a)));
    }
    let t = build_tab(cfg)?;
    let before = terminal_wiener_edge_cut(&t)?.value;
    let after = terminal_wiener_edge_cut(&shift_tab(cfg)?)?.value;
    // pendants of the assembled tree that belong to R
    let dist = t.bfs_distances(cfg.r)?;
    let to_r_pendants: usize = t
        .pendant_vertices()
        .into_iter()
        .filter(|&x| x < cfg.r_tree.order())
        .map(|x| dist[x])
        .sum();
    let expected = BigUint::from(to_r_pendants + cfg.b + 1);
    let holds = before > after && &before - &after == expected;
    let rec = LemmaRecord {
        lemma: Lemma::TerminalWienerDrops,
        a: cfg.a,
        b: cfg.b,
        before,
        after,
        expected_drop: Some(expected),
        holds,
    };
    finish(rec, cfg)
}
