//! Wiener and terminal Wiener indices, three ways each.
//!
//! * brute force: all-pairs BFS, the reference oracle;
//! * edge cut: one rooted pass summing `n1 * n2` (or `p1 * p2`) per edge;
//! * recursive: decomposition at a root into the components of `T - w`.
//!
//! The recursive terminal Wiener engine works with the pendants *of the
//! whole tree* that fall into each branch. A branch root that becomes a
//! leaf of its standalone branch is not counted, because in the assembled
//! tree it still has its edge to `w`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactSum;
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexKind {
    Wiener,
    TerminalWiener,
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexKind::Wiener => "wiener",
            IndexKind::TerminalWiener => "terminal-wiener",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BruteForce,
    EdgeCut,
    Recursive,
    ClosedForm,
    ClosedFormIncorrect,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BruteForce => "brute-force",
            Method::EdgeCut => "edge-cut",
            Method::Recursive => "recursive",
            Method::ClosedForm => "closed-form",
            Method::ClosedFormIncorrect => "closed-form-incorrect",
        })
    }
}

/// An exact index value together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexValue {
    pub kind: IndexKind,
    #[serde(with = "crate::decimal")]
    pub value: BigUint,
    pub method: Method,
}

impl IndexValue {
    pub fn new(kind: IndexKind, value: impl Into<BigUint>, method: Method) -> Self {
        IndexValue { kind, value: value.into(), method }
    }

    pub(crate) fn from_signed(kind: IndexKind, value: BigInt, method: Method) -> Self {
        let value = value
            .to_biguint()
            .expect("index formulas evaluate to non-negative integers");
        IndexValue { kind, value, method }
    }

    /// The value as `u128`, if it fits.
    pub fn to_u128(&self) -> Option<u128> {
        self.value.to_u128()
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {} ({})", self.kind, self.value, self.method)
    }
}

pub fn wiener_bruteforce(t: &Tree) -> IndexValue {
    let mut sum = ExactSum::new();
    for s in 0..t.order() {
        let dist = t.bfs_unchecked(s);
        for &d in &dist[s + 1..] {
            sum.add(d as u128);
        }
    }
    IndexValue::new(IndexKind::Wiener, sum.into_biguint(), Method::BruteForce)
}

pub fn wiener_edge_cut(t: &Tree) -> IndexValue {
    let mut sum = ExactSum::new();
    if t.order() >= 2 {
        for c in t.edge_cuts().expect("order checked") {
            sum.add_product(c.n1 as u128, c.n2 as u128);
        }
    }
    IndexValue::new(IndexKind::Wiener, sum.into_biguint(), Method::EdgeCut)
}

pub fn terminal_wiener_bruteforce(t: &Tree) -> IndexValue {
    let pendants = t.pendant_vertices();
    let mut sum = ExactSum::new();
    for (i, &x) in pendants.iter().enumerate() {
        let dist = t.bfs_unchecked(x);
        for &y in &pendants[i + 1..] {
            sum.add(dist[y] as u128);
        }
    }
    IndexValue::new(IndexKind::TerminalWiener, sum.into_biguint(), Method::BruteForce)
}

pub fn terminal_wiener_edge_cut(t: &Tree) -> Result<IndexValue> {
    let mut sum = ExactSum::new();
    for c in t.edge_cuts()? {
        sum.add_product(c.p1 as u128, c.p2 as u128);
    }
    Ok(IndexValue::new(IndexKind::TerminalWiener, sum.into_biguint(), Method::EdgeCut))
}

/// How the recursive engines pick a root inside a branch.
///
/// Any vertex of degree at least 2 works; the result must not depend on
/// the choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SubRootPolicy {
    /// The branch root itself when it has degree ≥ 2, else the lowest id.
    #[default]
    BranchRoot,
    LowestId,
    HighestId,
}

impl SubRootPolicy {
    fn pick(self, t: &Tree) -> usize {
        let mut inner = (0..t.order()).filter(|&v| t.degree(v) >= 2);
        match self {
            SubRootPolicy::BranchRoot if t.degree(0) >= 2 => Some(0),
            SubRootPolicy::BranchRoot | SubRootPolicy::LowestId => inner.next(),
            SubRootPolicy::HighestId => inner.next_back(),
        }
        .expect("a tree of order ≥ 3 has an inner vertex")
    }
}

/// One component of `T - w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    /// The component as a standalone tree; its vertex 0 is the branch root.
    pub subtree: Tree,
    /// Branch root `w_i` as an id of the original tree.
    pub root: usize,
    /// `vertices[j]` is the original id of subtree vertex `j`.
    pub vertices: Vec<usize>,
    /// `n_i`.
    pub order: usize,
    /// `l_i`: pendants of the assembled tree lying in this branch.
    pub pendant_count: usize,
    /// Pendants of the subtree taken on its own. Differs from
    /// `pendant_count` only when the branch root is a leaf of the subtree.
    pub standalone_pendant_count: usize,
    /// `d'_i`: distances from the branch root to the pendants counted in
    /// `pendant_count`.
    pub pendant_distance_sum: u128,
    /// `d_i`: distances from the branch root to every branch vertex.
    pub distance_sum: u128,
    /// Subtree vertices that are pendants of the assembled tree.
    pub terminals: Vec<bool>,
}

/// A tree seen from a root `w` as `w` joined to the roots of its branches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionView {
    pub root: usize,
    /// Branches sorted by ascending branch root.
    pub branches: Vec<Branch>,
    /// `n`.
    pub order: usize,
    /// `l`: pendant count of the assembled tree.
    pub pendant_count: usize,
}

pub fn decompose_at(t: &Tree, root: usize) -> Result<DecompositionView> {
    t.check_vertex(root)?;
    if t.degree(root) == 0 {
        return Err(Error::RootDegree { root, degree: 0, required: 1 });
    }
    let terminals: Vec<bool> = (0..t.order()).map(|v| t.is_pendant(v)).collect();
    let view = decompose_with_terminals(t, root, &terminals);
    Ok(view)
}

fn decompose_with_terminals(t: &Tree, root: usize, terminals: &[bool]) -> DecompositionView {
    let mut branches = Vec::with_capacity(t.degree(root));
    for &w in t.neighbors(root) {
        // BFS inside the component of T - root containing w
        let mut vertices = vec![w];
        let mut seen = vec![false; t.order()];
        seen[root] = true;
        seen[w] = true;
        let mut head = 0;
        while head < vertices.len() {
            let u = vertices[head];
            head += 1;
            for &x in t.neighbors(u) {
                if !seen[x] {
                    seen[x] = true;
                    vertices.push(x);
                }
            }
        }
        let subtree = t.induced(&vertices);
        let sub_terminals: Vec<bool> = vertices.iter().map(|&v| terminals[v]).collect();
        let dist = subtree.bfs_unchecked(0);
        let pendant_distance_sum = dist
            .iter()
            .zip(&sub_terminals)
            .filter(|(_, &is_t)| is_t)
            .map(|(&d, _)| d as u128)
            .sum();
        branches.push(Branch {
            root: w,
            order: vertices.len(),
            pendant_count: sub_terminals.iter().filter(|&&x| x).count(),
            standalone_pendant_count: subtree.pendant_vertices().len(),
            pendant_distance_sum,
            distance_sum: dist.iter().map(|&d| d as u128).sum(),
            terminals: sub_terminals,
            vertices,
            subtree,
        });
    }
    DecompositionView {
        root,
        branches,
        order: t.order(),
        pendant_count: t.pendant_vertices().len(),
    }
}

fn check_recursive_root(t: &Tree, root: usize) -> Result<()> {
    t.check_vertex(root)?;
    if t.order() < 3 {
        return Err(Error::OrderTooSmall { required: 3, actual: t.order() });
    }
    if t.degree(root) < 2 {
        return Err(Error::RootDegree { root, degree: t.degree(root), required: 2 });
    }
    Ok(())
}

pub fn wiener_recursive(t: &Tree, root: usize) -> Result<IndexValue> {
    wiener_recursive_with(t, root, SubRootPolicy::default())
}

pub fn wiener_recursive_with(t: &Tree, root: usize, policy: SubRootPolicy) -> Result<IndexValue> {
    check_recursive_root(t, root)?;
    let value = wiener_at(t, root, policy);
    Ok(IndexValue::from_signed(IndexKind::Wiener, value, Method::Recursive))
}

/// `W(T) = Σ [W(T_i) + (n - n_i) d(w_i) - n_i²] + n(n - 1)`.
fn wiener_at(t: &Tree, root: usize, policy: SubRootPolicy) -> BigInt {
    let n = BigInt::from(t.order());
    let view = decompose_with_terminals(t, root, &vec![false; t.order()]);
    let mut total = &n * (&n - 1);
    for b in &view.branches {
        let ni = BigInt::from(b.order);
        total += wiener_of_branch(&b.subtree, policy);
        total += (&n - &ni) * BigInt::from(b.distance_sum);
        total -= &ni * &ni;
    }
    total
}

fn wiener_of_branch(t: &Tree, policy: SubRootPolicy) -> BigInt {
    match t.order() {
        1 => BigInt::from(0),
        2 => BigInt::from(1),
        _ => wiener_at(t, policy.pick(t), policy),
    }
}

pub fn terminal_wiener_recursive(t: &Tree, root: usize) -> Result<IndexValue> {
    terminal_wiener_recursive_with(t, root, SubRootPolicy::default())
}

pub fn terminal_wiener_recursive_with(
    t: &Tree,
    root: usize,
    policy: SubRootPolicy,
) -> Result<IndexValue> {
    check_recursive_root(t, root)?;
    let terminals: Vec<bool> = (0..t.order()).map(|v| t.is_pendant(v)).collect();
    let value = terminal_wiener_at(t, root, &terminals, policy);
    debug_assert!(!value.is_negative());
    Ok(IndexValue::from_signed(IndexKind::TerminalWiener, value, Method::Recursive))
}

/// `TW(T) = Σ [TW(T_i) + (l - l_i) d'(w_i) - l_i²] + l²`, where pendant
/// sets are restricted to `terminals` and `root` is not a terminal.
fn terminal_wiener_at(t: &Tree, root: usize, terminals: &[bool], policy: SubRootPolicy) -> BigInt {
    debug_assert!(!terminals[root]);
    let view = decompose_with_terminals(t, root, terminals);
    let l: usize = view.branches.iter().map(|b| b.pendant_count).sum();
    let l = BigInt::from(l);
    let mut total = &l * &l;
    for b in &view.branches {
        let li = BigInt::from(b.pendant_count);
        total += terminal_wiener_of_branch(&b.subtree, &b.terminals, policy);
        total += (&l - &li) * BigInt::from(b.pendant_distance_sum);
        total -= &li * &li;
    }
    total
}

fn terminal_wiener_of_branch(t: &Tree, terminals: &[bool], policy: SubRootPolicy) -> BigInt {
    match t.order() {
        1 => BigInt::from(0),
        2 => BigInt::from(u8::from(terminals[0] && terminals[1])),
        // terminals have degree ≤ 1 inside a branch, so an inner vertex never is one
        _ => terminal_wiener_at(t, policy.pick(t), terminals, policy),
    }
}
