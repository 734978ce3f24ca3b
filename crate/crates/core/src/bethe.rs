//! Generalized Bethe trees, regular dendrimers, and Bethe trees `B(k, d)`.
//!
//! A generalized Bethe tree with `k + 1` levels is given by children counts
//! `(d_1, ..., d_k)`: every vertex on level `i ≤ k` has `d_i` children and
//! level `k + 1` holds the leaves. All closed forms are evaluated with
//! arbitrary-precision integers and have no size limit; the generators
//! refuse trees above a vertex cap.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::index::{IndexKind, IndexValue, Method};
use crate::tree::{RootedTree, Tree};

/// Default vertex cap for the generators.
pub const DEFAULT_MAX_VERTICES: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetheSpec {
    /// Children per vertex on levels `1..=k`.
    pub degrees: Vec<u64>,
}

impl BetheSpec {
    pub fn new(degrees: Vec<u64>) -> Result<Self> {
        let spec = BetheSpec { degrees };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.degrees.is_empty() {
            return Err(Error::InvalidSpec("a generalized Bethe tree needs k ≥ 1 degree parameters".into()));
        }
        if let Some(i) = self.degrees.iter().position(|&d| d == 0) {
            return Err(Error::InvalidSpec(format!("degree parameter d_{} must be ≥ 1", i + 1)));
        }
        Ok(())
    }

    /// `k`; the tree has `k + 1` levels.
    pub fn k(&self) -> usize {
        self.degrees.len()
    }

    /// `n = 1 + Σ_i d_1 ⋯ d_i`.
    pub fn order(&self) -> Result<BigUint> {
        Ok(self.level_counts()?.into_iter().sum())
    }

    /// Vertices per level, `(n_1, ..., n_{k+1})`.
    pub fn level_counts(&self) -> Result<Vec<BigUint>> {
        self.validate()?;
        let mut counts = Vec::with_capacity(self.k() + 1);
        let mut current = BigUint::one();
        counts.push(current.clone());
        for &d in &self.degrees {
            current *= d;
            counts.push(current.clone());
        }
        Ok(counts)
    }

    /// `(m_1, ..., m_k)`: size of the subtree hanging from a level-`(i+1)`
    /// vertex, `1 + d_{i+1} + d_{i+1} d_{i+2} + ... + d_{i+1} ⋯ d_k`.
    pub fn subtree_counts(&self) -> Result<Vec<BigUint>> {
        self.validate()?;
        let k = self.k();
        let mut m = vec![BigUint::one(); k];
        for i in (0..k - 1).rev() {
            m[i] = &m[i + 1] * self.degrees[i + 1] + 1u32;
        }
        Ok(m)
    }

    fn require_branching_root(&self) -> Result<()> {
        self.validate()?;
        if self.degrees[0] < 2 {
            return Err(Error::InvalidSpec(
                "terminal Wiener closed form needs d_1 ≥ 2 (the root would be pendant)".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DendrimerSpec {
    pub k: u32,
    pub d: u64,
}

impl DendrimerSpec {
    pub fn new(k: u32, d: u64) -> Result<Self> {
        let spec = DendrimerSpec { k, d };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 1 {
            return Err(Error::InvalidSpec("dendrimer needs k ≥ 1".into()));
        }
        if self.d < 3 {
            return Err(Error::InvalidSpec(format!("dendrimer needs d ≥ 3, got {}", self.d)));
        }
        Ok(())
    }

    /// The equivalent generalized Bethe parameters `(d, d-1, ..., d-1)`.
    pub fn bethe(&self) -> Result<BetheSpec> {
        self.validate()?;
        let mut degrees = vec![self.d - 1; self.k as usize];
        degrees[0] = self.d;
        BetheSpec::new(degrees)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BetheKdSpec {
    /// Number of levels.
    pub k: u32,
    /// Root degree; other inner vertices have degree `d + 1`.
    pub d: u64,
}

impl BetheKdSpec {
    pub fn new(k: u32, d: u64) -> Result<Self> {
        let spec = BetheKdSpec { k, d };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 2 {
            return Err(Error::InvalidSpec(format!("B(k,d) needs k ≥ 2, got {}", self.k)));
        }
        if self.d < 2 {
            return Err(Error::InvalidSpec(format!("B(k,d) needs d ≥ 2, got {}", self.d)));
        }
        Ok(())
    }

    /// `(d, ..., d)` of length `k - 1`.
    pub fn bethe(&self) -> Result<BetheSpec> {
        self.validate()?;
        BetheSpec::new(vec![self.d; self.k as usize - 1])
    }

    /// `n = (d^k - 1) / (d - 1)`.
    pub fn order(&self) -> Result<BigUint> {
        self.validate()?;
        Ok((BigUint::from(self.d).pow(self.k) - 1u32) / (self.d - 1))
    }
}

pub fn generate_bethe(spec: &BetheSpec) -> Result<RootedTree> {
    generate_bethe_capped(spec, DEFAULT_MAX_VERTICES)
}

/// Builds the tree with breadth-first vertex ids (root 0).
pub fn generate_bethe_capped(spec: &BetheSpec, cap: usize) -> Result<RootedTree> {
    let n = spec.order()?;
    if n > BigUint::from(cap) {
        return Err(Error::SizeCap { requested: n.to_string(), cap });
    }
    let n: usize = n.try_into().expect("bounded by cap");
    let mut parent = Vec::with_capacity(n);
    parent.push(None);
    let mut level_start = 0;
    for &d in &spec.degrees {
        let level_end = parent.len();
        for p in level_start..level_end {
            for _ in 0..d {
                parent.push(Some(p));
            }
        }
        level_start = level_end;
    }
    RootedTree::new(Tree::from_parents(&parent)?, 0)
}

pub fn generate_dendrimer(spec: &DendrimerSpec) -> Result<RootedTree> {
    generate_bethe(&spec.bethe()?)
}

pub fn generate_bethe_kd(spec: &BetheKdSpec) -> Result<RootedTree> {
    generate_bethe(&spec.bethe()?)
}

/// `W = Σ_i n_{i+1} m_i (n - m_i)`.
pub fn wiener_bethe_closed(spec: &BetheSpec) -> Result<IndexValue> {
    Ok(IndexValue::new(IndexKind::Wiener, bethe_cut_sum(spec, 0)?, Method::ClosedForm))
}

/// The published formula `Σ_i (n_{i+1} - 1) m_i (n - m_i)`, which
/// undercounts: kept only to reproduce the erratum.
pub fn wiener_bethe_heydari_incorrect(spec: &BetheSpec) -> Result<IndexValue> {
    Ok(IndexValue::new(IndexKind::Wiener, bethe_cut_sum(spec, 1)?, Method::ClosedFormIncorrect))
}

fn bethe_cut_sum(spec: &BetheSpec, edge_deficit: u32) -> Result<BigUint> {
    let levels = spec.level_counts()?;
    let m = spec.subtree_counts()?;
    let n: BigUint = levels.iter().sum();
    let mut total = BigUint::zero();
    for (i, mi) in m.iter().enumerate() {
        let edges = &levels[i + 1] - edge_deficit;
        total += edges * mi * (&n - mi);
    }
    Ok(total)
}

/// `TW = P (k P - 1 - Σ_{i<k} d_{i+1} ⋯ d_k)` with `P = d_1 ⋯ d_k`.
pub fn terminal_wiener_bethe_closed(spec: &BetheSpec) -> Result<IndexValue> {
    spec.require_branching_root()?;
    let k = spec.k();
    let product: BigInt = spec.degrees.iter().map(|&d| BigInt::from(d)).product();
    let mut suffix_sum = BigInt::zero();
    let mut suffix = BigInt::one();
    for i in (1..k).rev() {
        suffix *= spec.degrees[i];
        suffix_sum += &suffix;
    }
    let value = &product * (BigInt::from(k) * &product - 1 - suffix_sum);
    Ok(IndexValue::from_signed(IndexKind::TerminalWiener, value, Method::ClosedForm))
}

fn exact_div(num: BigInt, den: BigInt) -> BigInt {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "closed form is not integral: remainder {r} mod {den}");
    q
}

/// `W(T_{k,d}) = d / (d-2)^3 [(d-1)^{2k} (k d² - 2(k+1) d + 1) + 2d (d-1)^k - 1]`.
pub fn wiener_dendrimer_closed(spec: &DendrimerSpec) -> Result<IndexValue> {
    spec.validate()?;
    let d = BigInt::from(spec.d);
    let k = BigInt::from(spec.k);
    let q: BigInt = &d - 1;
    let qk = q.pow(spec.k);
    let bracket = &qk * &qk * (&k * &d * &d - 2 * (&k + 1) * &d + 1) + 2 * &d * &qk - 1;
    let value = exact_div(&d * bracket, (&d - BigInt::from(2)).pow(3));
    Ok(IndexValue::from_signed(IndexKind::Wiener, value, Method::ClosedForm))
}

/// `TW(T_{k,d}) = d (d-1)^{k-1} [k d (d-1)^{k-1} + (1 - (d-1)^k) / (d-2)]`.
pub fn terminal_wiener_dendrimer_closed(spec: &DendrimerSpec) -> Result<IndexValue> {
    spec.validate()?;
    let d = BigInt::from(spec.d);
    let q: BigInt = &d - 1;
    let leaves = &d * q.pow(spec.k - 1);
    let tail = exact_div(BigInt::one() - q.pow(spec.k), &d - 2);
    let value = &leaves * (BigInt::from(spec.k) * &leaves + tail);
    Ok(IndexValue::from_signed(IndexKind::TerminalWiener, value, Method::ClosedForm))
}

/// `W(B(k,d)) = d^k / (d-1)^3 [(k-1)(d-1)(d^k + 1) - 2d (d^{k-1} - 1)]`.
pub fn wiener_bethe_kd_closed(spec: &BetheKdSpec) -> Result<IndexValue> {
    spec.validate()?;
    let d = BigInt::from(spec.d);
    let k = BigInt::from(spec.k);
    let dk = d.pow(spec.k);
    let bracket = (&k - 1) * (&d - 1) * (&dk + 1) - 2 * &d * (d.pow(spec.k - 1) - 1);
    let value = exact_div(&dk * bracket, (&d - BigInt::one()).pow(3));
    Ok(IndexValue::from_signed(IndexKind::Wiener, value, Method::ClosedForm))
}

/// `TW(B(k,d)) = d^{k-1} / (d-1) [d^{k-1} (k d - k - d) + 1]`.
pub fn terminal_wiener_bethe_kd_closed(spec: &BetheKdSpec) -> Result<IndexValue> {
    spec.validate()?;
    let d = BigInt::from(spec.d);
    let k = BigInt::from(spec.k);
    let leaves = d.pow(spec.k - 1);
    let bracket = &leaves * (&k * &d - &k - &d) + 1;
    let value = exact_div(&leaves * bracket, &d - 1);
    Ok(IndexValue::from_signed(IndexKind::TerminalWiener, value, Method::ClosedForm))
}
