//! Report types and command handlers behind the `wiener` binary.
//!
//! Each `run_*` function takes already-parsed inputs and returns a
//! serializable report; `main.rs` only handles argument parsing, file I/O,
//! rendering, and exit codes.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use wiener_core::extremal::{
    attach_paths, check_lemma_41, check_lemma_42, check_lemma_43, enumerate_trees,
    generate_starlike, min_tw_search_capped, EnumerationQuery, ExtremalReport, LemmaRecord,
    StarlikeSpec, TabConfig,
};
use wiener_core::{
    generate_bethe_capped, terminal_wiener_bethe_closed, terminal_wiener_bethe_kd_closed,
    terminal_wiener_bruteforce, terminal_wiener_dendrimer_closed, terminal_wiener_edge_cut,
    terminal_wiener_recursive, wiener_bethe_closed, wiener_bethe_heydari_incorrect,
    wiener_bethe_kd_closed, wiener_bruteforce, wiener_dendrimer_closed, wiener_edge_cut,
    wiener_recursive, BetheKdSpec, BetheSpec, DendrimerSpec, Error, IndexKind, IndexValue, Result,
    Tree,
};

/// Engine selection for `compute`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComputeMethod {
    /// Edge cut.
    Auto,
    BruteForce,
    EdgeCut,
    Recursive,
    /// Every engine that applies to the input.
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub input: String,
    pub index: IndexKind,
    pub values: Vec<IndexValue>,
    /// True iff every listed value is equal.
    pub agreement: bool,
    pub elapsed_micros: u64,
}

fn default_root(t: &Tree) -> usize {
    (0..t.order()).find(|&v| t.degree(v) >= 2).unwrap_or(0)
}

pub fn run_compute(
    input: &str,
    tree: &Tree,
    index: IndexKind,
    method: ComputeMethod,
    root: Option<usize>,
) -> Result<IndexReport> {
    let started = Instant::now();
    let root = root.unwrap_or_else(|| default_root(tree));
    let brute = || match index {
        IndexKind::Wiener => wiener_bruteforce(tree),
        IndexKind::TerminalWiener => terminal_wiener_bruteforce(tree),
    };
    let edge_cut = || match index {
        IndexKind::Wiener => Ok(wiener_edge_cut(tree)),
        IndexKind::TerminalWiener => terminal_wiener_edge_cut(tree),
    };
    let recursive = || match index {
        IndexKind::Wiener => wiener_recursive(tree, root),
        IndexKind::TerminalWiener => terminal_wiener_recursive(tree, root),
    };
    let values = match method {
        ComputeMethod::Auto | ComputeMethod::EdgeCut => vec![edge_cut()?],
        ComputeMethod::BruteForce => vec![brute()],
        ComputeMethod::Recursive => vec![recursive()?],
        ComputeMethod::All => {
            // skip engines whose preconditions the input does not meet
            let mut v = vec![brute()];
            v.extend(edge_cut().ok());
            v.extend(recursive().ok());
            v
        }
    };
    let agreement = values.windows(2).all(|w| w[0].value == w[1].value);
    Ok(IndexReport {
        input: input.to_string(),
        index,
        values,
        agreement,
        elapsed_micros: started.elapsed().as_micros() as u64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErratumReport {
    pub degrees: Vec<u64>,
    pub heydari: IndexValue,
    pub corrected: IndexValue,
    pub edge_cut: IndexValue,
    pub brute_force: IndexValue,
    /// Corrected closed form, edge cut, and brute force agree.
    pub corrected_agrees: bool,
    /// The published formula differs from the corrected value.
    pub heydari_differs: bool,
}

impl ErratumReport {
    pub fn verified(&self) -> bool {
        self.corrected_agrees && self.heydari_differs
    }
}

pub fn run_verify_erratum(spec: &BetheSpec, cap: usize) -> Result<ErratumReport> {
    let heydari = wiener_bethe_heydari_incorrect(spec)?;
    let corrected = wiener_bethe_closed(spec)?;
    let tree = generate_bethe_capped(spec, cap)?.into_tree();
    let edge_cut = wiener_edge_cut(&tree);
    let brute_force = wiener_bruteforce(&tree);
    Ok(ErratumReport {
        degrees: spec.degrees.clone(),
        corrected_agrees: corrected.value == edge_cut.value && edge_cut.value == brute_force.value,
        heydari_differs: heydari.value != corrected.value,
        heydari,
        corrected,
        edge_cut,
        brute_force,
    })
}

pub fn run_extremal(n: usize, delta: usize, cap: usize) -> Result<ExtremalReport> {
    min_tw_search_capped(n, delta, cap)
}

/// The closed forms exposed by `closed-form`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedForm {
    WienerBethe,
    TwBethe,
    WienerDendrimer,
    TwDendrimer,
    WienerBetheKd,
    TwBetheKd,
}

impl ClosedForm {
    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::WienerBethe => "wiener-bethe",
            ClosedForm::TwBethe => "tw-bethe",
            ClosedForm::WienerDendrimer => "wiener-dendrimer",
            ClosedForm::TwDendrimer => "tw-dendrimer",
            ClosedForm::WienerBetheKd => "wiener-bethe-kd",
            ClosedForm::TwBetheKd => "tw-bethe-kd",
        }
    }
}

/// Parameters of a tree family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum FamilyParams {
    Bethe { degrees: Vec<u64> },
    Dendrimer { k: u32, d: u64 },
    BetheKd { k: u32, d: u64 },
    Starlike { n: usize, delta: usize, lengths: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormReport {
    pub formula: ClosedForm,
    pub parameters: FamilyParams,
    pub value: IndexValue,
}

pub fn run_closed_form(formula: ClosedForm, parameters: FamilyParams) -> Result<ClosedFormReport> {
    let mismatch = || Error::InvalidSpec(format!("{} does not take {:?}", formula.name(), parameters));
    let value = match (&parameters, formula) {
        (FamilyParams::Bethe { degrees }, ClosedForm::WienerBethe) => {
            wiener_bethe_closed(&BetheSpec::new(degrees.clone())?)?
        }
        (FamilyParams::Bethe { degrees }, ClosedForm::TwBethe) => {
            terminal_wiener_bethe_closed(&BetheSpec::new(degrees.clone())?)?
        }
        (&FamilyParams::Dendrimer { k, d }, ClosedForm::WienerDendrimer) => {
            wiener_dendrimer_closed(&DendrimerSpec::new(k, d)?)?
        }
        (&FamilyParams::Dendrimer { k, d }, ClosedForm::TwDendrimer) => {
            terminal_wiener_dendrimer_closed(&DendrimerSpec::new(k, d)?)?
        }
        (&FamilyParams::BetheKd { k, d }, ClosedForm::WienerBetheKd) => {
            wiener_bethe_kd_closed(&BetheKdSpec::new(k, d)?)?
        }
        (&FamilyParams::BetheKd { k, d }, ClosedForm::TwBetheKd) => {
            terminal_wiener_bethe_kd_closed(&BetheKdSpec::new(k, d)?)?
        }
        _ => return Err(mismatch()),
    };
    Ok(ClosedFormReport { formula, parameters, value })
}

pub fn run_generate(params: &FamilyParams, cap: usize) -> Result<Tree> {
    match params {
        FamilyParams::Bethe { degrees } => {
            Ok(generate_bethe_capped(&BetheSpec::new(degrees.clone())?, cap)?.into_tree())
        }
        &FamilyParams::Dendrimer { k, d } => {
            Ok(generate_bethe_capped(&DendrimerSpec::new(k, d)?.bethe()?, cap)?.into_tree())
        }
        &FamilyParams::BetheKd { k, d } => {
            Ok(generate_bethe_capped(&BetheKdSpec::new(k, d)?.bethe()?, cap)?.into_tree())
        }
        FamilyParams::Starlike { n, delta, lengths } => {
            if *n > cap {
                return Err(Error::SizeCap { requested: n.to_string(), cap });
            }
            generate_starlike(&StarlikeSpec::new(*n, *delta, lengths.clone())?)
        }
    }
}

/// One tree in a `T(a, b)` shifting sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformState {
    pub a: usize,
    pub b: usize,
    pub wiener: IndexValue,
    pub terminal_wiener: IndexValue,
    pub tree: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformReport {
    pub root: usize,
    pub states: Vec<TransformState>,
    /// Lemma checks for each step `T(a, b) -> T(a-1, b+1)`.
    pub checks: Vec<LemmaRecord>,
}

/// Applies `steps` shifts starting from `T(a, b)` and checks the lemma
/// that governs each step.
pub fn run_transform(r_tree: &Tree, root: usize, a: usize, b: usize, steps: usize) -> Result<TransformReport> {
    TabConfig::new(r_tree.clone(), root, a, b)?;
    if steps > a {
        return Err(Error::InvalidSpec(format!("cannot shift {steps} times from a = {a}")));
    }
    let mut states = Vec::with_capacity(steps + 1);
    let mut checks = Vec::with_capacity(2 * steps);
    for s in 0..=steps {
        let (sa, sb) = (a - s, b + s);
        let t = attach_paths(r_tree, root, sa, sb)?;
        states.push(TransformState {
            a: sa,
            b: sb,
            wiener: wiener_edge_cut(&t),
            terminal_wiener: terminal_wiener_edge_cut(&t)?,
            tree: t.serialize(),
        });
        if s < steps {
            let cfg = TabConfig::new(r_tree.clone(), root, sa, sb)?;
            checks.push(check_lemma_41(&cfg)?);
            checks.push(if sa > 1 { check_lemma_42(&cfg)? } else { check_lemma_43(&cfg)? });
        }
    }
    Ok(TransformReport { root, states, checks })
}

/// Canonical edge lists of every tree of order `n`, in generation order.
pub fn run_enumerate(n: usize, delta: Option<usize>, cap: usize) -> Result<Vec<Tree>> {
    let mut q = EnumerationQuery::new(n).with_cap(cap);
    q.delta = delta;
    Ok(enumerate_trees(&q)?.collect())
}

/// Human-readable renderings.
pub mod render {
    use super::*;

    pub fn index_report(r: &IndexReport) -> String {
        let mut out = format!("input: {}\nindex: {}\n", r.input, r.index);
        out.push_str(&format!("{:<14} {:>20}\n", "method", "value"));
        for v in &r.values {
            out.push_str(&format!("{:<14} {:>20}\n", v.method.to_string(), v.value));
        }
        out.push_str(&format!("agreement: {}\n", r.agreement));
        out
    }

    pub fn erratum_report(r: &ErratumReport) -> String {
        let degrees: Vec<_> = r.degrees.iter().map(u64::to_string).collect();
        format!(
            "degrees: {}\n{:<26} {:>16}\n{:<26} {:>16}\n{:<26} {:>16}\n{:<26} {:>16}\nverdict: {}\n",
            degrees.join(","),
            "heydari (published)",
            r.heydari.value,
            "corrected closed form",
            r.corrected.value,
            "edge cut on generated tree",
            r.edge_cut.value,
            "brute force on generated",
            r.brute_force.value,
            if r.verified() { "published formula is wrong; corrected form confirmed" } else { "NOT CONFIRMED" }
        )
    }

    pub fn extremal_report(r: &ExtremalReport) -> String {
        let mut out = format!(
            "n = {}, delta = {}, class size {}\nmin TW {}, bound {}, attained {}\nminimizers are exactly the starlike trees: {}\n",
            r.n, r.delta, r.class_size, r.min_tw, r.bound, r.bound_attained, r.starlike_characterized
        );
        for (i, m) in r.minimizers.iter().enumerate() {
            out.push_str(&format!("# minimizer {}\n{}\n", i + 1, m));
        }
        out
    }

    pub fn closed_form_report(r: &ClosedFormReport) -> String {
        format!("{} {}\n", r.formula.name(), r.value.value)
    }

    pub fn transform_report(r: &TransformReport) -> String {
        let mut out = format!("{:>4} {:>4} {:>12} {:>12}\n", "a", "b", "W", "TW");
        for s in &r.states {
            out.push_str(&format!("{:>4} {:>4} {:>12} {:>12}\n", s.a, s.b, s.wiener.value, s.terminal_wiener.value));
        }
        for c in &r.checks {
            out.push_str(&format!("{:?} a={} b={}: {}\n", c.lemma, c.a, c.b, if c.holds { "holds" } else { "FAILS" }));
        }
        if let Some(last) = r.states.last() {
            out.push_str(&last.tree);
            out.push('\n');
        }
        out
    }
}
