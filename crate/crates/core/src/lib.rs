//! Wiener and terminal Wiener indices of trees.
//!
//! * [`tree`]: the tree model, edge-list format, and distance primitives;
//! * [`index`]: brute-force, edge-cut, and recursive engines for both indices;
//! * [`bethe`]: generalized Bethe trees, dendrimers, `B(k, d)`, and their
//!   closed forms;
//! * [`extremal`]: free-tree enumeration, starlike trees, the `T(a, b)`
//!   transformation, and the minimum terminal Wiener search.
//!
//! ```
//! use wiener_core::{Tree, wiener_edge_cut, terminal_wiener_edge_cut};
//!
//! let p4 = Tree::parse("4\n0 1\n1 2\n2 3").unwrap();
//! assert_eq!(wiener_edge_cut(&p4).to_u128(), Some(10));
//! assert_eq!(terminal_wiener_edge_cut(&p4).unwrap().to_u128(), Some(3));
//! ```

pub mod bethe;
pub mod canonical;
pub mod decimal;
pub mod error;
pub mod exact;
pub mod extremal;
pub mod index;
pub mod tree;

pub use bethe::{
    generate_bethe, generate_bethe_capped, generate_bethe_kd, generate_dendrimer,
    terminal_wiener_bethe_closed, terminal_wiener_bethe_kd_closed,
    terminal_wiener_dendrimer_closed, wiener_bethe_closed, wiener_bethe_heydari_incorrect,
    wiener_bethe_kd_closed, wiener_dendrimer_closed, BetheKdSpec, BetheSpec, DendrimerSpec,
    DEFAULT_MAX_VERTICES,
};
pub use canonical::{canonical_string, canonical_tree};
pub use error::{Error, Result};
pub use extremal::{
    enumerate_trees, min_tw_search, EnumerationQuery, ExtremalReport, StarlikeSpec, TabConfig,
};
pub use index::{
    decompose_at, terminal_wiener_bruteforce, terminal_wiener_edge_cut,
    terminal_wiener_recursive, terminal_wiener_recursive_with, wiener_bruteforce,
    wiener_edge_cut, wiener_recursive, wiener_recursive_with, DecompositionView, IndexKind,
    IndexValue, Method, SubRootPolicy,
};
pub use tree::{EdgeCut, RootedTree, Tree};
