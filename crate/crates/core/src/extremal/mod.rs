//! Degree-constrained tree enumeration and the minimum terminal Wiener
//! index over trees of given order and maximum degree.

mod enumerate;
mod search;
mod starlike;
mod tab;

pub use enumerate::{
    enumerate_partition, enumerate_trees, tree_from_levels, EnumerationQuery, FreeTrees,
    LevelSequences, DEFAULT_ENUMERATION_CAP,
};
pub use search::{min_tw_search, min_tw_search_capped, ExtremalReport, DEFAULT_SEARCH_CAP};
pub use starlike::{generate_starlike, starlike_compositions, starlike_tw_closed, StarlikeSpec};
pub use tab::{
    attach_paths, build_tab, check_lemma_41, check_lemma_42, check_lemma_43, shift_tab, Lemma,
    LemmaRecord, TabConfig,
};
