//! Perfect matchings, the matching encoding of transversals, chains and
//! prefix blocks, and the bijections built on them.

mod blocks;
mod chains;
mod key;
mod matching;
mod psi;

pub use blocks::{
    all_maximalist, all_minimalist, generating_steps, prefix_blocks, prefix_blocks_single_cover, step_type,
    BlockTracker, Prefix, Step,
};
pub use chains::{
    avoids_cyclic, cyclic_matching, find_cyclic_chain, is_chain, is_cyclic_chain, is_proper_chain, proper_subchain,
};
pub use key::{
    bottom_rows_equal, is_231_12, is_312_21, key_bijection, key_bijection_inverse, key_bijection_traced,
    partial_231_to_312, partial_312_to_231, KeyTrace,
};
pub use matching::{
    contains_matching, covers, crosses, crosses_from_left, left_vertex_set, mu, mu_inverse, nested, nested_below,
    perm_matching, Edge, Matching,
};
pub use psi::{m231, m312, psi, psi_inverse};
