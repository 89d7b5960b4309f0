//! Pattern avoidance in partial permutations.
//!
//! A partial permutation is a permutation with some entries replaced by
//! holes; it avoids a pattern when every way of filling the holes does.
//! The crate provides checkers, exact counters, equivalence classifiers and
//! a set of constructive bijections on permutations, Ferrers fillings,
//! perfect matchings and lattice paths.

pub mod bijections;
pub mod enumerate;
mod error;
pub mod fillings;
pub mod matchings;
mod occurrence;
pub mod ordergraph;
pub mod partial;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
pub use partial::{HoleSet, PartialPerm, Slot};
pub use perm::{all_perms, standardize, Pattern, Perm};
