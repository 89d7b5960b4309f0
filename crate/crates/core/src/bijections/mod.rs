//! Bijections on single-hole partial permutations and lattice paths.

mod path;
mod simion;
mod split;

pub use path::{
    dyck_to_perm123, hole_bijection_to_path, path_to_hole_bijection, perm123_to_dyck, LatticePath, PathStep,
};
pub use simion::{simion_schmidt, simion_schmidt_inverse, SsTarget};
pub use split::{
    bijection_1234_1324, bijection_1324_1234, case_1342, case_2413, failing_1234_condition, failing_1324_condition,
    failing_1342_condition, failing_2413_condition, Case1342, Case2413, SplitPerm,
};
