//! Partial 01-fillings of Ferrers diagrams.

mod dominated;
mod filling;
mod rows;
mod shape;
mod stats;

pub use dominated::{dominated_region, is_dominated, transport};
pub use filling::PartialFilling;
pub use rows::{
    check_conditions, classify_rows, decompose, recompose, split_shape, unique_monotone_transversal, Decomposition,
    Direction, RowClass, Variant,
};
pub use shape::FerrersShape;
pub use stats::{diamond_masks, prefix_stats, verify_shape_star_wilf, CountMismatch, PrefixStats, ShapeWilfReport};
