//! Counting `s_n^k(p)` and `s_n^H(p)`, closed forms, classification and export.

mod cache;
mod classify;
mod count;
mod export;
mod formula;
pub mod series;

pub use cache::CountCache;
pub use classify::{classify, same_block, sorted_sizes, ClassPartition, Evidence, PatternEvidence, DEFAULT_HORIZON};
pub use count::{avoiders, avoiders_with_holes, count, count_h, count_h_brute, Method};
pub use export::{parse_bfile, to_bfile, to_csv, to_json, Term};
pub use formula::{binomial, catalan, closed_form, factorial, total_partial_perms};

use crate::error::Result;
use crate::perm::Pattern;

/// `s_n^k(p)` for `n` in `from..=to`.
pub fn sequence(p: &Pattern, k: usize, from: usize, to: usize, method: Method) -> Result<Vec<Term>> {
    (from.max(k)..=to)
        .map(|n| count(n, k, p, method).map(|count| Term { n, count }))
        .collect()
}
