//! Region of a partial permutation matrix dominated by a pattern, and the
//! transport of a shape-preserving bijection through it.

use super::filling::PartialFilling;
use super::shape::FerrersShape;
use crate::error::{Error, Result};
use crate::occurrence;
use crate::partial::{PartialPerm, Slot};
use crate::perm::{Pattern, Perm};

/// Does `M(>i, >j)` contain `x`? Rows above `i`, columns right of `j`, holes as wildcards.
pub fn is_dominated(m: &PartialPerm, x: &Perm, i: usize, j: usize) -> bool {
    let slots: Vec<Slot> = m.slots()[j..]
        .iter()
        .filter_map(|s| match *s {
            Slot::Hole => Some(Slot::Hole),
            Slot::Value(v) if v > i => Some(Slot::Value(v)),
            Slot::Value(_) => None,
        })
        .collect();
    occurrence::contains(&slots, x.values())
}

/// `M(X)`: the cells of `M` whose top-right corner is dominated by `x`, on the
/// leftmost `k(M)` columns, with ◇-columns inherited from `M`.
pub fn dominated_region(m: &PartialPerm, x: &Perm) -> Result<PartialFilling> {
    if x.is_empty() {
        return Err(Error::invalid("the dominating pattern must be nonempty"));
    }
    let rows = m.n() - m.k();
    let k = (0..=m.n()).rev().find(|&j| is_dominated(m, x, 0, j)).unwrap_or(0);
    let heights: Vec<usize> = (1..=k)
        .map(|j| (0..=rows).rev().find(|&i| is_dominated(m, x, i, j)).unwrap_or(0))
        .collect();
    let diamond: Vec<bool> = (1..=k).map(|j| m.slot(j).is_hole()).collect();
    let ones: Vec<Option<usize>> = (1..=k)
        .map(|j| m.slot(j).value().filter(|&v| v <= heights[j - 1]))
        .collect();
    PartialFilling::new(FerrersShape::new(heights)?, diamond, ones)
}

/// Replace `M(X)` by the image of its compressed form under `inner`.
///
/// `M` must avoid `p` placed below-left of `x`. Empty rows and 1-less standard
/// columns of `M(X)` are stripped, `inner` maps the remaining partial
/// transversal to one of the same shape and ◇-columns, and the result is
/// spliced back into `M`.
pub fn transport(
    m: &PartialPerm,
    x: &Perm,
    p: &Pattern,
    inner: &dyn Fn(&PartialFilling) -> Result<PartialFilling>,
) -> Result<PartialPerm> {
    if m.contains(&p.direct_sum(x)) {
        return Err(Error::invalid(format!(
            "{m} contains the block pattern {} over {}",
            p, x
        )));
    }
    let f = dominated_region(m, x)?;
    let kept_cols: Vec<usize> = (1..=f.cols())
        .filter(|&j| f.is_diamond(j) || f.one_in_column(j).is_some())
        .collect();
    let kept_rows: Vec<usize> = (1..=f.rows()).filter(|&i| f.one_in_row(i).is_some()).collect();
    let rank_of_row = |r: usize| kept_rows.binary_search(&r).expect("row holds a 1") + 1;
    let heights = kept_cols
        .iter()
        .map(|&j| kept_rows.iter().filter(|&&r| r <= f.shape().height(j)).count())
        .collect();
    let compressed = PartialFilling::new(
        FerrersShape::new(heights)?,
        kept_cols.iter().map(|&j| f.is_diamond(j)).collect(),
        kept_cols.iter().map(|&j| f.one_in_column(j).map(rank_of_row)).collect(),
    )?;
    let image = inner(&compressed)?;
    if image.shape() != compressed.shape() || image.diamond_mask() != compressed.diamond_mask() {
        return Err(Error::invalid("inner bijection changed the shape or the ◇-columns"));
    }
    if !image.is_transversal() {
        return Err(Error::invalid("inner bijection did not return a partial transversal"));
    }
    let mut slots = m.slots().to_vec();
    for (t, &j) in kept_cols.iter().enumerate() {
        if let Some(r) = image.one_in_column(t + 1) {
            slots[j - 1] = Slot::Value(kept_rows[r - 1]);
        }
    }
    PartialPerm::new(slots)
}
