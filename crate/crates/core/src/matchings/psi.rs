//! The block-preserving bijection from m312-avoiding to cyclic-chain-avoiding matchings.

use super::blocks::{all_maximalist, all_minimalist, BlockTracker, Step};
use super::matching::{perm_matching, Edge, Matching};
use crate::error::{Error, Result};

/// The matching of the permutation 312.
pub fn m312() -> Matching {
    perm_matching(&"312".parse().expect("literal"))
}

/// The matching of the permutation 231.
pub fn m231() -> Matching {
    perm_matching(&"231".parse().expect("literal"))
}

/// Replay the generating sequence of `m`, answering each R-step that picks
/// from block `j` by picking the min or max of block `j` in the output.
fn replay(m: &Matching, pick_max: bool) -> Matching {
    let mut src = BlockTracker::new();
    let mut dst = BlockTracker::new();
    let mut edges: Vec<Edge> = Vec::with_capacity(m.order());
    for r in 1..=m.size() {
        if m.is_left(r) {
            src.left_step(r);
            dst.left_step(r);
        } else {
            let Step::R { block, .. } = src.right_step(m.partner(r)) else {
                unreachable!("right-vertex gives an R-step")
            };
            let s = dst
                .select_extreme(block, pick_max)
                .expect("block sizes agree at every prefix");
            edges.push((s, r));
            debug_assert_eq!(src.sizes(), dst.sizes());
        }
    }
    Matching::new(&edges).expect("one edge per right-vertex")
}

/// `psi(M)`: same left-vertices and block sizes, every R-step maximalist.
pub fn psi(m: &Matching) -> Result<Matching> {
    if !all_minimalist(m) {
        return Err(Error::invalid(format!("{m} contains the 312 matching")));
    }
    Ok(replay(m, true))
}

/// Inverse of [`psi`] on matchings avoiding every cyclic chain.
pub fn psi_inverse(m: &Matching) -> Result<Matching> {
    if !all_maximalist(m) {
        return Err(Error::invalid(format!("{m} contains a cyclic chain")));
    }
    Ok(replay(m, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_fixed_points() {
        for e in [[(1, 3), (2, 4)], [(1, 4), (2, 3)]] {
            let m = Matching::new(&e).unwrap();
            assert_eq!(psi(&m).unwrap(), m);
        }
    }

    #[test]
    fn rejects_312() {
        assert!(psi(&m312()).is_err());
        assert!(psi_inverse(&Matching::new(&[(1, 4), (2, 5), (3, 6)]).unwrap()).is_err());
    }
}
