//! The six-step bijection between 312-avoiding transversals whose bottom `k`
//! rows avoid 21 and 231-avoiding transversals whose bottom `k` rows avoid 12,
//! and its extension to partial transversals.

use serde::Serialize;

use super::blocks::{all_maximalist, all_minimalist, prefix_blocks};
use super::matching::{mu, mu_inverse, Matching};
use super::psi::{m231, m312, psi, psi_inverse};
use crate::error::{Error, Result};
use crate::fillings::{decompose, recompose, unique_monotone_transversal, Direction, FerrersShape, PartialFilling};

/// Intermediate matchings of one run of the six steps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeyTrace {
    pub k: usize,
    pub encoded: Matching,
    pub step1_psi: Matching,
    pub step2_add_edge: Matching,
    pub step3_reverse: Matching,
    pub step4_psi_inverse: Matching,
    pub step5_remove_edge: Matching,
    pub step6_reverse: Matching,
    pub output: PartialFilling,
}

fn ensure(ok: bool, name: &str, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::condition(name, detail()))
    }
}

/// Bottom `k` rows all as long as the bottom row.
pub fn bottom_rows_equal(shape: &FerrersShape, k: usize) -> bool {
    k <= shape.rows() && (1..=k).all(|i| shape.row_len(i) == shape.row_len(1))
}

/// Is `f` in `F^k(D, 312, 21)`?
pub fn is_312_21(f: &PartialFilling, k: usize) -> bool {
    let m = mu(f).expect("transversal of a proper diagram");
    let s = m.size();
    m.avoids(&m312()) && m.edges_at_nest(&(s + 1 - k..=s).collect::<Vec<_>>())
}

/// Is `f` in `F^k(D, 231, 12)`?
pub fn is_231_12(f: &PartialFilling, k: usize) -> bool {
    let m = mu(f).expect("transversal of a proper diagram");
    let s = m.size();
    m.avoids(&m231()) && m.edges_at_cross(&(s + 1 - k..=s).collect::<Vec<_>>())
}

fn check_input(f: &PartialFilling, k: usize) -> Result<Matching> {
    let shape = f.shape();
    if !shape.is_proper() || f.is_partial() || !f.is_transversal() {
        return Err(Error::invalid("input must be a transversal of a proper diagram"));
    }
    if !bottom_rows_equal(shape, k) {
        return Err(Error::invalid(format!(
            "the bottom {k} rows of {shape} differ in length"
        )));
    }
    mu(f)
}

/// Map `F^k(D,312,21) -> F^k(D,231,12)`, checking every intermediate set condition.
pub fn key_bijection_traced(f: &PartialFilling, k: usize) -> Result<KeyTrace> {
    let encoded = check_input(f, k)?;
    let n = encoded.order();
    let size = 2 * n;
    let x = encoded.left_vertices();
    let top: Vec<usize> = (size + 1 - k..=size).collect();
    ensure(encoded.avoids(&m312()), "input-312", || {
        format!("{encoded} contains 312")
    })?;
    ensure(encoded.edges_at_nest(&top), "input-21", || {
        format!("bottom {k} rows of the input contain 21")
    })?;

    // Step 1
    let s1 = psi(&encoded)?;
    ensure(all_maximalist(&s1), "P1", || format!("{s1} contains a cyclic chain"))?;
    ensure(s1.left_vertices() == x, "P2", || {
        format!("{s1} moved the left vertices")
    })?;
    if size > k {
        let pre = prefix_blocks(&s1, size - k);
        ensure(pre.blocks.iter().all(|b| b.len() == 1), "P3", || {
            format!("prefix {} has blocks {:?}", size - k, pre.blocks)
        })?;
    }
    ensure(s1.edges_at_nest(&top), "P4", || {
        format!("edges at the last {k} vertices of {s1} do not nest")
    })?;

    // Step 2: the new edge covers exactly the last k vertices
    let s2 = s1.insert_edge(size - k + 1, size + 2)?;
    let x_plus = s2.left_vertices();
    ensure(all_maximalist(&s2), "R1", || format!("{s2} contains a cyclic chain"))?;
    ensure(s2.has_edge(size - k + 1, size + 2), "R3", || {
        format!("{s2} lacks the new edge")
    })?;

    // Step 3
    let s3 = s2.reverse();
    let rev_x_plus = s3.left_vertices();
    ensure(all_maximalist(&s3), "R1-reversed", || {
        format!("{s3} contains a cyclic chain")
    })?;
    ensure(s3.has_edge(1, k + 2), "R3-reversed", || {
        format!("{s3} lacks the edge (1,{})", k + 2)
    })?;

    // Step 4
    let s4 = psi_inverse(&s3)?;
    ensure(all_minimalist(&s4), "S1", || format!("{s4} contains 312"))?;
    ensure(s4.left_vertices() == rev_x_plus, "S2", || {
        format!("{s4} moved the left vertices")
    })?;
    ensure(s4.has_edge(1, k + 2), "S3", || {
        format!("{s4} lacks the edge (1,{})", k + 2)
    })?;

    // Step 5
    let s5 = s4.remove_edge(1, k + 2)?;
    let rev_x: Vec<usize> = encoded.right_vertices().iter().rev().map(|&y| size + 1 - y).collect();
    ensure(all_minimalist(&s5), "S1-removed", || format!("{s5} contains 312"))?;
    ensure(s5.left_vertices() == rev_x, "S2-removed", || {
        format!("{s5} has the wrong left vertices")
    })?;
    ensure(s5.edges_at_cross(&(1..=k).collect::<Vec<_>>()), "S3-removed", || {
        format!("edges at the first {k} vertices of {s5} do not cross")
    })?;

    // Step 6
    let s6 = s5.reverse();
    let output = mu_inverse(&s6);
    debug_assert_eq!(output.shape(), f.shape());
    debug_assert!(x_plus.len() == n + 1);
    Ok(KeyTrace {
        k,
        encoded,
        step1_psi: s1,
        step2_add_edge: s2,
        step3_reverse: s3,
        step4_psi_inverse: s4,
        step5_remove_edge: s5,
        step6_reverse: s6,
        output,
    })
}

pub fn key_bijection(f: &PartialFilling, k: usize) -> Result<PartialFilling> {
    key_bijection_traced(f, k).map(|t| t.output)
}

/// Inverse of [`key_bijection`]: the six steps run backwards.
pub fn key_bijection_inverse(g: &PartialFilling, k: usize) -> Result<PartialFilling> {
    let m = check_input(g, k)?;
    let size = m.size();
    let top: Vec<usize> = (size + 1 - k..=size).collect();
    ensure(m.avoids(&m231()), "input-231", || format!("{m} contains 231"))?;
    ensure(m.edges_at_cross(&top), "input-12", || {
        format!("bottom {k} rows of the input contain 12")
    })?;
    let s5 = m.reverse();
    let s4 = s5.insert_edge(1, k + 2)?;
    let s3 = psi(&s4)?;
    let s2 = s3.reverse();
    ensure(s2.has_edge(size - k + 1, size + 2), "R3", || {
        format!("{s2} lacks the added edge")
    })?;
    let s1 = s2.remove_edge(size - k + 1, size + 2)?;
    let back = psi_inverse(&s1)?;
    Ok(mu_inverse(&back))
}

fn directions(forward: bool) -> (Direction, Direction) {
    if forward {
        (Direction::Avoid12, Direction::Avoid21)
    } else {
        (Direction::Avoid21, Direction::Avoid12)
    }
}

fn split_map(f: &PartialFilling, forward: bool) -> Result<PartialFilling> {
    if !f.is_transversal() {
        return Err(Error::invalid("input must be a partial transversal"));
    }
    let d = decompose(f)?;
    let (src_dir, dst_dir) = directions(forward);
    let expected = unique_monotone_transversal(d.right.shape(), src_dir)?;
    if d.right != expected {
        return Err(Error::condition(
            if forward { "C5" } else { "C5'" },
            "the right part is not the monotone transversal",
        ));
    }
    let left = if d.left.cols() == 0 {
        d.left.clone()
    } else if forward {
        key_bijection(&d.left, d.k)?
    } else {
        key_bijection_inverse(&d.left, d.k)?
    };
    let right = unique_monotone_transversal(d.right.shape(), dst_dir)?;
    recompose(f.shape(), f.diamond_mask(), &left, &right)
}

/// 312-avoiding partial transversal to a 231-avoiding one with the same shape and ◇-columns.
pub fn partial_312_to_231(f: &PartialFilling) -> Result<PartialFilling> {
    let p312 = "312".parse().expect("literal");
    if f.contains(&p312) {
        return Err(Error::invalid("input contains 312"));
    }
    split_map(f, true)
}

/// Inverse of [`partial_312_to_231`].
pub fn partial_231_to_312(f: &PartialFilling) -> Result<PartialFilling> {
    let p231 = "231".parse().expect("literal");
    if f.contains(&p231) {
        return Err(Error::invalid("input contains 231"));
    }
    split_map(f, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell_is_fixed() {
        let f = PartialFilling::from_perm(&"1".parse().unwrap());
        assert_eq!(key_bijection(&f, 0).unwrap(), f);
        assert_eq!(key_bijection(&f, 1).unwrap(), f);
    }

    #[test]
    fn square_k0_maps_312_avoiders_onto_231_avoiders() {
        let sq = FerrersShape::rectangle(3, 3);
        let all = PartialFilling::all_transversals(&sq, &[false; 3]);
        let mut images: Vec<PartialFilling> = all
            .iter()
            .filter(|f| is_312_21(f, 0))
            .map(|f| key_bijection(f, 0).unwrap())
            .collect();
        images.sort();
        let mut target: Vec<PartialFilling> = all.into_iter().filter(|f| is_231_12(f, 0)).collect();
        target.sort();
        assert_eq!(images, target);
    }
}
