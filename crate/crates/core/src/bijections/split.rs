//! Single-hole partial permutations split at the hole, with the
//! characterizations of 1234-, 1324-, 1342- and 2413-avoidance.

use serde::Serialize;

use super::simion::{simion_schmidt, simion_schmidt_inverse, SsTarget};
use crate::error::{Error, Result};
use crate::partial::{HoleSet, PartialPerm};
use crate::perm::{standardize, Perm};

/// `pi = left ◇ right`, values `1..=n-1`, hole at 1-based position `hole`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPerm {
    pub left: Vec<usize>,
    pub hole: usize,
    pub right: Vec<usize>,
}

impl SplitPerm {
    pub fn new(pi: &PartialPerm) -> Result<Self> {
        if pi.k() != 1 {
            return Err(Error::invalid(format!("{pi} must have exactly one hole")));
        }
        let hole = pi.holes().indices()[0];
        let values: Vec<usize> = pi.without_holes().into_values();
        Ok(SplitPerm {
            left: values[..hole - 1].to_vec(),
            hole,
            right: values[hole - 1..].to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.left.len() + self.right.len() + 1
    }

    pub fn to_partial(&self) -> PartialPerm {
        let values: Vec<usize> = self.left.iter().chain(&self.right).copied().collect();
        let holes = HoleSet::new(vec![self.hole], self.n()).expect("hole inside");
        PartialPerm::from_parts(self.n(), &holes, &values).expect("valid split")
    }

    pub fn left_min(&self) -> Option<usize> {
        self.left.iter().min().copied()
    }

    pub fn left_max(&self) -> Option<usize> {
        self.left.iter().max().copied()
    }

    pub fn right_min(&self) -> Option<usize> {
        self.right.iter().min().copied()
    }

    pub fn right_max(&self) -> Option<usize> {
        self.right.iter().max().copied()
    }
}

fn st(seq: &[usize]) -> Perm {
    standardize(seq).expect("distinct values")
}

fn avoids(seq: &[usize], pat: &str) -> bool {
    st(seq).avoids(&pat.parse().expect("literal"))
}

fn decreasing(seq: &[usize]) -> bool {
    seq.windows(2).all(|w| w[0] > w[1])
}

fn increasing(seq: &[usize]) -> bool {
    seq.windows(2).all(|w| w[0] < w[1])
}

/// Shared conditions 2 and 4: entries of the left part below the right
/// maximum decrease; entries of the right part above the left minimum decrease.
fn cross_conditions(s: &SplitPerm) -> (bool, bool) {
    let rmax = s.right_max().unwrap_or(0);
    let lmin = s.left_min().unwrap_or(usize::MAX);
    let low: Vec<usize> = s.left.iter().copied().filter(|&x| x < rmax).collect();
    let high: Vec<usize> = s.right.iter().copied().filter(|&x| x > lmin).collect();
    (decreasing(&low), decreasing(&high))
}

/// First failing condition (1..=4) of the 1234-avoidance characterization.
pub fn failing_1234_condition(s: &SplitPerm) -> Option<usize> {
    let (c2, c4) = cross_conditions(s);
    [avoids(&s.left, "123"), c2, avoids(&s.right, "123"), c4]
        .iter()
        .position(|&ok| !ok)
        .map(|i| i + 1)
}

/// First failing condition (1..=4) of the 1324-avoidance characterization.
pub fn failing_1324_condition(s: &SplitPerm) -> Option<usize> {
    let (c2, c4) = cross_conditions(s);
    [avoids(&s.left, "132"), c2, avoids(&s.right, "213"), c4]
        .iter()
        .position(|&ok| !ok)
        .map(|i| i + 1)
}

/// Are there `a < b < c` with `a, c` in `outer` and `b` in `inner`, and `a` before `c`?
fn sandwich_out_of_order(outer: &[usize], inner: &[usize]) -> bool {
    outer.iter().enumerate().any(|(ia, &a)| {
        outer[ia + 1..]
            .iter()
            .any(|&c| c > a && inner.iter().any(|&b| a < b && b < c))
    })
}

/// First failing condition (1..=4) of the 1342-avoidance characterization.
pub fn failing_1342_condition(s: &SplitPerm) -> Option<usize> {
    let lmin = s.left_min().unwrap_or(usize::MAX);
    let high: Vec<usize> = s.right.iter().copied().filter(|&x| x > lmin).collect();
    [
        avoids(&s.left, "123"),
        avoids(&s.right, "231"),
        increasing(&high),
        !sandwich_out_of_order(&s.left, &s.right),
    ]
    .iter()
    .position(|&ok| !ok)
    .map(|i| i + 1)
}

/// First failing condition (1..=4) of the 2413-avoidance characterization.
pub fn failing_2413_condition(s: &SplitPerm) -> Option<usize> {
    [
        avoids(&s.left, "231"),
        avoids(&s.right, "312"),
        !sandwich_out_of_order(&s.left, &s.right),
        !sandwich_out_of_order(&s.right, &s.left),
    ]
    .iter()
    .position(|&ok| !ok)
    .map(|i| i + 1)
}

/// Structural case of a 1342-avoider.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Case1342 {
    /// Increasing right part `a_k..a_1`, left part `B_1..B_{k+1}` of 123-avoiding blocks.
    IncreasingRight,
    /// `B_1..B_k D C ◇ A a B a_k..a_1` with `B` nonempty.
    SplitRight,
}

/// Split `left` into consecutive groups by value bands (descending thresholds);
/// each group must be a contiguous run, in band order, and avoid 123.
fn banded_123_blocks(left: &[usize], thresholds: &[usize]) -> bool {
    let band = |x: usize| thresholds.iter().filter(|&&t| x < t).count();
    let bands: Vec<usize> = left.iter().map(|&x| band(x)).collect();
    if bands.windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    (0..=thresholds.len()).all(|b| {
        let group: Vec<usize> = left
            .iter()
            .zip(&bands)
            .filter(|(_, &bb)| bb == b)
            .map(|(&x, _)| x)
            .collect();
        avoids(&group, "123")
    })
}

/// Match `pi` against the two structural shapes of 1342-avoiders.
pub fn case_1342(s: &SplitPerm) -> Option<Case1342> {
    let r = &s.right;
    if increasing(r) {
        // thresholds a_1 > a_2 > ... > a_k
        let th: Vec<usize> = r.iter().rev().copied().collect();
        return banded_123_blocks(&s.left, &th).then_some(Case1342::IncreasingRight);
    }
    // smallest a such that the right entries >= a increase
    let mut sorted = r.clone();
    sorted.sort_unstable();
    let a = *sorted
        .iter()
        .find(|&&a| increasing(&r.iter().copied().filter(|&x| x >= a).collect::<Vec<_>>()))
        .expect("the maximum alone is increasing");
    let k = r.iter().filter(|&&x| x > a).count();
    let tail = &r[r.len() - k..];
    if tail.iter().any(|&x| x <= a) {
        return None;
    }
    let pa = r.iter().position(|&x| x == a).expect("a is in the right part");
    let big_a = &r[..pa];
    let big_b = &r[pa + 1..r.len() - k];
    if big_b.is_empty() || !avoids(big_a, "231") || !avoids(big_b, "231") {
        return None;
    }
    let b_max = *big_b.iter().max().expect("nonempty");
    let b_min = *big_b.iter().min().expect("nonempty");
    if big_a.iter().any(|&x| x > b_min) || b_max > a || s.left.iter().any(|&x| x < b_max) {
        return None;
    }
    // thresholds a_1 > ... > a_k > a split left into B_1..B_k, D, C
    let mut th: Vec<usize> = tail.iter().rev().copied().collect();
    th.push(a);
    banded_123_blocks(&s.left, &th).then_some(Case1342::SplitRight)
}

/// Structural case of a 2413-avoider.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Case2413 {
    /// One of the two parts is empty.
    OneSided,
    /// `A ◇ B` with every left entry above every right entry.
    Separated,
    /// `C_0 C_1..C_k A ◇ B D_1..D_{k+1}` with interleaved decreasing blocks.
    Interleaved,
}

/// Match `pi` against the structural shapes of 2413-avoiders.
pub fn case_2413(s: &SplitPerm) -> Option<Case2413> {
    let (l, r) = (&s.left, &s.right);
    if l.is_empty() || r.is_empty() {
        return (avoids(l, "231") && avoids(r, "312")).then_some(Case2413::OneSided);
    }
    if s.left_min() > s.right_max() {
        return (avoids(l, "231") && avoids(r, "312")).then_some(Case2413::Separated);
    }
    for la in 1..=l.len() {
        for lb in 1..=r.len() {
            if interleaved_fits(&l[..l.len() - la], &l[l.len() - la..], &r[..lb], &r[lb..]) {
                return Some(Case2413::Interleaved);
            }
        }
    }
    None
}

fn interleaved_fits(cs: &[usize], a: &[usize], b: &[usize], ds: &[usize]) -> bool {
    if !decreasing(cs) || !decreasing(ds) || !avoids(a, "231") || !avoids(b, "312") {
        return false;
    }
    let (a_max, a_min) = (*a.iter().max().unwrap(), *a.iter().min().unwrap());
    let (b_max, b_min) = (*b.iter().max().unwrap(), *b.iter().min().unwrap());
    if a_max >= b_min {
        return false;
    }
    // C_0 above B; the rest of C strictly between A and B
    if cs.iter().any(|&c| (c < b_max && c > b_min) || c < a_max) {
        return false;
    }
    // D_{k+1} below A; the rest of D strictly between A and B
    if ds.iter().any(|&d| (d < a_max && d > a_min) || d > b_min) {
        return false;
    }
    // middle entries, read from the top, alternate C-runs and D-runs starting with C, ending with D
    let mut mid: Vec<(usize, bool)> = cs
        .iter()
        .filter(|&&c| c < b_min)
        .map(|&c| (c, true))
        .chain(ds.iter().filter(|&&d| d > a_max).map(|&d| (d, false)))
        .collect();
    mid.sort_unstable_by_key(|x| std::cmp::Reverse(x.0));
    mid.is_empty() || (mid[0].1 && !mid[mid.len() - 1].1)
}

fn rebuild(s: &SplitPerm, left: Vec<usize>, right: Vec<usize>) -> PartialPerm {
    SplitPerm {
        left,
        hole: s.hole,
        right,
    }
    .to_partial()
}

/// Apply `f` to the standardization of `part` and map the result back onto the same values.
fn on_values(part: &[usize], f: impl Fn(&Perm) -> Result<Perm>) -> Result<Vec<usize>> {
    let mut vals = part.to_vec();
    vals.sort_unstable();
    let image = f(&st(part))?;
    Ok(image.values().iter().map(|&v| vals[v - 1]).collect())
}

/// Single-hole bijection from 1234-avoiders to 1324-avoiders preserving the hole.
///
/// The left part goes through the 132 Simion–Schmidt map, the right part
/// through the 213 one, each on its own value set.
pub fn bijection_1234_1324(pi: &PartialPerm) -> Result<PartialPerm> {
    let s = SplitPerm::new(pi)?;
    if let Some(c) = failing_1234_condition(&s) {
        return Err(Error::condition(format!("avoid1234.cond{c}"), format!("{pi}")));
    }
    let left = on_values(&s.left, |p| simion_schmidt(p, SsTarget::P132))?;
    let right = on_values(&s.right, |p| simion_schmidt(p, SsTarget::P213))?;
    Ok(rebuild(&s, left, right))
}

/// Inverse of [`bijection_1234_1324`].
pub fn bijection_1324_1234(pi: &PartialPerm) -> Result<PartialPerm> {
    let s = SplitPerm::new(pi)?;
    if let Some(c) = failing_1324_condition(&s) {
        return Err(Error::condition(format!("avoid1324.cond{c}"), format!("{pi}")));
    }
    let left = on_values(&s.left, |p| simion_schmidt_inverse(p, SsTarget::P132))?;
    let right = on_values(&s.right, |p| simion_schmidt_inverse(p, SsTarget::P213))?;
    Ok(rebuild(&s, left, right))
}
