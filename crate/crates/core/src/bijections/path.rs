//! Lattice paths with up and down steps, the Krattenthaler map from
//! 123-avoiders to Dyck paths, and the map from single-hole 1234-avoiders to
//! free paths.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::split::{failing_1234_condition, SplitPerm};
use crate::error::{Error, Result};
use crate::partial::{HoleSet, PartialPerm};
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PathStep {
    #[serde(rename = "U")]
    Up,
    #[serde(rename = "D")]
    Down,
}

/// A path of `(1,1)` and `(1,-1)` steps starting at height 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePath {
    steps: Vec<PathStep>,
}

impl LatticePath {
    pub fn new(steps: Vec<PathStep>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn ups(&self) -> usize {
        self.steps.iter().filter(|&&s| s == PathStep::Up).count()
    }

    pub fn downs(&self) -> usize {
        self.len() - self.ups()
    }

    /// Heights after each prefix, starting with 0.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = 0;
        let mut out = vec![0];
        for s in &self.steps {
            h += if *s == PathStep::Up { 1 } else { -1 };
            out.push(h);
        }
        out
    }

    /// Never below the start, and ends at the start height.
    pub fn is_dyck(&self) -> bool {
        let h = self.heights();
        h.iter().all(|&x| x >= 0) && h.last() == Some(&0)
    }

    /// Every path with the given numbers of up and down steps.
    pub fn all_free(ups: usize, downs: usize) -> Vec<LatticePath> {
        (0..ups + downs)
            .combinations(ups)
            .map(|pos| {
                let mut steps = vec![PathStep::Down; ups + downs];
                for p in pos {
                    steps[p] = PathStep::Up;
                }
                LatticePath { steps }
            })
            .collect()
    }

    /// Every Dyck path of semilength `m`.
    pub fn all_dyck(m: usize) -> Vec<LatticePath> {
        LatticePath::all_free(m, m)
            .into_iter()
            .filter(LatticePath::is_dyck)
            .collect()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == PathStep::Up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'U' | 'u' => Ok(PathStep::Up),
                'D' | 'd' => Ok(PathStep::Down),
                _ => Err(Error::invalid(format!("path step {c:?} is not U or D"))),
            })
            .collect::<Result<_>>()?;
        Ok(LatticePath { steps })
    }
}

/// Krattenthaler's map: cut `sigma` after each right-to-left maximum `M`,
/// giving segments `w M`; each becomes `U^{|w|+1} D^{M - M'}`, with `M'` the
/// next right-to-left maximum (0 after the last).
pub fn perm123_to_dyck(sigma: &Perm) -> Result<LatticePath> {
    if sigma.contains(&Perm::identity(3)) {
        return Err(Error::invalid(format!("{sigma} contains 123")));
    }
    let v = sigma.values();
    let maxima = sigma.right_to_left_maxima();
    let mut steps = Vec::with_capacity(2 * v.len());
    let mut start = 0;
    for (t, &pos) in maxima.iter().enumerate() {
        let m = v[pos - 1];
        let next = maxima.get(t + 1).map_or(0, |&p| v[p - 1]);
        steps.extend(std::iter::repeat_n(PathStep::Up, pos - start));
        steps.extend(std::iter::repeat_n(PathStep::Down, m - next));
        start = pos;
    }
    Ok(LatticePath { steps })
}

/// Inverse of [`perm123_to_dyck`]: right-to-left maxima from the down-runs,
/// remaining values placed in decreasing order.
pub fn dyck_to_perm123(path: &LatticePath) -> Result<Perm> {
    if !path.is_dyck() {
        return Err(Error::invalid(format!("{path} is not a Dyck path")));
    }
    let runs: Vec<(usize, usize)> = path
        .steps
        .iter()
        .chunk_by(|&&s| s)
        .into_iter()
        .map(|(s, g)| (s, g.count()))
        .collect::<Vec<_>>()
        .chunks(2)
        .map(|c| (c[0].1, c[1].1))
        .collect();
    let n = path.ups();
    let mut maxima: Vec<(usize, usize)> = Vec::new(); // (position, value)
    let mut pos = 0;
    let mut remaining_downs: usize = path.downs();
    for &(u, d) in &runs {
        pos += u;
        maxima.push((pos, remaining_downs));
        remaining_downs -= d;
    }
    let mut values = vec![0; n];
    let mut used = vec![false; n + 1];
    for &(p, m) in &maxima {
        values[p - 1] = m;
        used[m] = true;
    }
    let mut rest = (1..=n).rev().filter(|&x| !used[x]);
    for slot in values.iter_mut().filter(|x| **x == 0) {
        *slot = rest.next().expect("one value per free position");
    }
    let p = Perm::new(values)?;
    if perm123_to_dyck(&p).ok().as_ref() != Some(path) {
        return Err(Error::invalid(format!("{path} does not decode to a 123-avoider")));
    }
    Ok(p)
}

/// Map a single-hole 1234-avoider with hole at `i` to a free path of length `2n-2`.
///
/// The Dyck path of the hole-free part gets a final down-step, is cut before
/// its `i`-th down-step into `P1 P2`, reassembled as `P2 P1`, and loses its
/// first step.
pub fn hole_bijection_to_path(pi: &PartialPerm) -> Result<LatticePath> {
    let s = SplitPerm::new(pi)?;
    if let Some(c) = failing_1234_condition(&s) {
        return Err(Error::condition(format!("avoid1234.cond{c}"), format!("{pi}")));
    }
    let mut p = perm123_to_dyck(&pi.without_holes())?.steps;
    p.push(PathStep::Down);
    let cut = p
        .iter()
        .positions(|&x| x == PathStep::Down)
        .nth(s.hole - 1)
        .expect("n down-steps and the hole is at most n");
    let mut q: Vec<PathStep> = p[cut..].to_vec();
    q.extend_from_slice(&p[..cut]);
    debug_assert_eq!(q[0], PathStep::Down);
    Ok(LatticePath { steps: q[1..].to_vec() })
}

/// Inverse of [`hole_bijection_to_path`].
pub fn path_to_hole_bijection(path: &LatticePath) -> Result<PartialPerm> {
    if path.ups() != path.downs() {
        return Err(Error::invalid(format!("{path} does not end at its start height")));
    }
    let mut q = vec![PathStep::Down];
    q.extend_from_slice(&path.steps);
    let h = LatticePath { steps: q.clone() }.heights();
    let min = *h.iter().min().expect("nonempty");
    let cut = h.iter().position(|&x| x == min).expect("minimum attained");
    // P = P1 P2 with P1 = q[cut..], P2 = q[..cut]; the hole is one past the downs of P1
    let i = q[cut..].iter().filter(|&&x| x == PathStep::Down).count() + 1;
    let mut p: Vec<PathStep> = q[cut..].to_vec();
    p.extend_from_slice(&q[..cut]);
    let last = p.pop();
    debug_assert_eq!(last, Some(PathStep::Down));
    let sigma = dyck_to_perm123(&LatticePath { steps: p })?;
    let n = sigma.len() + 1;
    PartialPerm::from_parts(n, &HoleSet::new(vec![i], n)?, sigma.values())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn krattenthaler_example() {
        let sigma: Perm = "5 4 2 8 7 6 1 3".parse().unwrap();
        let p = perm123_to_dyck(&sigma).unwrap();
        assert_eq!(p.to_string(), "UUUUDUDUDDDUUDDD");
        assert_eq!(dyck_to_perm123(&p).unwrap(), sigma);
        assert_eq!(perm123_to_dyck(&Perm::identity(0)).unwrap(), LatticePath::default());
    }

    #[test]
    fn hole_example_path() {
        let pi: PartialPerm = "5 4 2 * 8 7 6 1 3".parse().unwrap();
        let path = hole_bijection_to_path(&pi).unwrap();
        assert_eq!(path.len(), 16);
        assert_eq!(path.to_string(), "DUUDDDDUUUUDUDUD");
        assert_eq!(path_to_hole_bijection(&path).unwrap(), pi);
    }

    #[test]
    fn json_is_step_list() {
        let p: LatticePath = "UD".parse().unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["U","D"]"#);
    }
}
