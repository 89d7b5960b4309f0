//! Partial permutations: sequences over `1..=n-k` plus `k` holes.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::occurrence;
use crate::perm::{Pattern, Perm};

/// One position of a partial permutation.
///
/// Holes are a separate variant so that no value arithmetic can absorb them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Hole,
    Value(usize),
}

impl Slot {
    pub fn is_hole(self) -> bool {
        matches!(self, Slot::Hole)
    }

    pub fn value(self) -> Option<usize> {
        match self {
            Slot::Hole => None,
            Slot::Value(v) => Some(v),
        }
    }
}

/// Strictly increasing set of 1-based hole positions inside `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HoleSet(Vec<usize>);

impl HoleSet {
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("repeated hole index in {indices:?}")));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::invalid(format!("hole index {bad} outside 1..={n}")));
        }
        Ok(HoleSet(indices))
    }

    pub fn empty() -> Self {
        HoleSet(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Mirror image `i -> n + 1 - i`.
    pub fn reflect(&self, n: usize) -> Self {
        HoleSet(self.0.iter().rev().map(|&i| n + 1 - i).collect())
    }

    /// Every `k`-subset of `[n]`, lexicographically.
    pub fn all(n: usize, k: usize) -> Vec<HoleSet> {
        (1..=n).combinations(k).map(HoleSet).collect()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &i in &self.0 {
            m[i - 1] = true;
        }
        m
    }
}

impl fmt::Display for HoleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// An element of `S_n^k`: length `n`, `k` holes, and each of `1..=n-k` exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartialPermJson", into = "PartialPermJson")]
pub struct PartialPerm {
    slots: Vec<Slot>,
    holes: HoleSet,
}

/// JSON form: `{"n": .., "holes": [1-based], "values": [non-hole entries left to right]}`.
#[derive(Serialize, Deserialize)]
struct PartialPermJson {
    n: usize,
    holes: Vec<usize>,
    values: Vec<usize>,
}

impl PartialPerm {
    pub fn new(slots: Vec<Slot>) -> Result<Self> {
        let holes: Vec<usize> = slots
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_hole())
            .map(|(i, _)| i + 1)
            .collect();
        let values: Vec<usize> = slots.iter().filter_map(|s| s.value()).collect();
        Perm::new(values).map_err(|_| {
            Error::invalid(format!(
                "non-hole entries of a partial permutation must be 1..={} each once",
                slots.len() - holes.len()
            ))
        })?;
        Ok(PartialPerm {
            slots,
            holes: HoleSet(holes),
        })
    }

    /// Build from a hole set and the non-hole entries in left-to-right order.
    pub fn from_parts(n: usize, holes: &HoleSet, values: &[usize]) -> Result<Self> {
        if holes.indices().last().is_some_and(|&h| h > n) {
            return Err(Error::invalid("hole index exceeds length"));
        }
        if holes.len() + values.len() != n {
            return Err(Error::invalid(format!(
                "{} holes and {} values do not fill length {n}",
                holes.len(),
                values.len()
            )));
        }
        let mut it = values.iter();
        let slots = (1..=n)
            .map(|i| {
                if holes.contains(i) {
                    Slot::Hole
                } else {
                    Slot::Value(*it.next().expect("counted above"))
                }
            })
            .collect();
        PartialPerm::new(slots)
    }

    pub fn from_perm(p: &Perm) -> Self {
        PartialPerm {
            slots: p.values().iter().map(|&v| Slot::Value(v)).collect(),
            holes: HoleSet::empty(),
        }
    }

    pub fn n(&self) -> usize {
        self.slots.len()
    }

    pub fn k(&self) -> usize {
        self.holes.len()
    }

    pub fn holes(&self) -> &HoleSet {
        &self.holes
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// 1-based access.
    pub fn slot(&self, i: usize) -> Slot {
        self.slots[i - 1]
    }

    /// The permutation obtained by deleting the holes.
    pub fn without_holes(&self) -> Perm {
        Perm::from_vec_unchecked(self.slots.iter().filter_map(|s| s.value()).collect())
    }

    /// Every total permutation whose non-hole positions standardize to `self`.
    pub fn extensions(&self) -> Vec<Perm> {
        let n = self.n();
        let k = self.k();
        let mut out = Vec::new();
        for hole_values in (1..=n).permutations(k) {
            let mut used = vec![false; n + 1];
            for &v in &hole_values {
                used[v] = true;
            }
            let rest: Vec<usize> = (1..=n).filter(|&v| !used[v]).collect();
            let mut hv = hole_values.iter();
            let values = self
                .slots
                .iter()
                .map(|s| match s {
                    Slot::Hole => *hv.next().expect("one value per hole"),
                    Slot::Value(v) => rest[v - 1],
                })
                .collect();
            out.push(Perm::from_vec_unchecked(values));
        }
        out.sort();
        out
    }

    /// Direct avoidance test: searches position subsets, treating holes as wildcards.
    pub fn avoids(&self, p: &Pattern) -> bool {
        !occurrence::contains(&self.slots, p.values())
    }

    pub fn contains(&self, p: &Pattern) -> bool {
        !self.avoids(p)
    }

    /// Avoidance by definition: every extension avoids `p`.
    pub fn avoids_oracle(&self, p: &Pattern) -> bool {
        self.extensions().iter().all(|e| e.avoids(p))
    }

    pub fn reverse(&self) -> Self {
        let slots: Vec<Slot> = self.slots.iter().rev().copied().collect();
        PartialPerm {
            holes: self.holes.reflect(self.n()),
            slots,
        }
    }

    pub fn complement(&self) -> Self {
        let m = self.n() - self.k();
        PartialPerm {
            slots: self
                .slots
                .iter()
                .map(|s| match *s {
                    Slot::Hole => Slot::Hole,
                    Slot::Value(v) => Slot::Value(m + 1 - v),
                })
                .collect(),
            holes: self.holes.clone(),
        }
    }

    /// Every element of `S_n^H`.
    pub fn all_with_holes(n: usize, holes: &HoleSet) -> Vec<PartialPerm> {
        let m = n - holes.len();
        crate::perm::all_perms(m)
            .into_iter()
            .map(|p| PartialPerm::from_parts(n, holes, p.values()).expect("sizes agree by construction"))
            .collect()
    }

    /// Every element of `S_n^k`.
    pub fn all(n: usize, k: usize) -> Vec<PartialPerm> {
        HoleSet::all(n, k)
            .iter()
            .flat_map(|h| PartialPerm::all_with_holes(n, h))
            .collect()
    }
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .slots
            .iter()
            .map(|s| match s {
                Slot::Hole => "*".to_string(),
                Slot::Value(v) => v.to_string(),
            })
            .join(" ");
        f.write_str(&s)
    }
}

impl FromStr for PartialPerm {
    type Err = Error;

    /// Space-separated tokens with `*` (or `◇`) for a hole, e.g. `3 2 * 1 5 4`.
    fn from_str(s: &str) -> Result<Self> {
        let slots = s
            .split_whitespace()
            .map(|t| match t {
                "*" | "◇" => Ok(Slot::Hole),
                _ => t
                    .parse::<usize>()
                    .map(Slot::Value)
                    .map_err(|_| Error::invalid(format!("bad token {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        PartialPerm::new(slots)
    }
}

impl TryFrom<PartialPermJson> for PartialPerm {
    type Error = Error;
    fn try_from(j: PartialPermJson) -> Result<Self> {
        let holes = HoleSet::new(j.holes, j.n)?;
        PartialPerm::from_parts(j.n, &holes, &j.values)
    }
}

impl From<PartialPerm> for PartialPermJson {
    fn from(p: PartialPerm) -> Self {
        PartialPermJson {
            n: p.n(),
            holes: p.holes.0.clone(),
            values: p.slots.iter().filter_map(|s| s.value()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(s: &str) -> PartialPerm {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn extensions_of_small_examples() {
        let ext: Vec<String> = pp("2 * 1").extensions().iter().map(Perm::key).collect();
        assert_eq!(ext, vec!["231", "312", "321"]);
        assert_eq!(pp("3 1 2").extensions(), vec![pat("312")]);
        assert_eq!(pp("* 2 1 *").extensions().len(), 12);
    }

    #[test]
    fn avoidance_examples() {
        let pi = pp("3 2 * 1 5 4");
        assert!(pi.avoids(&pat("1234")));
        assert!(!pi.avoids(&pat("123")));
        assert!(pi.avoids_oracle(&pat("1234")));
        assert!(!pi.avoids_oracle(&pat("123")));
        assert!(pat("325164").contains(&pat("123")));
        assert!(!pp("2 * 1").avoids_oracle(&pat("312")));
        assert!(pp("").avoids(&pat("1")));
        assert!(pp("").avoids_oracle(&pat("21")));
    }

    #[test]
    fn too_many_holes_never_avoid() {
        for p in crate::perm::all_perms(3) {
            for pi in PartialPerm::all(4, 2) {
                assert!(!pi.avoids(&p), "{pi} should contain {p}");
            }
        }
    }

    #[test]
    fn reverse_and_complement() {
        assert_eq!(pp("2 * 1").reverse(), pp("1 * 2"));
        assert_eq!(pp("2 * 1").complement(), pp("1 * 2"));
        let pi = pp("* 3 1 * 2");
        assert_eq!(pi.reverse().reverse(), pi);
        assert_eq!(pi.complement().complement(), pi);
        assert_eq!(pi.reverse().holes().indices(), &[2, 5]);
    }

    #[test]
    fn text_and_json_forms() {
        let pi = pp("3 2 ◇ 1 5 4");
        assert_eq!(pi.to_string(), "3 2 * 1 5 4");
        let json = serde_json::to_string(&pi).unwrap();
        assert_eq!(json, r#"{"n":6,"holes":[3],"values":[3,2,1,5,4]}"#);
        let back: PartialPerm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, pi);
        assert!("1 1 *".parse::<PartialPerm>().is_err());
        assert!("2 *".parse::<PartialPerm>().is_err());
        assert!(serde_json::from_str::<PartialPerm>(r#"{"n":2,"holes":[3],"values":[1]}"#).is_err());
    }

    #[test]
    fn hole_set_validation() {
        assert!(HoleSet::new(vec![0], 3).is_err());
        assert!(HoleSet::new(vec![4], 3).is_err());
        assert!(HoleSet::new(vec![2, 2], 3).is_err());
        assert_eq!(HoleSet::new(vec![3, 1], 3).unwrap().indices(), &[1, 3]);
        assert_eq!(HoleSet::all(5, 2).len(), 10);
    }

    #[test]
    fn sizes_of_s_n_k() {
        assert_eq!(PartialPerm::all(3, 1).len(), 6);
        assert_eq!(PartialPerm::all(5, 2).len(), 60);
    }
}
