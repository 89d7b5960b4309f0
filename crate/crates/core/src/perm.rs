//! Classical permutations, used both as objects and as patterns.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::occurrence;

/// A permutation of `1..=len`, stored in one-line notation.
///
/// Doubles as a permutation matrix: cell `(i, j)` (row `i` from the bottom,
/// column `j` from the left) holds a 1 exactly when `values[j - 1] == i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm(Vec<usize>);

/// Patterns are ordinary permutations.
pub type Pattern = Perm;

impl Perm {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::invalid(format!("{values:?} is not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Perm(values))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Perm::new(values.clone()).is_ok());
        Perm(values)
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n).collect())
    }

    pub fn anti_identity(n: usize) -> Self {
        Perm((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_values(self) -> Vec<usize> {
        self.0
    }

    /// Entry at 1-based position `j`.
    pub fn at(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    pub fn reverse(&self) -> Self {
        Perm(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        Perm(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (j, &v) in self.0.iter().enumerate() {
            inv[v - 1] = j + 1;
        }
        Perm(inv)
    }

    /// `self` in the bottom-left block and `upper` in the top-right block.
    pub fn direct_sum(&self, upper: &Perm) -> Self {
        let shift = self.len();
        Perm(
            self.0
                .iter()
                .copied()
                .chain(upper.0.iter().map(|&v| v + shift))
                .collect(),
        )
    }

    pub fn contains(&self, pattern: &Pattern) -> bool {
        occurrence::contains_values(&self.0, pattern.values())
    }

    pub fn avoids(&self, pattern: &Pattern) -> bool {
        !self.contains(pattern)
    }

    /// The four images under reverse and complement, in a fixed order.
    pub fn symmetry_class(&self) -> [Perm; 4] {
        let r = self.reverse();
        let c = self.complement();
        let rc = r.complement();
        [self.clone(), r, c, rc]
    }

    /// Smallest member (lexicographically) of the reverse/complement orbit.
    pub fn canonical(&self) -> Perm {
        self.symmetry_class().into_iter().min().expect("orbit is nonempty")
    }

    /// Positions (1-based) of left-to-right minima.
    pub fn left_to_right_minima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut best = usize::MAX;
        for (j, &v) in self.0.iter().enumerate() {
            if v < best {
                best = v;
                out.push(j + 1);
            }
        }
        out
    }

    /// Positions (1-based) of right-to-left maxima, in increasing position order.
    pub fn right_to_left_maxima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut best = 0;
        for (j, &v) in self.0.iter().enumerate().rev() {
            if v > best {
                best = v;
                out.push(j + 1);
            }
        }
        out.reverse();
        out
    }

    /// Compact key usable in file names: digits run together when every
    /// entry is a single digit, otherwise joined by `_`.
    pub fn key(&self) -> String {
        if self.len() < 10 {
            self.0.iter().map(|v| v.to_string()).collect()
        } else {
            self.0.iter().join("_")
        }
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    if n == 0 {
        return vec![Perm(Vec::new())];
    }
    (1..=n).permutations(n).map(Perm).collect()
}

/// Replace each entry by its rank among all entries (smallest becomes 1).
pub fn standardize<T: Ord + fmt::Debug>(seq: &[T]) -> Result<Perm> {
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
    if let Some(w) = order.windows(2).find(|w| seq[w[0]] == seq[w[1]]) {
        return Err(Error::invalid(format!(
            "duplicate entry {:?} cannot be standardized",
            seq[w[0]]
        )));
    }
    let mut out = vec![0; seq.len()];
    for (rank, &idx) in order.iter().enumerate() {
        out[idx] = rank + 1;
    }
    Ok(Perm(out))
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts `2 4 1 3`, `2,4,1,3` or the compact `2413` (single digits only).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let tokens: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let values: Vec<usize> = if tokens.len() == 1 && tokens[0].len() > 1 {
            tokens[0]
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::invalid(format!("bad pattern character {c:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            tokens
                .iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::invalid(format!("bad pattern token {t:?}")))
                })
                .collect::<Result<_>>()?
        };
        Perm::new(values)
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Perm::new(v)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[1, 9, 4, 5, 2]).unwrap().to_string(), "1 5 3 4 2");
        assert_eq!(standardize(&[1, 2, 3]).unwrap(), Perm::identity(3));
        assert_eq!(standardize(&[2, 9, 5]).unwrap().values(), &[1, 3, 2]);
        assert!(standardize(&[3, 1, 3]).is_err());
    }

    #[test]
    fn parse_forms() {
        let p: Perm = "2 4 1 3".parse().unwrap();
        assert_eq!(p, "2413".parse().unwrap());
        assert_eq!(p, "2,4,1,3".parse().unwrap());
        assert!("2 2 1".parse::<Perm>().is_err());
        assert!("".parse::<Perm>().unwrap().is_empty());
    }

    #[test]
    fn symmetries() {
        let p: Perm = "1342".parse().unwrap();
        assert_eq!(p.reverse().key(), "2431");
        assert_eq!(p.complement().key(), "4213");
        assert_eq!(p.inverse().key(), "1423");
        assert_eq!(p.canonical().key(), "1342");
        assert_eq!("4213".parse::<Perm>().unwrap().canonical().key(), "1342");
        let a: Perm = "21".parse().unwrap();
        assert_eq!(a.direct_sum(&Perm::identity(1)).key(), "213");
    }

    #[test]
    fn records() {
        let p: Perm = "54287613".parse().unwrap();
        assert_eq!(p.left_to_right_minima(), vec![1, 2, 3, 7]);
        assert_eq!(p.right_to_left_maxima(), vec![4, 5, 6, 8]);
    }

    #[test]
    fn classical_containment() {
        let p: Perm = "325164".parse().unwrap();
        assert!(p.contains(&Perm::identity(3)));
        assert!(p.avoids(&Perm::identity(4)));
        assert!(p.contains(&Perm::new(vec![]).unwrap()));
        assert_eq!(all_perms(4).len(), 24);
        assert_eq!(all_perms(0).len(), 1);
    }
}
