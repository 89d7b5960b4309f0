//! Exact counters for `s_n^k(p)` and `s_n^H(p)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::occurrence;
use crate::partial::{HoleSet, PartialPerm, Slot};
use crate::perm::Pattern;

use super::formula::closed_form;

/// How `count` obtains its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Test every element of `S_n^k` against every one of its extensions.
    Brute,
    /// Grow avoiders position by position, pruning as soon as an occurrence appears.
    Direct,
    /// Closed-form table; fails with [`Error::FormulaNotAvailable`] outside it.
    Formula,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "direct" => Ok(Method::Direct),
            "formula" => Ok(Method::Formula),
            _ => Err(Error::invalid(format!("unknown method {s:?}"))),
        }
    }
}

/// Depth-first generator of the avoiders in `S_n^H(p)`.
///
/// Each prefix is kept standardized; a new value is inserted with a chosen
/// relative rank and larger values are shifted up. Prefixes that already
/// contain `p` are cut.
struct Grower<'a, F: FnMut(&[Slot])> {
    pattern: &'a [usize],
    hole_mask: &'a [bool],
    slots: Vec<Slot>,
    visit: F,
}

impl<F: FnMut(&[Slot])> Grower<'_, F> {
    fn run(&mut self, placed_values: usize) {
        let t = self.slots.len();
        if t == self.hole_mask.len() {
            (self.visit)(&self.slots);
            return;
        }
        if self.hole_mask[t] {
            self.slots.push(Slot::Hole);
            if !occurrence::contains_ending_at_last(&self.slots, self.pattern) {
                self.run(placed_values);
            }
            self.slots.pop();
            return;
        }
        for rank in 1..=placed_values + 1 {
            for s in self.slots.iter_mut() {
                if let Slot::Value(v) = s {
                    if *v >= rank {
                        *v += 1;
                    }
                }
            }
            self.slots.push(Slot::Value(rank));
            if !occurrence::contains_ending_at_last(&self.slots, self.pattern) {
                self.run(placed_values + 1);
            }
            self.slots.pop();
            for s in self.slots.iter_mut() {
                if let Slot::Value(v) = s {
                    if *v > rank {
                        *v -= 1;
                    }
                }
            }
        }
    }
}

fn grow(n: usize, holes: &HoleSet, p: &Pattern, visit: impl FnMut(&[Slot])) {
    let mask = holes.mask(n);
    let mut g = Grower {
        pattern: p.values(),
        hole_mask: &mask,
        slots: Vec::with_capacity(n),
        visit,
    };
    g.run(0);
}

fn check_holes(n: usize, holes: &HoleSet) -> Result<()> {
    if holes.indices().last().is_some_and(|&h| h > n) {
        return Err(Error::invalid(format!("hole set {holes} does not fit in [{n}]")));
    }
    Ok(())
}

/// All elements of `S_n^H(p)`, in the order the generator finds them.
pub fn avoiders_with_holes(n: usize, holes: &HoleSet, p: &Pattern) -> Result<Vec<PartialPerm>> {
    check_holes(n, holes)?;
    let mut out = Vec::new();
    grow(n, holes, p, |s| {
        out.push(PartialPerm::new(s.to_vec()).expect("generator keeps prefixes standardized"))
    });
    Ok(out)
}

/// All elements of `S_n^k(p)`.
pub fn avoiders(n: usize, k: usize, p: &Pattern) -> Result<Vec<PartialPerm>> {
    if k > n {
        return Err(Error::invalid(format!("k = {k} exceeds n = {n}")));
    }
    let mut out = Vec::new();
    for h in HoleSet::all(n, k) {
        out.extend(avoiders_with_holes(n, &h, p)?);
    }
    Ok(out)
}

/// `s_n^H(p)` by pruned generation.
pub fn count_h(n: usize, holes: &HoleSet, p: &Pattern) -> Result<u64> {
    check_holes(n, holes)?;
    let mut c: u64 = 0;
    let mut overflow = false;
    grow(n, holes, p, |_| match c.checked_add(1) {
        Some(v) => c = v,
        None => overflow = true,
    });
    if overflow {
        return Err(Error::Overflow("s_n^H(p)"));
    }
    Ok(c)
}

/// `s_n^H(p)` straight from the definition.
pub fn count_h_brute(n: usize, holes: &HoleSet, p: &Pattern) -> Result<u64> {
    check_holes(n, holes)?;
    let c = PartialPerm::all_with_holes(n, holes)
        .par_iter()
        .filter(|pi| pi.avoids_oracle(p))
        .count();
    u64::try_from(c).map_err(|_| Error::Overflow("s_n^H(p)"))
}

fn checked_sum(parts: Vec<Result<u64>>) -> Result<u64> {
    parts
        .into_iter()
        .try_fold(0u64, |acc, x| acc.checked_add(x?).ok_or(Error::Overflow("s_n^k(p)")))
}

/// `s_n^k(p)`, the number of `k`-hole partial permutations of length `n` avoiding `p`.
pub fn count(n: usize, k: usize, p: &Pattern, method: Method) -> Result<u64> {
    if k > n {
        return Err(Error::invalid(format!("k = {k} exceeds n = {n}")));
    }
    match method {
        Method::Formula => closed_form(p, k, n)?.ok_or_else(|| Error::FormulaNotAvailable {
            pattern: p.to_string(),
            k,
        }),
        Method::Direct => {
            let parts = HoleSet::all(n, k).par_iter().map(|h| count_h(n, h, p)).collect();
            checked_sum(parts)
        }
        Method::Brute => {
            let parts = HoleSet::all(n, k).par_iter().map(|h| count_h_brute(n, h, p)).collect();
            checked_sum(parts)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn holes(v: &[usize], n: usize) -> HoleSet {
        HoleSet::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn strong_counts_distinguish_reverse_pair() {
        assert_eq!(count_h(5, &holes(&[2], 5), &pat("1342")).unwrap(), 13);
        assert_eq!(count_h(5, &holes(&[2], 5), &pat("2431")).unwrap(), 14);
        assert_eq!(count_h_brute(5, &holes(&[2], 5), &pat("1342")).unwrap(), 13);
        assert_eq!(count_h(5, &holes(&[2, 4], 5), &pat("2413")).unwrap(), 0);
    }

    #[test]
    fn length_three_single_hole() {
        for p in crate::perm::all_perms(3) {
            assert_eq!(count(5, 1, &p, Method::Direct).unwrap(), 5);
        }
    }

    #[test]
    fn methods_agree_on_small_cases() {
        for p in crate::perm::all_perms(4) {
            for n in 0..=6 {
                for k in 0..=n.min(3) {
                    let d = count(n, k, &p, Method::Direct).unwrap();
                    let b = count(n, k, &p, Method::Brute).unwrap();
                    assert_eq!(d, b, "p={p} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn generated_avoiders_are_distinct_and_avoid() {
        let p = pat("2413");
        let all = avoiders(6, 1, &p).unwrap();
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(|pi| pi.avoids_oracle(&p)));
        assert_eq!(all.len() as u64, count(6, 1, &p, Method::Brute).unwrap());
    }

    #[test]
    fn bad_arguments() {
        assert!(count(3, 4, &pat("12"), Method::Direct).is_err());
        assert!(count_h(3, &holes(&[4], 4), &pat("12")).is_err());
        assert!(matches!(
            count(6, 1, &pat("25314"), Method::Formula),
            Err(Error::FormulaNotAvailable { .. })
        ));
    }
}
