//! Partition of `S_l` into classes with equal avoidance counts.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::partial::HoleSet;
use crate::perm::{all_perms, Pattern, Perm};

use super::count::{count, count_h, Method};

/// Default largest length used as evidence.
pub const DEFAULT_HORIZON: usize = 8;

/// Counts attached to one pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Evidence {
    /// `s_n^k(p)` for `n = first_n..=horizon`.
    Counts(Vec<u64>),
    /// For each `n`, `s_n^H(p)` over all `k`-subsets `H` in lexicographic order.
    Tables(Vec<Vec<u64>>),
}

#[derive(Clone, Debug, Serialize)]
pub struct PatternEvidence {
    pub pattern: Perm,
    pub evidence: Evidence,
}

/// Result of [`classify`]. Equal evidence up to the horizon is necessary for
/// equivalence but does not prove it, hence `horizon_limited`.
#[derive(Clone, Debug, Serialize)]
pub struct ClassPartition {
    pub length: usize,
    pub k: usize,
    pub horizon: usize,
    pub strong: bool,
    pub horizon_limited: bool,
    /// First `n` of every evidence vector.
    pub first_n: usize,
    pub blocks: Vec<Vec<Perm>>,
    pub evidence: Vec<PatternEvidence>,
}

impl ClassPartition {
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn block_of(&self, p: &Perm) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(p))
    }
}

/// Which symmetry carries the orbit representative to `p`, and how hole sets move with it.
fn orbit_link(p: &Perm) -> (Perm, bool) {
    let rep = p.canonical();
    let [_, r, c, rc] = rep.symmetry_class();
    let reflects = if *p == rep || *p == c {
        false
    } else {
        debug_assert!(*p == r || *p == rc);
        true
    };
    (rep, reflects)
}

/// Group `S_l` by `s_n^k` (or by every `s_n^H` when `strong`) for `n` up to `horizon`.
pub fn classify(l: usize, k: usize, horizon: usize, strong: bool) -> Result<ClassPartition> {
    let patterns = all_perms(l);
    let first_n = l.max(k);
    let ns: Vec<usize> = (first_n..=horizon).collect();

    let mut reps: Vec<Perm> = patterns.iter().map(Perm::canonical).collect();
    reps.sort();
    reps.dedup();

    let evidence: Vec<Evidence> = if strong {
        let tables: HashMap<Perm, Vec<Vec<u64>>> = reps
            .par_iter()
            .map(|q| {
                let t = ns
                    .iter()
                    .map(|&n| {
                        HoleSet::all(n, k)
                            .iter()
                            .map(|h| count_h(n, h, q))
                            .collect::<Result<Vec<u64>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((q.clone(), t))
            })
            .collect::<Result<_>>()?;
        patterns
            .iter()
            .map(|p| {
                let (rep, reflects) = orbit_link(p);
                let t = &tables[&rep];
                let per_n = ns
                    .iter()
                    .zip(t)
                    .map(|(&n, row)| {
                        let sets = HoleSet::all(n, k);
                        if !reflects {
                            return row.clone();
                        }
                        let index: HashMap<&HoleSet, usize> = sets.iter().enumerate().map(|(i, h)| (h, i)).collect();
                        sets.iter().map(|h| row[index[&h.reflect(n)]]).collect()
                    })
                    .collect();
                Evidence::Tables(per_n)
            })
            .collect()
    } else {
        let counts: HashMap<Perm, Vec<u64>> = reps
            .par_iter()
            .map(|q| {
                let v = ns
                    .iter()
                    .map(|&n| count(n, k, q, Method::Direct))
                    .collect::<Result<Vec<u64>>>()?;
                Ok((q.clone(), v))
            })
            .collect::<Result<_>>()?;
        patterns
            .iter()
            .map(|p| Evidence::Counts(counts[&p.canonical()].clone()))
            .collect()
    };

    let mut groups: BTreeMap<Vec<usize>, Vec<Perm>> = BTreeMap::new();
    let mut by_evidence: HashMap<&Evidence, Vec<usize>> = HashMap::new();
    for (i, e) in evidence.iter().enumerate() {
        by_evidence.entry(e).or_default().push(i);
    }
    for members in by_evidence.into_values() {
        let perms = members.iter().map(|&i| patterns[i].clone()).collect();
        groups.insert(members, perms);
    }
    let blocks = groups.into_values().collect();

    Ok(ClassPartition {
        length: l,
        k,
        horizon,
        strong,
        horizon_limited: true,
        first_n,
        blocks,
        evidence: patterns
            .into_iter()
            .zip(evidence)
            .map(|(pattern, evidence)| PatternEvidence { pattern, evidence })
            .collect(),
    })
}

/// Sizes of the blocks, largest first.
pub fn sorted_sizes(c: &ClassPartition) -> Vec<usize> {
    let mut s = c.block_sizes();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// Convenience for tests and reports: do `p` and `q` land in one block?
pub fn same_block(c: &ClassPartition, p: &Pattern, q: &Pattern) -> bool {
    c.block_of(p).is_some() && c.block_of(p) == c.block_of(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_three_classes() {
        let c = classify(3, 0, 6, false).unwrap();
        assert_eq!(c.blocks.len(), 1);
        let c = classify(3, 1, 6, true).unwrap();
        assert_eq!(c.blocks.len(), 1);
    }

    #[test]
    fn strong_single_hole_splits_reverse_pair() {
        let c = classify(4, 1, 6, true).unwrap();
        let p: Perm = "1342".parse().unwrap();
        assert!(!same_block(&c, &p, &p.reverse()));
        assert!(same_block(&c, &p, &p.complement()));
    }
}
