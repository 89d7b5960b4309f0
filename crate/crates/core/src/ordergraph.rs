//! Patterns of length `k + 2` against `k` holes: order graphs and Baxter permutations.
//!
//! With only two non-hole entries free in any occurrence, avoidance reduces to
//! a forced relative order for every pair of non-hole positions. Those forced
//! orders form a tournament; the partial permutation exists iff it is acyclic.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::count_h;
use crate::error::{Error, Result};
use crate::partial::{HoleSet, PartialPerm, Slot};
use crate::perm::{Pattern, Perm};

/// Non-hole positions of `[n]` split by the holes into `k + 1` runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalDecomposition {
    pub holes: HoleSet,
    /// `intervals[a]` is the 1-based interval `I_{a+1}`.
    pub intervals: Vec<Vec<usize>>,
}

impl IntervalDecomposition {
    pub fn new(n: usize, holes: &HoleSet) -> Self {
        let mut intervals = vec![Vec::new(); holes.len() + 1];
        let mut a = 0;
        for i in 1..=n {
            if holes.contains(i) {
                a += 1;
            } else {
                intervals[a].push(i);
            }
        }
        IntervalDecomposition {
            holes: holes.clone(),
            intervals,
        }
    }

    /// 0-based interval index of a non-hole position.
    pub fn interval_of(&self, i: usize) -> usize {
        self.holes.indices().iter().take_while(|&&h| h < i).count()
    }
}

/// Tournament on the non-hole positions; an arc `i -> j` forces `pi_i < pi_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderGraph {
    pub n: usize,
    pub holes: HoleSet,
    pub vertices: Vec<usize>,
    /// `less[u][v]` for vertex indices `u`, `v` (not positions).
    less: Vec<Vec<bool>>,
}

impl OrderGraph {
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        let u = self.vertices.binary_search(&i).expect("i is a vertex");
        let v = self.vertices.binary_search(&j).expect("j is a vertex");
        self.less[u][v]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let m = self.vertices.len();
        let mut out = Vec::new();
        for u in 0..m {
            for v in 0..m {
                if self.less[u][v] {
                    out.push((self.vertices[u], self.vertices[v]));
                }
            }
        }
        out
    }

    /// Some directed triangle, as positions.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        let m = self.vertices.len();
        for a in 0..m {
            for b in 0..m {
                if !self.less[a][b] {
                    continue;
                }
                for c in 0..m {
                    if self.less[b][c] && self.less[c][a] {
                        return Some((self.vertices[a], self.vertices[b], self.vertices[c]));
                    }
                }
            }
        }
        None
    }

    /// Kahn's algorithm; `None` when a cycle blocks the order.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let m = self.vertices.len();
        let mut indeg: Vec<usize> = (0..m).map(|v| (0..m).filter(|&u| self.less[u][v]).count()).collect();
        let mut queue: VecDeque<usize> = (0..m).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(m);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for (v, d) in indeg.iter_mut().enumerate() {
                if self.less[u][v] {
                    *d -= 1;
                    if *d == 0 {
                        queue.push_back(v);
                    }
                }
            }
        }
        (order.len() == m).then_some(order)
    }

    /// Acyclicity, checked both by triangle scan and by topological sort.
    ///
    /// # Panics
    /// If the two tests disagree, which would mean the graph is not a tournament.
    pub fn is_acyclic(&self) -> bool {
        let by_triangles = self.find_triangle().is_none();
        let by_sort = self.topological_order().is_some();
        assert_eq!(by_triangles, by_sort, "tournament acyclicity tests disagree");
        by_sort
    }
}

fn check_lengths(p: &Pattern, n: usize, holes: &HoleSet) -> Result<()> {
    if p.len() != holes.len() + 2 {
        return Err(Error::invalid(format!(
            "pattern length {} must be the hole count {} plus two",
            p.len(),
            holes.len()
        )));
    }
    if holes.indices().last().is_some_and(|&h| h > n) {
        return Err(Error::invalid(format!("hole set {holes} does not fit in [{n}]")));
    }
    Ok(())
}

/// The order graph `G_n^H(p)`: for `i < j` with `i` in run `a` and `j` in run `b`
/// (1-based), arc `i -> j` when `p_a > p_{b+1}`, else `j -> i`.
pub fn order_graph(p: &Pattern, n: usize, holes: &HoleSet) -> Result<OrderGraph> {
    check_lengths(p, n, holes)?;
    let dec = IntervalDecomposition::new(n, holes);
    let vertices: Vec<usize> = dec.intervals.concat();
    let m = vertices.len();
    let mut less = vec![vec![false; m]; m];
    for u in 0..m {
        for v in u + 1..m {
            let a = dec.interval_of(vertices[u]) + 1;
            let b = dec.interval_of(vertices[v]) + 1;
            if p.at(a) > p.at(b + 1) {
                less[u][v] = true;
            } else {
                less[v][u] = true;
            }
        }
    }
    Ok(OrderGraph {
        n,
        holes: holes.clone(),
        vertices,
        less,
    })
}

/// The single element of `S_n^H(p)` when the order graph is acyclic.
pub fn unique_avoider(p: &Pattern, n: usize, holes: &HoleSet) -> Result<Option<PartialPerm>> {
    let g = order_graph(p, n, holes)?;
    if !g.is_acyclic() {
        return Ok(None);
    }
    let order = g.topological_order().expect("acyclic");
    let mut slots = vec![Slot::Hole; n];
    for (rank, &u) in order.iter().enumerate() {
        slots[g.vertices[u] - 1] = Slot::Value(rank + 1);
    }
    PartialPerm::new(slots).map(Some)
}

/// No `a < b < b+1 < d` with `p_a p_b p_{b+1} p_d` order-isomorphic to 2413 or 3142.
pub fn is_baxter(p: &Perm) -> bool {
    let l = p.len();
    for b in 1..l {
        let c = b + 1;
        if c >= l {
            break;
        }
        let (pb, pc) = (p.at(b), p.at(c));
        for a in 1..b {
            for d in c + 1..=l {
                let (pa, pd) = (p.at(a), p.at(d));
                // 2413: p_c < p_a < p_d < p_b ; 3142: p_b < p_d < p_a < p_c
                if (pc < pa && pa < pd && pd < pb) || (pb < pd && pd < pa && pa < pc) {
                    return false;
                }
            }
        }
    }
    true
}

/// Outcome of checking the four equivalent characterizations of Baxter patterns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaxterReport {
    pub pattern: Perm,
    pub is_baxter: bool,
    /// Hole sets at `n = k + 3` with `s_n^H(p) = 0`.
    pub failing_h: Vec<HoleSet>,
    /// `s_n^H(p) = 1` for every `H`, for all `n` in `k..=k+4`.
    pub all_h_up_to_k_plus_4: bool,
    /// `s_n^H(p) = 1` for every `H` at `n = k + 3`.
    pub all_h_at_k_plus_3: bool,
    /// Some `n` in `k+3..=k+4` has `s_n^H(p) = 1` for every `H`.
    pub some_n_all_h: bool,
    /// Every statement agrees with `is_baxter`, and graph acyclicity matched the counts.
    pub passes: bool,
}

/// Check the Baxter characterizations for `p` (length at least 3, `k = |p| - 2`).
pub fn baxter_criterion(p: &Perm) -> Result<BaxterReport> {
    if p.len() < 3 {
        return Err(Error::invalid("Baxter criterion needs a pattern of length at least 3"));
    }
    let k = p.len() - 2;
    let all_one = |n: usize| -> Result<(bool, Vec<HoleSet>, bool)> {
        let rows: Vec<(HoleSet, u64, bool)> = HoleSet::all(n, k)
            .into_par_iter()
            .map(|h| {
                let c = count_h(n, &h, p)?;
                let acyclic = order_graph(p, n, &h)?.is_acyclic();
                Ok((h, c, acyclic))
            })
            .collect::<Result<_>>()?;
        let consistent = rows.iter().all(|(_, c, acyclic)| *c <= 1 && (*c == 1) == *acyclic);
        let failing: Vec<HoleSet> = rows
            .into_iter()
            .filter(|(_, c, _)| *c != 1)
            .map(|(h, _, _)| h)
            .collect();
        Ok((failing.is_empty(), failing, consistent))
    };
    let mut consistent = true;
    let mut statement2 = true;
    let mut failing_h = Vec::new();
    let mut at = Vec::new();
    for n in k..=k + 4 {
        let (ok, failing, cons) = all_one(n)?;
        consistent &= cons;
        statement2 &= ok;
        if n == k + 3 {
            failing_h = failing;
        }
        at.push(ok);
    }
    let statement3 = at[3];
    let statement4 = at[3] || at[4];
    let baxter = is_baxter(p);
    let passes = consistent && statement2 == baxter && statement3 == baxter && statement4 == baxter;
    Ok(BaxterReport {
        pattern: p.clone(),
        is_baxter: baxter,
        failing_h,
        all_h_up_to_k_plus_4: statement2,
        all_h_at_k_plus_3: statement3,
        some_n_all_h: statement4,
        passes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_perms;

    fn pat(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn hs(v: &[usize], n: usize) -> HoleSet {
        HoleSet::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn baxter_detection() {
        assert!(!is_baxter(&pat("2413")));
        assert!(!is_baxter(&pat("3142")));
        assert!(all_perms(3).iter().all(is_baxter));
        assert_eq!(all_perms(4).iter().filter(|p| is_baxter(p)).count(), 22);
        assert_eq!(all_perms(5).iter().filter(|p| is_baxter(p)).count(), 92);
        // 2413 inside but not with adjacent middle entries
        assert!(is_baxter(&pat("25314")));
        assert!(!is_baxter(&pat("25134")));
    }

    #[test]
    fn triangle_for_all_runs_nonempty() {
        let g = order_graph(&pat("2413"), 5, &hs(&[2, 4], 5)).unwrap();
        assert!(!g.is_acyclic());
        let (a, b, c) = g.find_triangle().unwrap();
        let mut t = [a, b, c];
        t.sort();
        assert_eq!(t, [1, 3, 5]);
        assert_eq!(unique_avoider(&pat("2413"), 5, &hs(&[2, 4], 5)).unwrap(), None);
    }

    #[test]
    fn unique_avoider_when_a_run_is_empty() {
        let pi = unique_avoider(&pat("2413"), 5, &hs(&[1, 2], 5)).unwrap().unwrap();
        assert!(pi.avoids_oracle(&pat("2413")));
        for h in HoleSet::all(6, 1) {
            let pi = unique_avoider(&pat("123"), 6, &h).unwrap().unwrap();
            assert!(pi.avoids_oracle(&pat("123")));
        }
    }

    #[test]
    fn degenerate_graphs() {
        let g = order_graph(&pat("1234"), 2, &hs(&[1, 2], 2)).unwrap();
        assert!(g.vertices.is_empty() && g.is_acyclic());
        assert!(order_graph(&pat("123"), 4, &hs(&[1, 2], 4)).is_err());
        let g = order_graph(&pat("132"), 4, &hs(&[2], 4)).unwrap();
        assert_eq!(g.arcs().len(), 3);
    }

    #[test]
    fn criterion_matches_definition() {
        let r = baxter_criterion(&pat("2413")).unwrap();
        assert!(r.passes && !r.is_baxter && !r.failing_h.is_empty());
        let r = baxter_criterion(&pat("1234")).unwrap();
        assert!(r.passes && r.is_baxter && r.failing_h.is_empty());
    }
}
