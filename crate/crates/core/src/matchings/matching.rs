//! Perfect matchings on `[2n]` and their correspondence with transversals.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::{FerrersShape, PartialFilling};
use crate::perm::Perm;

/// An edge `(left, right)` with `left < right`, vertices 1-based.
pub type Edge = (usize, usize);

/// A perfect matching on `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Edge>", into = "Vec<Edge>")]
pub struct Matching {
    /// `partner[v-1]` is the other end of the edge at `v`.
    partner: Vec<usize>,
}

impl Matching {
    pub fn new(edges: &[Edge]) -> Result<Self> {
        let size = 2 * edges.len();
        let mut partner = vec![0; size];
        for &(a, b) in edges {
            let (a, b) = (a.min(b), a.max(b));
            if a == 0 || b > size || a == b {
                return Err(Error::invalid(format!("edge ({a},{b}) outside 1..={size}")));
            }
            if partner[a - 1] != 0 || partner[b - 1] != 0 {
                return Err(Error::invalid(format!("edge ({a},{b}) reuses a vertex")));
            }
            partner[a - 1] = b;
            partner[b - 1] = a;
        }
        Ok(Matching { partner })
    }

    pub fn empty() -> Self {
        Matching { partner: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of vertices, `2n`.
    pub fn size(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v - 1]
    }

    pub fn is_left(&self, v: usize) -> bool {
        self.partner[v - 1] > v
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.size() && self.partner[a - 1] == b
    }

    /// Edges sorted by left endpoint.
    pub fn edges(&self) -> Vec<Edge> {
        (1..=self.size())
            .filter(|&v| self.is_left(v))
            .map(|v| (v, self.partner(v)))
            .collect()
    }

    pub fn left_vertices(&self) -> Vec<usize> {
        (1..=self.size()).filter(|&v| self.is_left(v)).collect()
    }

    pub fn right_vertices(&self) -> Vec<usize> {
        (1..=self.size()).filter(|&v| !self.is_left(v)).collect()
    }

    /// Mirror image: `{i, j}` is an edge iff `{2n+1-j, 2n+1-i}` is an edge of `self`.
    pub fn reverse(&self) -> Self {
        let s = self.size();
        let mut partner = vec![0; s];
        for v in 1..=s {
            partner[s - v] = s + 1 - self.partner(v);
        }
        Matching { partner }
    }

    /// Insert a new edge whose endpoints land at positions `a < b` of the result.
    pub fn insert_edge(&self, a: usize, b: usize) -> Result<Self> {
        let s = self.size() + 2;
        if a == 0 || a >= b || b > s {
            return Err(Error::invalid(format!(
                "cannot insert edge ({a},{b}) into {s} vertices"
            )));
        }
        let shift = |v: usize| {
            let v = if v >= a { v + 1 } else { v };
            if v >= b {
                v + 1
            } else {
                v
            }
        };
        let mut edges: Vec<Edge> = self.edges().into_iter().map(|(x, y)| (shift(x), shift(y))).collect();
        edges.push((a, b));
        Matching::new(&edges)
    }

    /// Delete the edge `(a, b)` and close up the gaps.
    pub fn remove_edge(&self, a: usize, b: usize) -> Result<Self> {
        if !self.has_edge(a, b) || a > b {
            return Err(Error::invalid(format!("({a},{b}) is not an edge of {self}")));
        }
        let shift = |v: usize| v - usize::from(v > a) - usize::from(v > b);
        let edges: Vec<Edge> = self
            .edges()
            .into_iter()
            .filter(|&e| e != (a, b))
            .map(|(x, y)| (shift(x), shift(y)))
            .collect();
        Matching::new(&edges)
    }

    /// The sub-matching on the given edges, relabelled to `1..=2m`.
    pub fn induced(&self, edges: &[Edge]) -> Self {
        let verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).sorted().collect();
        let rank = |v: usize| verts.binary_search(&v).expect("endpoint listed") + 1;
        let e: Vec<Edge> = edges.iter().map(|&(a, b)| (rank(a), rank(b))).collect();
        Matching::new(&e).expect("sub-matching of a matching")
    }

    pub fn contains(&self, pattern: &Matching) -> bool {
        contains_matching(self, pattern)
    }

    pub fn avoids(&self, pattern: &Matching) -> bool {
        !contains_matching(self, pattern)
    }

    /// Do the edges at the given vertices pairwise cross?
    pub fn edges_at_cross(&self, verts: &[usize]) -> bool {
        let es = self.edges_at(verts);
        es.iter().tuple_combinations().all(|(&e, &f)| crosses(e, f))
    }

    /// Are the edges at the given vertices pairwise nested?
    pub fn edges_at_nest(&self, verts: &[usize]) -> bool {
        let es = self.edges_at(verts);
        es.iter().tuple_combinations().all(|(&e, &f)| nested(e, f))
    }

    fn edges_at(&self, verts: &[usize]) -> Vec<Edge> {
        verts
            .iter()
            .map(|&v| {
                let u = self.partner(v);
                (v.min(u), v.max(u))
            })
            .collect()
    }

    /// Every matching of order `n`.
    pub fn all(n: usize) -> Vec<Matching> {
        let mut out = Vec::new();
        let mut partner = vec![0; 2 * n];
        fn go(partner: &mut Vec<usize>, out: &mut Vec<Matching>) {
            let Some(a) = partner.iter().position(|&p| p == 0) else {
                out.push(Matching {
                    partner: partner.clone(),
                });
                return;
            };
            for b in a + 1..partner.len() {
                if partner[b] == 0 {
                    partner[a] = b + 1;
                    partner[b] = a + 1;
                    go(partner, out);
                    partner[a] = 0;
                    partner[b] = 0;
                }
            }
        }
        go(&mut partner, &mut out);
        out
    }

    /// Every matching whose left-vertex set is `left` (a subset of `[2n]`).
    pub fn all_with_left_vertices(n: usize, left: &[usize]) -> Vec<Matching> {
        let mut is_left = vec![false; 2 * n];
        for &v in left {
            is_left[v - 1] = true;
        }
        let mut out = Vec::new();
        let mut partner = vec![0; 2 * n];
        let mut open: Vec<usize> = Vec::new();
        fn go(v: usize, is_left: &[bool], open: &mut Vec<usize>, partner: &mut Vec<usize>, out: &mut Vec<Matching>) {
            if v > is_left.len() {
                if open.is_empty() {
                    out.push(Matching {
                        partner: partner.clone(),
                    });
                }
                return;
            }
            if is_left[v - 1] {
                open.push(v);
                go(v + 1, is_left, open, partner, out);
                open.pop();
            } else {
                for t in 0..open.len() {
                    let s = open.remove(t);
                    partner[s - 1] = v;
                    partner[v - 1] = s;
                    go(v + 1, is_left, open, partner, out);
                    open.insert(t, s);
                }
            }
        }
        go(1, &is_left, &mut open, &mut partner, &mut out);
        out
    }
}

impl TryFrom<Vec<Edge>> for Matching {
    type Error = Error;
    fn try_from(edges: Vec<Edge>) -> Result<Self> {
        Matching::new(&edges)
    }
}

impl From<Matching> for Vec<Edge> {
    fn from(m: Matching) -> Self {
        m.edges()
    }
}

/// Text form `n; (a,b) (c,d) ...`.
impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.order())?;
        for (a, b) in self.edges() {
            write!(f, " ({a},{b})")?;
        }
        Ok(())
    }
}

impl FromStr for Matching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, body) = s
            .split_once(';')
            .ok_or_else(|| Error::invalid(format!("matching {s:?} lacks the `n;` prefix")))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad order {head:?}")))?;
        let mut edges = Vec::new();
        for part in body.split(')').map(str::trim).filter(|p| !p.is_empty()) {
            let inner = part
                .strip_prefix('(')
                .ok_or_else(|| Error::invalid(format!("bad edge {part:?}")))?;
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| Error::invalid(format!("bad edge {part:?}")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad vertex {x:?}")))
            };
            edges.push((parse(a)?, parse(b)?));
        }
        if edges.len() != n {
            return Err(Error::invalid(format!("order {n} but {} edges", edges.len())));
        }
        Matching::new(&edges)
    }
}

/// `e` crosses `f` from the left: `e.0 < f.0 < e.1 < f.1`.
pub fn crosses_from_left(e: Edge, f: Edge) -> bool {
    e.0 < f.0 && f.0 < e.1 && e.1 < f.1
}

pub fn crosses(e: Edge, f: Edge) -> bool {
    crosses_from_left(e, f) || crosses_from_left(f, e)
}

/// `inner` is nested below `outer`.
pub fn nested_below(inner: Edge, outer: Edge) -> bool {
    outer.0 < inner.0 && inner.1 < outer.1
}

pub fn nested(e: Edge, f: Edge) -> bool {
    nested_below(e, f) || nested_below(f, e)
}

/// Vertex `v` lies strictly under `e`.
pub fn covers(e: Edge, v: usize) -> bool {
    e.0 < v && v < e.1
}

/// The matching of a permutation matrix.
pub fn perm_matching(p: &Perm) -> Matching {
    mu(&PartialFilling::from_perm(p)).expect("permutation matrices are transversals of a square")
}

/// Left-vertex positions `X(D)` of a proper diagram: `x_j < y_i` iff column `j` meets row `i`.
pub fn left_vertex_set(shape: &FerrersShape) -> Vec<usize> {
    let (xs, _) = vertex_split(shape);
    xs
}

/// `(X(D), Y(D))` with `Y` listed as `y_1 > y_2 > ...`, row `i` at `y_i`.
fn vertex_split(shape: &FerrersShape) -> (Vec<usize>, Vec<usize>) {
    let n = shape.cols();
    let mut xs = Vec::with_capacity(n);
    let mut ys = vec![0; shape.rows()];
    let mut v = 0;
    for j in 1..=n {
        v += 1;
        xs.push(v);
        // rows of length exactly j sit right after x_j, top row first
        for i in (1..=shape.rows()).rev() {
            if shape.row_len(i) == j {
                v += 1;
                ys[i - 1] = v;
            }
        }
    }
    (xs, ys)
}

/// Encode a transversal of a proper diagram as a matching.
pub fn mu(f: &PartialFilling) -> Result<Matching> {
    let shape = f.shape();
    if !shape.is_proper() || f.is_partial() {
        return Err(Error::invalid(
            "mu needs a filling of a proper diagram without ◇-columns",
        ));
    }
    if shape.rows() != shape.cols() || !f.is_transversal() {
        return Err(Error::invalid("mu needs a transversal"));
    }
    let (xs, ys) = vertex_split(shape);
    let edges: Vec<Edge> = (1..=shape.cols())
        .map(|j| {
            let i = f.one_in_column(j).expect("transversal");
            (xs[j - 1], ys[i - 1])
        })
        .collect();
    Matching::new(&edges)
}

/// The proper diagram whose left-vertex set is `eL(m)`, and the transversal encoding `m`.
pub fn mu_inverse(m: &Matching) -> PartialFilling {
    let left = m.left_vertices();
    // column j has height = number of right-vertices after x_j
    let heights: Vec<usize> = left
        .iter()
        .map(|&x| (x + 1..=m.size()).filter(|&v| !m.is_left(v)).count())
        .collect();
    let shape = FerrersShape::new(heights).expect("heights decrease along left vertices");
    let right_desc: Vec<usize> = m.right_vertices().into_iter().rev().collect();
    let ones = left
        .iter()
        .map(|&x| {
            let y = m.partner(x);
            Some(right_desc.iter().position(|&r| r == y).expect("right vertex") + 1)
        })
        .collect();
    PartialFilling::standard(shape, ones).expect("edges give one 1 per row and column")
}

/// Is there an order-preserving, edge-preserving injection of `pattern` into `m`?
pub fn contains_matching(m: &Matching, pattern: &Matching) -> bool {
    let pe = pattern.edges();
    if pe.is_empty() {
        return true;
    }
    let me = m.edges();
    if pe.len() > me.len() {
        return false;
    }
    // assign pattern edges (sorted by left end) to matching edges with increasing left ends
    fn go(pe: &[Edge], me: &[Edge], from: usize, chosen: &mut Vec<Edge>) -> bool {
        let t = chosen.len();
        if t == pe.len() {
            return true;
        }
        let (pa, pb) = pe[t];
        for idx in from..me.len() {
            let (ma, mb) = me[idx];
            let ok = chosen.iter().zip(pe).all(|(&(ca, cb), &(qa, qb))| {
                (qa < pb) == (ca < mb) && (qb < pa) == (cb < ma) && (qb < pb) == (cb < mb)
            });
            if ok {
                chosen.push((ma, mb));
                if go(pe, me, idx + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(&pe, &me, 0, &mut Vec::new())
}
