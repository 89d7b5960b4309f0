//! Prefixes, stubs and the block structure of the generating sequence.

use serde::Serialize;

use super::matching::{covers, crosses_from_left, Edge, Matching};

/// The prefix `M[r]`: the edges inside `1..=r` plus the stubs whose partner lies beyond `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prefix {
    pub r: usize,
    pub edges: Vec<Edge>,
    pub stubs: Vec<usize>,
    /// Stub equivalence classes, left to right; each is a run of consecutive stubs.
    pub blocks: Vec<Vec<usize>>,
}

impl Prefix {
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// 1-based index of the block holding stub `s`.
    pub fn block_of(&self, s: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&s)).map(|t| t + 1)
    }
}

fn prefix_parts(m: &Matching, r: usize) -> (Vec<Edge>, Vec<usize>) {
    let edges = m.edges().into_iter().filter(|&(_, b)| b <= r).collect();
    let stubs = (1..=r).filter(|&v| m.partner(v) > r).collect();
    (edges, stubs)
}

/// Are `x < x2` joined by a chain of `edges` with `x` under the first edge and `x2` under the last?
fn chain_equivalent(edges: &[Edge], x: usize, x2: usize) -> bool {
    let mut seen: Vec<bool> = edges.iter().map(|&e| covers(e, x)).collect();
    let mut stack: Vec<usize> = (0..edges.len()).filter(|&t| seen[t]).collect();
    while let Some(t) = stack.pop() {
        if covers(edges[t], x2) {
            return true;
        }
        for u in 0..edges.len() {
            if !seen[u] && crosses_from_left(edges[t], edges[u]) {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    false
}

/// Blocks of `M[r]` computed from the chain definition.
///
/// Panics if the classes are not runs of consecutive stubs, which the
/// definition guarantees.
pub fn prefix_blocks(m: &Matching, r: usize) -> Prefix {
    assert!(r >= 1 && r <= m.size(), "prefix length {r} outside 1..={}", m.size());
    let (edges, stubs) = prefix_parts(m, r);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &s in &stubs {
        let joined = blocks.iter_mut().find(|b| chain_equivalent(&edges, b[0], s));
        match joined {
            Some(b) => b.push(s),
            None => blocks.push(vec![s]),
        }
    }
    let flat: Vec<usize> = blocks.iter().flatten().copied().collect();
    assert_eq!(flat, stubs, "blocks of M[{r}] are not contiguous");
    Prefix {
        r,
        edges,
        stubs,
        blocks,
    }
}

/// Blocks of `M[r]` by the single-covering-edge rule, valid for m312-avoiding matchings.
pub fn prefix_blocks_single_cover(m: &Matching, r: usize) -> Vec<Vec<usize>> {
    let (edges, stubs) = prefix_parts(m, r);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &s in &stubs {
        let joined = blocks
            .iter_mut()
            .find(|b| edges.iter().any(|&e| covers(e, b[0]) && covers(e, s)));
        match joined {
            Some(b) => b.push(s),
            None => blocks.push(vec![s]),
        }
    }
    blocks
}

/// How `M[r]` arises from `M[r-1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Step {
    /// `r` is a left-vertex: a new singleton block.
    L,
    /// `r` closes the stub `selected` from block `block` (1-based) of `M[r-1]`.
    R {
        selected: usize,
        block: usize,
        minimalist: bool,
        maximalist: bool,
    },
}

/// Evolve a block list by one step of the generating sequence.
///
/// An L-step appends `{r}`; an R-step selecting `s` from block `j` keeps
/// blocks `1..j` and merges the rest, minus `s`, into one block.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockTracker {
    pub blocks: Vec<Vec<usize>>,
}

impl BlockTracker {
    pub fn new() -> Self {
        BlockTracker::default()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn left_step(&mut self, r: usize) {
        self.blocks.push(vec![r]);
    }

    /// Select stub `s`; returns the step classification.
    pub fn right_step(&mut self, s: usize) -> Step {
        let j = self
            .blocks
            .iter()
            .position(|b| b.contains(&s))
            .expect("selected vertex must be a stub");
        let b = &self.blocks[j];
        let step = Step::R {
            selected: s,
            block: j + 1,
            minimalist: b[0] == s,
            maximalist: *b.last().expect("blocks are nonempty") == s,
        };
        let merged: Vec<usize> = self.blocks.drain(j..).flatten().filter(|&v| v != s).collect();
        if !merged.is_empty() {
            self.blocks.push(merged);
        }
        step
    }

    /// Select the stub at the minimum or maximum of block `j` (1-based); returns it.
    pub fn select_extreme(&mut self, j: usize, maximal: bool) -> Option<usize> {
        let b = self.blocks.get(j - 1)?;
        let s = if maximal { *b.last()? } else { b[0] };
        self.right_step(s);
        Some(s)
    }
}

/// The steps taking `M[r-1]` to `M[r]` for `r = 2..=2n`, replayed through [`BlockTracker`].
pub fn generating_steps(m: &Matching) -> Vec<Step> {
    let mut t = BlockTracker::new();
    let mut out = Vec::with_capacity(m.size());
    for r in 1..=m.size() {
        if m.is_left(r) {
            t.left_step(r);
            if r > 1 {
                out.push(Step::L);
            }
        } else {
            out.push(t.right_step(m.partner(r)));
        }
    }
    out
}

/// Classification of the transition `M[r-1] -> M[r]`, from the blocks of `M[r-1]`.
pub fn step_type(m: &Matching, r: usize) -> Step {
    assert!(r >= 2 && r <= m.size(), "step index {r} outside 2..={}", m.size());
    if m.is_left(r) {
        return Step::L;
    }
    let prev = prefix_blocks(m, r - 1);
    let s = m.partner(r);
    let j = prev.block_of(s).expect("partner of a right-vertex is a stub");
    let b = &prev.blocks[j - 1];
    Step::R {
        selected: s,
        block: j,
        minimalist: b[0] == s,
        maximalist: *b.last().expect("nonempty") == s,
    }
}

/// Every R-step minimalist.
pub fn all_minimalist(m: &Matching) -> bool {
    generating_steps(m)
        .iter()
        .all(|s| !matches!(s, Step::R { minimalist: false, .. }))
}

/// Every R-step maximalist.
pub fn all_maximalist(m: &Matching) -> bool {
    generating_steps(m)
        .iter()
        .all(|s| !matches!(s, Step::R { maximalist: false, .. }))
}
