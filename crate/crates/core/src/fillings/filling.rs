//! Sparse partial 01-fillings of Ferrers diagrams.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::shape::FerrersShape;
use crate::error::{Error, Result};
use crate::occurrence;
use crate::partial::{PartialPerm, Slot};
use crate::perm::{Pattern, Perm};

/// A sparse partial filling: each column is either a ◇-column (all cells ◇,
/// tracked even at height zero) or a standard column holding at most one 1.
///
/// Stored sparsely: `ones[j-1]` is the row of the 1 in column `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartialFilling {
    shape: FerrersShape,
    diamond: Vec<bool>,
    ones: Vec<Option<usize>>,
}

impl PartialFilling {
    pub fn new(shape: FerrersShape, diamond: Vec<bool>, ones: Vec<Option<usize>>) -> Result<Self> {
        let m = shape.cols();
        if diamond.len() != m || ones.len() != m {
            return Err(Error::invalid("column data does not match the shape"));
        }
        let mut rows_used = HashSet::new();
        for j in 1..=m {
            match ones[j - 1] {
                Some(_) if diamond[j - 1] => {
                    return Err(Error::invalid(format!("◇-column {j} cannot hold a 1")));
                }
                Some(r) if r == 0 || r > shape.height(j) => {
                    return Err(Error::invalid(format!("1 at row {r} outside column {j}")));
                }
                Some(r) if !rows_used.insert(r) => {
                    return Err(Error::invalid(format!("row {r} holds two 1s")));
                }
                _ => {}
            }
        }
        Ok(PartialFilling { shape, diamond, ones })
    }

    /// Filling with no ◇-columns.
    pub fn standard(shape: FerrersShape, ones: Vec<Option<usize>>) -> Result<Self> {
        let m = shape.cols();
        PartialFilling::new(shape, vec![false; m], ones)
    }

    /// Permutation matrix of `p`.
    pub fn from_perm(p: &Perm) -> Self {
        let n = p.len();
        PartialFilling {
            shape: FerrersShape::rectangle(n, n),
            diamond: vec![false; n],
            ones: p.values().iter().map(|&v| Some(v)).collect(),
        }
    }

    /// Partial permutation matrix: `n - k` rows, `n` columns, holes become ◇-columns.
    pub fn from_partial_perm(pi: &PartialPerm) -> Self {
        let rows = pi.n() - pi.k();
        PartialFilling {
            shape: FerrersShape::rectangle(rows, pi.n()),
            diamond: pi.slots().iter().map(|s| s.is_hole()).collect(),
            ones: pi.slots().iter().map(|s| s.value()).collect(),
        }
    }

    pub fn shape(&self) -> &FerrersShape {
        &self.shape
    }

    pub fn cols(&self) -> usize {
        self.shape.cols()
    }

    pub fn rows(&self) -> usize {
        self.shape.rows()
    }

    pub fn is_diamond(&self, j: usize) -> bool {
        self.diamond[j - 1]
    }

    pub fn diamond_columns(&self) -> Vec<usize> {
        (1..=self.cols()).filter(|&j| self.diamond[j - 1]).collect()
    }

    pub fn diamond_mask(&self) -> &[bool] {
        &self.diamond
    }

    /// Row of the 1 in column `j`, if any.
    pub fn one_in_column(&self, j: usize) -> Option<usize> {
        self.ones[j - 1]
    }

    pub fn ones(&self) -> &[Option<usize>] {
        &self.ones
    }

    /// Column holding the 1 of row `i`, if any.
    pub fn one_in_row(&self, i: usize) -> Option<usize> {
        self.ones.iter().position(|&r| r == Some(i)).map(|c| c + 1)
    }

    /// `'1'`, `'0'`, `'*'` for a ◇ cell, or `None` outside the diagram.
    pub fn cell(&self, i: usize, j: usize) -> Option<char> {
        if !self.shape.has_cell(i, j) {
            None
        } else if self.diamond[j - 1] {
            Some('*')
        } else if self.ones[j - 1] == Some(i) {
            Some('1')
        } else {
            Some('0')
        }
    }

    /// Every row and every standard column has exactly one 1.
    pub fn is_transversal(&self) -> bool {
        let rows_ok = (1..=self.rows()).all(|i| self.one_in_row(i).is_some());
        let cols_ok = (0..self.cols()).all(|c| self.diamond[c] || self.ones[c].is_some());
        rows_ok && cols_ok
    }

    pub fn is_partial(&self) -> bool {
        self.diamond.iter().any(|&d| d)
    }

    /// Replace every ◇ by 0.
    pub fn zeroed(&self) -> PartialFilling {
        PartialFilling {
            shape: self.shape.clone(),
            diamond: vec![false; self.cols()],
            ones: self.ones.clone(),
        }
    }

    /// Substitute into ◇-column `j`: insert a new row at position `i` (between old
    /// rows `i-1` and `i`) of length `row_len`, with the 1 of column `j` in it.
    pub fn substitute(&self, j: usize, i: usize, row_len: usize) -> Result<PartialFilling> {
        let m = self.cols();
        if j == 0 || j > m || !self.diamond[j - 1] {
            return Err(Error::invalid(format!("column {j} is not a ◇-column")));
        }
        let h = self.shape.height(j);
        if i == 0 || i > h + 1 {
            return Err(Error::invalid(format!("row slot {i} outside 1..={}", h + 1)));
        }
        let legal = if i == 1 {
            row_len == m
        } else {
            let below = self.shape.row_len(i - 1);
            let above = self.shape.row_len(i);
            row_len >= above && row_len <= below && row_len >= j
        };
        if !legal {
            return Err(Error::invalid(format!(
                "a row of length {row_len} cannot be inserted at position {i}"
            )));
        }
        let heights = self
            .shape
            .heights()
            .iter()
            .enumerate()
            .map(|(c, &hc)| if c < row_len { hc + 1 } else { hc })
            .collect();
        let mut ones: Vec<Option<usize>> = self
            .ones
            .iter()
            .map(|r| r.map(|r| if r >= i { r + 1 } else { r }))
            .collect();
        ones[j - 1] = Some(i);
        let mut diamond = self.diamond.clone();
        diamond[j - 1] = false;
        Ok(PartialFilling {
            shape: FerrersShape::new(heights).expect("legal insertion keeps the shape Ferrers"),
            diamond,
            ones,
        })
    }

    /// Every legal `(row slot, row length)` for a substitution into column `j`.
    pub fn substitution_slots(&self, j: usize) -> Vec<(usize, usize)> {
        let m = self.cols();
        let h = self.shape.height(j);
        let mut out = vec![(1, m)];
        for i in 2..=h + 1 {
            let lo = self.shape.row_len(i).max(j);
            let hi = self.shape.row_len(i - 1);
            out.extend((lo..=hi).map(|l| (i, l)));
        }
        out
    }

    /// All non-partial fillings reachable by substituting into every ◇-column, in every order.
    pub fn extensions(&self) -> Vec<PartialFilling> {
        let mut seen = HashSet::new();
        let mut done = HashSet::new();
        let mut stack = vec![self.clone()];
        while let Some(f) = stack.pop() {
            let ds = f.diamond_columns();
            if ds.is_empty() {
                done.insert(f);
                continue;
            }
            for j in ds {
                for (i, l) in f.substitution_slots(j) {
                    let g = f.substitute(j, i, l).expect("slot listed as legal");
                    if seen.insert(g.clone()) {
                        stack.push(g);
                    }
                }
            }
        }
        let mut v: Vec<_> = done.into_iter().collect();
        v.sort();
        v
    }

    /// Containment for fillings without ◇-columns: an occurrence whose
    /// bounding square has its top-right cell inside the diagram.
    pub fn contains_classical(&self, p: &Pattern) -> bool {
        assert!(!self.is_partial(), "classical containment needs a non-partial filling");
        if p.is_empty() {
            return true;
        }
        let cols: Vec<(usize, usize)> = (1..=self.cols())
            .filter_map(|j| self.ones[j - 1].map(|r| (j, r)))
            .collect();
        let pv = p.values();
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        fn go(
            f: &PartialFilling,
            cols: &[(usize, usize)],
            pv: &[usize],
            from: usize,
            chosen: &mut Vec<(usize, usize)>,
        ) -> bool {
            let t = chosen.len();
            if t == pv.len() {
                let (last_col, _) = chosen[t - 1];
                let top = chosen.iter().map(|&(_, r)| r).max().expect("nonempty");
                return f.shape.has_cell(top, last_col);
            }
            for idx in from..cols.len() {
                let (c, r) = cols[idx];
                let ok = chosen
                    .iter()
                    .enumerate()
                    .all(|(s, &(_, rr))| (pv[s] < pv[t]) == (rr < r));
                if ok {
                    chosen.push((c, r));
                    if go(f, cols, pv, idx + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        go(self, &cols, pv, 0, &mut chosen)
    }

    /// Slots of the sub-filling below and left of point `(i, j)`.
    pub(crate) fn corner_slots(&self, i: usize, j: usize) -> Vec<Slot> {
        (1..=j)
            .filter_map(|c| {
                if self.diamond[c - 1] {
                    Some(Slot::Hole)
                } else {
                    match self.ones[c - 1] {
                        Some(r) if r <= i => Some(Slot::Value(r)),
                        _ => None,
                    }
                }
            })
            .collect()
    }

    /// Direct containment test: some boundary rectangle of the diagram contains
    /// `p`, with ◇-columns acting as wildcards.
    pub fn contains(&self, p: &Pattern) -> bool {
        self.shape
            .boundary_points()
            .into_iter()
            .any(|(i, j)| occurrence::contains(&self.corner_slots(i, j), p.values()))
    }

    pub fn avoids(&self, p: &Pattern) -> bool {
        !self.contains(p)
    }

    /// Avoidance by definition: every extension avoids `p` classically.
    pub fn avoids_oracle(&self, p: &Pattern) -> bool {
        self.extensions().iter().all(|e| !e.contains_classical(p))
    }

    /// Sub-filling on columns `from..=to` (1-based, inclusive) and rows `1..=max_row`.
    pub fn restrict(&self, cols: std::ops::RangeInclusive<usize>, max_row: usize) -> PartialFilling {
        let cols: Vec<usize> = cols.collect();
        let heights = cols.iter().map(|&c| self.shape.height(c).min(max_row)).collect();
        PartialFilling {
            shape: FerrersShape::new(heights).expect("columns of a Ferrers diagram stay sorted"),
            diamond: cols.iter().map(|&c| self.diamond[c - 1]).collect(),
            ones: cols
                .iter()
                .map(|&c| self.ones[c - 1].filter(|&r| r <= max_row))
                .collect(),
        }
    }

    /// All partial transversals of `shape` with the given ◇-columns.
    pub fn all_transversals(shape: &FerrersShape, diamond: &[bool]) -> Vec<PartialFilling> {
        let m = shape.cols();
        let standard: Vec<usize> = (1..=m).filter(|&j| !diamond[j - 1]).collect();
        let r = shape.rows();
        let mut out = Vec::new();
        if standard.len() != r || standard.iter().any(|&j| shape.height(j) == 0) {
            return out;
        }
        let mut ones = vec![None; m];
        // fill rows top to bottom: shorter rows first keeps the search narrow
        fn go(
            i: usize,
            shape: &FerrersShape,
            diamond: &[bool],
            ones: &mut Vec<Option<usize>>,
            out: &mut Vec<PartialFilling>,
        ) {
            if i == 0 {
                out.push(PartialFilling {
                    shape: shape.clone(),
                    diamond: diamond.to_vec(),
                    ones: ones.clone(),
                });
                return;
            }
            for c in 0..shape.row_len(i) {
                if !diamond[c] && ones[c].is_none() {
                    ones[c] = Some(i);
                    go(i - 1, shape, diamond, ones, out);
                    ones[c] = None;
                }
            }
        }
        go(r, shape, diamond, &mut ones, &mut out);
        out
    }

    /// The filling as a partial permutation when the shape is a rectangle
    /// and every row holds a 1.
    pub fn to_partial_perm(&self) -> Result<PartialPerm> {
        let r = self.rows();
        if self.shape.heights().iter().any(|&h| h != r) {
            return Err(Error::invalid(
                "only rectangular fillings are partial permutation matrices",
            ));
        }
        let slots = (0..self.cols())
            .map(|c| {
                if self.diamond[c] {
                    Ok(Slot::Hole)
                } else {
                    self.ones[c]
                        .map(Slot::Value)
                        .ok_or_else(|| Error::invalid(format!("standard column {} has no 1", c + 1)))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        PartialPerm::new(slots)
    }
}

impl fmt::Display for PartialFilling {
    /// Header `shape=h1,..,hm di=j1,..` then one line per row, top row first,
    /// using `1`, `0`, `*` for ◇ and `.` for cells outside the diagram.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "shape={} di={}",
            self.shape.heights().iter().join(","),
            self.diamond_columns().iter().join(",")
        )?;
        for i in (1..=self.rows()).rev() {
            writeln!(f)?;
            for j in 1..=self.cols() {
                write!(f, "{}", self.cell(i, j).unwrap_or('.'))?;
            }
        }
        Ok(())
    }
}

impl FromStr for PartialFilling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::invalid("empty filling text"))?;
        let mut heights = None;
        let mut di = Vec::new();
        for tok in header.split_whitespace() {
            let parse_list = |v: &str| -> Result<Vec<usize>> {
                v.split(',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| Error::invalid(format!("bad number {t:?}"))))
                    .collect()
            };
            if let Some(v) = tok.strip_prefix("shape=") {
                heights = Some(parse_list(v)?);
            } else if let Some(v) = tok.strip_prefix("di=") {
                di = parse_list(v)?;
            } else {
                return Err(Error::invalid(format!("unknown header field {tok:?}")));
            }
        }
        let shape = FerrersShape::new(heights.ok_or_else(|| Error::invalid("missing shape="))?)?;
        let m = shape.cols();
        let mut diamond = vec![false; m];
        for j in di {
            if j == 0 || j > m {
                return Err(Error::invalid(format!("◇-column {j} out of range")));
            }
            diamond[j - 1] = true;
        }
        let body: Vec<&str> = lines.collect();
        if body.len() != shape.rows() {
            return Err(Error::invalid("row count does not match the shape"));
        }
        let mut ones = vec![None; m];
        for (t, line) in body.iter().enumerate() {
            let i = shape.rows() - t;
            let chars: Vec<char> = line.chars().collect();
            if chars.len() != m {
                return Err(Error::invalid(format!("row {i} should have {m} characters")));
            }
            for (c, &ch) in chars.iter().enumerate() {
                let inside = shape.has_cell(i, c + 1);
                let expected_ok = match ch {
                    '.' => !inside,
                    '*' => inside && diamond[c],
                    '0' => inside && !diamond[c],
                    '1' => {
                        if ones[c].is_some() {
                            return Err(Error::invalid(format!("column {} holds two 1s", c + 1)));
                        }
                        ones[c] = Some(i);
                        inside && !diamond[c]
                    }
                    _ => false,
                };
                if !expected_ok {
                    return Err(Error::invalid(format!("unexpected {ch:?} at cell ({i},{})", c + 1)));
                }
            }
        }
        PartialFilling::new(shape, diamond, ones)
    }
}
