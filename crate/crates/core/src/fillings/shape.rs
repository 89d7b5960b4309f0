//! Ferrers diagrams with possibly zero-height columns.
//!
//! Rows are numbered from the bottom and columns from the left, both from 1;
//! cell `(i, j)` is row `i`, column `j`. Lattice point `(i, j)` is the
//! top-right corner of cell `(i, j)`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct FerrersShape {
    heights: Vec<usize>,
}

impl FerrersShape {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if heights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "column heights {heights:?} are not non-increasing"
            )));
        }
        Ok(FerrersShape { heights })
    }

    /// `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        FerrersShape {
            heights: vec![rows; cols],
        }
    }

    /// Shape from row lengths listed bottom to top.
    pub fn from_row_lengths(rows: &[usize]) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::invalid(format!(
                "row lengths {rows:?} do not form a Ferrers diagram"
            )));
        }
        let m = rows.first().copied().unwrap_or(0);
        Ok(FerrersShape {
            heights: (1..=m).map(|j| rows.iter().filter(|&&l| l >= j).count()).collect(),
        })
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn cols(&self) -> usize {
        self.heights.len()
    }

    pub fn rows(&self) -> usize {
        self.heights.first().copied().unwrap_or(0)
    }

    /// Height of 1-based column `j`.
    pub fn height(&self, j: usize) -> usize {
        self.heights[j - 1]
    }

    /// Length of 1-based row `i`; zero above the diagram.
    pub fn row_len(&self, i: usize) -> usize {
        self.heights.iter().take_while(|&&h| h >= i).count()
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        (1..=self.rows()).map(|i| self.row_len(i)).collect()
    }

    pub fn has_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.cols() && self.heights[j - 1] >= i
    }

    pub fn has_point(&self, i: usize, j: usize) -> bool {
        if j == 0 {
            i == 0 || self.heights.first().is_some_and(|&h| h >= i)
        } else {
            j <= self.cols() && self.heights[j - 1] >= i
        }
    }

    pub fn cell_count(&self) -> usize {
        self.heights.iter().sum()
    }

    pub fn is_proper(&self) -> bool {
        self.heights.iter().all(|&h| h > 0)
    }

    pub fn is_degenerate(&self) -> bool {
        self.heights.iter().all(|&h| h == 0)
    }

    /// Points `(i, j)` of the diagram whose cell `(i+1, j+1)` is absent;
    /// there are `rows + cols + 1` of them.
    pub fn boundary_points(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..=self.cols() {
            for i in 0..=self.rows() {
                if self.has_point(i, j) && !self.has_cell(i + 1, j + 1) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// All shapes with `rows + cols <= bound`, lexicographic in the height sequence
    /// within each column count, column counts ascending.
    pub fn all_up_to(bound: usize) -> Vec<FerrersShape> {
        let mut out = Vec::new();
        for m in 0..=bound {
            let max_h = bound - m;
            let mut cur = Vec::with_capacity(m);
            fn rec(m: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<FerrersShape>) {
                if cur.len() == m {
                    out.push(FerrersShape { heights: cur.clone() });
                    return;
                }
                for h in 0..=cap {
                    cur.push(h);
                    rec(m, h, cur, out);
                    cur.pop();
                }
            }
            rec(m, max_h, &mut cur, &mut out);
        }
        out
    }
}

impl fmt::Display for FerrersShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.heights.iter().join(","))
    }
}

impl TryFrom<Vec<usize>> for FerrersShape {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        FerrersShape::new(v)
    }
}

impl From<FerrersShape> for Vec<usize> {
    fn from(s: FerrersShape) -> Self {
        s.heights
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_point_counts() {
        let s = FerrersShape::new(vec![3, 3, 2, 2, 0, 0, 0]).unwrap();
        assert_eq!(s.boundary_points().len(), 11);
        assert_eq!(FerrersShape::rectangle(1, 1).boundary_points().len(), 3);
        // r + c + 1 = 5 for two rows and two columns
        let s = FerrersShape::new(vec![2, 1]).unwrap();
        assert_eq!(s.boundary_points(), vec![(2, 0), (1, 1), (2, 1), (0, 2), (1, 2)]);
        assert_eq!(FerrersShape::new(vec![]).unwrap().boundary_points(), vec![(0, 0)]);
    }

    #[test]
    fn shapes_and_rows() {
        assert!(FerrersShape::new(vec![1, 2]).is_err());
        let s = FerrersShape::from_row_lengths(&[3, 2, 2]).unwrap();
        assert_eq!(s.heights(), &[3, 3, 1]);
        assert_eq!(s.row_lengths(), vec![3, 2, 2]);
        assert!(s.is_proper());
        assert!(FerrersShape::new(vec![0, 0]).unwrap().is_degenerate());
        for s in FerrersShape::all_up_to(7) {
            assert_eq!(s.boundary_points().len(), s.rows() + s.cols() + 1, "{s}");
        }
    }
}
