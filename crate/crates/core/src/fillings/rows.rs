//! Row classes, the 312/231 condition checkers, monotone transversals and the
//! left/right decomposition of partial transversals.

use serde::Serialize;

use super::filling::PartialFilling;
use super::shape::FerrersShape;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Which of the two mirror-image pattern families a checker refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    /// 312, with 12 on the right part and 21 on the bottom-left part.
    P312,
    /// 231, with 21 on the right part and 12 on the bottom-left part.
    P231,
}

impl Variant {
    pub fn pattern(self) -> Perm {
        match self {
            Variant::P312 => "312".parse().expect("literal"),
            Variant::P231 => "231".parse().expect("literal"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    /// The unique transversal avoiding 12 (greedy leftmost).
    Avoid12,
    /// The unique transversal avoiding 21 (greedy rightmost).
    Avoid21,
}

/// Leftist/rightist tags of the rows of a diagram with ◇-columns.
///
/// With `j0` the leftmost ◇-column, the left part is the columns before `j0`,
/// the right part the columns after it, and the bottom part the rows meeting
/// column `j0`. Top-part rows are leftist; bottom rows are tagged from the top
/// down, a row being rightist when it has more right-part cells than there are
/// rightist rows above it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowClass {
    pub leftmost_diamond: Option<usize>,
    pub bottom_rows: usize,
    /// `rightist[i-1]` for row `i`.
    pub rightist: Vec<bool>,
}

impl RowClass {
    pub fn is_rightist(&self, i: usize) -> bool {
        self.rightist[i - 1]
    }

    pub fn rightist_count(&self) -> usize {
        self.rightist.iter().filter(|&&r| r).count()
    }

    pub fn leftist_rows(&self) -> Vec<usize> {
        (1..=self.rightist.len()).filter(|&i| !self.rightist[i - 1]).collect()
    }

    pub fn rightist_rows(&self) -> Vec<usize> {
        (1..=self.rightist.len()).filter(|&i| self.rightist[i - 1]).collect()
    }

    pub fn is_left_column(&self, j: usize) -> bool {
        self.leftmost_diamond.is_none_or(|j0| j < j0)
    }

    pub fn is_right_column(&self, j: usize) -> bool {
        self.leftmost_diamond.is_some_and(|j0| j > j0)
    }
}

pub fn classify_rows(shape: &FerrersShape, diamond: &[bool]) -> RowClass {
    let r = shape.rows();
    let j0 = diamond.iter().position(|&d| d).map(|c| c + 1);
    let mut rightist = vec![false; r];
    let bottom = j0.map_or(0, |j| shape.height(j));
    if let Some(j0) = j0 {
        let mut above = 0;
        for i in (1..=bottom).rev() {
            let right_cells = shape.row_len(i).saturating_sub(j0);
            if right_cells > above {
                rightist[i - 1] = true;
                above += 1;
            }
        }
    }
    RowClass {
        leftmost_diamond: j0,
        bottom_rows: bottom,
        rightist,
    }
}

/// Names of the conditions of the 312 (or 231) characterization that `f` fails.
///
/// The conditions are: at most two ◇-columns (C1); with three or more columns,
/// at most one ◇-column of nonzero height (C2); no 1s at `(i', j)` and `(i, j')`
/// with `i < i'`, `j < j'`, cell `(i', j')` present, `j` left and `j'` right
/// (C3); the left part avoids 312 (C4); the right part avoids 12 (C5); the
/// bottom-left part avoids 21 (C6). For 231 the patterns in C4–C6 become 231,
/// 21 and 12 and the names carry a prime.
pub fn check_conditions(f: &PartialFilling, variant: Variant) -> Vec<String> {
    let prime = if variant == Variant::P231 { "'" } else { "" };
    let name = |c: &str| format!("{c}{prime}");
    let mut failed = Vec::new();
    let ds = f.diamond_columns();
    if ds.len() > 2 {
        failed.push(name("C1"));
    }
    if f.cols() >= 3 && ds.iter().filter(|&&j| f.shape().height(j) > 0).count() > 1 {
        failed.push(name("C2"));
    }
    let rc = classify_rows(f.shape(), f.diamond_mask());
    let mut c3 = false;
    for j in 1..=f.cols() {
        let Some(ip) = f.one_in_column(j) else { continue };
        if !rc.is_left_column(j) {
            continue;
        }
        for jp in j + 1..=f.cols() {
            if !rc.is_right_column(jp) {
                continue;
            }
            if let Some(i) = f.one_in_column(jp) {
                if i < ip && f.shape().has_cell(ip, jp) {
                    c3 = true;
                }
            }
        }
    }
    if c3 {
        failed.push(name("C3"));
    }
    let (left_pat, right_pat, bottom_pat): (Perm, Perm, Perm) = match variant {
        Variant::P312 => ("312".parse().unwrap(), "12".parse().unwrap(), "21".parse().unwrap()),
        Variant::P231 => ("231".parse().unwrap(), "21".parse().unwrap(), "12".parse().unwrap()),
    };
    let m = f.cols();
    let (left, right, bottom_left) = match rc.leftmost_diamond {
        None => (f.clone(), None, None),
        Some(j0) => (
            f.restrict(1..=j0 - 1, f.rows()),
            (j0 < m).then(|| f.restrict(j0 + 1..=m, f.rows())),
            Some(f.restrict(1..=j0 - 1, rc.bottom_rows)),
        ),
    };
    if left.contains(&left_pat) {
        failed.push(name("C4"));
    }
    if right.is_some_and(|r| r.contains(&right_pat)) {
        failed.push(name("C5"));
    }
    if bottom_left.is_some_and(|b| b.contains(&bottom_pat)) {
        failed.push(name("C6"));
    }
    failed
}

/// The only 12-avoiding (or 21-avoiding) transversal of a diagram without ◇-columns.
///
/// Rows are processed top to bottom; each takes the leftmost (rightmost) column
/// that has no 1 yet.
pub fn unique_monotone_transversal(shape: &FerrersShape, direction: Direction) -> Result<PartialFilling> {
    let m = shape.cols();
    let mut ones = vec![None; m];
    for i in (1..=shape.rows()).rev() {
        let free: Vec<usize> = (0..shape.row_len(i)).filter(|&c| ones[c].is_none()).collect();
        let pick = match direction {
            Direction::Avoid12 => free.first(),
            Direction::Avoid21 => free.last(),
        };
        let &c = pick.ok_or_else(|| Error::invalid(format!("shape {shape} has no transversal")))?;
        ones[c] = Some(i);
    }
    if ones.iter().any(Option::is_none) {
        return Err(Error::invalid(format!("shape {shape} has no transversal")));
    }
    PartialFilling::standard(shape.clone(), ones)
}

/// A partial transversal split into its leftist-rows-by-left-columns part and
/// its rightist-rows-by-right-columns part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub left: PartialFilling,
    pub right: PartialFilling,
    /// Number of leftist rows in the bottom part; these are the bottom rows of `left`, all of full width.
    pub k: usize,
    pub leftist_rows: Vec<usize>,
    pub rightist_rows: Vec<usize>,
    pub left_cols: Vec<usize>,
    pub right_cols: Vec<usize>,
}

fn sub_diagram(shape: &FerrersShape, rows: &[usize], cols: &[usize]) -> Result<FerrersShape> {
    FerrersShape::new(
        cols.iter()
            .map(|&c| rows.iter().filter(|&&r| r <= shape.height(c)).count())
            .collect(),
    )
}

/// Empty left and right sub-diagrams for a shape with ◇-columns, before any 1 is placed.
pub fn split_shape(shape: &FerrersShape, diamond: &[bool]) -> Result<(Decomposition, RowClass)> {
    let rc = classify_rows(shape, diamond);
    let leftist_rows = rc.leftist_rows();
    let rightist_rows = rc.rightist_rows();
    let left_cols: Vec<usize> = (1..=shape.cols()).filter(|&j| rc.is_left_column(j)).collect();
    let right_cols: Vec<usize> = (1..=shape.cols())
        .filter(|&j| rc.is_right_column(j) && !diamond[j - 1])
        .collect();
    let ls = sub_diagram(shape, &leftist_rows, &left_cols)?;
    let rs = sub_diagram(shape, &rightist_rows, &right_cols)?;
    let k = leftist_rows.iter().filter(|&&r| r <= rc.bottom_rows).count();
    Ok((
        Decomposition {
            left: PartialFilling::standard(ls.clone(), vec![None; ls.cols()])?,
            right: PartialFilling::standard(rs.clone(), vec![None; rs.cols()])?,
            k,
            leftist_rows,
            rightist_rows,
            left_cols,
            right_cols,
        },
        rc,
    ))
}

/// Split `f`; fails when some 1 is neither leftist-left nor rightist-right.
pub fn decompose(f: &PartialFilling) -> Result<Decomposition> {
    let (mut d, _) = split_shape(f.shape(), f.diamond_mask())?;
    let pos = |v: &[usize], x: usize| v.binary_search(&x).ok().map(|p| p + 1);
    let mut lones = vec![None; d.left_cols.len()];
    let mut rones = vec![None; d.right_cols.len()];
    for j in 1..=f.cols() {
        let Some(i) = f.one_in_column(j) else { continue };
        if let (Some(c), Some(r)) = (pos(&d.left_cols, j), pos(&d.leftist_rows, i)) {
            lones[c - 1] = Some(r);
        } else if let (Some(c), Some(r)) = (pos(&d.right_cols, j), pos(&d.rightist_rows, i)) {
            rones[c - 1] = Some(r);
        } else {
            return Err(Error::condition(
                "C3",
                format!("the 1 at ({i},{j}) lies outside both sub-diagrams"),
            ));
        }
    }
    d.left = PartialFilling::standard(d.left.shape().clone(), lones)?;
    d.right = PartialFilling::standard(d.right.shape().clone(), rones)?;
    Ok(d)
}

/// Inverse of [`decompose`], using `template` for the shape and ◇-columns.
pub fn recompose(
    shape: &FerrersShape,
    diamond: &[bool],
    left: &PartialFilling,
    right: &PartialFilling,
) -> Result<PartialFilling> {
    let (d, _) = split_shape(shape, diamond)?;
    if left.shape() != d.left.shape() || right.shape() != d.right.shape() {
        return Err(Error::invalid("sub-fillings do not match the split of the diagram"));
    }
    let mut ones = vec![None; shape.cols()];
    for (c, &j) in d.left_cols.iter().enumerate() {
        ones[j - 1] = left.one_in_column(c + 1).map(|r| d.leftist_rows[r - 1]);
    }
    for (c, &j) in d.right_cols.iter().enumerate() {
        ones[j - 1] = right.one_in_column(c + 1).map(|r| d.rightist_rows[r - 1]);
    }
    PartialFilling::new(shape.clone(), diamond.to_vec(), ones)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_classes_examples() {
        let s = FerrersShape::rectangle(3, 3);
        let rc = classify_rows(&s, &[false; 3]);
        assert_eq!(rc.rightist_count(), 0);
        let s = FerrersShape::new(vec![2, 2, 2]).unwrap();
        let rc = classify_rows(&s, &[false, true, false]);
        assert_eq!(rc.rightist, vec![false, true]);
    }

    #[test]
    fn monotone_transversals() {
        let sq = FerrersShape::rectangle(2, 2);
        assert_eq!(
            unique_monotone_transversal(&sq, Direction::Avoid21).unwrap(),
            PartialFilling::from_perm(&"12".parse().unwrap())
        );
        assert_eq!(
            unique_monotone_transversal(&sq, Direction::Avoid12).unwrap(),
            PartialFilling::from_perm(&"21".parse().unwrap())
        );
        let s = FerrersShape::new(vec![2, 1]).unwrap();
        assert_eq!(
            unique_monotone_transversal(&s, Direction::Avoid12).unwrap(),
            unique_monotone_transversal(&s, Direction::Avoid21).unwrap()
        );
        assert!(unique_monotone_transversal(&FerrersShape::new(vec![2]).unwrap(), Direction::Avoid12).is_err());
    }

    #[test]
    fn empty_filling_passes_conditions() {
        let f = PartialFilling::standard(FerrersShape::new(vec![]).unwrap(), vec![]).unwrap();
        assert!(check_conditions(&f, Variant::P312).is_empty());
        assert!(check_conditions(&f, Variant::P231).is_empty());
    }

    #[test]
    fn forbidden_c3_configuration() {
        // left column 1 has its 1 in row 2, right column 3 in row 1, ◇ in column 2
        let f = PartialFilling::new(
            FerrersShape::rectangle(2, 3),
            vec![false, true, false],
            vec![Some(2), None, Some(1)],
        )
        .unwrap();
        let failed = check_conditions(&f, Variant::P312);
        assert!(failed.contains(&"C3".to_string()), "{failed:?}");
        assert!(f.contains(&"312".parse().unwrap()));
    }
}
