//! Simion–Schmidt bijections between 123-avoiders and 132- or 213-avoiders.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Target class of [`simion_schmidt`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SsTarget {
    /// 132-avoiders with the same left-to-right minima (values and positions).
    P132,
    /// 213-avoiders with the same right-to-left maxima (values and positions).
    P213,
}

fn lr_min_mask(v: &[usize]) -> Vec<bool> {
    let mut cur = usize::MAX;
    v.iter()
        .map(|&x| {
            let m = x < cur;
            cur = cur.min(x);
            m
        })
        .collect()
}

/// Keep the left-to-right minima; fill each other position with the smallest
/// unused value above the current minimum.
fn to_132(v: &[usize]) -> Vec<usize> {
    let n = v.len();
    let mask = lr_min_mask(v);
    let mut used = vec![false; n + 1];
    for (x, &m) in v.iter().zip(&mask) {
        if m {
            used[*x] = true;
        }
    }
    let mut cur = usize::MAX;
    let mut out = Vec::with_capacity(n);
    for (x, &m) in v.iter().zip(&mask) {
        if m {
            cur = *x;
            out.push(*x);
        } else {
            let y = (cur + 1..=n).find(|&y| !used[y]).expect("a larger value is left");
            used[y] = true;
            out.push(y);
        }
    }
    out
}

/// Keep the left-to-right minima; fill the other positions in decreasing order.
fn to_123(v: &[usize]) -> Vec<usize> {
    let mask = lr_min_mask(v);
    let mut rest: Vec<usize> = v.iter().zip(&mask).filter(|(_, &m)| !m).map(|(&x, _)| x).collect();
    rest.sort_unstable_by(|a, b| b.cmp(a));
    let mut it = rest.into_iter();
    v.iter()
        .zip(&mask)
        .map(|(&x, &m)| if m { x } else { it.next().expect("one per position") })
        .collect()
}

fn rc(p: &Perm) -> Perm {
    p.reverse().complement()
}

/// Map a 123-avoider to the target class, preserving the corresponding extremal entries.
pub fn simion_schmidt(sigma: &Perm, target: SsTarget) -> Result<Perm> {
    if sigma.contains(&Perm::identity(3)) {
        return Err(Error::invalid(format!("{sigma} contains 123")));
    }
    Ok(match target {
        SsTarget::P132 => Perm::new(to_132(sigma.values()))?,
        SsTarget::P213 => rc(&Perm::new(to_132(rc(sigma).values()))?),
    })
}

/// Inverse of [`simion_schmidt`].
pub fn simion_schmidt_inverse(tau: &Perm, target: SsTarget) -> Result<Perm> {
    let (pat, src) = match target {
        SsTarget::P132 => ("132", tau.clone()),
        SsTarget::P213 => ("213", rc(tau)),
    };
    if tau.contains(&pat.parse().expect("literal")) {
        return Err(Error::invalid(format!("{tau} contains {pat}")));
    }
    let back = Perm::new(to_123(src.values()))?;
    Ok(match target {
        SsTarget::P132 => back,
        SsTarget::P213 => rc(&back),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let p = |s: &str| s.parse::<Perm>().unwrap();
        assert_eq!(simion_schmidt(&p("132"), SsTarget::P132).unwrap(), p("123"));
        assert_eq!(simion_schmidt(&p("321"), SsTarget::P132).unwrap(), p("321"));
        assert_eq!(simion_schmidt(&p("321"), SsTarget::P213).unwrap(), p("321"));
        assert!(simion_schmidt(&p("123"), SsTarget::P132).is_err());
    }
}
