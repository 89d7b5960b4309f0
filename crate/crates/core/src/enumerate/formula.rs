//! Closed-form values of `s_n^k(p)` where they are known.

use crate::error::{Error, Result};
use crate::ordergraph::is_baxter;
use crate::perm::{Pattern, Perm};

/// Binomial coefficient with overflow reported as an error. Zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow("binomial coefficient"));
        }
    }
    Ok(acc as u64)
}

pub fn catalan(n: u64) -> Result<u64> {
    let b = binomial(2 * n, n)?;
    Ok(b / (n + 1))
}

pub fn factorial(n: u64) -> Result<u64> {
    (1..=n).try_fold(1u64, |a, i| a.checked_mul(i).ok_or(Error::Overflow("factorial")))
}

/// `|S_n^k| = n! / k!`.
pub fn total_partial_perms(n: usize, k: usize) -> Result<u64> {
    let (n, k) = (n as u64, k as u64);
    if k > n {
        return Ok(0);
    }
    (k + 1..=n).try_fold(1u64, |a, i| a.checked_mul(i).ok_or(Error::Overflow("n!/k!")))
}

/// Number of permutations of length `m` avoiding `12..j`, for `j <= 3`.
fn classical_monotone(m: u64, j: usize) -> Result<Option<u64>> {
    Ok(match j {
        0 => Some(0),
        1 => Some(u64::from(m == 0)),
        2 => Some(1),
        3 => Some(catalan(m)?),
        _ => None,
    })
}

fn sub(a: u64, b: u64) -> Result<u64> {
    a.checked_sub(b).ok_or(Error::Overflow("closed form"))
}

/// The closed form of `s_n^k(p)` if one is known for `(p, k)`.
///
/// Covered cases:
/// * `n < |p|`: every element of `S_n^k` avoids `p`, so `n!/k!`.
/// * `k >= |p| - 1` and `n >= |p|`: zero, since the holes plus any one entry already host `p`.
/// * monotone `p` (increasing or decreasing): `C(n,k) * s_{n-k}(12..(|p|-k))`,
///   where deleting the holes reduces the problem to classical avoidance of a
///   shorter monotone pattern; available when `|p| - k <= 3`.
/// * `|p| = k + 2`: `C(n,k)` when `p` is Baxter, and for every `p` when `n <= k + 2`.
/// * `|p| = 3`, `k = 0`: Catalan numbers.
/// * `|p| = 4`, `k = 1`: the three single-hole classes of length four.
/// * `p` in `{2413, 3142}`, `k = 2`: `3n - 6`.
pub fn closed_form(p: &Pattern, k: usize, n: usize) -> Result<Option<u64>> {
    let l = p.len();
    if k > n {
        return Ok(Some(0));
    }
    if n < l {
        return total_partial_perms(n, k).map(Some);
    }
    if k + 1 >= l {
        return Ok(Some(0));
    }
    let (nu, ku) = (n as u64, k as u64);
    if *p == Perm::identity(l) || *p == Perm::anti_identity(l) {
        if let Some(s) = classical_monotone(nu - ku, l - k)? {
            return binomial(nu, ku)?
                .checked_mul(s)
                .ok_or(Error::Overflow("closed form"))
                .map(Some);
        }
    }
    if l == k + 2 && (n <= k + 2 || is_baxter(p)) {
        return binomial(nu, ku).map(Some);
    }
    if l == 3 && k == 0 {
        return catalan(nu).map(Some);
    }
    if l == 4 && k == 1 {
        let canon = p.canonical().key();
        let m = 2 * nu - 2;
        let base = binomial(m, nu - 1)?;
        let v = match canon.as_str() {
            "1234" | "1243" | "1324" | "1432" | "2143" => base,
            "1342" | "1423" => match nu.checked_sub(5) {
                Some(j) => sub(base, binomial(m, j)?)?,
                None => base,
            },
            "2413" => sub(2 * catalan(nu)?, 1u64 << (nu - 1))?,
            _ => return Ok(None),
        };
        return Ok(Some(v));
    }
    if l == 4 && k == 2 && !is_baxter(p) {
        return Ok(Some(3 * nu - 6));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn numbers() {
        assert_eq!(binomial(16, 8).unwrap(), 12870);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(catalan(8).unwrap(), 1430);
        assert_eq!(9 * catalan(8).unwrap(), 12870);
        assert_eq!(total_partial_perms(5, 2).unwrap(), 60);
        assert!(binomial(200, 100).is_err());
    }

    #[test]
    fn single_hole_length_four() {
        assert_eq!(closed_form(&pat("1234"), 1, 5).unwrap(), Some(70));
        assert_eq!(closed_form(&pat("1342"), 1, 5).unwrap(), Some(69));
        assert_eq!(closed_form(&pat("2413"), 1, 5).unwrap(), Some(68));
        assert_eq!(closed_form(&pat("2413"), 1, 3).unwrap(), Some(6));
        assert_eq!(closed_form(&pat("1234"), 1, 9).unwrap(), Some(12870));
    }

    #[test]
    fn length_k_plus_two() {
        assert_eq!(closed_form(&pat("2413"), 2, 8).unwrap(), Some(18));
        assert_eq!(closed_form(&pat("2413"), 2, 3).unwrap(), Some(3));
        assert_eq!(closed_form(&pat("2413"), 2, 2).unwrap(), Some(1));
        assert_eq!(closed_form(&pat("1423"), 2, 7).unwrap(), Some(21));
        assert_eq!(closed_form(&pat("25314"), 3, 7).unwrap(), Some(35));
        assert_eq!(closed_form(&pat("25134"), 3, 7).unwrap(), None);
    }

    #[test]
    fn monotone_reduction() {
        // two holes, 12345: C(n,2) * Catalan(n-2)
        assert_eq!(closed_form(&pat("12345"), 2, 6).unwrap(), Some(15 * 14));
        assert_eq!(closed_form(&pat("54321"), 3, 6).unwrap(), Some(20));
        assert_eq!(closed_form(&pat("12345"), 1, 6).unwrap(), None);
    }
}
