//! Writers for count sequences.

use std::fmt::Write;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub n: usize,
    pub count: u64,
}

/// `n,count` lines with a header.
pub fn to_csv(terms: &[Term]) -> String {
    let mut s = String::from("n,count\n");
    for t in terms {
        writeln!(s, "{},{}", t.n, t.count).expect("writing to a String");
    }
    s
}

/// JSON array of `{"n": .., "count": ..}` objects.
pub fn to_json(terms: &[Term]) -> String {
    serde_json::to_string_pretty(terms).expect("terms are plain data")
}

/// OEIS b-file lines `i a(i)` with `i = n - shift`; terms with `n < shift` are skipped.
pub fn to_bfile(terms: &[Term], shift: usize) -> String {
    let mut s = String::new();
    for t in terms.iter().filter(|t| t.n >= shift) {
        writeln!(s, "{} {}", t.n - shift, t.count).expect("writing to a String");
    }
    s
}

/// Parse b-file text into `(index, value)` pairs, ignoring blank and `#` lines.
pub fn parse_bfile(text: &str) -> Result<Vec<(usize, u64)>, String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut it = l.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err(format!("malformed b-file line {l:?}"));
            };
            let i = a.parse().map_err(|_| format!("bad index in {l:?}"))?;
            let v = b.parse().map_err(|_| format!("bad value in {l:?}"))?;
            Ok((i, v))
        })
        .collect()
}
