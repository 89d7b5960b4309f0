//! On-disk cache of counts, one JSON file per `(canonical pattern, n, k)`.
//!
//! `s_n^k` is invariant under reverse and complement, so the key uses the
//! orbit representative and all four patterns share a file.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Pattern;

use super::count::{count, Method};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct Entry {
    pattern: String,
    n: usize,
    k: usize,
    count: u64,
}

#[derive(Clone, Debug)]
pub struct CountCache {
    dir: PathBuf,
}

impl CountCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CountCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, p: &Pattern, n: usize, k: usize) -> PathBuf {
        self.dir.join(format!("p{}_n{n}_k{k}.json", p.canonical().key()))
    }

    pub fn get(&self, p: &Pattern, n: usize, k: usize) -> Option<u64> {
        let text = fs::read_to_string(self.path(p, n, k)).ok()?;
        let e: Entry = serde_json::from_str(&text).ok()?;
        (e.n == n && e.k == k && e.pattern == p.canonical().to_string()).then_some(e.count)
    }

    pub fn put(&self, p: &Pattern, n: usize, k: usize, value: u64) -> Result<()> {
        fs::create_dir_all(&self.dir)
            .map_err(|e| Error::invalid(format!("cannot create {}: {e}", self.dir.display())))?;
        let e = Entry {
            pattern: p.canonical().to_string(),
            n,
            k,
            count: value,
        };
        let path = self.path(p, n, k);
        let tmp = path.with_extension("json.tmp");
        let body = serde_json::to_string(&e).expect("entry is plain data");
        fs::write(&tmp, body)
            .and_then(|_| fs::rename(&tmp, &path))
            .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
    }

    /// Look up `s_n^k(p)`, computing it by pruned generation on a miss.
    pub fn count(&self, p: &Pattern, n: usize, k: usize) -> Result<u64> {
        if let Some(v) = self.get(p, n, k) {
            return Ok(v);
        }
        let v = count(n, k, p, Method::Direct)?;
        self.put(p, n, k, v)?;
        Ok(v)
    }
}
