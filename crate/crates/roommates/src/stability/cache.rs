//! Persistent per-cycle-type cache of computed integrals.
//!
//! One JSON document per cycle type, named after the canonical string with
//! `^` -> `p` and `,` -> `_` (e.g. `1^1,2^2` -> `1p1_2p2.json`). Entries are
//! validated on load; anything corrupted, mismatched or written by a
//! different engine version is ignored and recomputed. Writes go through a
//! temporary file and an atomic rename so concurrent readers never observe
//! partial documents.

use std::fs;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cycletype::CycleType;
use crate::error::{Error, Result};
use crate::rational;

pub(crate) const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct CacheEntry {
    pub cycle_type: String,
    pub n: u32,
    pub fraction: String,
    pub strategy: String,
    pub elapsed_s: f64,
    pub engine_version: String,
}

pub(crate) fn entry_path(dir: &Path, a: &CycleType) -> PathBuf {
    dir.join(format!("{}.json", a.file_stem()))
}

/// Loads the cached value for a cycle type. Any unreadable, unparsable or
/// inconsistent entry yields `None` so the caller recomputes it.
pub(crate) fn load(dir: &Path, a: &CycleType) -> Option<(BigRational, String)> {
    let text = fs::read_to_string(entry_path(dir, a)).ok()?;
    let entry: CacheEntry = serde_json::from_str(&text).ok()?;
    if entry.cycle_type != a.to_string()
        || entry.n != a.n()
        || entry.engine_version != ENGINE_VERSION
    {
        return None;
    }
    let value = rational::parse_fraction(&entry.fraction)?;
    if value < BigRational::zero() || value > BigRational::one() {
        return None;
    }
    Some((value, entry.strategy))
}

/// Stores an entry atomically (temp file + rename).
pub(crate) fn store(dir: &Path, a: &CycleType, entry: &CacheEntry) -> Result<()> {
    let wrap = |source: std::io::Error| Error::Cache {
        path: dir.to_path_buf(),
        source,
    };
    fs::create_dir_all(dir).map_err(wrap)?;
    let final_path = entry_path(dir, a);
    let tmp_path = dir.join(format!(".{}.{}.tmp", a.file_stem(), std::process::id()));
    let body = serde_json::to_string_pretty(entry).expect("cache entry serializes");
    fs::write(&tmp_path, body).map_err(wrap)?;
    fs::rename(&tmp_path, &final_path).map_err(wrap)
}
