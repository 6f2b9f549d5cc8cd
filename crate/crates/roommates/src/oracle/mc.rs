//! Seeded random tables and Monte Carlo estimation of solvability.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{is_solvable, PreferenceTable, MAX_SOLVABLE_N};
use crate::error::{Error, Result};

/// Samples per Monte Carlo chunk. Sampling is chunked so that each chunk
/// owns an independently derived generator; the estimate then depends only
/// on (seed, samples), not on how chunks are scheduled across threads.
pub const MC_CHUNK: u64 = 4096;

/// A uniformly random preference table: each row is an independent uniform
/// permutation of the other agents. Deterministic for a given seed.
pub fn random_table(n: usize, seed: u64) -> PreferenceTable {
    assert!(n >= 2, "need at least 2 agents");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    table_from_rng(n, &mut rng)
}

/// Uniform random row via backward index draws: for k = len-1 down to 1,
/// swap position k with a uniform position in 0..=k.
fn table_from_rng(n: usize, rng: &mut ChaCha8Rng) -> PreferenceTable {
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        for k in (1..row.len()).rev() {
            let l = rng.gen_range(0..=k);
            row.swap(k, l);
        }
        rows.push(row);
    }
    PreferenceTable::new(rows).expect("shuffled rows are valid preference rows")
}

fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    bytes[8..16].copy_from_slice(&chunk.to_le_bytes());
    ChaCha8Rng::from_seed(bytes)
}

/// A Monte Carlo estimate with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    /// sqrt(estimate * (1 - estimate) / samples).
    pub stderr: f64,
    pub samples: u64,
    pub solvable: u64,
}

/// Estimates the probability that a random size-n instance is solvable from
/// `samples` independent tables. Chunks run concurrently; the result is
/// identical for any thread count.
pub fn mc_estimate(n: usize, samples: u64, seed: u64) -> Result<McEstimate> {
    if samples == 0 {
        return Err(Error::EmptySample);
    }
    if !(2..=MAX_SOLVABLE_N).contains(&n) {
        return Err(Error::SizeOutOfRange {
            what: "Monte Carlo solvability",
            n: n as u32,
            min: 2,
            max: MAX_SOLVABLE_N as u32,
        });
    }
    let chunks = samples.div_ceil(MC_CHUNK);
    let solvable: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(seed, c);
            let in_chunk = MC_CHUNK.min(samples - c * MC_CHUNK);
            let mut hits = 0u64;
            for _ in 0..in_chunk {
                let table = table_from_rng(n, &mut rng);
                if is_solvable(&table).expect("size checked above") {
                    hits += 1;
                }
            }
            hits
        })
        .sum();
    let estimate = solvable as f64 / samples as f64;
    let stderr = (estimate * (1.0 - estimate) / samples as f64).sqrt();
    Ok(McEstimate {
        estimate,
        stderr,
        samples,
        solvable,
    })
}
