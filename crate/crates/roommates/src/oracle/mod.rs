//! Independent ground truth: direct stability checkers and brute-force
//! solvability, exhaustive enumeration of all preference tables for tiny
//! sizes, and seeded Monte Carlo estimation.
//!
//! Everything here is deliberately elementary — definitions checked by
//! enumeration, no clever algorithms — so it can serve as an oracle for the
//! integral engine.

mod mc;

pub use mc::{mc_estimate, random_table, McEstimate, MC_CHUNK};

use num_bigint::BigUint;
use num_rational::BigRational;

use crate::cycletype::CycleType;
use crate::error::{Error, Result};

/// Largest size accepted by `is_solvable` (brute-force enumeration of
/// (n-1)!! matchings, or n (n-2)!! near-matchings for odd n).
pub const MAX_SOLVABLE_N: usize = 12;

/// Largest size for which full permutation enumeration helpers are offered.
pub const MAX_PERMUTATION_ENUM_N: usize = 10;

/// A complete strict preference table: each agent ranks the n-1 others.
/// rank(i, j) is 1 for i's favorite; rank(i, i) = n by convention, so an
/// agent prefers any partner over staying alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceTable {
    n: usize,
    prefs: Vec<Vec<usize>>,
    rank: Vec<Vec<usize>>,
}

impl PreferenceTable {
    /// Builds a table from per-agent preference rows (0-based agent ids,
    /// most preferred first). Row i must be a permutation of all other
    /// agents.
    pub fn new(prefs: Vec<Vec<usize>>) -> Result<Self> {
        let n = prefs.len();
        let invalid = |reason: String| Error::InvalidPreferenceTable { reason };
        if n < 2 {
            return Err(invalid(format!("need at least 2 agents, got {n}")));
        }
        let mut rank = vec![vec![0usize; n]; n];
        for (i, row) in prefs.iter().enumerate() {
            if row.len() != n - 1 {
                return Err(invalid(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    n - 1
                )));
            }
            rank[i][i] = n;
            for (position, &j) in row.iter().enumerate() {
                if j >= n || j == i {
                    return Err(invalid(format!("row {i} contains invalid agent {j}")));
                }
                if rank[i][j] != 0 {
                    return Err(invalid(format!("row {i} lists agent {j} twice")));
                }
                rank[i][j] = position + 1;
            }
        }
        Ok(PreferenceTable { n, prefs, rank })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Position of j in i's list (1 = favorite); rank(i, i) = n.
    pub fn rank(&self, i: usize, j: usize) -> usize {
        self.rank[i][j]
    }

    /// True when i strictly prefers j over k.
    pub fn prefers(&self, i: usize, j: usize, k: usize) -> bool {
        self.rank[i][j] < self.rank[i][k]
    }

    pub fn preference_row(&self, i: usize) -> &[usize] {
        &self.prefs[i]
    }

    /// Parses the plain text format: line i holds agent i's ranking of the
    /// others, space-separated, 1-indexed.
    pub fn parse(text: &str) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidPreferenceTable { reason };
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for token in line.split_whitespace() {
                let v: usize = token
                    .parse()
                    .map_err(|_| invalid(format!("line {}: bad id `{token}`", lineno + 1)))?;
                if v == 0 {
                    return Err(invalid(format!("line {}: ids are 1-indexed", lineno + 1)));
                }
                row.push(v - 1);
            }
            rows.push(row);
        }
        PreferenceTable::new(rows)
    }
}

impl std::fmt::Display for PreferenceTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in &self.prefs {
            let line: Vec<String> = row.iter().map(|&j| (j + 1).to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A permutation of {0..n-1} with cycle-structure accessors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
    inverse: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let invalid = |reason: String| Error::InvalidPermutation { reason };
        let mut inverse = vec![usize::MAX; n];
        for (i, &j) in images.iter().enumerate() {
            if j >= n {
                return Err(invalid(format!("image {j} out of range")));
            }
            if inverse[j] != usize::MAX {
                return Err(invalid(format!("{j} has two preimages")));
            }
            inverse[j] = i;
        }
        Ok(Permutation { images, inverse })
    }

    /// Builds a permutation from disjoint cycles; unmentioned elements stay
    /// fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        let invalid = |reason: String| Error::InvalidPermutation { reason };
        for cycle in cycles {
            for (t, &v) in cycle.iter().enumerate() {
                if v >= n {
                    return Err(invalid(format!("element {v} out of range")));
                }
                if seen[v] {
                    return Err(invalid(format!("element {v} in two cycles")));
                }
                seen[v] = true;
                images[v] = cycle[(t + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// pi(i).
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// pi^-1(i).
    pub fn preimage(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Cycle decomposition; each cycle starts at its smallest element and
    /// follows pi, cycles ordered by smallest element. Fixed points appear
    /// as singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.images[start];
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.images[v];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let parts: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        CycleType::from_parts(&parts).expect("cycle lengths are positive")
    }

    /// True for a fixed-point-free involution (a perfect matching).
    pub fn is_perfect_matching(&self) -> bool {
        (0..self.n()).all(|i| self.images[i] != i && self.images[self.images[i]] == i)
    }
}

/// True when the perfect matching m has no blocking pair in t: no two agents
/// who both prefer each other over their assigned partners.
pub fn is_stable_matching(t: &PreferenceTable, m: &Permutation) -> Result<bool> {
    if m.n() != t.n() || !m.is_perfect_matching() {
        return Err(Error::NotAPerfectMatching);
    }
    let n = t.n();
    for i in 0..n {
        for j in i + 1..n {
            if m.image(i) == j {
                continue;
            }
            if t.prefers(i, j, m.image(i)) && t.prefers(j, i, m.image(j)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True when pi is a stable permutation for t:
/// (a) no agent prefers its successor pi(i) over its predecessor pi^-1(i);
/// (b) if i prefers some third agent j over pi(i), then j prefers pi(j)
///     over i, for every j outside {i, pi(i), pi^-1(i)}.
/// Fixed points use rank(i, i) = n, so a fixed point prefers everyone over
/// itself; two fixed points always block each other.
pub fn is_stable_permutation(t: &PreferenceTable, p: &Permutation) -> bool {
    assert_eq!(t.n(), p.n(), "table and permutation sizes differ");
    let n = t.n();
    for i in 0..n {
        if t.prefers(i, p.image(i), p.preimage(i)) {
            return false;
        }
    }
    for i in 0..n {
        let succ = p.image(i);
        for j in 0..n {
            if j == i || j == succ || j == p.preimage(i) {
                continue;
            }
            if t.prefers(i, j, succ) && !t.prefers(j, p.image(j), i) {
                return false;
            }
        }
    }
    true
}

/// True when t admits a solution: a stable perfect matching for even n, or
/// a stable permutation with one fixed point and 2-cycles elsewhere for odd
/// n (one agent stays alone). Brute force with pruning; sizes above
/// `MAX_SOLVABLE_N` are rejected.
pub fn is_solvable(t: &PreferenceTable) -> Result<bool> {
    let n = t.n();
    if n > MAX_SOLVABLE_N {
        return Err(Error::SizeOutOfRange {
            what: "solvability enumeration",
            n: n as u32,
            min: 2,
            max: MAX_SOLVABLE_N as u32,
        });
    }
    if n % 2 == 0 {
        let mut partner = vec![usize::MAX; n];
        Ok(search_matching(t, &mut partner, None))
    } else {
        for lonely in 0..n {
            let mut partner = vec![usize::MAX; n];
            if search_matching(t, &mut partner, Some(lonely)) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Extends a partial matching over all agents except `lonely`. A partial
/// matching is abandoned as soon as two already-matched agents block each
/// other or a matched agent prefers the lonely agent over its partner —
/// conditions that no completion can repair.
fn search_matching(t: &PreferenceTable, partner: &mut Vec<usize>, lonely: Option<usize>) -> bool {
    let n = t.n();
    let next = (0..n).find(|&i| partner[i] == usize::MAX && Some(i) != lonely);
    let Some(i) = next else {
        return true;
    };
    for j in i + 1..n {
        if partner[j] != usize::MAX || Some(j) == lonely {
            continue;
        }
        if pair_admissible(t, partner, lonely, i, j) {
            partner[i] = j;
            partner[j] = i;
            if search_matching(t, partner, lonely) {
                return true;
            }
            partner[i] = usize::MAX;
            partner[j] = usize::MAX;
        }
    }
    false
}

fn pair_admissible(
    t: &PreferenceTable,
    partner: &[usize],
    lonely: Option<usize>,
    i: usize,
    j: usize,
) -> bool {
    let n = t.n();
    for (u, pu) in [(i, j), (j, i)] {
        for v in 0..n {
            if v == i || v == j || partner[v] == usize::MAX {
                continue;
            }
            if t.prefers(u, v, pu) && t.prefers(v, u, partner[v]) {
                return false;
            }
        }
        if let Some(f) = lonely {
            if t.prefers(u, f, pu) {
                return false;
            }
        }
    }
    true
}

/// Exact solvable fraction over every preference table of size n, by full
/// enumeration of all ((n-1)!)^n tables. Only n in {2, 3, 4} is feasible.
pub fn exhaustive_p(n: u32) -> Result<BigRational> {
    if !(2..=4).contains(&n) {
        return Err(Error::SizeOutOfRange {
            what: "exhaustive table enumeration",
            n,
            min: 2,
            max: 4,
        });
    }
    let n = n as usize;
    let row_choices: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|i| {
            let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            permutations(&others)
        })
        .collect();
    let per_row = row_choices[0].len() as u64;
    let mut solvable: u64 = 0;
    let mut total: u64 = 0;
    let mut indices = vec![0usize; n];
    loop {
        let prefs: Vec<Vec<usize>> = (0..n)
            .map(|i| row_choices[i][indices[i]].clone())
            .collect();
        let table = PreferenceTable::new(prefs).expect("rows are permutations of others");
        total += 1;
        if is_solvable(&table)? {
            solvable += 1;
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == n {
                debug_assert_eq!(total, per_row.pow(n as u32));
                return Ok(BigRational::new(
                    BigUint::from(solvable).into(),
                    BigUint::from(total).into(),
                ));
            }
            indices[pos] += 1;
            if indices[pos] < row_choices[pos].len() {
                break;
            }
            indices[pos] = 0;
            pos += 1;
        }
    }
}

/// All permutations of the given items, in lexicographic order of positions.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (idx, &first) in items.iter().enumerate() {
        let mut rest: Vec<usize> = items.to_vec();
        rest.remove(idx);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Every permutation of {0..n-1}, for small n.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    if n > MAX_PERMUTATION_ENUM_N {
        return Err(Error::SizeOutOfRange {
            what: "permutation enumeration",
            n: n as u32,
            min: 1,
            max: MAX_PERMUTATION_ENUM_N as u32,
        });
    }
    let items: Vec<usize> = (0..n).collect();
    Ok(permutations(&items)
        .into_iter()
        .map(|images| Permutation::new(images).expect("generated permutations are valid"))
        .collect())
}

/// Every permutation of {0..n-1} with the given cycle type, for small n.
pub fn permutations_with_cycle_type(n: usize, a: &CycleType) -> Result<Vec<Permutation>> {
    Ok(all_permutations(n)?
        .into_iter()
        .filter(|p| &p.cycle_type() == a)
        .collect())
}

/// All stable permutations of a table, by filtering the full symmetric
/// group; for small n only.
pub fn stable_permutations(t: &PreferenceTable) -> Result<Vec<Permutation>> {
    Ok(all_permutations(t.n())?
        .into_iter()
        .filter(|p| is_stable_permutation(t, p))
        .collect())
}

/// Checks that every even cycle of length >= 4 in a stable permutation can
/// be replaced by either of its two alternating pairings — (v1,v2)(v3,v4)...
/// and (v2,v3)...(v_2m,v1) — with the rest of the permutation unchanged,
/// yielding a stable permutation both times. Rejects inputs where p is not
/// stable for t or has no qualifying cycle.
pub fn even_cycle_pairings_stable(t: &PreferenceTable, p: &Permutation) -> Result<bool> {
    if !is_stable_permutation(t, p) {
        return Err(Error::NoQualifyingEvenCycle);
    }
    let qualifying: Vec<Vec<usize>> = p
        .cycles()
        .into_iter()
        .filter(|c| c.len() >= 4 && c.len() % 2 == 0)
        .collect();
    if qualifying.is_empty() {
        return Err(Error::NoQualifyingEvenCycle);
    }
    for cycle in qualifying {
        for offset in [0, 1] {
            let mut images = (0..p.n()).map(|i| p.image(i)).collect::<Vec<_>>();
            let len = cycle.len();
            for step in 0..len / 2 {
                let a = cycle[(2 * step + offset) % len];
                let b = cycle[(2 * step + 1 + offset) % len];
                images[a] = b;
                images[b] = a;
            }
            let replaced = Permutation::new(images).expect("pairing preserves bijectivity");
            if !is_stable_permutation(t, &replaced) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
