//! Integer partitions viewed as permutation cycle types.
//!
//! A cycle type of size `n` records how many cycles of each length a
//! permutation of {1..n} has. Cycle types of size `n` are in bijection with
//! integer partitions of `n`, so enumeration is partition enumeration. The
//! solvability sums run over four families of cycle types, selected by the
//! parity of `n`; this module enumerates and classifies them and computes the
//! combinatorial quantities attached to each type: the number `c(a)` of
//! permutations realizing it, the sign exponent `e(a)` counting even cycles of
//! length >= 4, and the penalty factor count `f(a)` of its integrand.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Multiset of cycle lengths of a permutation, stored as length -> multiplicity.
///
/// The canonical textual form lists parts in ascending length as `k^a_k`
/// joined by commas, e.g. `1^1,2^2,3^1` for one fixed point, two 2-cycles and
/// one 3-cycle (n = 8).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: BTreeMap<u32, u32>,
    n: u32,
}

impl CycleType {
    /// Builds a cycle type from (length, multiplicity) pairs.
    ///
    /// Rejects zero lengths, zero multiplicities and repeated lengths.
    pub fn new(parts: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut n: u64 = 0;
        for (k, a) in parts {
            if k == 0 {
                return Err(Error::ParseCycleType {
                    input: String::new(),
                    reason: "cycle length 0".into(),
                });
            }
            if a == 0 {
                return Err(Error::ParseCycleType {
                    input: String::new(),
                    reason: format!("multiplicity 0 for length {k}"),
                });
            }
            if map.insert(k, a).is_some() {
                return Err(Error::ParseCycleType {
                    input: String::new(),
                    reason: format!("length {k} listed twice"),
                });
            }
            n += u64::from(k) * u64::from(a);
        }
        let n = u32::try_from(n).map_err(|_| Error::ParseCycleType {
            input: String::new(),
            reason: "size overflows u32".into(),
        })?;
        Ok(CycleType { parts: map, n })
    }

    /// Builds a cycle type from a list of cycle lengths (a partition in any order).
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
        for &k in parts {
            *mult.entry(k).or_insert(0) += 1;
        }
        Self::new(mult)
    }

    /// Total size n = sum of k * a_k.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Multiplicity a_k of cycles of length k (0 if absent).
    pub fn multiplicity(&self, k: u32) -> u32 {
        self.parts.get(&k).copied().unwrap_or(0)
    }

    /// (length, multiplicity) pairs in ascending length.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts.iter().map(|(&k, &a)| (k, a))
    }

    /// Cycle lengths expanded to a non-increasing part list, e.g. [3,1] for `1^1,3^1`.
    pub fn part_list(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (&k, &a) in self.parts.iter().rev() {
            out.extend(std::iter::repeat(k).take(a as usize));
        }
        out
    }

    /// Number of fixed points a_1.
    pub fn fixed_points(&self) -> u32 {
        self.multiplicity(1)
    }

    /// True when every cycle length is even.
    pub fn all_parts_even(&self) -> bool {
        self.parts.keys().all(|&k| k % 2 == 0)
    }

    /// True when some cycle length is odd (including fixed points).
    pub fn has_odd_part(&self) -> bool {
        self.parts.keys().any(|&k| k % 2 == 1)
    }

    /// True when some cycle length is odd and at least 3.
    pub fn has_odd_part_at_least_3(&self) -> bool {
        self.parts.keys().any(|&k| k % 2 == 1 && k >= 3)
    }

    /// Filename-safe form of the canonical string: `^` -> `p`, `,` -> `_`.
    pub fn file_stem(&self) -> String {
        self.to_string().replace('^', "p").replace(',', "_")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&k, &a) in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{k}^{a}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Parses the `k^a_k` comma-joined grammar; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: String| Error::ParseCycleType {
            input: s.to_string(),
            reason,
        };
        if compact.is_empty() {
            return Err(err("empty".into()));
        }
        let mut pairs = Vec::new();
        for piece in compact.split(',') {
            let (k, a) = piece
                .split_once('^')
                .ok_or_else(|| err(format!("`{piece}` is not of the form k^a")))?;
            let k: u32 = k
                .parse()
                .map_err(|_| err(format!("bad cycle length `{k}`")))?;
            let a: u32 = a
                .parse()
                .map_err(|_| err(format!("bad multiplicity `{a}`")))?;
            pairs.push((k, a));
        }
        CycleType::new(pairs).map_err(|e| match e {
            Error::ParseCycleType { reason, .. } => err(reason),
            other => other,
        })
    }
}

/// The four cycle-type families indexing the solvability sums.
///
/// For even n, `EvenOnly` carries the solvable sum and `OddWitness` its
/// complement; for odd n, `OneFixedEven` carries the solvable sum and
/// `OddCycleAtLeast3` its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleFamily {
    /// All cycle lengths even (even n).
    EvenOnly,
    /// At most one fixed point and at least one odd cycle (even n).
    OddWitness,
    /// Exactly one fixed point, all other cycles even (odd n).
    OneFixedEven,
    /// At least one odd cycle of length >= 3 (odd n).
    OddCycleAtLeast3,
}

impl CycleFamily {
    pub fn name(self) -> &'static str {
        match self {
            CycleFamily::EvenOnly => "even-only",
            CycleFamily::OddWitness => "odd-witness",
            CycleFamily::OneFixedEven => "one-fixed-even",
            CycleFamily::OddCycleAtLeast3 => "odd-cycle-3plus",
        }
    }

    fn required_parity(self) -> u32 {
        match self {
            CycleFamily::EvenOnly | CycleFamily::OddWitness => 0,
            CycleFamily::OneFixedEven | CycleFamily::OddCycleAtLeast3 => 1,
        }
    }

    /// Membership predicate, independent of how members are enumerated.
    pub fn contains(self, a: &CycleType) -> bool {
        match self {
            CycleFamily::EvenOnly => a.all_parts_even(),
            CycleFamily::OddWitness => a.fixed_points() <= 1 && a.has_odd_part(),
            CycleFamily::OneFixedEven => {
                a.fixed_points() == 1
                    && a.iter().all(|(k, _)| k == 1 || k % 2 == 0)
            }
            CycleFamily::OddCycleAtLeast3 => a.has_odd_part_at_least_3(),
        }
    }
}

/// All partitions of n as cycle types, in reverse-lexicographic order of
/// their non-increasing part lists: for n=4 that is [4], [3,1], [2,2],
/// [2,1,1], [1,1,1,1]. The order is deterministic; the count is the
/// partition number p(n). n=0 yields an empty list.
pub fn enumerate_partitions(n: u32) -> Vec<CycleType> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<CycleType>) {
    if remaining == 0 {
        out.push(CycleType::from_parts(current).expect("parts are positive"));
        return;
    }
    let mut k = max_part.min(remaining);
    while k >= 1 {
        current.push(k);
        descend(remaining - k, k, current, out);
        current.pop();
        k -= 1;
    }
}

/// Partition number p(n), by the pentagonal-number recurrence.
///
/// Kept independent of `enumerate_partitions` so the two can cross-check
/// each other. Sized for n <= 64; larger counting is out of scope.
pub fn partition_number(n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total: i128 = 0;
        let mut j = 1i64;
        loop {
            let g1 = j * (3 * j - 1) / 2;
            let g2 = j * (3 * j + 1) / 2;
            if g1 as usize > m && g2 as usize > m {
                break;
            }
            let sign = if j % 2 == 1 { 1i128 } else { -1i128 };
            if g1 as usize <= m {
                total += sign * p[m - g1 as usize] as i128;
            }
            if g2 as usize <= m {
                total += sign * p[m - g2 as usize] as i128;
            }
            j += 1;
        }
        p[m] = u64::try_from(total).expect("partition numbers are positive");
    }
    p[n]
}

/// Members of a family among the cycle types of size n, in enumeration order.
///
/// Families are parity-bound: `EvenOnly`/`OddWitness` require even n,
/// `OneFixedEven`/`OddCycleAtLeast3` odd n.
pub fn family_members(n: u32, family: CycleFamily) -> Result<Vec<CycleType>> {
    if n % 2 != family.required_parity() {
        return Err(Error::FamilyParity {
            family: family.name(),
            required: if family.required_parity() == 0 {
                "even"
            } else {
                "odd"
            },
            n,
        });
    }
    Ok(enumerate_partitions(n)
        .into_iter()
        .filter(|a| family.contains(a))
        .collect())
}

/// Number of permutations of {1..n} with cycle type `a`:
/// n! / prod_k (a_k! * k^a_k).
pub fn count_permutations(a: &CycleType) -> BigUint {
    let mut numerator = factorial(a.n());
    for (k, mult) in a.iter() {
        let mut denom = factorial(mult);
        denom *= BigUint::from(k).pow(mult);
        numerator /= denom;
    }
    numerator
}

fn factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// Sign exponent e(a): the number of even cycles of length >= 4, counted
/// with multiplicity. The inclusion-exclusion sign of the type is (-1)^e(a).
pub fn even_cycle_sign_exponent(a: &CycleType) -> u32 {
    a.iter()
        .filter(|&(k, _)| k % 2 == 0 && k >= 4)
        .map(|(_, mult)| mult)
        .sum()
}

/// Penalty factor count f(a) = n(n-3)/2 + a_1 + a_2: the number of
/// (1 - x_i x_j) factors in the type's integrand (unary (1 - x_i) factors
/// produced by the fixed-point substitution included). The fully expanded
/// integrand would have 2^f(a) terms.
pub fn factor_count(a: &CycleType) -> u64 {
    let n = i64::from(a.n());
    let f = n * (n - 3) / 2 + i64::from(a.multiplicity(1)) + i64::from(a.multiplicity(2));
    u64::try_from(f).expect("factor count is nonnegative")
}
