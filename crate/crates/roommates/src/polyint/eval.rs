//! Exact evaluation of factored integrands over the unit cube.
//!
//! The driver multiplies penalty factors into a live polynomial and
//! integrates each variable out as soon as no unmultiplied factor mentions
//! it, which keeps the live term count far below the 2^f size of the fully
//! expanded product. Two strategies and two coefficient representations are
//! provided; all four combinations return identical exact values, which the
//! test suite exploits for differential testing.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::factors::FactorList;
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Default ceiling on live terms before an evaluation gives up.
pub const DEFAULT_TERM_LIMIT: usize = 1 << 28;

/// How the integral is decomposed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Multiply factors in elimination order, integrating each variable out
    /// as soon as possible. Fast, higher peak memory.
    EarlyElimination,
    /// Expand in powers of the highest-index variable and integrate each
    /// coefficient polynomial independently. Slower, lower peak memory.
    CoefficientWise,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::EarlyElimination => "early-elimination",
            Strategy::CoefficientWise => "coefficient-wise",
        }
    }
}

/// Variable elimination order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderRule {
    /// Repeatedly eliminate the variable touching the fewest unmultiplied
    /// factors (ties to the lowest index).
    Greedy,
    /// Highest index first; the straightforward order, kept for
    /// differential testing.
    DescendingIndex,
}

/// Coefficient representation used while accumulating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arithmetic {
    /// Integer coefficients over one shared denominator; the fast path.
    ScaledInteger,
    /// Reduced rational coefficients everywhere; the reference path.
    Rational,
}

#[derive(Debug, Clone)]
pub struct EvalOptions {
    pub strategy: Strategy,
    pub order: OrderRule,
    pub arithmetic: Arithmetic,
    pub term_limit: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            strategy: Strategy::EarlyElimination,
            order: OrderRule::Greedy,
            arithmetic: Arithmetic::ScaledInteger,
            term_limit: DEFAULT_TERM_LIMIT,
        }
    }
}

/// Result of one integral evaluation.
#[derive(Debug, Clone)]
pub struct IntegralOutcome {
    pub value: BigRational,
    /// Largest live term count observed while evaluating.
    pub peak_terms: usize,
}

/// Greedy elimination order: repeatedly pick the variable mentioned by the
/// fewest not-yet-multiplied penalty factors, ties broken by lowest index;
/// multiplying a variable's factors removes them from consideration.
/// Deterministic for a given factor list.
pub fn elimination_order(f: &FactorList) -> Vec<usize> {
    let mut factor_masks: Vec<u32> = f
        .bilinear_pairs()
        .iter()
        .map(|&(i, j)| (1u32 << i) | (1u32 << j))
        .chain(f.unary_vars().iter().map(|&u| 1u32 << u))
        .collect();
    let varcount = f.varcount();
    let mut remaining: Vec<usize> = (0..varcount).collect();
    let mut order = Vec::with_capacity(varcount);
    while !remaining.is_empty() {
        let best = *remaining
            .iter()
            .min_by_key(|&&v| {
                factor_masks
                    .iter()
                    .filter(|&&mask| mask & (1 << v) != 0)
                    .count()
            })
            .expect("remaining is nonempty");
        order.push(best);
        remaining.retain(|&v| v != best);
        factor_masks.retain(|&mask| mask & (1 << best) == 0);
    }
    order
}

pub(crate) fn order_vars(f: &FactorList, rule: OrderRule) -> Vec<usize> {
    match rule {
        OrderRule::Greedy => elimination_order(f),
        OrderRule::DescendingIndex => (0..f.varcount()).rev().collect(),
    }
}

/// Evaluates the integral of the factored integrand over [0,1]^varcount.
pub fn evaluate_integral(f: &FactorList, opts: &EvalOptions) -> Result<IntegralOutcome> {
    let (value, peak_terms) = match (opts.strategy, opts.arithmetic) {
        (Strategy::EarlyElimination, Arithmetic::ScaledInteger) => {
            run_elimination::<ScaledAcc>(f, &unit_seed(), &order_vars(f, opts.order), opts)?
        }
        (Strategy::EarlyElimination, Arithmetic::Rational) => {
            run_elimination::<RationalAcc>(f, &unit_seed(), &order_vars(f, opts.order), opts)?
        }
        (Strategy::CoefficientWise, Arithmetic::ScaledInteger) => {
            run_coefficient_wise::<ScaledAcc>(f, opts)?
        }
        (Strategy::CoefficientWise, Arithmetic::Rational) => {
            run_coefficient_wise::<RationalAcc>(f, opts)?
        }
    };
    Ok(IntegralOutcome { value, peak_terms })
}

fn unit_seed() -> Vec<(Monomial, i64)> {
    vec![(Monomial::unit(), 1)]
}

/// Coefficient store the elimination driver runs over. Implementations must
/// agree exactly; only representation and speed differ.
trait Accumulator {
    fn from_seed(seed: &[(Monomial, i64)]) -> Self;
    fn mul_one_minus_pair(&mut self, i: usize, j: usize);
    fn mul_one_minus_var(&mut self, v: usize);
    fn integrate(&mut self, v: usize, shift: u32);
    fn term_count(&self) -> usize;
    fn finish(self) -> BigRational;
}

fn run_elimination<A: Accumulator>(
    f: &FactorList,
    seed: &[(Monomial, i64)],
    order: &[usize],
    opts: &EvalOptions,
) -> Result<(BigRational, usize)> {
    let mut acc = A::from_seed(seed);
    let mut peak = acc.term_count();
    let mut pair_done = vec![false; f.bilinear_pairs().len()];
    let mut unary_done = vec![false; f.unary_vars().len()];

    let limit_error = |reached: usize| Error::TermLimitExceeded {
        cycle_type: f.label_or_unlabeled(),
        strategy: opts.strategy.name(),
        limit: opts.term_limit,
        reached,
    };

    for &v in order {
        for (idx, &(i, j)) in f.bilinear_pairs().iter().enumerate() {
            if !pair_done[idx] && (i == v || j == v) {
                acc.mul_one_minus_pair(i, j);
                pair_done[idx] = true;
                peak = peak.max(acc.term_count());
                if acc.term_count() > opts.term_limit {
                    return Err(limit_error(acc.term_count()));
                }
            }
        }
        for (idx, &u) in f.unary_vars().iter().enumerate() {
            if !unary_done[idx] && u == v {
                acc.mul_one_minus_var(u);
                unary_done[idx] = true;
                peak = peak.max(acc.term_count());
                if acc.term_count() > opts.term_limit {
                    return Err(limit_error(acc.term_count()));
                }
            }
        }
        let shift = if f.has_linear(v) { 1 } else { 0 };
        acc.integrate(v, shift);
    }
    debug_assert!(pair_done.iter().all(|&d| d), "factor left unmultiplied");
    debug_assert!(unary_done.iter().all(|&d| d), "unary factor left unmultiplied");
    Ok((acc.finish(), peak))
}

/// Expands the integrand in powers of the pivot (the highest-index
/// variable), then integrates each power's coefficient polynomial
/// independently with early elimination.
fn run_coefficient_wise<A: Accumulator>(
    f: &FactorList,
    opts: &EvalOptions,
) -> Result<(BigRational, usize)> {
    if f.varcount() == 0 {
        return run_elimination::<A>(f, &unit_seed(), &[], opts);
    }
    let pivot = f.varcount() - 1;

    // Product of the factors that mention the pivot, grouped by pivot power.
    // Coefficients are tiny (bounded by binomials), so i64 suffices.
    let mut by_degree: Vec<FxHashMap<Monomial, i64>> = vec![FxHashMap::default()];
    by_degree[0].insert(Monomial::unit(), 1);
    let grow = |by_degree: &mut Vec<FxHashMap<Monomial, i64>>, other: Option<usize>| {
        let mut next: Vec<FxHashMap<Monomial, i64>> = Vec::with_capacity(by_degree.len() + 1);
        for d in 0..=by_degree.len() {
            let mut map = by_degree.get(d).cloned().unwrap_or_default();
            if d >= 1 {
                for (m, c) in &by_degree[d - 1] {
                    let key = match other {
                        Some(o) => m.times_var(o),
                        None => *m,
                    };
                    let entry = map.entry(key).or_insert(0);
                    *entry -= c;
                    if *entry == 0 {
                        map.remove(&key);
                    }
                }
            }
            next.push(map);
        }
        *by_degree = next;
    };

    let mut rest_pairs = Vec::new();
    for &(i, j) in f.bilinear_pairs() {
        if i == pivot || j == pivot {
            grow(&mut by_degree, Some(if i == pivot { j } else { i }));
        } else {
            rest_pairs.push((i, j));
        }
    }
    let mut rest_unary = Vec::new();
    for &u in f.unary_vars() {
        if u == pivot {
            grow(&mut by_degree, None);
        } else {
            rest_unary.push(u);
        }
    }
    let rest_linear: Vec<usize> = f
        .linear_vars()
        .iter()
        .copied()
        .filter(|&v| v != pivot)
        .collect();
    let shift = if f.has_linear(pivot) { 1u32 } else { 0 };

    let rest = FactorList::new(f.varcount(), rest_pairs, rest_unary, rest_linear)
        .expect("subset of a valid factor list is valid")
        .with_label(f.label().to_string());
    let order = order_vars(&rest, opts.order);

    let expansion_terms: usize = by_degree.iter().map(|m| m.len()).sum();
    let mut peak = expansion_terms;
    let mut total = BigRational::zero();
    for (d, coeff_map) in by_degree.iter().enumerate() {
        if coeff_map.is_empty() {
            continue;
        }
        let mut seed: Vec<(Monomial, i64)> =
            coeff_map.iter().map(|(m, c)| (*m, *c)).collect();
        seed.sort_unstable_by_key(|&(m, _)| m);
        let (value, sub_peak) = run_elimination::<A>(&rest, &seed, &order, opts)?;
        peak = peak.max(sub_peak);
        let weight = BigRational::new(BigInt::one(), BigInt::from(d as u32 + shift + 1));
        total += value * weight;
    }
    Ok((total, peak))
}

struct RationalAcc {
    terms: FxHashMap<Monomial, BigRational>,
}

fn add_rational(map: &mut FxHashMap<Monomial, BigRational>, key: Monomial, val: BigRational) {
    use std::collections::hash_map::Entry;
    if val.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(val);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += val;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Accumulator for RationalAcc {
    fn from_seed(seed: &[(Monomial, i64)]) -> Self {
        let mut terms = FxHashMap::default();
        for &(m, c) in seed {
            add_rational(&mut terms, m, BigRational::from_integer(BigInt::from(c)));
        }
        RationalAcc { terms }
    }

    fn mul_one_minus_pair(&mut self, i: usize, j: usize) {
        let mut out =
            FxHashMap::with_capacity_and_hasher(self.terms.len() * 2, Default::default());
        for (m, c) in self.terms.drain() {
            add_rational(&mut out, m.times_var(i).times_var(j), -c.clone());
            add_rational(&mut out, m, c);
        }
        self.terms = out;
    }

    fn mul_one_minus_var(&mut self, v: usize) {
        let mut out =
            FxHashMap::with_capacity_and_hasher(self.terms.len() * 2, Default::default());
        for (m, c) in self.terms.drain() {
            add_rational(&mut out, m.times_var(v), -c.clone());
            add_rational(&mut out, m, c);
        }
        self.terms = out;
    }

    fn integrate(&mut self, v: usize, shift: u32) {
        let divisors: BTreeSet<u32> = self
            .terms
            .keys()
            .map(|m| m.exponent(v) + shift + 1)
            .collect();
        let inverses: FxHashMap<u32, BigRational> = divisors
            .into_iter()
            .map(|d| (d, BigRational::new(BigInt::one(), BigInt::from(d))))
            .collect();
        let mut out = FxHashMap::with_capacity_and_hasher(self.terms.len(), Default::default());
        for (m, c) in self.terms.drain() {
            let d = m.exponent(v) + shift + 1;
            add_rational(&mut out, m.without_var(v), c * &inverses[&d]);
        }
        self.terms = out;
    }

    fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn finish(self) -> BigRational {
        self.terms
            .get(&Monomial::unit())
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }
}

/// Integer coefficients over a single shared denominator. Each integration
/// round multiplies the denominator by the lcm of the occurring exponent+1
/// values and scales coefficients accordingly, so no gcd reduction happens
/// in the hot loop; the final fraction is reduced once at the end.
struct ScaledAcc {
    terms: FxHashMap<Monomial, BigInt>,
    denom: BigUint,
}

fn add_integer(map: &mut FxHashMap<Monomial, BigInt>, key: Monomial, val: BigInt) {
    use std::collections::hash_map::Entry;
    if val.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(val);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += val;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Accumulator for ScaledAcc {
    fn from_seed(seed: &[(Monomial, i64)]) -> Self {
        let mut terms = FxHashMap::default();
        for &(m, c) in seed {
            add_integer(&mut terms, m, BigInt::from(c));
        }
        ScaledAcc {
            terms,
            denom: BigUint::one(),
        }
    }

    fn mul_one_minus_pair(&mut self, i: usize, j: usize) {
        let mut out =
            FxHashMap::with_capacity_and_hasher(self.terms.len() * 2, Default::default());
        for (m, c) in self.terms.drain() {
            add_integer(&mut out, m.times_var(i).times_var(j), -c.clone());
            add_integer(&mut out, m, c);
        }
        self.terms = out;
    }

    fn mul_one_minus_var(&mut self, v: usize) {
        let mut out =
            FxHashMap::with_capacity_and_hasher(self.terms.len() * 2, Default::default());
        for (m, c) in self.terms.drain() {
            add_integer(&mut out, m.times_var(v), -c.clone());
            add_integer(&mut out, m, c);
        }
        self.terms = out;
    }

    fn integrate(&mut self, v: usize, shift: u32) {
        let divisors: BTreeSet<u32> = self
            .terms
            .keys()
            .map(|m| m.exponent(v) + shift + 1)
            .collect();
        let mut round_lcm = BigUint::one();
        for &d in &divisors {
            round_lcm = round_lcm.lcm(&BigUint::from(d));
        }
        let multipliers: FxHashMap<u32, BigInt> = divisors
            .into_iter()
            .map(|d| (d, BigInt::from(&round_lcm / BigUint::from(d))))
            .collect();
        let mut out = FxHashMap::with_capacity_and_hasher(self.terms.len(), Default::default());
        for (m, c) in self.terms.drain() {
            let d = m.exponent(v) + shift + 1;
            add_integer(&mut out, m.without_var(v), c * &multipliers[&d]);
        }
        self.denom *= round_lcm;
        self.terms = out;
    }

    fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn finish(self) -> BigRational {
        let numerator = self
            .terms
            .get(&Monomial::unit())
            .cloned()
            .unwrap_or_else(BigInt::zero);
        BigRational::new(numerator, BigInt::from(self.denom))
    }
}
