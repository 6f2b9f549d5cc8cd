//! From cycle types to integrands to the exact solvability probability.
//!
//! A random preference table admits a solution exactly when it has a stable
//! permutation whose cycle structure fits the solvable family for its size.
//! For each candidate cycle type `a`, the probability that a fixed
//! permutation of that type is stable is an integral P(a) of a product of
//! penalty factors over the unit cube; the overall probability p_n is a
//! signed sum of c(a) * P(a) over a cycle-type family. For even n the sum
//! runs over all-even cycle types (the complement over types with an odd
//! cycle and at most one fixed point); for odd n over one-fixed-point
//! all-even types (the complement over types with an odd cycle of length at
//! least 3). Direct and complement routes must agree exactly, and the engine
//! can compute both as a cross-check.

mod cache;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cycletype::{
    count_permutations, even_cycle_sign_exponent, factor_count, family_members, CycleFamily,
    CycleType,
};
use crate::error::{Error, Result};
use crate::polyint::{
    evaluate_integral, Arithmetic, EvalOptions, FactorList, OrderRule, Strategy,
    DEFAULT_TERM_LIMIT, MAX_VARS,
};
use crate::rational;

/// A cycle type's integrand in factored form, under the canonical variable
/// layout: 2-cycles first on consecutive index pairs, then longer cycles in
/// ascending length, the fixed point (if any) last. The fixed point's
/// variable is substituted to 1 at build time, which turns its bilinear
/// factors into unary ones and removes it from the live variable set.
#[derive(Debug, Clone)]
pub struct IntegrandSpec {
    n: u32,
    cycle_type: CycleType,
    factor_list: Option<FactorList>,
    cycles: Vec<Vec<usize>>,
    fixed_var: Option<usize>,
}

impl IntegrandSpec {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn cycle_type(&self) -> &CycleType {
        &self.cycle_type
    }

    /// True when the integrand vanishes identically, which happens exactly
    /// for types with two or more fixed points.
    pub fn is_identically_zero(&self) -> bool {
        self.factor_list.is_none()
    }

    pub fn factor_list(&self) -> Option<&FactorList> {
        self.factor_list.as_ref()
    }

    /// Cycles of length >= 2 as lists of live variable indices.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Original index of the variable substituted to 1, if any.
    pub fn fixed_var(&self) -> Option<usize> {
        self.fixed_var
    }
}

/// Builds the factored integrand for a cycle type.
///
/// Penalty factors (1 - x_i x_j) run over all unordered pairs that are not
/// cyclic neighbors; elements on cycles of length >= 3 carry a linear x_i
/// prefactor; a fixed point is substituted to 1. Types with two or more
/// fixed points vanish identically and carry no factor list.
pub fn build_integrand(a: &CycleType) -> Result<IntegrandSpec> {
    let n = a.n() as usize;
    let fixed = a.fixed_points();
    if fixed >= 2 {
        return Ok(IntegrandSpec {
            n: a.n(),
            cycle_type: a.clone(),
            factor_list: None,
            cycles: Vec::new(),
            fixed_var: None,
        });
    }
    let live = n - fixed as usize;
    if live > MAX_VARS {
        return Err(Error::SizeOutOfRange {
            what: "integrand construction",
            n: a.n(),
            min: 1,
            max: (MAX_VARS + 1) as u32,
        });
    }

    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut pos = 0;
    for (k, mult) in a.iter() {
        if k == 1 {
            continue;
        }
        for _ in 0..mult {
            cycles.push((pos..pos + k as usize).collect());
            pos += k as usize;
        }
    }
    debug_assert_eq!(pos, live);

    let mut neighbors: BTreeSet<(usize, usize)> = BTreeSet::new();
    for cycle in &cycles {
        if cycle.len() == 2 {
            neighbors.insert((cycle[0], cycle[1]));
        } else {
            for t in 0..cycle.len() {
                let i = cycle[t];
                let j = cycle[(t + 1) % cycle.len()];
                neighbors.insert((i.min(j), i.max(j)));
            }
        }
    }

    let mut bilinear = Vec::new();
    for i in 0..live {
        for j in i + 1..live {
            if !neighbors.contains(&(i, j)) {
                bilinear.push((i, j));
            }
        }
    }
    let unary: Vec<usize> = if fixed == 1 { (0..live).collect() } else { Vec::new() };
    let linear: Vec<usize> = cycles
        .iter()
        .filter(|c| c.len() >= 3)
        .flat_map(|c| c.iter().copied())
        .collect();

    let factor_list = FactorList::new(live, bilinear, unary, linear)?
        .with_label(a.to_string())
        .with_unit_substituted(if fixed == 1 { vec![n - 1] } else { Vec::new() });
    debug_assert_eq!(
        factor_list.penalty_factor_count() as u64,
        factor_count(a),
        "penalty factor count disagrees with the closed formula for {a}"
    );

    Ok(IntegrandSpec {
        n: a.n(),
        cycle_type: a.clone(),
        factor_list: Some(factor_list),
        cycles,
        fixed_var: if fixed == 1 { Some(n - 1) } else { None },
    })
}

/// Strategy selection for integral evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyChoice {
    EarlyElimination,
    CoefficientWise,
    /// Early elimination first; on a term-limit failure, retry
    /// coefficient-wise.
    Auto,
}

/// Configuration shared by all integral evaluations.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Directory for the persistent integral cache; None disables caching.
    pub cache_dir: Option<PathBuf>,
    pub term_limit: usize,
    pub strategy: StrategyChoice,
    pub arithmetic: Arithmetic,
    pub order: OrderRule,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            cache_dir: None,
            term_limit: DEFAULT_TERM_LIMIT,
            strategy: StrategyChoice::Auto,
            arithmetic: Arithmetic::ScaledInteger,
            order: OrderRule::Greedy,
        }
    }
}

/// Outcome of evaluating one cycle type's integral.
#[derive(Debug, Clone)]
pub struct TypeEvaluation {
    pub cycle_type: CycleType,
    pub value: BigRational,
    /// Which evaluation produced the value: an engine strategy name,
    /// `identically-zero`, or the strategy recorded by a cache hit.
    pub strategy: String,
    pub elapsed: Duration,
    pub from_cache: bool,
    /// Largest live term count observed (0 for zero integrands and cache hits).
    pub peak_terms: usize,
}

/// Exact P(a): the probability that a fixed permutation with cycle type `a`
/// is stable for a random preference table.
pub fn integral_p(a: &CycleType, cfg: &EngineConfig) -> Result<BigRational> {
    integral_p_detailed(a, cfg).map(|e| e.value)
}

/// As `integral_p`, with timing, strategy choice and cache status attached.
pub fn integral_p_detailed(a: &CycleType, cfg: &EngineConfig) -> Result<TypeEvaluation> {
    let start = Instant::now();
    if a.fixed_points() >= 2 {
        return Ok(TypeEvaluation {
            cycle_type: a.clone(),
            value: BigRational::zero(),
            strategy: "identically-zero".to_string(),
            elapsed: start.elapsed(),
            from_cache: false,
            peak_terms: 0,
        });
    }
    if let Some(dir) = &cfg.cache_dir {
        if let Some((value, strategy)) = cache::load(dir, a) {
            return Ok(TypeEvaluation {
                cycle_type: a.clone(),
                value,
                strategy,
                elapsed: start.elapsed(),
                from_cache: true,
                peak_terms: 0,
            });
        }
    }

    let spec = build_integrand(a)?;
    let factors = spec.factor_list().expect("non-zero integrand");
    let run = |strategy: Strategy| {
        evaluate_integral(
            factors,
            &EvalOptions {
                strategy,
                order: cfg.order,
                arithmetic: cfg.arithmetic,
                term_limit: cfg.term_limit,
            },
        )
    };
    let (outcome, strategy) = match cfg.strategy {
        StrategyChoice::EarlyElimination => (run(Strategy::EarlyElimination)?, Strategy::EarlyElimination),
        StrategyChoice::CoefficientWise => (run(Strategy::CoefficientWise)?, Strategy::CoefficientWise),
        StrategyChoice::Auto => match run(Strategy::EarlyElimination) {
            Ok(outcome) => (outcome, Strategy::EarlyElimination),
            Err(Error::TermLimitExceeded { .. }) => {
                (run(Strategy::CoefficientWise)?, Strategy::CoefficientWise)
            }
            Err(other) => return Err(other),
        },
    };
    let elapsed = start.elapsed();

    if let Some(dir) = &cfg.cache_dir {
        cache::store(
            dir,
            a,
            &cache::CacheEntry {
                cycle_type: a.to_string(),
                n: a.n(),
                fraction: rational::to_fraction_string(&outcome.value),
                strategy: strategy.name().to_string(),
                elapsed_s: elapsed.as_secs_f64(),
                engine_version: cache::ENGINE_VERSION.to_string(),
            },
        )?;
    }

    Ok(TypeEvaluation {
        cycle_type: a.clone(),
        value: outcome.value,
        strategy: strategy.name().to_string(),
        elapsed,
        from_cache: false,
        peak_terms: outcome.peak_terms,
    })
}

/// Which assembly route to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Sum the solvable family only.
    Direct,
    /// Sum the complement family and subtract from 1.
    Complement,
    /// Compute both and require exact agreement.
    Both,
}

/// Which sum a per-type contribution belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumSide {
    /// Contributes to p_n directly.
    Value,
    /// Contributes to 1 - p_n.
    Complement,
}

/// One cycle type's contribution to an assembled probability.
#[derive(Debug, Clone)]
pub struct TypeContribution {
    pub cycle_type: CycleType,
    pub side: SumSide,
    /// P(a), the stability probability of a fixed permutation of this type.
    pub probability: BigRational,
    /// c(a), the number of permutations of this type.
    pub permutation_count: BigUint,
    /// The inclusion-exclusion sign (-1)^e(a).
    pub sign: i8,
    /// f(a), the penalty factor count of the integrand.
    pub factor_count: u64,
    pub strategy: String,
    pub elapsed: Duration,
    pub from_cache: bool,
    pub peak_terms: usize,
}

/// An assembled probability with its per-type breakdown in canonical
/// enumeration order (direct-family types first for route `Both`).
#[derive(Debug, Clone)]
pub struct ProbabilityResult {
    pub n: u32,
    pub route: Route,
    pub value: BigRational,
    pub complement: BigRational,
    pub per_type: Vec<TypeContribution>,
}

fn contribution(a: &CycleType, side: SumSide, eval: TypeEvaluation) -> TypeContribution {
    TypeContribution {
        side,
        probability: eval.value,
        permutation_count: count_permutations(a),
        sign: if even_cycle_sign_exponent(a) % 2 == 0 { 1 } else { -1 },
        factor_count: factor_count(a),
        strategy: eval.strategy,
        elapsed: eval.elapsed,
        from_cache: eval.from_cache,
        peak_terms: eval.peak_terms,
        cycle_type: eval.cycle_type,
    }
}

/// Evaluates every member of a family concurrently and returns the signed
/// sum of c(a) * P(a) together with the per-type contributions in canonical
/// order. On failure, already-computed values are reported in the error.
fn family_sum(
    n: u32,
    family: CycleFamily,
    side: SumSide,
    cfg: &EngineConfig,
) -> Result<(BigRational, Vec<TypeContribution>)> {
    let members = family_members(n, family)?;
    let evals: Vec<Result<TypeEvaluation>> = members
        .par_iter()
        .map(|a| integral_p_detailed(a, cfg))
        .collect();

    let mut contributions = Vec::with_capacity(members.len());
    let mut failure: Option<(String, Error)> = None;
    for (a, eval) in members.iter().zip(evals) {
        match eval {
            Ok(e) => contributions.push(contribution(a, side, e)),
            Err(e) => {
                if failure.is_none() {
                    failure = Some((a.to_string(), e));
                }
            }
        }
    }
    if let Some((cycle_type, source)) = failure {
        return Err(Error::TypeIntegralFailed {
            n,
            cycle_type,
            source: Box::new(source),
            completed: contributions
                .iter()
                .map(|c| {
                    (
                        c.cycle_type.to_string(),
                        rational::to_fraction_string(&c.probability),
                    )
                })
                .collect(),
        });
    }

    let mut total = BigRational::zero();
    for c in &contributions {
        let signed_count = BigInt::from(c.permutation_count.clone()) * BigInt::from(c.sign);
        total += &c.probability * BigRational::from_integer(signed_count);
    }
    Ok((total, contributions))
}

fn assemble(
    n: u32,
    route: Route,
    direct_family: CycleFamily,
    complement_family: CycleFamily,
    cfg: &EngineConfig,
) -> Result<ProbabilityResult> {
    let one = BigRational::one;
    match route {
        Route::Direct => {
            let (value, per_type) = family_sum(n, direct_family, SumSide::Value, cfg)?;
            Ok(ProbabilityResult {
                n,
                route,
                complement: one() - &value,
                value,
                per_type,
            })
        }
        Route::Complement => {
            let (complement, per_type) =
                family_sum(n, complement_family, SumSide::Complement, cfg)?;
            Ok(ProbabilityResult {
                n,
                route,
                value: one() - &complement,
                complement,
                per_type,
            })
        }
        Route::Both => {
            let (value, mut per_type) = family_sum(n, direct_family, SumSide::Value, cfg)?;
            let (complement, complement_types) =
                family_sum(n, complement_family, SumSide::Complement, cfg)?;
            if value.clone() + &complement != one() {
                return Err(Error::RoutesDisagree {
                    n,
                    direct: rational::to_fraction_string(&value),
                    complement_sum: rational::to_fraction_string(&complement),
                });
            }
            per_type.extend(complement_types);
            Ok(ProbabilityResult {
                n,
                route,
                value,
                complement,
                per_type,
            })
        }
    }
}

/// Exact probability that a random instance of even size n is solvable:
/// the signed sum over all-even cycle types, or 1 minus the sum over types
/// with an odd cycle and at most one fixed point, or both with an exact
/// equality check.
pub fn p_even(n: u32, route: Route, cfg: &EngineConfig) -> Result<ProbabilityResult> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::SizeOutOfRange {
            what: "even-size probability",
            n,
            min: 2,
            max: MAX_VARS as u32,
        });
    }
    assemble(n, route, CycleFamily::EvenOnly, CycleFamily::OddWitness, cfg)
}

/// Exact probability that a random instance of odd size n is solvable
/// (one participant stays unmatched): the signed sum over one-fixed-point
/// all-even types, or 1 minus the sum over types with an odd cycle of
/// length >= 3, or both with an exact equality check.
pub fn p_odd(n: u32, route: Route, cfg: &EngineConfig) -> Result<ProbabilityResult> {
    if n < 3 || n % 2 != 1 {
        return Err(Error::SizeOutOfRange {
            what: "odd-size probability",
            n,
            min: 3,
            max: (MAX_VARS + 1) as u32,
        });
    }
    assemble(
        n,
        route,
        CycleFamily::OneFixedEven,
        CycleFamily::OddCycleAtLeast3,
        cfg,
    )
}

/// Dispatches to `p_even` or `p_odd` by parity.
pub fn solvability_probability(n: u32, route: Route, cfg: &EngineConfig) -> Result<ProbabilityResult> {
    if n < 2 {
        return Err(Error::SizeOutOfRange {
            what: "solvability probability",
            n,
            min: 2,
            max: (MAX_VARS + 1) as u32,
        });
    }
    if n % 2 == 0 {
        p_even(n, route, cfg)
    } else {
        p_odd(n, route, cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn integrand_layout_for_two_2cycles() {
        let spec = build_integrand(&ct("2^2")).unwrap();
        let f = spec.factor_list().unwrap();
        assert_eq!(f.varcount(), 4);
        assert_eq!(f.bilinear_pairs(), &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(f.unary_vars().is_empty());
        assert!(f.linear_vars().is_empty());
        assert_eq!(spec.cycles(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn integrand_layout_for_a_4cycle() {
        let spec = build_integrand(&ct("4^1")).unwrap();
        let f = spec.factor_list().unwrap();
        assert_eq!(f.bilinear_pairs(), &[(0, 2), (1, 3)]);
        assert_eq!(f.linear_vars(), &[0, 1, 2, 3]);
        assert!(f.unary_vars().is_empty());
    }

    #[test]
    fn integrand_substitutes_the_fixed_point() {
        let spec = build_integrand(&ct("1^1,3^1")).unwrap();
        let f = spec.factor_list().unwrap();
        assert_eq!(f.varcount(), 3);
        assert!(f.bilinear_pairs().is_empty());
        assert_eq!(f.unary_vars(), &[0, 1, 2]);
        assert_eq!(f.linear_vars(), &[0, 1, 2]);
        assert_eq!(spec.fixed_var(), Some(3));
        assert_eq!(f.unit_substituted(), &[3]);
    }

    #[test]
    fn two_fixed_points_vanish() {
        let spec = build_integrand(&ct("1^2,2^1")).unwrap();
        assert!(spec.is_identically_zero());
        assert_eq!(
            integral_p(&ct("1^2,2^1"), &EngineConfig::default()).unwrap(),
            BigRational::zero()
        );
    }

    #[test]
    fn integrals_for_size_4() {
        let cfg = EngineConfig::default();
        assert_eq!(integral_p(&ct("2^2"), &cfg).unwrap(), rat(233, 648));
        assert_eq!(integral_p(&ct("4^1"), &cfg).unwrap(), rat(25, 1296));
        assert_eq!(integral_p(&ct("1^1,3^1"), &cfg).unwrap(), rat(1, 216));
    }

    #[test]
    fn probability_for_size_4_via_both_routes() {
        let result = p_even(4, Route::Both, &EngineConfig::default()).unwrap();
        assert_eq!(result.value, rat(26, 27));
        assert_eq!(result.complement, rat(1, 27));
        // direct family is [4^1], [2^2]; the only complement member is [1^1,3^1]
        let direct: Vec<String> = result
            .per_type
            .iter()
            .filter(|c| c.side == SumSide::Value)
            .map(|c| c.cycle_type.to_string())
            .collect();
        let complement: Vec<String> = result
            .per_type
            .iter()
            .filter(|c| c.side == SumSide::Complement)
            .map(|c| c.cycle_type.to_string())
            .collect();
        assert_eq!(direct, ["4^1", "2^2"]);
        assert_eq!(complement, ["1^1,3^1"]);
    }

    #[test]
    fn smallest_sizes() {
        let cfg = EngineConfig::default();
        assert_eq!(p_even(2, Route::Direct, &cfg).unwrap().value, rat(1, 1));
        assert_eq!(p_odd(3, Route::Both, &cfg).unwrap().value, rat(3, 4));
    }

    #[test]
    fn parity_and_range_validation() {
        let cfg = EngineConfig::default();
        assert!(p_even(5, Route::Direct, &cfg).is_err());
        assert!(p_odd(6, Route::Direct, &cfg).is_err());
        assert!(p_even(0, Route::Direct, &cfg).is_err());
        assert!(solvability_probability(1, Route::Direct, &cfg).is_err());
    }

    #[test]
    fn cache_round_trip_preserves_values() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = EngineConfig {
            cache_dir: Some(dir.path().to_path_buf()),
            ..EngineConfig::default()
        };
        let cold = integral_p_detailed(&ct("2^2"), &cfg).unwrap();
        assert!(!cold.from_cache);
        let warm = integral_p_detailed(&ct("2^2"), &cfg).unwrap();
        assert!(warm.from_cache);
        assert_eq!(cold.value, warm.value);
        assert_eq!(cold.strategy, warm.strategy);
    }

    #[test]
    fn auto_strategy_falls_back_on_term_limit() {
        // On [2^2], early elimination peaks at 8 terms and the
        // coefficient-wise decomposition at 7, so a limit of 7 forces
        // the automatic fallback.
        let cfg = EngineConfig {
            term_limit: 7,
            ..EngineConfig::default()
        };
        let eval = integral_p_detailed(&ct("2^2"), &cfg).unwrap();
        assert_eq!(eval.strategy, "coefficient-wise");
        assert_eq!(eval.value, rat(233, 648));
        let strict = EngineConfig {
            term_limit: 7,
            strategy: StrategyChoice::EarlyElimination,
            ..EngineConfig::default()
        };
        assert!(matches!(
            integral_p(&ct("2^2"), &strict),
            Err(Error::TermLimitExceeded { .. })
        ));
    }
}
