//! Randomized invariants: integrator algebra, enumeration identities,
//! oracle cross-checks, and output formatting.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use roommates::cycletype::{
    count_permutations, enumerate_partitions, factor_count, CycleType,
};
use roommates::oracle::{
    even_cycle_pairings_stable, is_solvable, is_stable_matching, is_stable_permutation,
    mc_estimate, permutations_with_cycle_type, random_table, Permutation, PreferenceTable,
};
use roommates::polyint::{
    elimination_order, evaluate_integral, expand, Arithmetic, EvalOptions, FactorList, OrderRule,
    SparsePoly, Strategy as EvalStrategy,
};
use roommates::rational::to_decimal_string;
use roommates::stability::build_integrand;

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A random factored integrand on 2..=5 variables: any subset of the
/// bilinear pairs, any unary subset, any linear subset.
fn arb_factor_list() -> impl Strategy<Value = FactorList> {
    (2usize..=5)
        .prop_flat_map(|varcount| {
            let pair_count = varcount * (varcount - 1) / 2;
            (
                Just(varcount),
                proptest::collection::vec(any::<bool>(), pair_count),
                proptest::collection::vec(any::<bool>(), varcount),
                proptest::collection::vec(any::<bool>(), varcount),
            )
        })
        .prop_map(|(varcount, pair_mask, unary_mask, linear_mask)| {
            let mut pairs = Vec::new();
            let mut idx = 0;
            for i in 0..varcount {
                for j in i + 1..varcount {
                    if pair_mask[idx] {
                        pairs.push((i, j));
                    }
                    idx += 1;
                }
            }
            let pick = |mask: &[bool]| -> Vec<usize> {
                mask.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect()
            };
            FactorList::new(varcount, pairs, pick(&unary_mask), pick(&linear_mask)).unwrap()
        })
}

/// A random cycle type with 1 <= n <= bound.
fn arb_cycle_type(bound: u32) -> impl Strategy<Value = CycleType> {
    (1..=bound)
        .prop_flat_map(|n| {
            let parts = enumerate_partitions(n);
            (0..parts.len()).prop_map(move |i| parts[i].clone())
        })
}

fn integrate_all(f: &FactorList, order: &[usize]) -> BigRational {
    let mut poly = expand(f).unwrap();
    for &v in order {
        poly = poly.integrate_variable(v).unwrap();
    }
    poly.constant_value()
}

fn shuffled(varcount: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..varcount).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    order
}

proptest! {
    #[test]
    fn cycle_type_strings_round_trip(a in arb_cycle_type(12)) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<CycleType>().unwrap(), a);
    }

    #[test]
    fn permutation_counts_sum_to_factorial(n in 1..=12u32) {
        let total: BigUint = enumerate_partitions(n).iter().map(count_permutations).sum();
        let factorial: BigUint = (1..=n).map(BigUint::from).product();
        prop_assert_eq!(total, factorial);
    }

    #[test]
    fn integrand_sizes_match_the_closed_formula(a in arb_cycle_type(10)) {
        let spec = build_integrand(&a).unwrap();
        match spec.factor_list() {
            Some(f) => prop_assert_eq!(f.penalty_factor_count() as u64, factor_count(&a)),
            None => prop_assert!(a.fixed_points() >= 2),
        }
    }

    #[test]
    fn expansion_size_is_bounded_by_two_to_penalties(f in arb_factor_list()) {
        let poly = expand(&f).unwrap();
        prop_assert!(poly.term_count() <= 1 << f.penalty_factor_count());
        prop_assert!(poly.term_count() > 0);
    }

    #[test]
    fn elimination_order_is_a_permutation_of_the_variables(f in arb_factor_list()) {
        let mut order = elimination_order(&f);
        order.sort_unstable();
        let expected: Vec<usize> = (0..f.varcount()).collect();
        prop_assert_eq!(order, expected);
    }

    #[test]
    fn integration_order_never_changes_the_value(
        f in arb_factor_list(),
        seed_a in any::<u64>(),
        seed_b in any::<u64>(),
    ) {
        let streamed = evaluate_integral(&f, &EvalOptions::default()).unwrap().value;
        prop_assert_eq!(integrate_all(&f, &shuffled(f.varcount(), seed_a)), streamed.clone());
        prop_assert_eq!(integrate_all(&f, &shuffled(f.varcount(), seed_b)), streamed);
    }

    #[test]
    fn integration_is_linear(
        f in arb_factor_list(),
        g in arb_factor_list(),
        num in -20i64..=20,
        den in 1i64..=9,
    ) {
        // Bring both polynomials to a shared variable space.
        let varcount = f.varcount().max(g.varcount());
        let scalar = rational(num, den);
        let mut p = SparsePoly::one(varcount).unwrap();
        for (m, c) in expand(&f).unwrap().iter() {
            p.add_term(*m, c.clone());
        }
        p.add_term(roommates::polyint::Monomial::unit(), -BigRational::one());
        let mut q = SparsePoly::one(varcount).unwrap();
        for (m, c) in expand(&g).unwrap().iter() {
            q.add_term(*m, c.clone());
        }
        q.add_term(roommates::polyint::Monomial::unit(), -BigRational::one());

        let mut combined = p.clone();
        combined.scale(&scalar);
        combined.add_assign_poly(&q);

        for v in 0..varcount {
            let lhs = combined.clone().integrate_variable(v).unwrap();
            let mut rhs = p.clone().integrate_variable(v).unwrap();
            rhs.scale(&scalar);
            rhs.add_assign_poly(&q.clone().integrate_variable(v).unwrap());
            let point: Vec<BigRational> =
                (0..varcount).map(|k| rational(k as i64 + 2, 7)).collect();
            prop_assert_eq!(lhs.evaluate(&point), rhs.evaluate(&point));
        }
    }

    #[test]
    fn monomial_integration_rule(exponents in proptest::collection::vec(0u32..=6, 1..=4)) {
        let varcount = exponents.len();
        let mut poly = SparsePoly::one(varcount).unwrap();
        for (v, &e) in exponents.iter().enumerate() {
            for _ in 0..e {
                poly.mul_var(v).unwrap();
            }
        }
        for v in 0..varcount {
            poly = poly.integrate_variable(v).unwrap();
        }
        let expected = exponents
            .iter()
            .fold(BigRational::one(), |acc, &e| acc / BigRational::from_integer(BigInt::from(e + 1)));
        prop_assert_eq!(poly.constant_value(), expected);
    }

    #[test]
    fn decimal_output_is_correctly_rounded(
        num in -1_000_000_007i64..=1_000_000_007,
        den in 1i64..=999_983,
        decimals in 1usize..=25,
    ) {
        let r = rational(num, den);
        let text = to_decimal_string(&r, decimals);
        let negative = text.starts_with('-');
        let digits = text.trim_start_matches('-');
        let (int_part, frac_part) = digits.split_once('.').unwrap();
        prop_assert_eq!(frac_part.len(), decimals);
        let scale = BigInt::from(10u32).pow(decimals as u32);
        let magnitude = int_part.parse::<BigInt>().unwrap() * &scale
            + frac_part.parse::<BigInt>().unwrap();
        let reconstructed = BigRational::new(
            if negative { -magnitude } else { magnitude },
            scale.clone(),
        );
        let error = (r.clone() - &reconstructed).abs();
        let half_ulp = BigRational::new(BigInt::one(), scale * 2);
        prop_assert!(error <= half_ulp, "{} is more than half an ulp away", text);
        if error == half_ulp {
            let last = frac_part.bytes().last().unwrap() - b'0';
            prop_assert_eq!(last % 2, 0, "tie in {} not rounded to even", text);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strategies_orders_and_arithmetics_agree(a in arb_cycle_type(7)) {
        let spec = build_integrand(&a).unwrap();
        let Some(f) = spec.factor_list() else { return Ok(()) };
        let mut values = Vec::new();
        for strategy in [EvalStrategy::EarlyElimination, EvalStrategy::CoefficientWise] {
            for arithmetic in [Arithmetic::ScaledInteger, Arithmetic::Rational] {
                for order in [OrderRule::Greedy, OrderRule::DescendingIndex] {
                    let opts = EvalOptions { strategy, arithmetic, order, ..EvalOptions::default() };
                    values.push(evaluate_integral(f, &opts).unwrap().value);
                }
            }
        }
        for v in &values[1..] {
            prop_assert_eq!(v, &values[0]);
        }
    }

    #[test]
    fn pruned_solvability_matches_plain_enumeration(n in 4usize..=6, seed in any::<u64>()) {
        let t = random_table(n, seed);
        let naive = if n % 2 == 0 {
            let matching = CycleType::from_parts(&vec![2; n / 2]).unwrap();
            permutations_with_cycle_type(n, &matching)
                .unwrap()
                .iter()
                .any(|m| is_stable_matching(&t, m).unwrap())
        } else {
            let mut parts = vec![2; n / 2];
            parts.push(1);
            let lonely_type = CycleType::from_parts(&parts).unwrap();
            permutations_with_cycle_type(n, &lonely_type)
                .unwrap()
                .iter()
                .any(|p| is_stable_permutation(&t, p))
        };
        prop_assert_eq!(is_solvable(&t).unwrap(), naive);
    }

    #[test]
    fn matching_stability_equals_permutation_stability(
        half in 2usize..=4,
        table_seed in any::<u64>(),
        pick in any::<proptest::sample::Index>(),
    ) {
        let n = 2 * half;
        let t = random_table(n, table_seed);
        let matching = CycleType::from_parts(&vec![2; half]).unwrap();
        let pool = permutations_with_cycle_type(n, &matching).unwrap();
        let m = &pool[pick.index(pool.len())];
        prop_assert_eq!(is_stable_matching(&t, m).unwrap(), is_stable_permutation(&t, m));
    }

    #[test]
    fn sampled_tables_are_valid_and_deterministic(n in 2usize..=10, seed in any::<u64>()) {
        let t = random_table(n, seed);
        prop_assert_eq!(t.clone(), random_table(n, seed));
        for i in 0..n {
            let mut row = t.preference_row(i).to_vec();
            row.sort_unstable();
            let expected: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            prop_assert_eq!(row, expected);
        }
    }

    #[test]
    fn cycle_decompositions_round_trip(n in 2usize..=10, seed in any::<u64>()) {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let p = Permutation::new(images).unwrap();
        let cycles = p.cycles();
        let borrowed: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        prop_assert_eq!(p.cycle_type().n() as usize, n);
        prop_assert_eq!(Permutation::from_cycles(n, &borrowed).unwrap(), p);
    }
}

/// Example tables shipped as fixtures: the first admits a stable 4-cycle
/// whose two pairings are both stable matchings; the second admits a stable
/// 3-cycle, so it has no stable matching at all.
#[test]
fn fixture_tables_behave_as_documented() {
    let a = PreferenceTable::parse(include_str!("fixtures/example_a.txt")).unwrap();
    let b = PreferenceTable::parse(include_str!("fixtures/example_b.txt")).unwrap();

    let four_cycle = Permutation::from_cycles(4, &[&[0, 2, 3, 1]]).unwrap();
    assert!(is_stable_permutation(&a, &four_cycle));
    assert!(even_cycle_pairings_stable(&a, &four_cycle).unwrap());
    assert!(is_solvable(&a).unwrap());

    let three_cycle = Permutation::from_cycles(4, &[&[0, 1, 2], &[3]]).unwrap();
    assert!(is_stable_permutation(&b, &three_cycle));
    assert!(!is_solvable(&b).unwrap());

    // Round trip through the plain-text format.
    assert_eq!(
        PreferenceTable::parse(&a.to_string()).unwrap(),
        a,
        "serialization round trip"
    );
}

/// Stable permutations consisting of a single 8-cycle split into two stable
/// matchings; checked over seeded tables until 20 qualifying cases appear.
#[test]
fn eight_cycle_pairings_are_stable() {
    let pool = permutations_with_cycle_type(8, &"8^1".parse().unwrap()).unwrap();
    let mut cases = 0;
    for i in 0..20_000u64 {
        if cases >= 20 {
            break;
        }
        let t = random_table(8, 6_000_000 + i);
        for p in &pool {
            if is_stable_permutation(&t, p) {
                assert!(even_cycle_pairings_stable(&t, p).unwrap());
                cases += 1;
            }
        }
    }
    assert!(cases >= 20, "only {cases} qualifying eight-cycle cases found");
}

/// Larger sample counts bring the estimate closer to the exact value
/// (deterministic seeded instance of consistency).
#[test]
fn sampling_error_shrinks_with_more_samples() {
    let exact = 181431847.0 / 194400000.0;
    let coarse = mc_estimate(6, 3_000, 11).unwrap();
    let fine = mc_estimate(6, 300_000, 11).unwrap();
    assert!(
        (fine.estimate - exact).abs() < (coarse.estimate - exact).abs(),
        "coarse {} vs fine {}",
        coarse.estimate,
        fine.estimate
    );
    assert!(fine.stderr < coarse.stderr);
}

/// First-row orderings of sampled tables are uniform across the 6 possible
/// orders (chi-square over 6000 seeded draws, 5 degrees of freedom).
#[test]
fn sampled_row_orderings_are_uniform() {
    let mut counts = std::collections::BTreeMap::new();
    let draws = 6_000u64;
    for seed in 0..draws {
        let t = random_table(4, 9_000_000 + seed);
        *counts.entry(t.preference_row(0).to_vec()).or_insert(0u64) += 1;
    }
    assert_eq!(counts.len(), 6, "all orderings must occur");
    let expected = draws as f64 / 6.0;
    let stat: f64 = counts
        .values()
        .map(|&c| (c as f64 - expected).powi(2) / expected)
        .sum();
    assert!(stat < 25.0, "chi-square statistic {stat} too large");
}
