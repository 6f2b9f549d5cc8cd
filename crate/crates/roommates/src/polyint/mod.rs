//! Sparse multivariate polynomial arithmetic over exact rationals and exact
//! integration over the unit cube.
//!
//! Integrands arrive in factored form (`FactorList`): a product of bilinear
//! penalties (1 - x_i x_j), unary penalties (1 - x_u) and linear prefactors
//! x_l. Expanding such a product outright costs 2^f terms for f penalty
//! factors, which is hopeless beyond small cases; `evaluate_integral`
//! instead interleaves factor multiplication with variable-by-variable
//! integration so the live polynomial stays small.

mod eval;
mod factors;
mod monomial;
mod poly;

pub use eval::{
    elimination_order, evaluate_integral, Arithmetic, EvalOptions, IntegralOutcome, OrderRule,
    Strategy, DEFAULT_TERM_LIMIT,
};
pub use factors::FactorList;
pub use monomial::{Monomial, MAX_VARS};
pub use poly::SparsePoly;

use crate::error::{Error, Result};

/// Materializes the full product of a factor list as a polynomial, without
/// any integration. Exponential in the number of penalty factors; intended
/// for small integrands (tests, cross-checks), hence the hard term cap.
pub fn expand(f: &FactorList) -> Result<SparsePoly> {
    const EXPAND_LIMIT: usize = 1 << 22;
    let mut poly = SparsePoly::one(f.varcount())?;
    for &(i, j) in f.bilinear_pairs() {
        poly.mul_one_minus_pair(i, j)?;
        if poly.term_count() > EXPAND_LIMIT {
            return Err(Error::TermLimitExceeded {
                cycle_type: f.label_or_unlabeled(),
                strategy: "full expansion",
                limit: EXPAND_LIMIT,
                reached: poly.term_count(),
            });
        }
    }
    for &u in f.unary_vars() {
        poly.mul_one_minus_var(u)?;
    }
    for &l in f.linear_vars() {
        poly.mul_var(l)?;
    }
    Ok(poly)
}
