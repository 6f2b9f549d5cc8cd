//! Sparse multivariate polynomials with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::monomial::{Monomial, MAX_VARS};
use crate::error::{Error, Result};

/// A polynomial stored as a map from monomials to nonzero rational
/// coefficients, together with the set of variables still live (not yet
/// integrated out). All arithmetic is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    terms: FxHashMap<Monomial, BigRational>,
    varcount: usize,
    live: u32,
}

impl SparsePoly {
    /// The constant polynomial `value` in `varcount` variables.
    pub fn constant(varcount: usize, value: BigRational) -> Result<Self> {
        if varcount > MAX_VARS {
            return Err(Error::VariableOutOfRange {
                var: varcount,
                varcount: MAX_VARS,
            });
        }
        let mut terms = FxHashMap::default();
        if !value.is_zero() {
            terms.insert(Monomial::unit(), value);
        }
        Ok(SparsePoly {
            terms,
            varcount,
            live: (1u32 << varcount) - 1,
        })
    }

    /// The constant polynomial 1.
    pub fn one(varcount: usize) -> Result<Self> {
        Self::constant(varcount, BigRational::one())
    }

    pub fn varcount(&self) -> usize {
        self.varcount
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when `v` has not been integrated out yet.
    pub fn is_live(&self, v: usize) -> bool {
        v < self.varcount && self.live & (1 << v) != 0
    }

    /// Live variables in ascending index order.
    pub fn live_vars(&self) -> Vec<usize> {
        (0..self.varcount).filter(|&v| self.is_live(v)).collect()
    }

    /// Adds `coeff * monomial`, dropping the term if it cancels to zero.
    pub fn add_term(&mut self, monomial: Monomial, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(monomial) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient of `monomial` (zero if absent).
    pub fn coefficient(&self, monomial: Monomial) -> BigRational {
        self.terms.get(&monomial).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The value of a fully integrated polynomial: its constant term.
    pub fn constant_value(&self) -> BigRational {
        self.coefficient(Monomial::unit())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    fn check_live(&self, v: usize) -> Result<()> {
        if !self.is_live(v) {
            return Err(Error::VariableOutOfRange {
                var: v,
                varcount: self.varcount,
            });
        }
        Ok(())
    }

    /// Multiplies by the bilinear factor (1 - x_i x_j), i != j.
    pub fn mul_one_minus_pair(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_live(i)?;
        self.check_live(j)?;
        if i == j {
            return Err(Error::VariableOutOfRange {
                var: j,
                varcount: self.varcount,
            });
        }
        let old: Vec<(Monomial, BigRational)> =
            self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        for (m, c) in old {
            self.add_term(m.times_var(i).times_var(j), -c);
        }
        Ok(())
    }

    /// Multiplies by the unary factor (1 - x_v).
    pub fn mul_one_minus_var(&mut self, v: usize) -> Result<()> {
        self.check_live(v)?;
        let old: Vec<(Monomial, BigRational)> =
            self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        for (m, c) in old {
            self.add_term(m.times_var(v), -c);
        }
        Ok(())
    }

    /// Multiplies by x_v.
    pub fn mul_var(&mut self, v: usize) -> Result<()> {
        self.check_live(v)?;
        self.terms = self
            .terms
            .drain()
            .map(|(m, c)| (m.times_var(v), c))
            .collect();
        Ok(())
    }

    /// Multiplies every coefficient by `scalar`.
    pub fn scale(&mut self, scalar: &BigRational) {
        if scalar.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= scalar;
        }
    }

    /// Adds another polynomial over the same variables.
    pub fn add_assign_poly(&mut self, other: &SparsePoly) {
        assert_eq!(self.varcount, other.varcount, "variable count mismatch");
        for (m, c) in other.terms.iter() {
            self.add_term(*m, c.clone());
        }
    }

    /// Integrates x_v over [0, 1]: each term c * x_v^b contributes
    /// c/(b+1) with the variable removed. The variable leaves the live set.
    pub fn integrate_variable(mut self, v: usize) -> Result<SparsePoly> {
        self.check_live(v)?;
        let mut out: FxHashMap<Monomial, BigRational> = FxHashMap::default();
        out.reserve(self.terms.len());
        for (m, c) in self.terms.drain() {
            let b = m.exponent(v);
            let reduced = c / BigRational::from_integer(BigInt::from(b + 1));
            use std::collections::hash_map::Entry;
            match out.entry(m.without_var(v)) {
                Entry::Vacant(e) => {
                    e.insert(reduced);
                }
                Entry::Occupied(mut e) => {
                    *e.get_mut() += reduced;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        Ok(SparsePoly {
            terms: out,
            varcount: self.varcount,
            live: self.live & !(1 << v),
        })
    }

    /// Evaluates at a rational point (for cross-checks in tests).
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.varcount, "point dimension mismatch");
        let mut total = BigRational::zero();
        for (m, c) in self.terms.iter() {
            let mut term = c.clone();
            for (v, x) in point.iter().enumerate() {
                for _ in 0..m.exponent(v) {
                    term *= x;
                }
            }
            total += term;
        }
        total
    }

    /// Largest absolute coefficient, for growth diagnostics in tests.
    pub fn max_abs_coefficient(&self) -> BigRational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}
