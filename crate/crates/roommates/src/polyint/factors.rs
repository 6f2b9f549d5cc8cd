//! Factored description of an integrand over the unit cube.

use std::collections::BTreeSet;

use super::monomial::MAX_VARS;
use crate::error::{Error, Result};

/// An integrand in product form:
///
/// ```text
///   prod (1 - x_i x_j)  *  prod (1 - x_u)  *  prod x_l
///   bilinear pairs         unary vars         linear vars
/// ```
///
/// Unary factors arise when a variable fixed to 1 turns a bilinear factor
/// (1 - x_i * 1) into (1 - x_i); such substituted variables are not counted
/// in `varcount` and are recorded only for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorList {
    varcount: usize,
    bilinear_pairs: Vec<(usize, usize)>,
    unary_vars: Vec<usize>,
    linear_vars: Vec<usize>,
    unit_substituted: Vec<usize>,
    label: String,
}

impl FactorList {
    /// Validates and normalizes the factor description. Pairs are stored
    /// with the smaller index first; duplicates are rejected.
    pub fn new(
        varcount: usize,
        bilinear_pairs: Vec<(usize, usize)>,
        unary_vars: Vec<usize>,
        linear_vars: Vec<usize>,
    ) -> Result<Self> {
        if varcount > MAX_VARS {
            return Err(Error::VariableOutOfRange {
                var: varcount,
                varcount: MAX_VARS,
            });
        }
        let oob = |var: usize| Error::VariableOutOfRange { var, varcount };
        let mut pairs = Vec::with_capacity(bilinear_pairs.len());
        let mut seen_pairs = BTreeSet::new();
        for (i, j) in bilinear_pairs {
            if i >= varcount {
                return Err(oob(i));
            }
            if j >= varcount || i == j {
                return Err(oob(j));
            }
            let pair = (i.min(j), i.max(j));
            if !seen_pairs.insert(pair) {
                return Err(oob(pair.1));
            }
            pairs.push(pair);
        }
        let check_distinct = |vars: &[usize]| -> Result<()> {
            let mut seen = BTreeSet::new();
            for &v in vars {
                if v >= varcount || !seen.insert(v) {
                    return Err(oob(v));
                }
            }
            Ok(())
        };
        check_distinct(&unary_vars)?;
        check_distinct(&linear_vars)?;
        Ok(FactorList {
            varcount,
            bilinear_pairs: pairs,
            unary_vars,
            linear_vars,
            unit_substituted: Vec::new(),
            label: String::new(),
        })
    }

    /// Records which original variable indices were fixed to 1 (for reports).
    pub fn with_unit_substituted(mut self, vars: Vec<usize>) -> Self {
        self.unit_substituted = vars;
        self
    }

    /// Attaches a human-readable origin (e.g. a cycle-type string) used in
    /// resource-limit error messages.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn varcount(&self) -> usize {
        self.varcount
    }

    pub fn bilinear_pairs(&self) -> &[(usize, usize)] {
        &self.bilinear_pairs
    }

    pub fn unary_vars(&self) -> &[usize] {
        &self.unary_vars
    }

    pub fn linear_vars(&self) -> &[usize] {
        &self.linear_vars
    }

    pub fn unit_substituted(&self) -> &[usize] {
        &self.unit_substituted
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub(crate) fn label_or_unlabeled(&self) -> String {
        if self.label.is_empty() {
            "unlabeled integrand".to_string()
        } else {
            self.label.clone()
        }
    }

    /// Number of (1 - ...) penalty factors: bilinear plus unary. The fully
    /// expanded integrand would have 2^penalty_factor_count() terms.
    pub fn penalty_factor_count(&self) -> usize {
        self.bilinear_pairs.len() + self.unary_vars.len()
    }

    pub fn has_linear(&self, v: usize) -> bool {
        self.linear_vars.contains(&v)
    }
}
