//! Exact solvability probabilities for the stable roommates problem.
//!
//! A stable roommates instance on n agents gives every agent a strict
//! preference order over the others. The instance is solvable when some
//! perfect matching (for odd n: a matching that leaves one agent alone whom
//! nobody strictly needs) admits no blocking pair. Under uniformly random
//! preferences the solvability probability p_n is a rational number, and
//! this crate computes it exactly:
//!
//! * [`cycletype`] enumerates the cycle types of permutations and the
//!   families of types whose stable permutations witness solvability.
//! * [`polyint`] integrates the stability polynomial attached to a cycle
//!   type over the unit cube, using sparse exact arithmetic with variable
//!   elimination orderings chosen to keep intermediate polynomials small.
//! * [`stability`] assembles the per-type integrals into p_n along two
//!   independent routes (direct and via the complement) and caches results.
//! * [`oracle`] provides brute-force and Monte Carlo cross-checks on
//!   explicit preference tables.
//! * [`rational`] formats exact fractions as correctly rounded decimals.
//!
//! ```
//! use roommates::stability::{solvability_probability, EngineConfig, Route};
//! let p4 = solvability_probability(4, Route::Both, &EngineConfig::default()).unwrap();
//! assert_eq!(roommates::rational::to_fraction_string(&p4.value), "26/27");
//! ```

pub mod cycletype;
pub mod error;
pub mod oracle;
pub mod polyint;
pub mod rational;
pub mod stability;

pub use error::{Error, Result};
