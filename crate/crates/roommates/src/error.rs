//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid cycle type `{input}`: {reason}")]
    ParseCycleType { input: String, reason: String },

    #[error("family `{family}` requires {required} n, got n={n}")]
    FamilyParity {
        family: &'static str,
        required: &'static str,
        n: u32,
    },

    #[error("n={n} outside supported range {min}..={max} for {what}")]
    SizeOutOfRange {
        what: &'static str,
        n: u32,
        min: u32,
        max: u32,
    },

    #[error("variable {var} out of range for {varcount} variables")]
    VariableOutOfRange { var: usize, varcount: usize },

    #[error(
        "term limit exceeded integrating `{cycle_type}` with {strategy} \
         ({reached} live terms > limit {limit}); retry with the coefficient-wise strategy \
         or raise the limit"
    )]
    TermLimitExceeded {
        cycle_type: String,
        strategy: &'static str,
        limit: usize,
        reached: usize,
    },

    #[error("invalid preference table: {reason}")]
    InvalidPreferenceTable { reason: String },

    #[error("invalid permutation: {reason}")]
    InvalidPermutation { reason: String },

    #[error("permutation is not a perfect matching (need fixed-point-free involution)")]
    NotAPerfectMatching,

    #[error("even-cycle pairing check needs a stable permutation with an even cycle of length >= 4")]
    NoQualifyingEvenCycle,

    #[error("sample count must be positive")]
    EmptySample,

    #[error("cache error at {path}: {source}")]
    Cache {
        path: std::path::PathBuf,
        source: std::io::Error,
    },

    #[error("direct and complement routes disagree for n={n}: {direct} vs 1 - {complement_sum}")]
    RoutesDisagree {
        n: u32,
        direct: String,
        complement_sum: String,
    },

    #[error("assembling p_{n} failed on cycle type `{cycle_type}`: {source}")]
    TypeIntegralFailed {
        n: u32,
        cycle_type: String,
        #[source]
        source: Box<Error>,
        /// (cycle type, fraction) pairs that had already been computed,
        /// so callers can still report a partial table.
        completed: Vec<(String, String)>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
