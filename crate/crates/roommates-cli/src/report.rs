//! Report types and rendering for all output formats.
//!
//! Reports are deterministic for a fixed configuration; wall-clock data
//! (timestamps, elapsed times, cache hits) is confined to the `volatile`
//! section so the rest of a JSON report can be compared byte for byte
//! across runs.

use std::time::{SystemTime, UNIX_EPOCH};

use num_rational::BigRational;
use serde::Serialize;

use roommates::rational::{to_decimal_string, to_fraction_string};
use roommates::stability::{ProbabilityResult, SumSide, TypeEvaluation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Serialize)]
pub struct ValueOut {
    pub fraction: String,
    pub decimal: String,
}

impl ValueOut {
    pub fn new(r: &BigRational, decimals: usize) -> Self {
        ValueOut {
            fraction: to_fraction_string(r),
            decimal: to_decimal_string(r, decimals),
        }
    }
}

#[derive(Serialize)]
pub struct TypeRow {
    #[serde(rename = "type")]
    pub cycle_type: String,
    pub side: &'static str,
    #[serde(rename = "P")]
    pub probability: ValueOut,
    pub c: String,
    pub sign: i8,
    pub f: u64,
    pub strategy: String,
}

#[derive(Serialize)]
pub struct TypeTiming {
    #[serde(rename = "type")]
    pub cycle_type: String,
    pub elapsed_s: f64,
    pub from_cache: bool,
}

#[derive(Serialize)]
pub struct Volatile {
    pub unix_timestamp: u64,
    pub total_elapsed_s: f64,
    pub per_type: Vec<TypeTiming>,
}

impl Volatile {
    pub fn new(total_elapsed_s: f64, per_type: Vec<TypeTiming>) -> Self {
        Volatile {
            unix_timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            total_elapsed_s,
            per_type,
        }
    }
}

#[derive(Serialize)]
pub struct ExactReport {
    pub command: &'static str,
    pub n: u32,
    pub route: &'static str,
    pub value: ValueOut,
    pub complement: ValueOut,
    pub per_type: Vec<TypeRow>,
    pub volatile: Volatile,
}

#[derive(Serialize)]
pub struct IntegralReport {
    pub command: &'static str,
    #[serde(rename = "type")]
    pub cycle_type: String,
    pub n: u32,
    pub value: ValueOut,
    pub f: u64,
    pub strategy: String,
    pub volatile: Volatile,
}

#[derive(Serialize)]
pub struct EnumerateRow {
    #[serde(rename = "type")]
    pub cycle_type: String,
    pub c: String,
    pub e: u32,
    pub f: u64,
}

#[derive(Serialize)]
pub struct EnumerateReport {
    pub command: &'static str,
    pub n: u32,
    pub family: String,
    pub types: Vec<EnumerateRow>,
    pub cardinality: usize,
    pub predicted: u64,
    pub matches: bool,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub n: u32,
    pub mode: &'static str,
    pub exact: ValueOut,
    /// Fraction for exhaustive mode, decimal estimate for Monte Carlo.
    pub observed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stderr: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma_distance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub agreement: bool,
    pub volatile: Volatile,
}

#[derive(Serialize)]
pub struct McReport {
    pub command: &'static str,
    pub n: u32,
    pub seed: u64,
    pub samples: u64,
    pub solvable: u64,
    pub estimate: f64,
    pub stderr: f64,
    pub volatile: Volatile,
}

pub fn side_name(side: SumSide) -> &'static str {
    match side {
        SumSide::Value => "value",
        SumSide::Complement => "complement",
    }
}

pub fn rows_from_result(result: &ProbabilityResult, decimals: usize) -> Vec<TypeRow> {
    result
        .per_type
        .iter()
        .map(|c| TypeRow {
            cycle_type: c.cycle_type.to_string(),
            side: side_name(c.side),
            probability: ValueOut::new(&c.probability, decimals),
            c: c.permutation_count.to_string(),
            sign: c.sign,
            f: c.factor_count,
            strategy: c.strategy.clone(),
        })
        .collect()
}

pub fn timings_from_result(result: &ProbabilityResult) -> Vec<TypeTiming> {
    result
        .per_type
        .iter()
        .map(|c| TypeTiming {
            cycle_type: c.cycle_type.to_string(),
            elapsed_s: c.elapsed.as_secs_f64(),
            from_cache: c.from_cache,
        })
        .collect()
}

pub fn timing_from_evaluation(eval: &TypeEvaluation) -> TypeTiming {
    TypeTiming {
        cycle_type: eval.cycle_type.to_string(),
        elapsed_s: eval.elapsed.as_secs_f64(),
        from_cache: eval.from_cache,
    }
}

pub fn print_json<T: Serialize>(report: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("reports serialize")
    );
}

/// CSV escape: quote fields containing commas or quotes.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn print_type_rows_csv(rows: &[TypeRow]) {
    println!("type,side,fraction,decimal,c,sign,f,strategy");
    for r in rows {
        println!(
            "{},{},{},{},{},{},{},{}",
            csv_field(&r.cycle_type),
            r.side,
            r.probability.fraction,
            r.probability.decimal,
            r.c,
            r.sign,
            r.f,
            csv_field(&r.strategy)
        );
    }
}

pub fn print_type_rows_text(rows: &[TypeRow]) {
    let type_width = rows
        .iter()
        .map(|r| r.cycle_type.len())
        .chain(["type".len()])
        .max()
        .unwrap();
    let c_width = rows
        .iter()
        .map(|r| r.c.len())
        .chain(["c(a)".len()])
        .max()
        .unwrap();
    let strat_width = rows
        .iter()
        .map(|r| r.strategy.len())
        .chain(["strategy".len()])
        .max()
        .unwrap();
    println!(
        "{:<type_width$}  {:<10}  {:>c_width$}  {:>4}  {:>4}  {:<strat_width$}  P(a)",
        "type", "side", "c(a)", "sign", "f(a)", "strategy"
    );
    for r in rows {
        println!(
            "{:<type_width$}  {:<10}  {:>c_width$}  {:>4}  {:>4}  {:<strat_width$}  {} = {}",
            r.cycle_type,
            r.side,
            r.c,
            if r.sign >= 0 { "+" } else { "-" },
            r.f,
            r.strategy,
            r.probability.fraction,
            r.probability.decimal
        );
    }
}
