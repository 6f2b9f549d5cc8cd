//! Command-line front end for exact stable-roommates solvability
//! probabilities.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use roommates::cycletype::{
    count_permutations, even_cycle_sign_exponent, factor_count, family_members, partition_number,
    CycleFamily, CycleType,
};
use roommates::oracle::{exhaustive_p, mc_estimate};
use roommates::polyint::{Arithmetic, OrderRule, DEFAULT_TERM_LIMIT};
use roommates::rational::{to_decimal_string, to_fraction_string};
use roommates::stability::{
    integral_p_detailed, solvability_probability, EngineConfig, Route, StrategyChoice,
};
use roommates::Error;

use report::{
    print_json, print_type_rows_csv, print_type_rows_text, rows_from_result,
    timing_from_evaluation, timings_from_result, EnumerateReport, EnumerateRow, ExactReport,
    Format, IntegralReport, McReport, ValueOut, VerifyReport, Volatile,
};

/// Largest n accepted without --allow-large. Larger sizes are supported up
/// to the engine's 16-variable ceiling but can take long.
const DEFAULT_MAX_N: u32 = 12;

#[derive(Parser)]
#[command(
    name = "roommates",
    version,
    about = "Exact probability that a random stable-roommates instance is solvable"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute p_n exactly by summing cycle-type integrals.
    Exact(ExactArgs),
    /// Evaluate the stability integral P(a) for one cycle type.
    Integral(IntegralArgs),
    /// List a cycle-type family with counts and integrand sizes.
    Enumerate(EnumerateArgs),
    /// Cross-check the exact value against an oracle.
    Verify(VerifyArgs),
    /// Monte Carlo estimate of the solvability probability.
    Mc(McArgs),
}

#[derive(Args)]
struct EngineArgs {
    /// Integral evaluation strategy.
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    /// Worker threads for per-type parallelism (default: all cores).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=1024))]
    threads: Option<u32>,
    /// Directory for cached integrals; overrides ROOMMATES_CACHE_DIR.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Abort an evaluation whose live polynomial exceeds this many terms.
    #[arg(long, default_value_t = DEFAULT_TERM_LIMIT)]
    term_limit: usize,
}

#[derive(Args)]
struct OutputArgs {
    /// Decimal digits printed alongside exact fractions.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..=10_000))]
    decimals: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct ExactArgs {
    /// Number of agents.
    #[arg(long)]
    n: u32,
    /// Assembly route: solvable-family sum, complement sum, or both.
    #[arg(long, value_enum, default_value_t = RouteArg::Both)]
    route: RouteArg,
    /// Accept sizes above the default cap of 12.
    #[arg(long)]
    allow_large: bool,
    #[command(flatten)]
    engine: EngineArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct IntegralArgs {
    /// Cycle type, e.g. "2^1,4^1".
    #[arg(long = "type")]
    cycle_type: String,
    /// Accept sizes above the default cap of 12.
    #[arg(long)]
    allow_large: bool,
    #[command(flatten)]
    engine: EngineArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Partition size.
    #[arg(long)]
    n: u32,
    /// Family to list.
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Number of agents.
    #[arg(long)]
    n: u32,
    /// Oracle to compare against.
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Samples for Monte Carlo mode.
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    /// Seed for Monte Carlo mode.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    engine: EngineArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct McArgs {
    /// Number of agents.
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=1024))]
    threads: Option<u32>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Early,
    Coeffwise,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Direct,
    Complement,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// All cycles even (even n): stable members are solvability witnesses.
    Even,
    /// At most one fixed point, some odd cycle (even n): the complement sum.
    Odd,
    /// One fixed point, all other cycles even (odd n).
    FixedEven,
    /// Some odd cycle of length at least 3 (odd n): the complement sum.
    OddCycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Mc,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

fn route_of(r: RouteArg) -> Route {
    match r {
        RouteArg::Direct => Route::Direct,
        RouteArg::Complement => Route::Complement,
        RouteArg::Both => Route::Both,
    }
}

fn route_name(r: RouteArg) -> &'static str {
    match r {
        RouteArg::Direct => "direct",
        RouteArg::Complement => "complement",
        RouteArg::Both => "both",
    }
}

fn family_of(f: FamilyArg) -> CycleFamily {
    match f {
        FamilyArg::Even => CycleFamily::EvenOnly,
        FamilyArg::Odd => CycleFamily::OddWitness,
        FamilyArg::FixedEven => CycleFamily::OneFixedEven,
        FamilyArg::OddCycle => CycleFamily::OddCycleAtLeast3,
    }
}

/// Number of family members predicted from partition counts alone.
fn predicted_cardinality(n: u32, family: CycleFamily) -> u64 {
    match family {
        CycleFamily::EvenOnly => partition_number(n / 2),
        CycleFamily::OddWitness => {
            partition_number(n) - partition_number(n - 2) - partition_number(n / 2)
        }
        CycleFamily::OneFixedEven => partition_number((n - 1) / 2),
        // Complement of "every odd part is a fixed point": subtract the
        // partitions made of k ones plus an all-even remainder.
        CycleFamily::OddCycleAtLeast3 => {
            let ones: u64 = (0..=n)
                .filter(|k| k % 2 == n % 2)
                .map(|k| partition_number((n - k) / 2))
                .sum();
            partition_number(n) - ones
        }
    }
}

/// A problem with the invocation itself, as opposed to a failure inside
/// the engine.
struct UsageError(String);

enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<UsageError> for CliError {
    fn from(u: UsageError) -> Self {
        CliError::Usage(u.0)
    }
}

fn engine_config(args: &EngineArgs) -> EngineConfig {
    let cache_dir = args
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("ROOMMATES_CACHE_DIR").map(PathBuf::from));
    EngineConfig {
        cache_dir,
        term_limit: args.term_limit,
        strategy: match args.strategy {
            StrategyArg::Early => StrategyChoice::EarlyElimination,
            StrategyArg::Coeffwise => StrategyChoice::CoefficientWise,
            StrategyArg::Auto => StrategyChoice::Auto,
        },
        arithmetic: Arithmetic::ScaledInteger,
        order: OrderRule::Greedy,
    }
}

fn install_thread_pool(threads: Option<u32>) -> Result<(), UsageError> {
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
            .map_err(|e| UsageError(format!("cannot configure {t} threads: {e}")))?;
    }
    Ok(())
}

fn check_size_cap(n: u32, allow_large: bool) -> Result<(), UsageError> {
    if n > DEFAULT_MAX_N && !allow_large {
        return Err(UsageError(format!(
            "n = {n} exceeds the default cap of {DEFAULT_MAX_N}; pass --allow-large to proceed"
        )));
    }
    Ok(())
}

fn cmd_exact(args: &ExactArgs) -> Result<ExitCode, CliError> {
    let started = Instant::now();
    let cfg = engine_config(&args.engine);
    let decimals = args.output.decimals as usize;
    let result = solvability_probability(args.n, route_of(args.route), &cfg)?;
    let rows = rows_from_result(&result, decimals);
    match args.output.format.into() {
        Format::Json => print_json(&ExactReport {
            command: "exact",
            n: result.n,
            route: route_name(args.route),
            value: ValueOut::new(&result.value, decimals),
            complement: ValueOut::new(&result.complement, decimals),
            per_type: rows,
            volatile: Volatile::new(started.elapsed().as_secs_f64(), timings_from_result(&result)),
        }),
        Format::Csv => print_type_rows_csv(&rows),
        Format::Text => {
            println!("n = {}, route = {}", result.n, route_name(args.route));
            println!("p_{} = {}", result.n, to_fraction_string(&result.value));
            println!("     = {}", to_decimal_string(&result.value, decimals));
            println!("1 - p_{} = {}", result.n, to_fraction_string(&result.complement));
            println!();
            print_type_rows_text(&rows);
            println!();
            println!("total {:.3}s", started.elapsed().as_secs_f64());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_integral(args: &IntegralArgs) -> Result<ExitCode, CliError> {
    let started = Instant::now();
    let a: CycleType = args.cycle_type.parse()?;
    check_size_cap(a.n(), args.allow_large)?;
    let cfg = engine_config(&args.engine);
    let decimals = args.output.decimals as usize;
    let eval = integral_p_detailed(&a, &cfg)?;
    let f = factor_count(&a);
    match args.output.format.into() {
        Format::Json => print_json(&IntegralReport {
            command: "integral",
            cycle_type: a.to_string(),
            n: a.n(),
            value: ValueOut::new(&eval.value, decimals),
            f,
            strategy: eval.strategy.clone(),
            volatile: Volatile::new(
                started.elapsed().as_secs_f64(),
                vec![timing_from_evaluation(&eval)],
            ),
        }),
        Format::Csv => {
            println!("type,fraction,decimal,f,strategy");
            println!(
                "\"{}\",{},{},{},{}",
                a,
                to_fraction_string(&eval.value),
                to_decimal_string(&eval.value, decimals),
                f,
                eval.strategy
            );
        }
        Format::Text => {
            println!("P([{a}]) = {}", to_fraction_string(&eval.value));
            println!("         = {}", to_decimal_string(&eval.value, decimals));
            println!(
                "f(a) = {f}, strategy = {}, {:.3}s{}",
                eval.strategy,
                eval.elapsed.as_secs_f64(),
                if eval.from_cache { " (cached)" } else { "" }
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<ExitCode, CliError> {
    let family = family_of(args.family);
    let members = family_members(args.n, family)?;
    let rows: Vec<EnumerateRow> = members
        .iter()
        .map(|a| EnumerateRow {
            cycle_type: a.to_string(),
            c: count_permutations(a).to_string(),
            e: even_cycle_sign_exponent(a),
            f: factor_count(a),
        })
        .collect();
    let predicted = predicted_cardinality(args.n, family);
    let matches = rows.len() as u64 == predicted;
    match args.output.format.into() {
        Format::Json => print_json(&EnumerateReport {
            command: "enumerate",
            n: args.n,
            family: family.name().to_string(),
            types: rows,
            cardinality: members.len(),
            predicted,
            matches,
        }),
        Format::Csv => {
            println!("type,c,e,f");
            for r in &rows {
                println!("\"{}\",{},{},{}", r.cycle_type, r.c, r.e, r.f);
            }
        }
        Format::Text => {
            println!("family {} for n = {}", family.name(), args.n);
            let width = rows
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
            println!("{:<width$}  {:>c_width$}  {:>4}  {:>4}", "type", "c(a)", "e(a)", "f(a)");
            for r in &rows {
                println!("{:<width$}  {:>c_width$}  {:>4}  {:>4}", r.cycle_type, r.c, r.e, r.f);
            }
            println!(
                "cardinality {} (predicted {predicted}, match: {})",
                members.len(),
                if matches { "yes" } else { "NO" }
            );
        }
    }
    if matches {
        Ok(ExitCode::SUCCESS)
    } else {
        // A failed count identity means the enumeration itself is broken.
        Ok(ExitCode::from(4))
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let started = Instant::now();
    let cfg = engine_config(&args.engine);
    let decimals = args.output.decimals as usize;
    let exact = solvability_probability(args.n, Route::Both, &cfg)?.value;
    let (mode, observed, stderr, sigma, samples, seed, agreement) = match args.mode {
        ModeArg::Exhaustive => {
            let brute = exhaustive_p(args.n)?;
            let agreement = brute == exact;
            (
                "exhaustive",
                to_fraction_string(&brute),
                None,
                None,
                None,
                None,
                agreement,
            )
        }
        ModeArg::Mc => {
            let est = mc_estimate(args.n as usize, args.samples, args.seed)?;
            let target = exact.to_f64().expect("probability fits in f64");
            let distance = (est.estimate - target).abs();
            let sigma = if distance == 0.0 {
                0.0
            } else if est.stderr == 0.0 {
                f64::INFINITY
            } else {
                distance / est.stderr
            };
            (
                "mc",
                format!("{:.10}", est.estimate),
                Some(est.stderr),
                Some(sigma),
                Some(est.samples),
                Some(args.seed),
                sigma <= 4.0,
            )
        }
    };
    let report = VerifyReport {
        command: "verify",
        n: args.n,
        mode,
        exact: ValueOut::new(&exact, decimals),
        observed,
        stderr,
        sigma_distance: sigma,
        samples,
        seed,
        agreement,
        volatile: Volatile::new(started.elapsed().as_secs_f64(), Vec::new()),
    };
    match args.output.format.into() {
        Format::Json => print_json(&report),
        Format::Csv => {
            println!("n,mode,exact,observed,sigma_distance,agreement");
            println!(
                "{},{},{},{},{},{}",
                report.n,
                report.mode,
                report.exact.fraction,
                report.observed,
                report
                    .sigma_distance
                    .map(|s| format!("{s:.3}"))
                    .unwrap_or_default(),
                report.agreement
            );
        }
        Format::Text => {
            println!("exact p_{} = {} = {}", args.n, report.exact.fraction, report.exact.decimal);
            match args.mode {
                ModeArg::Exhaustive => {
                    println!("exhaustive enumeration: {}", report.observed);
                }
                ModeArg::Mc => {
                    println!(
                        "estimate {} +/- {:.2e} ({} samples, seed {}), {:.2} stderr away",
                        report.observed,
                        report.stderr.unwrap(),
                        args.samples,
                        args.seed,
                        report.sigma_distance.unwrap()
                    );
                }
            }
            println!("agreement: {}", if report.agreement { "yes" } else { "NO" });
        }
    }
    if report.agreement {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(4))
    }
}

fn cmd_mc(args: &McArgs) -> Result<ExitCode, CliError> {
    let started = Instant::now();
    let est = mc_estimate(args.n as usize, args.samples, args.seed)?;
    match args.output.format.into() {
        Format::Json => print_json(&McReport {
            command: "mc",
            n: args.n,
            seed: args.seed,
            samples: est.samples,
            solvable: est.solvable,
            estimate: est.estimate,
            stderr: est.stderr,
            volatile: Volatile::new(started.elapsed().as_secs_f64(), Vec::new()),
        }),
        Format::Csv => {
            println!("n,seed,samples,solvable,estimate,stderr");
            println!(
                "{},{},{},{},{},{}",
                args.n, args.seed, est.samples, est.solvable, est.estimate, est.stderr
            );
        }
        Format::Text => {
            println!(
                "estimate {:.10} +/- {:.2e} ({} of {} samples solvable, seed {})",
                est.estimate, est.stderr, est.solvable, est.samples, args.seed
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::TermLimitExceeded { .. } => 3,
        Error::TypeIntegralFailed { source, .. } => exit_code_for(source),
        Error::RoutesDisagree { .. } => 4,
        Error::ParseCycleType { .. }
        | Error::FamilyParity { .. }
        | Error::SizeOutOfRange { .. }
        | Error::VariableOutOfRange { .. }
        | Error::EmptySample
        | Error::InvalidPreferenceTable { .. }
        | Error::InvalidPermutation { .. } => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || -> Result<ExitCode, CliError> {
        match &cli.command {
            Command::Exact(args) => {
                check_size_cap(args.n, args.allow_large)?;
                install_thread_pool(args.engine.threads)?;
                cmd_exact(args)
            }
            Command::Integral(args) => {
                install_thread_pool(args.engine.threads)?;
                cmd_integral(args)
            }
            Command::Enumerate(args) => cmd_enumerate(args),
            Command::Verify(args) => {
                install_thread_pool(args.engine.threads)?;
                cmd_verify(args)
            }
            Command::Mc(args) => {
                install_thread_pool(args.threads)?;
                cmd_mc(args)
            }
        }
    };
    match run() {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(err)) => {
            eprintln!("error: {err}");
            if let Error::TypeIntegralFailed { completed, .. } = &err {
                if !completed.is_empty() {
                    eprintln!("completed before the failure:");
                    for (ty, fraction) in completed {
                        eprintln!("  [{ty}] {fraction}");
                    }
                }
            }
            ExitCode::from(exit_code_for(&err))
        }
    }
}
