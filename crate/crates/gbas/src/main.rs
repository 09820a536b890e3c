//! Thin command-line front end over the library: planning, estimation,
//! lower bounds, and experiments. All logic lives in the library; this
//! binary only parses flags, binds sources, and formats output.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 data error
//! (malformed/exhausted input, I/O), 3 draw-budget exhaustion, 4 check
//! failure in an experiment.

use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gbas::analysis::{exact_ci, min_k_exact, plan_from_bound, wald_lower_bound, Plan};
use gbas::distributions::UnitAdapter;
use gbas::error::{Error, Result};
use gbas::estimators::gbas_literal;
use gbas::harness::{
    compare_estimators, run_replications, suite_collapsed_vs_literal, suite_coverage, suite_dklr,
    suite_gamma_law, suite_guarantee, suite_p_invariance, suite_running_time, suite_thinning,
    suite_unbiasedness, Check, EstimatorSpec, ExperimentConfig, ExperimentReport, OutputFormat,
    SuiteOutcome, DEFAULT_SIGNIFICANCE,
};
use gbas::rng::RngStream;
use gbas::source::{StreamBernoulli, StreamUnitInterval};

/// Environment variable overriding the directory that relative `--out`
/// paths are resolved against.
const OUT_DIR_ENV: &str = "GBAS_OUT_DIR";

/// Default per-run draw budget: generous for any realistic `p`, small
/// enough to stop a `p ≈ 0` run in reasonable time.
const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Parser)]
#[command(
    name = "gbas",
    version,
    about = "Estimate the mean of a {0,1} stream with exact relative-error guarantees",
    after_help = "Exit codes: 0 success, 1 usage/domain error, 2 data error, \
                  3 budget exhaustion, 4 check failure."
)]
struct Cli {
    /// Emit machine-readable JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Choose the success target k for a relative-error guarantee.
    Plan(PlanArgs),
    /// Run the estimator over a data stream and report an exact interval.
    Estimate(EstimateArgs),
    /// Lower-bound the expected draws any valid scheme must spend.
    Lowerbound(LowerboundArgs),
    /// Run replicated experiments and validation suites.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct PlanArgs {
    /// Target relative error, in (0,1).
    #[arg(long)]
    epsilon: f64,
    /// Allowed failure probability, in (0,1).
    #[arg(long)]
    delta: f64,
    /// exact: smallest k by exact search; bound: closed form (ε < 3/14).
    #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
    method: MethodArg,
    /// If given, also report the expected draw count k/p.
    #[arg(long)]
    p: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Exact,
    Bound,
}

#[derive(Args)]
#[group(id = "source", required = true, multiple = false)]
struct SourceArgs {
    /// Read draws from this file (newline-delimited).
    #[arg(long, group = "source")]
    input: Option<PathBuf>,
    /// Read draws from standard input.
    #[arg(long, group = "source")]
    stdin: bool,
    /// Draw from a synthetic coin with this mean (testing/demos).
    #[arg(long, group = "source")]
    p: Option<f64>,
}

#[derive(Args)]
struct EstimateArgs {
    /// Success target k (at least 2); plan it with `gbas plan`.
    #[arg(long)]
    k: u64,
    #[command(flatten)]
    source: SourceArgs,
    /// Treat input lines as decimals in [0,1] instead of {0,1}, adapted
    /// to coin flips at one uniform per draw.
    #[arg(long)]
    unit_interval: bool,
    /// Master seed for the run's randomness; generated and printed if
    /// not given.
    #[arg(long)]
    seed: Option<u64>,
    /// Maximum number of draws before aborting (0 = unlimited).
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Confidence level of the reported exact interval.
    #[arg(long, default_value_t = 0.95)]
    level: f64,
}

#[derive(Args)]
struct LowerboundArgs {
    /// Relative-error target the alternative hypothesis encodes (> 0).
    #[arg(long)]
    epsilon: f64,
    /// Error probability of the test, in (0,1).
    #[arg(long)]
    delta: f64,
    /// Null-hypothesis mean, in (0, 1/2].
    #[arg(long)]
    p0: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EstimatorArg {
    GbasLiteral,
    GbasCollapsed,
    Dklr,
    FixedK,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    GammaLaw,
    PInvariance,
    Thinning,
    CollapsedVsLiteral,
    Coverage,
    Unbiasedness,
    RunningTime,
    Guarantee,
    Dklr,
    Compare,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Replicate a single estimator and report records + aggregates.
    #[arg(long, value_enum, conflicts_with = "suite")]
    estimator: Option<EstimatorArg>,
    /// Run a named validation suite instead of a raw replication.
    #[arg(long, value_enum)]
    suite: Option<SuiteArg>,

    /// True mean of the synthetic coin.
    #[arg(long)]
    p: f64,
    /// Second coin mean (p-invariance suite only).
    #[arg(long)]
    p_b: Option<f64>,
    /// Success target k (GBAS estimators and suites).
    #[arg(long)]
    k: Option<u64>,
    /// Relative-error target (dklr, guarantee, compare).
    #[arg(long)]
    epsilon: Option<f64>,
    /// Failure probability (dklr, guarantee, compare).
    #[arg(long)]
    delta: Option<f64>,
    /// Confidence level (coverage suite).
    #[arg(long)]
    level: Option<f64>,
    /// Draws per replicate (fixed-k estimator).
    #[arg(long)]
    draws: Option<u64>,

    /// Number of replicates.
    #[arg(long, default_value_t = 100_000)]
    n: u64,
    /// Master seed; generated and printed if not given.
    #[arg(long)]
    seed: Option<u64>,
    /// Significance level for the KS-based suites.
    #[arg(long, default_value_t = DEFAULT_SIGNIFICANCE)]
    significance: f64,
    /// Per-replicate draw budget (0 = unlimited).
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads; omit to run on the calling thread. The report is
    /// byte-identical either way.
    #[arg(long)]
    parallel: Option<usize>,
    /// Report format for raw replications (suites are always JSON).
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the report here instead of standard output. Relative paths
    /// resolve against $GBAS_OUT_DIR when it is set.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include per-replicate records in JSON reports.
    #[arg(long)]
    records: bool,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version arrive here too; they are successes.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    };
    std::process::exit(code);
}

fn exit_code_for(e: &Error) -> i32 {
    match e.root() {
        Error::Domain(_) => 1,
        Error::Data { .. } | Error::Exhausted { .. } | Error::Io(_) => 2,
        Error::BudgetExhausted { .. } => 3,
        Error::Replicate { .. } => 1, // unreachable: root() unwraps
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Plan(args) => cmd_plan(args, cli.json),
        Command::Estimate(args) => cmd_estimate(args, cli.json),
        Command::Lowerbound(args) => cmd_lowerbound(args, cli.json),
        Command::Experiment(args) => cmd_experiment(args, cli.json),
    }
}

/// Fresh master seed from the clock and process id, mixed through
/// splitmix64 so consecutive runs differ in all bits.
fn generate_seed() -> u64 {
    let nanos = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0);
    let mut z = nanos ^ (u64::from(std::process::id()) << 32);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    match seed {
        Some(s) => s,
        None => {
            let s = generate_seed();
            eprintln!("generated seed: {s} (pass --seed {s} to reproduce)");
            s
        }
    }
}

fn budget_option(budget: u64) -> Option<u64> {
    (budget > 0).then_some(budget)
}

/// Resolves a report path: relative paths go under $GBAS_OUT_DIR when set.
fn resolve_out(path: &Path) -> PathBuf {
    if path.is_absolute() {
        return path.to_owned();
    }
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir).join(path),
        _ => path.to_owned(),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            let path = resolve_out(path);
            std::fs::write(&path, text)?;
            eprintln!("wrote {}", path.display());
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn cmd_plan(args: PlanArgs, json: bool) -> Result<i32> {
    let plan = match args.method {
        MethodArg::Exact => min_k_exact(args.epsilon, args.delta)?,
        MethodArg::Bound => plan_from_bound(args.epsilon, args.delta)?,
    };
    let expected_draws = match args.p {
        Some(p) => {
            if !(p > 0.0 && p <= 1.0) {
                return Err(Error::Domain(format!("p must lie in (0,1], got {p}")));
            }
            Some(plan.k as f64 / p)
        }
        None => None,
    };
    if json {
        let mut doc = serde_json::to_value(plan).expect("plan serialization cannot fail");
        if let Some(t) = expected_draws {
            doc["expected_draws"] = json!(t);
        }
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        print_plan(&plan, expected_draws);
    }
    Ok(0)
}

fn print_plan(plan: &Plan, expected_draws: Option<f64>) {
    let method = match plan.method {
        gbas::analysis::PlanMethod::ExactSearch => "exact search",
        gbas::analysis::PlanMethod::AnalyticBound => "analytic bound",
    };
    println!("target          |p̂/p − 1| ≤ {} with probability ≥ {}", plan.epsilon, 1.0 - plan.delta);
    println!("method          {method}");
    println!("k               {}", plan.k);
    println!("failure at k    {:.6e}", plan.exact_failure);
    if let Some(t) = expected_draws {
        println!("expected draws  {t:.1}  (k/p)");
    }
}

fn cmd_estimate(args: EstimateArgs, json: bool) -> Result<i32> {
    if !(args.level > 0.0 && args.level < 1.0) {
        return Err(Error::Domain(format!(
            "confidence level must lie in (0,1), got {}",
            args.level
        )));
    }
    let seed = resolve_seed(args.seed);
    let budget = budget_option(args.budget);
    // Stream 0 drives the estimator's exponentials, stream 1 the
    // unit-interval adapter, stream 2 a synthetic coin.
    let mut aux = RngStream::new(seed, 0);

    let outcome = if let Some(p) = args.source.p {
        if args.unit_interval {
            return Err(Error::Domain(
                "--unit-interval applies to file/stdin sources; a synthetic coin \
                 is already {0,1}-valued"
                    .to_owned(),
            ));
        }
        let coin = RngStream::new(seed, 2);
        let mut source = gbas::distributions::synthetic_bernoulli(coin, p)?;
        gbas_literal(&mut source, &mut aux, args.k, budget)?
    } else {
        let reader: Box<dyn BufRead> = match &args.source.input {
            Some(path) => Box::new(BufReader::new(std::fs::File::open(path)?)),
            None => Box::new(BufReader::new(std::io::stdin())),
        };
        if args.unit_interval {
            let stream = StreamUnitInterval::new(reader);
            let mut source = UnitAdapter::new(stream, RngStream::new(seed, 1));
            gbas_literal(&mut source, &mut aux, args.k, budget)?
        } else {
            let mut source = StreamBernoulli::new(reader);
            gbas_literal(&mut source, &mut aux, args.k, budget)?
        }
    };
    let interval = exact_ci(outcome.p_hat, outcome.k, args.level)?;

    if json {
        let doc = json!({
            "seed": seed,
            "k": outcome.k,
            "p_hat": outcome.p_hat,
            "r_total": outcome.r_total,
            "draws": outcome.draws,
            "interval": interval,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("estimate   {:.10}", outcome.p_hat);
        println!(
            "{:.0}% CI     [{:.10}, {:.10}]",
            100.0 * interval.level,
            interval.lo,
            interval.hi
        );
        println!("draws      {}", outcome.draws);
        println!("k          {}", outcome.k);
        println!("seed       {seed}");
    }
    Ok(0)
}

fn cmd_lowerbound(args: LowerboundArgs, json: bool) -> Result<i32> {
    let bound = wald_lower_bound(args.epsilon, args.delta, args.p0)?;
    if json {
        let doc = json!({
            "epsilon": args.epsilon,
            "delta": args.delta,
            "p0": args.p0,
            "exact": bound.exact,
            "simplified": bound.simplified,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!(
            "distinguishing p₀ = {} from p₁ = p₀/(1+ε)² at ε = {}, δ = {}:",
            args.p0, args.epsilon, args.delta
        );
        println!("exact lower bound       {:.3} expected draws", bound.exact);
        println!("simplified lower bound  {:.3} expected draws", bound.simplified);
    }
    Ok(0)
}

fn require<T: Copy>(value: Option<T>, flag: &str, context: &str) -> Result<T> {
    value.ok_or_else(|| Error::Domain(format!("{context} requires {flag}")))
}

fn cmd_experiment(args: ExperimentArgs, json: bool) -> Result<i32> {
    match (args.estimator, args.suite) {
        // Raw replication reports are machine-readable by construction
        // (JSON or CSV per --format), so --json has nothing to add there.
        (Some(est), None) => run_estimator_experiment(args, est),
        (None, Some(suite)) => run_suite(args, suite, json),
        (None, None) => Err(Error::Domain(
            "pass either --estimator for a raw replication or --suite for a \
             validation suite"
                .to_owned(),
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects the conflict"),
    }
}

fn run_estimator_experiment(args: ExperimentArgs, est: EstimatorArg) -> Result<i32> {
    let spec = match est {
        EstimatorArg::GbasLiteral => EstimatorSpec::GbasLiteral {
            p: args.p,
            k: require(args.k, "--k", "gbas-literal")?,
        },
        EstimatorArg::GbasCollapsed => EstimatorSpec::GbasCollapsed {
            p: args.p,
            k: require(args.k, "--k", "gbas-collapsed")?,
        },
        EstimatorArg::Dklr => EstimatorSpec::Dklr {
            p: args.p,
            epsilon: require(args.epsilon, "--epsilon", "dklr")?,
            delta: require(args.delta, "--delta", "dklr")?,
        },
        EstimatorArg::FixedK => EstimatorSpec::FixedK {
            p: args.p,
            n: require(args.draws, "--draws", "fixed-k")?,
        },
    };
    let config = ExperimentConfig {
        estimator: spec,
        replicates: args.n,
        master_seed: resolve_seed(args.seed),
        budget: budget_option(args.budget),
        format: match args.format {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        },
        include_records: args.records,
    };
    let report = run_replications(&config, args.parallel)?;

    match config.format {
        OutputFormat::Json => emit(&args.out, &report.to_json())?,
        OutputFormat::Csv => emit_csv(&args.out, &report)?,
    }
    Ok(if report.passed() { 0 } else { 4 })
}

/// CSV emission: records to the target, aggregates/config/checks to a
/// JSON sidecar (a separate `.aggregates.json` file next to `--out`, or
/// trailing the records on stdout).
fn emit_csv(out: &Option<PathBuf>, report: &ExperimentReport) -> Result<()> {
    match out {
        Some(path) => {
            let path = resolve_out(path);
            let mut file = std::fs::File::create(&path)?;
            report.write_records_csv(&mut file)?;
            file.flush()?;
            let sidecar = path.with_extension("aggregates.json");
            std::fs::write(&sidecar, report.sidecar_json())?;
            eprintln!("wrote {} and {}", path.display(), sidecar.display());
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            report.write_records_csv(&mut lock)?;
            writeln!(lock)?;
            writeln!(lock, "{}", report.sidecar_json())?;
        }
    }
    Ok(())
}

fn run_suite(args: ExperimentArgs, suite: SuiteArg, json: bool) -> Result<i32> {
    if args.format == FormatArg::Csv {
        return Err(Error::Domain(
            "suite outcomes are JSON documents; --format csv applies to \
             --estimator replications"
                .to_owned(),
        ));
    }
    let seed = resolve_seed(args.seed);
    let (p, n, alpha, width) = (args.p, args.n, args.significance, args.parallel);

    if suite == SuiteArg::Compare {
        let epsilon = require(args.epsilon, "--epsilon", "compare suite")?;
        let delta = require(args.delta, "--delta", "compare suite")?;
        let cmp = compare_estimators(p, epsilon, delta, n, seed, width)?;
        if json || args.out.is_some() {
            emit(&args.out, &cmp.to_json())?;
        } else {
            print_comparison(&cmp);
        }
        return Ok(if cmp.passed { 0 } else { 4 });
    }

    let outcome: SuiteOutcome = match suite {
        SuiteArg::GammaLaw => {
            suite_gamma_law(p, require(args.k, "--k", "gamma-law suite")?, n, seed, alpha, width)?
        }
        SuiteArg::PInvariance => suite_p_invariance(
            p,
            require(args.p_b, "--p-b", "p-invariance suite")?,
            require(args.k, "--k", "p-invariance suite")?,
            n,
            seed,
            alpha,
            width,
        )?,
        SuiteArg::Thinning => suite_thinning(p, n, seed, alpha, width)?,
        SuiteArg::CollapsedVsLiteral => suite_collapsed_vs_literal(
            p,
            require(args.k, "--k", "collapsed-vs-literal suite")?,
            n,
            seed,
            alpha,
            width,
        )?,
        SuiteArg::Coverage => suite_coverage(
            p,
            require(args.k, "--k", "coverage suite")?,
            require(args.level, "--level", "coverage suite")?,
            n,
            seed,
            width,
        )?,
        SuiteArg::Unbiasedness => suite_unbiasedness(
            p,
            require(args.k, "--k", "unbiasedness suite")?,
            n,
            seed,
            width,
        )?,
        SuiteArg::RunningTime => suite_running_time(
            p,
            require(args.k, "--k", "running-time suite")?,
            n,
            seed,
            width,
        )?,
        SuiteArg::Guarantee => suite_guarantee(
            p,
            require(args.epsilon, "--epsilon", "guarantee suite")?,
            require(args.delta, "--delta", "guarantee suite")?,
            n,
            seed,
            width,
        )?,
        SuiteArg::Dklr => suite_dklr(
            p,
            require(args.epsilon, "--epsilon", "dklr suite")?,
            require(args.delta, "--delta", "dklr suite")?,
            n,
            seed,
            width,
        )?,
        SuiteArg::Compare => unreachable!("handled above"),
    };

    if json || args.out.is_some() {
        emit(&args.out, &outcome.to_json())?;
    } else {
        print_suite(&outcome);
    }
    Ok(if outcome.passed { 0 } else { 4 })
}

fn print_checks(checks: &[Check]) {
    for c in checks {
        match (c.threshold, c.pass) {
            (Some(t), Some(pass)) => println!(
                "  {:32} {:>14.6e}  ≤ {:>12.6e}  {}",
                c.name,
                c.value,
                t,
                if pass { "pass" } else { "FAIL" }
            ),
            _ => println!("  {:32} {:>14.6}", c.name, c.value),
        }
    }
}

fn print_suite(outcome: &SuiteOutcome) {
    println!("suite {}  —  {}", outcome.suite, if outcome.passed { "pass" } else { "FAIL" });
    println!("params {}", outcome.params);
    print_checks(&outcome.checks);
}

fn print_comparison(cmp: &gbas::harness::Comparison) {
    println!(
        "GBAS (k = {}) vs stopping rule at ε = {}, δ = {}, p = {} ({} replicates)",
        cmp.plan.k, cmp.plan.epsilon, cmp.plan.delta, cmp.p, cmp.replicates
    );
    println!("{:14} {:>12} {:>14} {:>18}", "estimator", "mean p̂", "mean draws", "failure fraction");
    println!(
        "{:14} {:>12.6} {:>14.2} {:>18.5}",
        "gbas", cmp.gbas.mean_p_hat, cmp.gbas.mean_draws, cmp.gbas.failure_fraction
    );
    println!(
        "{:14} {:>12.6} {:>14.2} {:>18.5}",
        "dklr", cmp.dklr.mean_p_hat, cmp.dklr.mean_draws, cmp.dklr.failure_fraction
    );
    println!("draw ratio (dklr/gbas)  {:.2}", cmp.draw_ratio);
    print_checks(&cmp.checks);
    println!("verdict  {}", if cmp.passed { "pass" } else { "FAIL" });
}
