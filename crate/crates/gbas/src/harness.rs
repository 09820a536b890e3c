//! Reproducible Monte Carlo experiment engine.
//!
//! A replication run is a pure function of its configuration: replicate
//! `i` draws from streams `(master_seed, 2i)` and `(master_seed, 2i+1)`,
//! results are merged in replicate order, and reports serialize with a
//! fixed field order — so a rerun with the same config produces
//! byte-identical output no matter how many threads execute it. The
//! parallelism width is therefore a run-time argument, not part of the
//! configuration a report echoes.
//!
//! On top of the raw runner sit validation suites (distributional
//! goodness-of-fit, coverage, unbiasedness, cost, guarantee checks) and a
//! head-to-head comparison between GBAS and the classic stopping-rule
//! estimator at matched `(ε, δ)`.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::analysis::{exact_ci, min_k_exact, Plan};
use crate::distributions::{exp_sample, geometric_sample, synthetic_bernoulli};
use crate::error::{Error, Result};
use crate::estimators::{
    dklr_estimate, dklr_threshold, fixed_k_estimate, gbas_collapsed, gbas_literal,
};
use crate::rng::RngStream;
use crate::stats::{
    ks_critical_value, ks_statistic, ks_two_sample, ks_two_sample_critical_value, summarize,
    Summary,
};

/// Default significance level for the distributional suites. Chosen so a
/// correct implementation fails a suite about once per thousand seeds;
/// tunable per call.
pub const DEFAULT_SIGNIFICANCE: f64 = 1e-3;

/// Smallest replicate count for which the asymptotic Kolmogorov critical
/// values the suites rely on are trustworthy.
pub const MIN_KS_REPLICATES: u64 = 1000;

/// Which estimator a replication run drives, with its parameters.
/// Synthetic coins are used throughout: the harness exists to validate
/// estimators against a *known* truth `p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "estimator", rename_all = "kebab-case")]
pub enum EstimatorSpec {
    GbasLiteral { p: f64, k: u64 },
    GbasCollapsed { p: f64, k: u64 },
    Dklr { p: f64, epsilon: f64, delta: f64 },
    FixedK { p: f64, n: u64 },
}

/// Output format of a report file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Full description of a replication experiment. Everything that affects
/// the numbers lives here; everything here is echoed in the report.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentConfig {
    #[serde(flatten)]
    pub estimator: EstimatorSpec,
    pub replicates: u64,
    pub master_seed: u64,
    /// Per-replicate draw budget; `None` means unlimited.
    pub budget: Option<u64>,
    pub format: OutputFormat,
    /// Whether serialized reports carry the per-replicate records.
    pub include_records: bool,
}

/// One replicate's result.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Record {
    #[serde(rename = "replicate_index")]
    pub replicate: u64,
    pub p_hat: f64,
    pub draws: u64,
}

/// Aggregates over the per-replicate records. Computable bit-exactly
/// from the records themselves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Aggregates {
    pub p_hat: Summary,
    pub draws: Summary,
}

/// One derived check: a measured value, optionally compared against a
/// threshold. `pass = None` marks a purely informational entry.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
}

impl Check {
    /// Check that `value ≤ threshold`.
    fn bounded(name: &'static str, value: f64, threshold: f64) -> Self {
        Self {
            name,
            value,
            threshold: Some(threshold),
            pass: Some(value <= threshold),
        }
    }

    fn info(name: &'static str, value: f64) -> Self {
        Self {
            name,
            value,
            threshold: None,
            pass: None,
        }
    }
}

/// Report of a replication run: config echo, aggregates, derived checks,
/// warnings, and the per-replicate records.
#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub aggregates: Aggregates,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    pub records: Vec<Record>,
}

/// Serialization view: identical to [`ExperimentReport`] but with the
/// records made optional so `include_records` can drop them.
#[derive(Serialize)]
struct ReportView<'a> {
    config: &'a ExperimentConfig,
    aggregates: &'a Aggregates,
    checks: &'a [Check],
    warnings: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    records: Option<&'a [Record]>,
}

impl ExperimentReport {
    fn view(&self, with_records: bool) -> ReportView<'_> {
        ReportView {
            config: &self.config,
            aggregates: &self.aggregates,
            checks: &self.checks,
            warnings: &self.warnings,
            records: if with_records {
                Some(&self.records)
            } else {
                None
            },
        }
    }

    /// JSON document `{config, aggregates, checks, warnings, records?}`;
    /// the records are included iff the config asks for them. Floats are
    /// printed in shortest round-trip form, so parsing the document back
    /// recovers them bit-exactly.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.view(self.config.include_records))
            .expect("report serialization cannot fail")
    }

    /// The sidecar document accompanying CSV output: the report without
    /// its records.
    pub fn sidecar_json(&self) -> String {
        serde_json::to_string_pretty(&self.view(false))
            .expect("report serialization cannot fail")
    }

    /// Writes the per-replicate records as CSV (header plus one row per
    /// replicate). Floats use shortest round-trip formatting.
    pub fn write_records_csv(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "replicate_index,p_hat,draws")?;
        for r in &self.records {
            writeln!(out, "{},{},{}", r.replicate, r.p_hat, r.draws)?;
        }
        Ok(())
    }

    /// True when no check failed (informational entries don't count).
    pub fn passed(&self) -> bool {
        checks_pass(&self.checks)
    }
}

fn checks_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass != Some(false))
}

/// Runs `n` indexed jobs, optionally on a dedicated thread pool of the
/// given width, and returns their outputs in index order. Results do not
/// depend on the width: job `i` is a pure function of `i`, and the merge
/// is by index (on error, the lowest-indexed failure is reported).
fn run_indexed<T, F>(n: u64, width: Option<usize>, job: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync,
{
    let outcomes: Vec<Result<T>> = match width {
        None => (0..n).map(&job).collect(),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::domain(format!("failed to build thread pool: {e}")))?;
            pool.install(|| (0..n).into_par_iter().map(&job).collect())
        }
    };
    let mut out = Vec::with_capacity(outcomes.len());
    for o in outcomes {
        out.push(o?);
    }
    Ok(out)
}

/// Runs one replicate of the configured estimator. Replicate `i` owns
/// streams `offset + 2i` (the coin) and `offset + 2i + 1` (auxiliary
/// exponentials); estimators that need only one stream still reserve
/// both, so different estimators never share stream indices.
fn run_one(
    spec: EstimatorSpec,
    master_seed: u64,
    offset: u64,
    index: u64,
    budget: Option<u64>,
) -> Result<Record> {
    let result = (|| -> Result<(f64, u64)> {
        let coin_stream = RngStream::new(master_seed, offset + 2 * index);
        let mut aux_stream = RngStream::new(master_seed, offset + 2 * index + 1);
        match spec {
            EstimatorSpec::GbasLiteral { p, k } => {
                let mut coin = synthetic_bernoulli(coin_stream, p)?;
                let out = gbas_literal(&mut coin, &mut aux_stream, k, budget)?;
                Ok((out.p_hat, out.draws))
            }
            EstimatorSpec::GbasCollapsed { p, k } => {
                let mut rng = coin_stream;
                let out = gbas_collapsed(&mut rng, p, k, budget)?;
                Ok((out.p_hat, out.draws))
            }
            EstimatorSpec::Dklr { p, epsilon, delta } => {
                let mut coin = synthetic_bernoulli(coin_stream, p)?;
                let out = dklr_estimate(&mut coin, epsilon, delta, budget)?;
                Ok((out.p_hat, out.draws))
            }
            EstimatorSpec::FixedK { p, n } => {
                let mut coin = synthetic_bernoulli(coin_stream, p)?;
                let est = fixed_k_estimate(&mut coin, n)?;
                Ok((est, n))
            }
        }
    })();
    match result {
        Ok((p_hat, draws)) => Ok(Record {
            replicate: index,
            p_hat,
            draws,
        }),
        Err(e) => Err(Error::Replicate {
            replicate: index,
            source: Box::new(e),
        }),
    }
}

fn run_records(
    spec: EstimatorSpec,
    replicates: u64,
    master_seed: u64,
    offset: u64,
    budget: Option<u64>,
    width: Option<usize>,
) -> Result<Vec<Record>> {
    if replicates == 0 {
        return Err(Error::domain("replicate count must be at least 1".to_owned()));
    }
    run_indexed(replicates, width, |i| {
        run_one(spec, master_seed, offset, i, budget)
    })
}

fn aggregate(records: &[Record]) -> Result<Aggregates> {
    let p_hats: Vec<f64> = records.iter().map(|r| r.p_hat).collect();
    let draws: Vec<f64> = records.iter().map(|r| r.draws as f64).collect();
    Ok(Aggregates {
        p_hat: summarize(&p_hats)?,
        draws: summarize(&draws)?,
    })
}

/// Runs `config.replicates` independent replicates of the configured
/// estimator and aggregates the results.
///
/// `width` selects the execution mode (`None` for the current thread,
/// `Some(w)` for a `w`-thread pool) and has no effect on the report's
/// content.
pub fn run_replications(
    config: &ExperimentConfig,
    width: Option<usize>,
) -> Result<ExperimentReport> {
    let records = run_records(
        config.estimator,
        config.replicates,
        config.master_seed,
        0,
        config.budget,
        width,
    )?;
    let aggregates = aggregate(&records)?;

    let mut checks = Vec::new();
    let mut warnings = Vec::new();
    match config.estimator {
        EstimatorSpec::GbasLiteral { p, k } | EstimatorSpec::GbasCollapsed { p, k } => {
            if k < 3 {
                warnings.push(format!(
                    "k = {k} gives an estimator with infinite variance; the sd \
                     aggregates are unreliable"
                ));
            }
            checks.push(Check::info("true-p", p));
            checks.push(Check::info("expected-mean-draws", k as f64 / p));
        }
        EstimatorSpec::Dklr { p, epsilon, delta } => {
            let failures = records
                .iter()
                .filter(|r| (r.p_hat / p - 1.0).abs() > epsilon)
                .count() as f64;
            let fraction = failures / records.len() as f64;
            checks.push(Check::bounded("failure-fraction", fraction, delta));
            let threshold = dklr_threshold(epsilon, delta)?;
            checks.push(Check::info("expected-mean-draws", threshold.ceil() / p));
        }
        EstimatorSpec::FixedK { p, .. } => {
            checks.push(Check::info("true-p", p));
        }
    }

    Ok(ExperimentReport {
        config: config.clone(),
        aggregates,
        checks,
        warnings,
        records,
    })
}

/// Outcome of a named validation suite: parameter echo, derived checks,
/// and the overall verdict.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub params: serde_json::Value,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl SuiteOutcome {
    fn new(suite: &'static str, params: serde_json::Value, checks: Vec<Check>) -> Self {
        let passed = checks_pass(&checks);
        Self {
            suite,
            params,
            checks,
            passed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite serialization cannot fail")
    }
}

fn require_ks_replicates(n: u64) -> Result<()> {
    if n < MIN_KS_REPLICATES {
        return Err(Error::domain(format!(
            "KS suites need at least {MIN_KS_REPLICATES} replicates for the \
             asymptotic critical values to apply, got {n}"
        )));
    }
    Ok(())
}

/// Distribution-law suite: the pivot `p/p̂` from `n` GBAS runs must pass
/// a one-sample KS test against Gamma(k, k−1) at significance `alpha`.
pub fn suite_gamma_law(
    p: f64,
    k: u64,
    n: u64,
    seed: u64,
    alpha: f64,
    width: Option<usize>,
) -> Result<SuiteOutcome> {
    require_ks_replicates(n)?;
    let records = run_records(EstimatorSpec::GbasLiteral { p, k }, n, seed, 0, None, width)?;
    let pivots: Vec<f64> = records.iter().map(|r| p / r.p_hat).collect();
    let params = crate::specfun::GammaParams::new(k as f64, (k - 1) as f64)?;
    let d = ks_statistic(&pivots, |x| {
        crate::specfun::gamma_cdf(x.max(0.0), params).unwrap_or(f64::NAN)
    })?;
    let crit = ks_critical_value(pivots.len(), alpha)?;
    Ok(SuiteOutcome::new(
        "gamma-law",
        json!({"p": p, "k": k, "n": n, "seed": seed, "significance": alpha}),
        vec![Check::bounded("ks-distance", d, crit)],
    ))
}

/// Invariance suite: the relative-error samples `p̂/p` collected at two
/// different true means must be indistinguishable (two-sample KS) — the
/// error law depends on `k` only, never on `p`.
pub fn suite_p_invariance(
    p_a: f64,
    p_b: f64,
    k: u64,
    n: u64,
    seed: u64,
    alpha: f64,
    width: Option<usize>,
) -> Result<SuiteOutcome> {
    require_ks_replicates(n)?;
    let arm_a = run_records(
        EstimatorSpec::GbasLiteral { p: p_a, k },
        n,
        seed,
        0,
        None,
        width,
    )?;
    let arm_b = run_records(
        EstimatorSpec::GbasLiteral { p: p_b, k },
        n,
        seed,
        2 * n,
        None,
        width,
    )?;
    let rel_a: Vec<f64> = arm_a.iter().map(|r| r.p_hat / p_a).collect();
    let rel_b: Vec<f64> = arm_b.iter().map(|r| r.p_hat / p_b).collect();
    let d = ks_two_sample(&rel_a, &rel_b)?;
    let crit = ks_two_sample_critical_value(rel_a.len(), rel_b.len(), alpha)?;
    Ok(SuiteOutcome::new(
        "p-invariance",
        json!({"p_a": p_a, "p_b": p_b, "k": k, "n": n, "seed": seed, "significance": alpha}),
        vec![Check::bounded("ks-distance", d, crit)],
    ))
}

/// Thinning suite: summing a Geometric(p) number of unit exponentials
/// must reproduce an Ex(p) variable (one-sample KS).
pub fn suite_thinning(
    p: f64,
    n: u64,
    seed: u64,
    alpha: f64,
    width: Option<usize>,
) -> Result<SuiteOutcome> {
    require_ks_replicates(n)?;
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::domain(format!(
            "thinning suite requires p in (0,1], got {p}"
        )));
    }
    let sums = run_indexed(n, width, |i| -> Result<f64> {
        let mut rng = RngStream::new(seed, 2 * i);
        let g = geometric_sample(&mut rng, p)?;
        let mut total = 0.0;
        for _ in 0..g {
            total += exp_sample(&mut rng, 1.0)?;
        }
        Ok(total)
    })?;
    let d = ks_statistic(&sums, |x| -(-p * x.max(0.0)).exp_m1())?;
    let crit = ks_critical_value(sums.len(), alpha)?;
    Ok(SuiteOutcome::new(
        "thinning",
        json!({"p": p, "n": n, "seed": seed, "significance": alpha}),
        vec![Check::bounded("ks-distance", d, crit)],
    ))
}

/// Equivalence suite: the collapsed sampler must match the literal
/// algorithm in distribution, on both the estimate and the draw count
/// (two-sample KS each).
pub fn suite_collapsed_vs_literal(
    p: f64,
    k: u64,
    n: u64,
    seed: u64,
    alpha: f64,
    width: Option<usize>,
) -> Result<SuiteOutcome> {
    require_ks_replicates(n)?;
    let literal = run_records(EstimatorSpec::GbasLiteral { p, k }, n, seed, 0, None, width)?;
    let collapsed = run_records(
        EstimatorSpec::GbasCollapsed { p, k },
        n,
        seed,
        2 * n,
        None,
        width,
    )?;
    let p_lit: Vec<f64> = literal.iter().map(|r| r.p_hat).collect();
    let p_col: Vec<f64> = collapsed.iter().map(|r| r.p_hat).collect();
    let t_lit: Vec<f64> = literal.iter().map(|r| r.draws as f64).collect();
    let t_col: Vec<f64> = collapsed.iter().map(|r| r.draws as f64).collect();
    let crit = ks_two_sample_critical_value(n as usize, n as usize, alpha)?;
    let d_p = ks_two_sample(&p_lit, &p_col)?;
    let d_t = ks_two_sample(&t_lit, &t_col)?;
    Ok(SuiteOutcome::new(
        "collapsed-vs-literal",
        json!({"p": p, "k": k, "n": n, "seed": seed, "significance": alpha}),
        vec![
            Check::bounded("ks-distance-p-hat", d_p, crit),
            Check::bounded("ks-distance-draws", d_t, crit),
        ],
    ))
}

/// Coverage suite: the exact confidence interval at the given level must
/// cover the true `p` with empirical frequency `level` up to 4σ binomial
/// slack. Uses the collapsed sampler so tiny `p` costs O(k) per
/// replicate.
pub fn suite_coverage(
    p: f64,
    k: u64,
    level: f64,
    n: u64,
    seed: u64,
    width: Option<usize>,
) -> Result<SuiteOutcome> {
    let records = run_records(EstimatorSpec::GbasCollapsed { p, k }, n, seed, 0, None, width)?;
    let mut covered = 0u64;
    for r in &records {
        let iv = exact_ci(r.p_hat, k, level)?;
        if iv.lo <= p && p <= iv.hi {
            covered += 1;
        }
    }
    let fraction = covered as f64 / records.len() as f64;
    let slack = 4.0 * (level * (1.0 - level) / records.len() as f64).sqrt();
    let checks = vec![
        Check::info("coverage", fraction),
        Check::bounded("coverage-deviation", (fraction - level).abs(), slack),
    ];
    Ok(SuiteOutcome::new(
        "coverage",
        json!({"p": p, "k": k, "level": level, "n": n, "seed": seed}),
        checks,
    ))
}

/// Convenience wrapper returning just the empirical coverage fraction.
pub fn coverage_experiment(
    p: f64,
    k: u64,
    level: f64,
    n: u64,
    seed: u64,
    width: Option<usize>,
) -> Result<f64> {
    let outcome = suite_coverage(p, k, level, n, seed, width)?;
    Ok(outcome
        .checks
        .iter()
        .find(|c| c.name == "coverage")
        .expect("coverage suite always emits a coverage entry")
        .value)
}

/// Unbiasedness suite: `|mean(p̂) − p| ≤ 4·sd(p̂)/√n` for the literal
/// algorithm.
pub fn suite_unbiasedness(
    p: f64,
    k: u64,
    n: u64,
    seed: u64,
    width: Option<usize>,
) -> Result<SuiteOutcome> {
    let records = run_records(EstimatorSpec::GbasLiteral { p, k }, n, seed, 0, None, width)?;
    let agg = aggregate(&records)?;
    let tol = 4.0 * agg.p_hat.sd / (records.len() as f64).sqrt();
    let checks = vec![
        Check::info("mean-p-hat", agg.p_hat.mean),
        Check::bounded("bias-abs", (agg.p_hat.mean - p).abs(), tol),
    ];
    Ok(SuiteOutcome::new(
        "unbiasedness",
        json!({"p": p, "k": k, "n": n, "seed": seed}),
        checks,
    ))
}

/// Cost suite: `|mean(T) − k/p| ≤ 4·sd(T)/√n` for the literal algorithm.
pub fn suite_running_time(
    p: f64,
    k: u64,
    n: u64,
    seed: u64,
    width: Option<usize>,
) -> Result<SuiteOutcome> {
    let records = run_records(EstimatorSpec::GbasLiteral { p, k }, n, seed, 0, None, width)?;
    let agg = aggregate(&records)?;
    let tol = 4.0 * agg.draws.sd / (records.len() as f64).sqrt();
    let checks = vec![
        Check::info("mean-draws", agg.draws.mean),
        Check::bounded(
            "mean-draws-deviation",
            (agg.draws.mean - k as f64 / p).abs(),
            tol,
        ),
    ];
    Ok(SuiteOutcome::new(
        "running-time",
        json!({"p": p, "k": k, "n": n, "seed": seed}),
        checks,
    ))
}

/// Guarantee suite: with `k` planned by exact search for `(ε, δ)`, the
/// empirical failure fraction `P(|p̂/p − 1| > ε)` stays within `δ` plus
/// 4σ binomial slack.
pub fn suite_guarantee(
    p: f64,
    epsilon: f64,
    delta: f64,
    n: u64,
    seed: u64,
    width: Option<usize>,
) -> Result<SuiteOutcome> {
    let plan = min_k_exact(epsilon, delta)?;
    let records = run_records(
        EstimatorSpec::GbasLiteral { p, k: plan.k },
        n,
        seed,
        0,
        None,
        width,
    )?;
    let failures = records
        .iter()
        .filter(|r| (r.p_hat / p - 1.0).abs() > epsilon)
        .count() as f64;
    let fraction = failures / records.len() as f64;
    let slack = 4.0 * (delta * (1.0 - delta) / records.len() as f64).sqrt();
    let checks = vec![
        Check::info("planned-k", plan.k as f64),
        Check::info("exact-failure-at-k", plan.exact_failure),
        Check::bounded("failure-fraction", fraction, delta + slack),
    ];
    Ok(SuiteOutcome::new(
        "guarantee",
        json!({"p": p, "epsilon": epsilon, "delta": delta, "n": n, "seed": seed}),
        checks,
    ))
}

/// Stopping-rule suite: the DKLR estimator's empirical failure fraction
/// stays within `δ`, and its mean cost matches `⌈threshold⌉/p` (the
/// exact expectation for an integer success target) within 4σ.
pub fn suite_dklr(
    p: f64,
    epsilon: f64,
    delta: f64,
    n: u64,
    seed: u64,
    width: Option<usize>,
) -> Result<SuiteOutcome> {
    let spec = EstimatorSpec::Dklr { p, epsilon, delta };
    let records = run_records(spec, n, seed, 0, None, width)?;
    let agg = aggregate(&records)?;
    let failures = records
        .iter()
        .filter(|r| (r.p_hat / p - 1.0).abs() > epsilon)
        .count() as f64;
    let fraction = failures / records.len() as f64;
    let threshold = dklr_threshold(epsilon, delta)?;
    let expected_draws = threshold.ceil() / p;
    let tol = 4.0 * agg.draws.sd / (records.len() as f64).sqrt();
    let checks = vec![
        Check::info("threshold", threshold),
        Check::bounded("failure-fraction", fraction, delta),
        Check::info("mean-draws", agg.draws.mean),
        Check::bounded(
            "mean-draws-deviation",
            (agg.draws.mean - expected_draws).abs(),
            tol,
        ),
    ];
    Ok(SuiteOutcome::new(
        "dklr",
        json!({"p": p, "epsilon": epsilon, "delta": delta, "n": n, "seed": seed}),
        checks,
    ))
}

/// One arm of an estimator comparison.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ArmReport {
    pub mean_p_hat: f64,
    pub mean_draws: f64,
    pub sd_draws: f64,
    pub failure_fraction: f64,
}

/// Head-to-head comparison of GBAS (with exact-search `k`) against the
/// DKLR stopping rule at the same `(ε, δ, p)`.
#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub p: f64,
    pub replicates: u64,
    pub master_seed: u64,
    pub plan: Plan,
    pub gbas: ArmReport,
    pub dklr: ArmReport,
    /// Mean DKLR draws over mean GBAS draws; above 1 means GBAS is
    /// cheaper at matched guarantees.
    pub draw_ratio: f64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Comparison {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("comparison serialization cannot fail")
    }
}

fn arm_report(records: &[Record], p: f64, epsilon: f64) -> Result<ArmReport> {
    let agg = aggregate(records)?;
    let failures = records
        .iter()
        .filter(|r| (r.p_hat / p - 1.0).abs() > epsilon)
        .count() as f64;
    Ok(ArmReport {
        mean_p_hat: agg.p_hat.mean,
        mean_draws: agg.draws.mean,
        sd_draws: agg.draws.sd,
        failure_fraction: failures / records.len() as f64,
    })
}

/// Runs both estimators at matched `(ε, δ, p)` and reports cost and
/// failure fractions side by side.
pub fn compare_estimators(
    p: f64,
    epsilon: f64,
    delta: f64,
    n: u64,
    seed: u64,
    width: Option<usize>,
) -> Result<Comparison> {
    let plan = min_k_exact(epsilon, delta)?;
    let gbas_records = run_records(
        EstimatorSpec::GbasLiteral { p, k: plan.k },
        n,
        seed,
        0,
        None,
        width,
    )?;
    let dklr_records = run_records(
        EstimatorSpec::Dklr { p, epsilon, delta },
        n,
        seed,
        2 * n,
        None,
        width,
    )?;
    let gbas = arm_report(&gbas_records, p, epsilon)?;
    let dklr = arm_report(&dklr_records, p, epsilon)?;

    let slack = 4.0 * (delta * (1.0 - delta) / n as f64).sqrt();
    let gbas_t_tol = 4.0 * gbas.sd_draws / (n as f64).sqrt();
    let checks = vec![
        Check::bounded("gbas-failure-fraction", gbas.failure_fraction, delta + slack),
        Check::bounded("dklr-failure-fraction", dklr.failure_fraction, delta + slack),
        Check::bounded(
            "gbas-mean-draws-deviation",
            (gbas.mean_draws - plan.k as f64 / p).abs(),
            gbas_t_tol,
        ),
    ];
    let passed = checks_pass(&checks);
    Ok(Comparison {
        p,
        replicates: n,
        master_seed: seed,
        plan,
        gbas,
        dklr,
        draw_ratio: dklr.mean_draws / gbas.mean_draws,
        checks,
        passed,
    })
}
