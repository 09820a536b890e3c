//! The estimators: GBAS in literal and collapsed form, the classic
//! stopping-rule estimator it improves on, and a fixed-sample-size
//! baseline.
//!
//! GBAS (Gamma Bernoulli Approximation Scheme) pairs each coin flip with
//! an independent Ex(1) variate and runs until the `k`-th success:
//!
//! ```text
//! S ← 0, R ← 0
//! repeat: X ← coin, A ← Ex(1), S ← S + X, R ← R + A, until S = k
//! p̂ ← (k − 1) / R
//! ```
//!
//! The accumulated mass `R` is then a Gamma(k, p) variable, so `p/p̂ ~
//! Gamma(k, k−1)` — a pivot whose distribution does not involve `p` at
//! all. Every distributional statement about the relative error (exact
//! confidence intervals, exact failure probabilities, the planning rules
//! in the analysis module) flows from that single fact. The estimate is
//! exactly unbiased, and the expected number of coin flips is `k/p`.

use crate::distributions::{exp_sample, geometric_sample, BernoulliSource};
use crate::error::{Error, Result};
use crate::rng::RngStream;
use serde::Serialize;

/// Result of one GBAS run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GbasOutcome {
    /// The estimate, `(k − 1) / r_total`.
    pub p_hat: f64,
    /// Success target the run was configured with.
    pub k: u64,
    /// Total exponential mass accumulated across all draws.
    pub r_total: f64,
    /// Number of coin flips consumed (the cost `T`).
    pub draws: u64,
}

/// Result of one stopping-rule (DKLR) run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DklrOutcome {
    /// The estimate, `successes / draws`.
    pub p_hat: f64,
    /// Unrounded stopping level `1 + (1+ε)·4(e−2)·ln(2/δ)/ε²`.
    pub threshold: f64,
    /// Success count at the stop, `⌈threshold⌉`.
    pub successes: u64,
    /// Number of coin flips consumed.
    pub draws: u64,
}

fn check_k(k: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::domain(format!(
            "success target k must be at least 2, got {k}"
        )));
    }
    Ok(())
}

/// Core GBAS loop over an abstract exponential feed, so tests can drive
/// it with scripted variates and check traces exactly.
fn gbas_core(
    source: &mut dyn BernoulliSource,
    mut next_exp: impl FnMut() -> Result<f64>,
    k: u64,
    budget: Option<u64>,
) -> Result<GbasOutcome> {
    check_k(k)?;
    let mut successes = 0u64;
    let mut r_total = 0.0f64;
    let mut draws = 0u64;
    while successes < k {
        if let Some(b) = budget {
            if draws >= b {
                return Err(Error::BudgetExhausted {
                    budget: b,
                    draws,
                    successes,
                    r_partial: Some(r_total),
                });
            }
        }
        let x = source.draw()?;
        let a = next_exp()?;
        draws += 1;
        r_total += a;
        if x {
            successes += 1;
        }
    }
    Ok(GbasOutcome {
        p_hat: (k - 1) as f64 / r_total,
        k,
        r_total,
        draws,
    })
}

/// Runs GBAS literally: one coin flip plus one Ex(1) variate per step,
/// until the `k`-th success.
///
/// `budget` caps the number of coin flips; exceeding it aborts with a
/// budget-exhaustion error carrying the partial state. Pass `None` for an
/// unlimited run — but note a coin with mean 0 then never terminates, so
/// callers that cannot rule that out should set a budget.
pub fn gbas_literal(
    source: &mut dyn BernoulliSource,
    rng: &mut RngStream,
    k: u64,
    budget: Option<u64>,
) -> Result<GbasOutcome> {
    gbas_core(source, || exp_sample(rng, 1.0), k, budget)
}

/// Runs GBAS in collapsed form for a synthetic coin of known mean `p`.
///
/// Instead of simulating every flip, each of the `k` success blocks is
/// drawn directly: the flips until the next success are one Geometric(p)
/// draw, and the block's accumulated Ex(1) mass is one Ex(p) draw (the
/// sum of a geometric number of unit exponentials thins to a single
/// exponential of rate `p`). Output is distributed identically to
/// [`gbas_literal`] on a synthetic source of the same `p`, at O(k) cost
/// independent of `1/p`.
pub fn gbas_collapsed(
    rng: &mut RngStream,
    p: f64,
    k: u64,
    budget: Option<u64>,
) -> Result<GbasOutcome> {
    check_k(k)?;
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::domain(format!(
            "collapsed GBAS requires p in (0,1], got {p}"
        )));
    }
    let mut draws = 0u64;
    let mut r_total = 0.0f64;
    for successes in 0..k {
        draws = draws.saturating_add(geometric_sample(rng, p)?);
        r_total += exp_sample(rng, p)?;
        if let Some(b) = budget {
            if draws > b {
                return Err(Error::BudgetExhausted {
                    budget: b,
                    draws,
                    successes: successes + 1,
                    r_partial: Some(r_total),
                });
            }
        }
    }
    Ok(GbasOutcome {
        p_hat: (k - 1) as f64 / r_total,
        k,
        r_total,
        draws,
    })
}

/// Stopping level of the DKLR rule: `1 + (1+ε)·4(e−2)·ln(2/δ)/ε²`.
pub fn dklr_threshold(epsilon: f64, delta: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::domain(format!(
            "epsilon must lie in (0,1), got {epsilon}"
        )));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::domain(format!(
            "delta must lie in (0,1), got {delta}"
        )));
    }
    let e = std::f64::consts::E;
    Ok(1.0 + (1.0 + epsilon) * 4.0 * (e - 2.0) * (2.0 / delta).ln() / (epsilon * epsilon))
}

/// Runs the DKLR stopping-rule estimator: draw until the running success
/// count reaches `⌈threshold⌉`, then estimate `successes / draws`.
///
/// Guarantees `P(|p̂/p − 1| > ε) < δ` for any coin with positive mean.
/// The unrounded threshold is kept in the outcome for reporting; the
/// integer stop uses its ceiling since the success count is integral.
pub fn dklr_estimate(
    source: &mut dyn BernoulliSource,
    epsilon: f64,
    delta: f64,
    budget: Option<u64>,
) -> Result<DklrOutcome> {
    let threshold = dklr_threshold(epsilon, delta)?;
    let target = threshold.ceil() as u64;
    let mut successes = 0u64;
    let mut draws = 0u64;
    while successes < target {
        if let Some(b) = budget {
            if draws >= b {
                return Err(Error::BudgetExhausted {
                    budget: b,
                    draws,
                    successes,
                    r_partial: None,
                });
            }
        }
        if source.draw()? {
            successes += 1;
        }
        draws += 1;
    }
    Ok(DklrOutcome {
        p_hat: successes as f64 / draws as f64,
        threshold,
        successes,
        draws,
    })
}

/// Sample mean of exactly `n` draws — the fixed-sample-size baseline.
pub fn fixed_k_estimate(source: &mut dyn BernoulliSource, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("sample size n must be at least 1".to_owned()));
    }
    let mut successes = 0u64;
    for _ in 0..n {
        if source.draw()? {
            successes += 1;
        }
    }
    Ok(successes as f64 / n as f64)
}
