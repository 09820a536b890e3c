//! Deterministic analysis built on the Gamma pivot `p/p̂ ~ Gamma(k, k−1)`:
//! exact failure probabilities, minimal-`k` planning (exact search and
//! closed-form bound), Chernoff-style tail bounds, the relative-error
//! density, exact confidence intervals, and a Wald-style lower bound on
//! the expected sample size any valid scheme must pay.
//!
//! Everything here is a pure function of its inputs — no randomness — so
//! planning decisions and intervals are exactly reproducible.

use crate::error::{Error, Result};
use crate::specfun::{gamma_cdf, gamma_quantile, gamma_sf, log_gamma, GammaParams};
use serde::Serialize;

/// How a plan's `k` was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlanMethod {
    /// Minimal `k` found by exact search over failure probabilities.
    ExactSearch,
    /// Closed-form sufficient `k`; valid only for ε < 3/14.
    AnalyticBound,
}

/// A planned GBAS configuration: the success target `k` guaranteeing
/// relative error at most `epsilon` with probability at least
/// `1 − delta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Plan {
    pub epsilon: f64,
    pub delta: f64,
    pub k: u64,
    /// Exact failure probability `P(|p̂/p − 1| > ε)` at this `k`.
    pub exact_failure: f64,
    pub method: PlanMethod,
}

/// Equal-tailed confidence interval `[lo, hi]` at the given level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub level: f64,
}

/// Exact and simplified Wald-style lower bounds on the expected number of
/// draws, for testing whether the truth is `p₀` or a `(1+ε)²`-factor
/// smaller alternative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WaldBound {
    /// `−(1−δ)·ln((2−δ)/δ)/ω₀` with the exact expected log-likelihood
    /// ratio `ω₀`.
    pub exact: f64,
    /// Closed-form relaxation `(1+2ε)(1−δ)·ln((2−δ)/δ)/(5·p₀·ε²)`;
    /// never exceeds the exact bound.
    pub simplified: f64,
}

fn check_eps_delta(epsilon: f64, delta: f64) -> Result<()> {
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
    Ok(())
}

/// Exact failure probability `P(|p̂/p − 1| > ε)` of GBAS with success
/// target `k`.
///
/// Since `p/p̂ ~ Gamma(k, k−1)`, the failure event is `X > 1/(1−ε)` or
/// `X < 1/(1+ε)` for that pivot, so the value depends on `k` and `ε`
/// only — never on `p`. Each tail is evaluated on its accurate branch.
pub fn failure_probability_exact(k: u64, epsilon: f64) -> Result<f64> {
    if k < 2 {
        return Err(Error::domain(format!(
            "success target k must be at least 2, got {k}"
        )));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::domain(format!(
            "epsilon must lie in (0,1), got {epsilon}"
        )));
    }
    let params = GammaParams::new(k as f64, (k - 1) as f64)?;
    let upper = gamma_sf(1.0 / (1.0 - epsilon), params)?;
    let lower = gamma_cdf(1.0 / (1.0 + epsilon), params)?;
    Ok((upper + lower).clamp(0.0, 1.0))
}

/// Finds the least `k ≥ 2` with `failure_probability_exact(k, ε) ≤ δ`.
///
/// The search doubles an upper bracket, binary-searches inside it, and
/// then verifies the answer linearly: `k` passes and `k − 1` fails (the
/// walk-down loop also repairs the result if the failure probability were
/// ever locally non-monotone, rather than trusting monotonicity blindly).
pub fn min_k_exact(epsilon: f64, delta: f64) -> Result<Plan> {
    check_eps_delta(epsilon, delta)?;
    let mut hi = 2u64;
    while failure_probability_exact(hi, epsilon)? > delta {
        hi = hi
            .checked_mul(2)
            .ok_or_else(|| Error::domain("minimal-k search overflowed".to_owned()))?;
    }
    let mut lo = hi / 2; // fails (or is 1, below the domain)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if mid < 2 || failure_probability_exact(mid, epsilon)? > delta {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut k = hi;
    while k > 2 && failure_probability_exact(k - 1, epsilon)? <= delta {
        k -= 1;
    }
    let exact_failure = failure_probability_exact(k, epsilon)?;
    debug_assert!(exact_failure <= delta);
    Ok(Plan {
        epsilon,
        delta,
        k,
        exact_failure,
        method: PlanMethod::ExactSearch,
    })
}

/// Closed-form sufficient success target
/// `⌈2·ε⁻²·(1 − (14/3)ε)⁻¹·ln(2/δ)⌉`, valid for `ε ∈ (0, 3/14)`.
///
/// Always at least as large as the exact minimal `k`; useful when a
/// pencil-and-paper sample-size formula is wanted.
pub fn min_k_bound(epsilon: f64, delta: f64) -> Result<u64> {
    check_eps_delta(epsilon, delta)?;
    let limit = 3.0 / 14.0;
    if epsilon >= limit {
        return Err(Error::domain(format!(
            "the closed-form bound requires epsilon < 3/14 ≈ {limit:.6} so that \
             1 − (14/3)·epsilon stays positive; got epsilon = {epsilon}. \
             Use the exact search instead for larger epsilon"
        )));
    }
    let raw = 2.0 / (epsilon * epsilon) / (1.0 - 14.0 / 3.0 * epsilon) * (2.0 / delta).ln();
    Ok(raw.ceil() as u64)
}

/// Convenience wrapper: a [`Plan`] built from [`min_k_bound`], with the
/// exact failure probability at that `k` filled in for reporting.
pub fn plan_from_bound(epsilon: f64, delta: f64) -> Result<Plan> {
    let k = min_k_bound(epsilon, delta)?;
    Ok(Plan {
        epsilon,
        delta,
        k,
        exact_failure: failure_probability_exact(k, epsilon)?,
        method: PlanMethod::AnalyticBound,
    })
}

/// Chernoff-style tail bound `(γ/e^{γ−1})^k` for `X ~ Gamma(k, k−1)`.
///
/// Bounds `P(X ≥ γ·E[X])` when `γ ≥ 1` and `P(X ≤ γ·E[X])` when
/// `γ ≤ 1`. Evaluated in log space so large `k` cannot underflow
/// prematurely.
pub fn chernoff_tail_bound(k: u64, gamma: f64) -> Result<f64> {
    if k < 1 {
        return Err(Error::domain(format!(
            "chernoff_tail_bound requires k >= 1, got {k}"
        )));
    }
    if !(gamma > 0.0) || !gamma.is_finite() {
        return Err(Error::domain(format!(
            "chernoff_tail_bound requires gamma > 0, got {gamma}"
        )));
    }
    Ok((k as f64 * (gamma.ln() - gamma + 1.0)).exp().min(1.0))
}

/// Density of the relative error `p̂/p − 1` of GBAS with success target
/// `k`:
///
/// `f(s) = (k−1)^k/(k−1)! · exp(−(k−1)/(s+1)) / (s+1)^{k+1}` for
/// `s > −1`, and 0 at or below the support edge `s = −1` (the estimate is
/// positive, so the relative error can never reach −1).
///
/// The normalizer is evaluated through `log_gamma`, which keeps the
/// density finite for any `k` where `(k−1)^k` alone would overflow.
pub fn relative_error_density(k: u64, s: f64) -> Result<f64> {
    if k < 2 {
        return Err(Error::domain(format!(
            "relative_error_density requires k >= 2, got {k}"
        )));
    }
    let t = s + 1.0;
    if t <= 0.0 {
        return Ok(0.0);
    }
    let kf = k as f64;
    let km1 = kf - 1.0;
    let log_norm = kf * km1.ln() - log_gamma(kf)?;
    Ok((log_norm - km1 / t - (kf + 1.0) * t.ln()).exp())
}

/// Equal-tailed exact confidence interval for `p` from a GBAS estimate.
///
/// With `X = p/p̂ ~ Gamma(k, k−1)` a pivot free of `p`, the interval
/// `[p̂·q_{α/2}, p̂·q_{1−α/2}]` (quantiles of that Gamma) covers the true
/// `p` with probability exactly `level`, for every `p` — no asymptotics
/// and no dependence on the unknown mean.
pub fn exact_ci(p_hat: f64, k: u64, level: f64) -> Result<Interval> {
    if !(p_hat > 0.0) || !p_hat.is_finite() {
        return Err(Error::domain(format!(
            "exact_ci requires a positive finite estimate, got {p_hat}"
        )));
    }
    if k < 2 {
        return Err(Error::domain(format!(
            "exact_ci requires k >= 2, got {k}"
        )));
    }
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::domain(format!(
            "confidence level must lie in (0,1), got {level}"
        )));
    }
    let params = GammaParams::new(k as f64, (k - 1) as f64)?;
    let alpha = 1.0 - level;
    let q_lo = gamma_quantile(alpha / 2.0, params)?;
    let q_hi = gamma_quantile(1.0 - alpha / 2.0, params)?;
    Ok(Interval {
        lo: p_hat * q_lo,
        hi: p_hat * q_hi,
        level,
    })
}

/// Wald-style lower bound on the expected number of draws any procedure
/// needs to distinguish mean `p₀` from mean `p₁ = p₀/(1+ε)²` with error
/// probability `δ` under the null.
///
/// The expected log-likelihood ratio per draw is
/// `ω₀ = p₀·ln(p₁/p₀) + (1−p₀)·ln((1−p₁)/(1−p₀))`, and the bound is
/// `−(1−δ)·ln((2−δ)/δ)/ω₀`. Both logs are evaluated through `ln_1p`
/// forms, so small `ε` and small `p₀` do not lose accuracy to
/// cancellation. The simplified closed form replaces `ω₀` by its bound
/// `−5·p₀·ε²/(1+2ε)` and is therefore never larger.
pub fn wald_lower_bound(epsilon: f64, delta: f64, p0: f64) -> Result<WaldBound> {
    if !(epsilon > 0.0) || !epsilon.is_finite() {
        return Err(Error::domain(format!(
            "epsilon must be positive (epsilon = 0 makes the hypotheses \
             identical and the bound degenerate), got {epsilon}"
        )));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::domain(format!(
            "delta must lie in (0,1), got {delta}"
        )));
    }
    if !(p0 > 0.0 && p0 <= 0.5) {
        return Err(Error::domain(format!(
            "p0 must lie in (0, 1/2], got {p0}"
        )));
    }
    // ln(p1/p0) = −2·ln(1+ε), exactly.
    let log_ratio_success = -2.0 * epsilon.ln_1p();
    // ln((1−p1)/(1−p0)) = ln(1 + (p0−p1)/(1−p0)) with
    // p0 − p1 = p0·(2ε+ε²)/(1+ε)².
    let one_plus_eps_sq = (1.0 + epsilon) * (1.0 + epsilon);
    let p0_minus_p1 = p0 * (2.0 * epsilon + epsilon * epsilon) / one_plus_eps_sq;
    let log_ratio_failure = (p0_minus_p1 / (1.0 - p0)).ln_1p();
    let omega0 = p0 * log_ratio_success + (1.0 - p0) * log_ratio_failure;
    debug_assert!(omega0 < 0.0);

    let log_term = ((2.0 - delta) / delta).ln();
    let exact = -(1.0 - delta) * log_term / omega0;
    let simplified =
        (1.0 + 2.0 * epsilon) * (1.0 - delta) * log_term / (5.0 * p0 * epsilon * epsilon);
    Ok(WaldBound { exact, simplified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimators::gbas_collapsed;
    use crate::rng::RngStream;

    #[test]
    fn failure_probability_frozen_values() {
        // Shape-2 case has a closed form: P(X>2) + P(X<2/3) for
        // X ~ Gamma(2,1) is 3e^{−2} + 1 − (5/3)e^{−2/3}.
        let got = failure_probability_exact(2, 0.5).unwrap();
        assert!((got - 0.550_310_651_322_184_697_56).abs() < 1e-14, "{got}");

        let got = failure_probability_exact(5, 0.1).unwrap();
        assert!((got - 0.843_208_658_554_036_707_52).abs() < 1e-13, "{got}");

        let got = failure_probability_exact(10, 0.2).unwrap();
        assert!((got - 0.537_599_113_207_342_797_36).abs() < 1e-13, "{got}");

        // Large k: the failure probability collapses.
        let got = failure_probability_exact(1560, 0.2).unwrap();
        assert!(got <= 0.25);
        assert!(got < 1e-11, "{got}");
    }

    #[test]
    fn failure_probability_limit_structure_near_eps_one() {
        // As ε → 1⁻ the upper cut 1/(1−ε) escapes to infinity and the
        // lower cut tends to 1/2, so only P(X < 1/2) remains.
        let eps = 1.0 - 1e-9;
        let got = failure_probability_exact(4, eps).unwrap();
        let params = GammaParams::new(4.0, 3.0).unwrap();
        let want = gamma_cdf(1.0 / (1.0 + eps), params).unwrap();
        assert!((got - want).abs() <= 1e-12, "got {got}, want {want}");
    }

    #[test]
    fn failure_probability_agrees_with_monte_carlo() {
        let v = failure_probability_exact(2, 0.5).unwrap();
        let n = 200_000;
        let mut rng = RngStream::new(0xfa11, 0);
        let mut hits = 0u64;
        for _ in 0..n {
            // X ~ Gamma(2,1) as a sum of two unit exponentials.
            let x = crate::distributions::gamma_sample(&mut rng, 2.0, 1.0).unwrap();
            if x > 2.0 || x < 2.0 / 3.0 {
                hits += 1;
            }
        }
        let emp = hits as f64 / n as f64;
        let tol = 4.0 * (v * (1.0 - v) / n as f64).sqrt();
        assert!((emp - v).abs() < tol, "emp {emp} vs exact {v}");
    }

    #[test]
    fn failure_probability_rejects_bad_domain() {
        assert!(failure_probability_exact(1, 0.1).is_err());
        assert!(failure_probability_exact(5, 0.0).is_err());
        assert!(failure_probability_exact(5, 1.0).is_err());
    }

    #[test]
    fn failure_probability_decreasing_in_k() {
        for &eps in &[0.05, 0.1, 0.2] {
            let mut prev = 1.0 + 1e-9;
            for k in 2..=200 {
                let f = failure_probability_exact(k, eps).unwrap();
                assert!(f < prev, "not decreasing at k={k}, eps={eps}");
                prev = f;
            }
        }
    }

    #[test]
    fn min_k_exact_frozen_values_and_postcondition() {
        let plan = min_k_exact(0.1, 0.05).unwrap();
        assert_eq!(plan.k, 385);
        assert_eq!(plan.method, PlanMethod::ExactSearch);
        assert!(plan.exact_failure <= 0.05);
        assert!(failure_probability_exact(plan.k - 1, 0.1).unwrap() > 0.05);

        let plan = min_k_exact(0.2, 0.25).unwrap();
        assert_eq!(plan.k, 33);
        assert!(plan.exact_failure <= 0.25);
        assert!(failure_probability_exact(32, 0.2).unwrap() > 0.25);
    }

    #[test]
    fn min_k_bound_frozen_values() {
        assert_eq!(min_k_bound(0.1, 0.05).unwrap(), 1384);
        assert_eq!(min_k_bound(0.2, 0.25).unwrap(), 1560);
        assert_eq!(min_k_bound(0.05, 0.01).unwrap(), 5529);
    }

    #[test]
    fn min_k_bound_rejects_eps_at_validity_edge() {
        let err = min_k_bound(3.0 / 14.0, 0.1).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("3/14"), "{msg}");
        assert!(min_k_bound(0.22, 0.1).is_err());
        assert!(min_k_bound(0.21, 0.1).is_ok());
    }

    #[test]
    fn exact_search_never_beats_bound() {
        for &eps in &[0.05, 0.1, 0.15, 0.2] {
            for &delta in &[0.25, 0.1, 0.05, 0.01] {
                let exact = min_k_exact(eps, delta).unwrap().k;
                let bound = min_k_bound(eps, delta).unwrap();
                assert!(
                    exact <= bound,
                    "eps={eps} delta={delta}: exact {exact} > bound {bound}"
                );
            }
        }
    }

    #[test]
    fn plan_from_bound_reports_exact_failure() {
        let plan = plan_from_bound(0.2, 0.25).unwrap();
        assert_eq!(plan.k, 1560);
        assert_eq!(plan.method, PlanMethod::AnalyticBound);
        assert!(plan.exact_failure <= 0.25);
    }

    #[test]
    fn chernoff_trivial_values() {
        assert_eq!(chernoff_tail_bound(7, 1.0).unwrap(), 1.0);
        let got = chernoff_tail_bound(1, 2.0).unwrap();
        assert!((got - 2.0 / std::f64::consts::E).abs() < 1e-15);
    }

    #[test]
    fn chernoff_dominates_exact_tails() -> crate::error::Result<()> {
        for &k in &[2u64, 10, 100] {
            let params = GammaParams::new(k as f64, (k - 1) as f64)?;
            let mean = params.mean();
            for i in 1..=40 {
                let gamma_hi = 1.0 + 0.05 * i as f64; // γ ∈ (1, 3]
                let bound = chernoff_tail_bound(k, gamma_hi).unwrap();
                let tail = gamma_sf(gamma_hi * mean, params).unwrap();
                assert!(
                    bound >= tail - 1e-15,
                    "upper: k={k} γ={gamma_hi}: {bound} < {tail}"
                );

                let gamma_lo = 1.0 - 0.024 * i as f64; // γ ∈ [0.04, 1)
                let bound = chernoff_tail_bound(k, gamma_lo).unwrap();
                let tail = gamma_cdf(gamma_lo * mean, params).unwrap();
                assert!(
                    bound >= tail - 1e-15,
                    "lower: k={k} γ={gamma_lo}: {bound} < {tail}"
                );
            }
        }
        Ok(())
    }

    #[test]
    fn quadratic_cubic_majorant_of_g() {
        // γ/e^{γ−1} ≤ exp(−(γ−1)²/2 + (γ−1)³/3) on [0, 2], checked in
        // log space at 10^4 points with 1e−15 slack.
        for i in 0..=10_000 {
            let gamma = 2.0 * i as f64 / 10_000.0;
            let lhs = if gamma == 0.0 {
                f64::NEG_INFINITY
            } else {
                gamma.ln() - (gamma - 1.0)
            };
            let d = gamma - 1.0;
            let rhs = -0.5 * d * d + d * d * d / 3.0;
            assert!(lhs <= rhs + 1e-15, "violated at γ = {gamma}");
        }
    }

    #[test]
    fn density_support_edge_and_spot_values() {
        assert_eq!(relative_error_density(2, -1.5).unwrap(), 0.0);
        assert_eq!(relative_error_density(2, -1.0).unwrap(), 0.0);

        let got = relative_error_density(2, 0.0).unwrap();
        assert!((got - 0.367_879_441_171_442_321_6).abs() < 1e-15, "{got}");

        let got = relative_error_density(10, 0.05).unwrap();
        assert!((got - 1.064_279_363_341_696_599_5).abs() < 1e-13, "{got}");

        let got = relative_error_density(50, -0.1).unwrap();
        assert!((got - 2.596_625_748_914_613_227_2).abs() < 1e-12, "{got}");
    }

    #[test]
    fn density_matches_derivative_of_exact_cdf() {
        // P(relative error ≤ s) = P(p/p̂ ≥ 1/(1+s)) = sf(1/(1+s)); the
        // density must match its numerical derivative.
        for &k in &[2u64, 10, 50] {
            let params = GammaParams::new(k as f64, (k - 1) as f64).unwrap();
            let cdf = |s: f64| gamma_sf(1.0 / (1.0 + s), params).unwrap();
            for &s in &[-0.5, -0.1, 0.0, 0.3, 1.0, 3.0] {
                let h = 1e-6;
                let numeric = (cdf(s + h) - cdf(s - h)) / (2.0 * h);
                let f = relative_error_density(k, s).unwrap();
                assert!(
                    (f - numeric).abs() <= 1e-6 + 1e-4 * f,
                    "k={k} s={s}: density {f}, derivative {numeric}"
                );
            }
        }
    }

    #[test]
    fn exact_ci_endpoints_are_gamma_quantiles() {
        let iv = exact_ci(1.0, 2, 0.95).unwrap();
        assert!((iv.lo - 0.242_209_278_543_964_902_9).abs() < 1e-10, "{}", iv.lo);
        assert!((iv.hi - 5.571_643_390_938_898_597_2).abs() < 1e-9, "{}", iv.hi);
        assert_eq!(iv.level, 0.95);
        assert!(iv.lo <= iv.hi);
    }

    #[test]
    fn exact_ci_scales_linearly_in_the_estimate() {
        // Scaling by powers of two is exact in binary floating point, so
        // the identity interval(c·p̂) = c·interval(p̂) holds bitwise.
        let base = exact_ci(0.37, 12, 0.9).unwrap();
        for &c in &[2.0, 0.5, 4.0] {
            let scaled = exact_ci(c * 0.37, 12, 0.9).unwrap();
            assert_eq!(scaled.lo, c * base.lo);
            assert_eq!(scaled.hi, c * base.hi);
        }
    }

    #[test]
    fn exact_ci_collapses_at_vanishing_level() {
        let iv = exact_ci(1.0, 2, 1e-6).unwrap();
        // Both endpoints squeeze toward the median of Gamma(2,1) ≈ 1.678.
        assert!(iv.hi - iv.lo < 1e-5, "width = {}", iv.hi - iv.lo);
        assert!(iv.lo > 1.6 && iv.hi < 1.7);
    }

    #[test]
    fn exact_ci_rejects_bad_inputs() {
        assert!(exact_ci(0.0, 5, 0.95).is_err());
        assert!(exact_ci(-1.0, 5, 0.95).is_err());
        assert!(exact_ci(0.5, 1, 0.95).is_err());
        assert!(exact_ci(0.5, 5, 0.0).is_err());
        assert!(exact_ci(0.5, 5, 1.0).is_err());
    }

    #[test]
    fn exact_ci_coverage_monte_carlo() {
        let (p, k, level, n) = (0.3, 20u64, 0.95, 20_000u64);
        let mut covered = 0u64;
        for i in 0..n {
            let mut rng = RngStream::new(0xc0ffee, i);
            let out = gbas_collapsed(&mut rng, p, k, None).unwrap();
            let iv = exact_ci(out.p_hat, k, level).unwrap();
            if iv.lo <= p && p <= iv.hi {
                covered += 1;
            }
        }
        let frac = covered as f64 / n as f64;
        // 4σ binomial tolerance at N = 2·10^4 is ≈ 0.0062.
        assert!((frac - level).abs() < 0.0062, "coverage = {frac}");
    }

    #[test]
    fn wald_bound_frozen_values() {
        let b = wald_lower_bound(0.1, 0.1, 0.5).unwrap();
        assert!((b.exact - 173.293_767_059_703_637_35).abs() < 1e-9, "{}", b.exact);
        assert!(
            (b.simplified - 127.199_763_899_990_227_87).abs() < 1e-9,
            "{}",
            b.simplified
        );

        let b = wald_lower_bound(0.2, 0.1, 0.3).unwrap();
        assert!((b.exact - 113.974_022_414_982_982_2).abs() < 1e-9, "{}", b.exact);
    }

    #[test]
    fn wald_exact_dominates_simplified_on_grid() {
        for i in 1..=10 {
            let eps = 0.05 * i as f64; // 0.05 … 0.5
            for j in 1..=50 {
                let p0 = 0.01 * j as f64; // 0.01 … 0.5
                let b = wald_lower_bound(eps, 0.1, p0).unwrap();
                assert!(b.exact.is_finite() && b.exact > 0.0);
                assert!(b.simplified.is_finite() && b.simplified > 0.0);
                assert!(
                    b.exact >= b.simplified,
                    "eps={eps} p0={p0}: exact {} < simplified {}",
                    b.exact,
                    b.simplified
                );
            }
        }
    }

    #[test]
    fn wald_bound_rejects_degenerate_epsilon() {
        assert!(wald_lower_bound(0.0, 0.1, 0.3).is_err());
        assert!(wald_lower_bound(0.1, 0.0, 0.3).is_err());
        assert!(wald_lower_bound(0.1, 0.1, 0.0).is_err());
        assert!(wald_lower_bound(0.1, 0.1, 0.6).is_err());
    }
}
