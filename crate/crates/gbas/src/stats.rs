//! Goodness-of-fit statistics and summary aggregates for the experiment
//! harness: one- and two-sample Kolmogorov–Smirnov distances, asymptotic
//! Kolmogorov critical values, and basic sample summaries.

use crate::error::{Error, Result};
use serde::Serialize;

fn sorted_copy(samples: &[f64], label: &str) -> Result<Vec<f64>> {
    if samples.is_empty() {
        return Err(Error::domain(format!("{label}: empty sample set")));
    }
    if samples.iter().any(|x| x.is_nan()) {
        return Err(Error::domain(format!("{label}: sample contains NaN")));
    }
    let mut sorted = samples.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    Ok(sorted)
}

/// One-sample Kolmogorov–Smirnov statistic: the sup-norm distance between
/// the empirical CDF of `samples` and the reference `cdf`.
///
/// The empirical CDF jumps at each sample point, so the supremum is
/// attained at a sample point approached from one side or the other; both
/// step sides are evaluated.
pub fn ks_statistic(samples: &[f64], cdf: impl Fn(f64) -> f64) -> Result<f64> {
    let sorted = sorted_copy(samples, "ks_statistic")?;
    let n = sorted.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        let above = (i + 1) as f64 / n - f; // step's top side
        let below = f - i as f64 / n; // step's bottom side
        d = d.max(above).max(below);
    }
    Ok(d)
}

/// Two-sample Kolmogorov–Smirnov statistic: the sup-norm distance between
/// the two empirical CDFs.
///
/// Computed by a single merge walk over both sorted samples; at each
/// distinct value every tied element of both samples is consumed before
/// the gap is measured, so ties between and within samples are handled
/// exactly.
pub fn ks_two_sample(samples_a: &[f64], samples_b: &[f64]) -> Result<f64> {
    let a = sorted_copy(samples_a, "ks_two_sample (first sample)")?;
    let b = sorted_copy(samples_b, "ks_two_sample (second sample)")?;
    let (n, m) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] == x {
            i += 1;
        }
        while j < b.len() && b[j] == x {
            j += 1;
        }
        d = d.max((i as f64 / n - j as f64 / m).abs());
    }
    // Once one sample is exhausted its ECDF is 1 and the gap can only
    // shrink, so the walk above has already seen the supremum.
    Ok(d)
}

/// Survival function of the asymptotic Kolmogorov distribution:
/// `Q(t) = 2·Σ_{j≥1} (−1)^{j−1} exp(−2 j² t²)`.
pub fn kolmogorov_survival(t: f64) -> f64 {
    if t <= 0.0 {
        return 1.0;
    }
    let mut sum = 0.0;
    for j in 1..200 {
        let term = (-2.0 * (j as f64) * (j as f64) * t * t).exp();
        sum += if j % 2 == 1 { term } else { -term };
        if term < 1e-18 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Critical value for a one-sample KS test at significance `alpha`:
/// the statistic threshold `K_α/√n`, where `K_α` solves `Q(K) = α` for
/// the asymptotic Kolmogorov distribution.
///
/// The asymptotic distribution is accurate for the sample sizes this
/// crate's suites use (n ≥ 1000); small-sample exact values are out of
/// scope.
pub fn ks_critical_value(n: usize, alpha: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("ks_critical_value: n must be positive".to_owned()));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "significance level must lie in (0,1), got {alpha}"
        )));
    }
    // Q is strictly decreasing; bisect it.
    let (mut lo, mut hi) = (0.05f64, 5.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if kolmogorov_survival(mid) > alpha {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    Ok(0.5 * (lo + hi) / (n as f64).sqrt())
}

/// Critical value for a two-sample KS test at significance `alpha` with
/// sample sizes `n` and `m`: `K_α·√((n+m)/(n·m))`.
pub fn ks_two_sample_critical_value(n: usize, m: usize, alpha: f64) -> Result<f64> {
    if n == 0 || m == 0 {
        return Err(Error::domain(
            "ks_two_sample_critical_value: sample sizes must be positive".to_owned(),
        ));
    }
    let single = ks_critical_value(1, alpha)?; // K_α itself
    Ok(single * ((n + m) as f64 / (n as f64 * m as f64)).sqrt())
}

/// Basic aggregates of a sample: mean, sample standard deviation
/// (denominator n − 1; zero for a single observation), minimum, maximum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub n: u64,
    pub mean: f64,
    pub sd: f64,
    pub min: f64,
    pub max: f64,
}

/// Summarizes a nonempty sample (two-pass mean/variance for accuracy;
/// iteration is in index order so results are deterministic).
pub fn summarize(xs: &[f64]) -> Result<Summary> {
    if xs.is_empty() {
        return Err(Error::domain("summarize: empty sample set".to_owned()));
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let ss: f64 = xs.iter().map(|x| (x - mean) * (x - mean)).sum();
    let sd = if xs.len() > 1 {
        (ss / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for &x in xs {
        min = min.min(x);
        max = max.max(x);
    }
    Ok(Summary {
        n: xs.len() as u64,
        mean,
        sd,
        min,
        max,
    })
}
