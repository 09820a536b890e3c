//! GBAS — the Gamma Bernoulli Approximation Scheme — estimates the mean
//! `p` of a {0,1} random variable so that the *relative* error of the
//! estimate has a known, fixed distribution that does not depend on `p`
//! in any way.
//!
//! The algorithm pairs each coin flip with an independent Ex(1) variate
//! and runs until the `k`-th success:
//!
//! ```text
//! S ← 0, R ← 0
//! repeat: X ← coin, A ← Ex(1), S ← S + X, R ← R + A, until S = k
//! p̂ ← (k − 1) / R
//! ```
//!
//! Then `p/p̂ ~ Gamma(k, k−1)` exactly, for every `p`. Consequences, all
//! implemented here:
//!
//! - `p̂` is exactly unbiased, at an expected cost of `k/p` flips;
//! - `[p̂·q_{α/2}, p̂·q_{1−α/2}]` (Gamma quantiles) covers the true `p`
//!   with probability exactly `1 − α` ([`analysis::exact_ci`]);
//! - the failure probability `P(|p̂/p − 1| > ε)` is a deterministic
//!   function of `(k, ε)`, so the smallest `k` meeting an `(ε, δ)` target
//!   can be found exactly ([`analysis::min_k_exact`]) or bounded in
//!   closed form ([`analysis::min_k_bound`]);
//! - a `[0,1]`-valued stream can be estimated the same way through a
//!   one-uniform-per-draw Bernoulli adapter
//!   ([`distributions::UnitAdapter`]).
//!
//! # Quick start
//!
//! ```
//! use gbas::analysis::{exact_ci, min_k_exact};
//! use gbas::distributions::synthetic_bernoulli;
//! use gbas::estimators::gbas_literal;
//! use gbas::rng::RngStream;
//!
//! # fn main() -> gbas::Result<()> {
//! // Plan: relative error within 10% with probability ≥ 95%.
//! let plan = min_k_exact(0.1, 0.05)?;
//!
//! // Estimate a synthetic coin with unknown-to-us mean 0.37.
//! let mut coin = synthetic_bernoulli(RngStream::new(7, 0), 0.37)?;
//! let mut aux = RngStream::new(7, 1);
//! let outcome = gbas_literal(&mut coin, &mut aux, plan.k, Some(1_000_000_000))?;
//!
//! // An exact 95% confidence interval around the estimate.
//! let interval = exact_ci(outcome.p_hat, outcome.k, 0.95)?;
//! assert!(interval.lo < 0.37 && 0.37 < interval.hi);
//! # Ok(())
//! # }
//! ```
//!
//! # Module map
//!
//! - [`rng`] — deterministic, splittable random streams;
//! - [`specfun`] — log-gamma, regularized incomplete gamma, Gamma
//!   CDF/quantile;
//! - [`distributions`] — samplers, the coin-source traits, scripted
//!   fixtures, and the unit-interval adapter;
//! - [`source`] — file/stdin-backed coin and unit-interval streams;
//! - [`estimators`] — GBAS (literal and collapsed), the DKLR stopping
//!   rule, and a fixed-sample baseline;
//! - [`analysis`] — exact failure probabilities, planning, tail bounds,
//!   the relative-error density, exact intervals, and the Wald-style
//!   lower bound;
//! - [`stats`] — Kolmogorov–Smirnov machinery and sample summaries;
//! - [`harness`] — the reproducible replication engine, validation
//!   suites, and report serialization.
//!
//! Examples under `examples/` exercise each capability end to end; the
//! thin `gbas` binary exposes the same operations as subcommands.

pub mod analysis;
pub mod distributions;
pub mod error;
pub mod estimators;
pub mod harness;
pub mod rng;
pub mod source;
pub mod specfun;
pub mod stats;

pub use error::{Error, Result};
pub use rng::RngStream;
