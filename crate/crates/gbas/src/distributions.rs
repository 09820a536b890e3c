//! Random-variate generation and the Bernoulli-source abstraction.
//!
//! Estimators in this crate consume abstract coin flips through
//! [`BernoulliSource`] so the same algorithm runs against synthetic coins
//! with a known mean, scripted fixtures with predetermined outcomes, or
//! external data streams. A `[0,1]`-valued stream is turned into a fair
//! coin on its mean by [`UnitAdapter`]: accepting a draw `w` with
//! probability `w` costs exactly one uniform and preserves the mean, since
//! `P(U ≤ w) = w`.
//!
//! The samplers here (exponential, geometric, gamma) cover every
//! distribution the estimators and their validation suites need.

use crate::error::{Error, Result};
use crate::rng::RngStream;

/// A stream of {0,1} draws with exact draw accounting.
///
/// `draws()` increments by exactly one per successful `draw()`; it is the
/// cost measure `T` reported by every estimator.
pub trait BernoulliSource {
    /// Draws one value; `true` encodes 1 and `false` encodes 0.
    fn draw(&mut self) -> Result<bool>;

    /// Number of draws consumed so far.
    fn draws(&self) -> u64;
}

/// A stream of values in `[0, 1]`.
///
/// Implementations must reject out-of-range values as data errors rather
/// than silently clamping them.
pub trait UnitIntervalSource {
    fn draw(&mut self) -> Result<f64>;
}

/// Exponential draw with the given rate, by inversion: `−ln(u)/rate`.
///
/// The stream's uniforms are strictly inside (0,1), so the result is
/// always positive and finite.
pub fn exp_sample(rng: &mut RngStream, rate: f64) -> Result<f64> {
    if !(rate > 0.0) || !rate.is_finite() {
        return Err(Error::domain(format!(
            "exponential rate must be positive and finite, got {rate}"
        )));
    }
    Ok(-rng.uniform_open01().ln() / rate)
}

/// Geometric draw on support {1, 2, …} with `P(G = g) = (1−p)^{g−1} p`,
/// by inversion: `⌈ln(u)/ln(1−p)⌉`.
///
/// The inversion is a single O(1) formula, so tiny `p` (huge expected
/// values) costs the same as `p` near 1. `p = 1` short-circuits to 1.
pub fn geometric_sample(rng: &mut RngStream, p: f64) -> Result<u64> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::domain(format!(
            "geometric probability must lie in (0,1], got {p}"
        )));
    }
    if p == 1.0 {
        rng.uniform_open01(); // still consume one uniform per draw
        return Ok(1);
    }
    let u = rng.uniform_open01();
    // ln(1−p) via ln_1p keeps full accuracy for small p.
    let g = (u.ln() / (-p).ln_1p()).ceil();
    Ok(g.max(1.0) as u64)
}

/// Standard normal draw via Box–Muller (two uniforms per variate, fixed
/// consumption, no rejection loop).
fn normal_sample(rng: &mut RngStream) -> f64 {
    let u1 = rng.uniform_open01();
    let u2 = rng.uniform_open01();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Gamma draw with the given shape and rate.
///
/// Integer shapes up to 32 are drawn as a sum of exponentials (exact and
/// cheap for the small Erlang shapes the estimators use); other shapes use
/// the Marsaglia–Tsang squeeze/rejection method, with the standard
/// `U^{1/shape}` boost for shape < 1.
pub fn gamma_sample(rng: &mut RngStream, shape: f64, rate: f64) -> Result<f64> {
    if !(shape > 0.0) || !shape.is_finite() {
        return Err(Error::domain(format!(
            "gamma shape must be positive and finite, got {shape}"
        )));
    }
    if !(rate > 0.0) || !rate.is_finite() {
        return Err(Error::domain(format!(
            "gamma rate must be positive and finite, got {rate}"
        )));
    }
    if shape.fract() == 0.0 && shape <= 32.0 {
        let n = shape as u32;
        let mut sum = 0.0;
        for _ in 0..n {
            sum -= rng.uniform_open01().ln();
        }
        return Ok(sum / rate);
    }
    if shape < 1.0 {
        // Boost: if X ~ Gamma(shape+1, 1) and U uniform, X·U^{1/shape}
        // ~ Gamma(shape, 1).
        let x = marsaglia_tsang(rng, shape + 1.0);
        let u = rng.uniform_open01();
        return Ok(x * u.powf(1.0 / shape) / rate);
    }
    Ok(marsaglia_tsang(rng, shape) / rate)
}

/// Marsaglia–Tsang rejection sampler for Gamma(shape, 1), shape ≥ 1.
fn marsaglia_tsang(rng: &mut RngStream, shape: f64) -> f64 {
    debug_assert!(shape >= 1.0);
    let d = shape - 1.0 / 3.0;
    let c = 1.0 / (3.0 * d.sqrt());
    loop {
        let z = normal_sample(rng);
        let t = 1.0 + c * z;
        if t <= 0.0 {
            continue;
        }
        let v = t * t * t;
        let u = rng.uniform_open01();
        // Squeeze first, exact log test second.
        if u < 1.0 - 0.0331 * z * z * z * z {
            return d * v;
        }
        if u.ln() < 0.5 * z * z + d * (1.0 - v + v.ln()) {
            return d * v;
        }
    }
}

/// Synthetic coin with exact mean `p`, driven by one uniform per draw.
#[derive(Debug, Clone)]
pub struct SyntheticBernoulli {
    p: f64,
    rng: RngStream,
    draws: u64,
}

/// Builds a synthetic coin; `p` may be 0 or 1 (constant sources).
pub fn synthetic_bernoulli(rng: RngStream, p: f64) -> Result<SyntheticBernoulli> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!(
            "Bernoulli mean must lie in [0,1], got {p}"
        )));
    }
    Ok(SyntheticBernoulli { p, rng, draws: 0 })
}

impl SyntheticBernoulli {
    pub fn mean(&self) -> f64 {
        self.p
    }
}

impl BernoulliSource for SyntheticBernoulli {
    fn draw(&mut self) -> Result<bool> {
        self.draws += 1;
        // Uniforms are strictly inside (0,1), so p = 0 never fires and
        // p = 1 always does.
        Ok(self.rng.uniform_open01() < self.p)
    }

    fn draws(&self) -> u64 {
        self.draws
    }
}

/// Coin with a predetermined outcome script; draws past the script's end
/// fail with an exhaustion error. Used to pin down algorithm traces
/// exactly in tests.
#[derive(Debug, Clone)]
pub struct ScriptedBernoulli {
    values: Vec<bool>,
    next: usize,
    draws: u64,
}

impl ScriptedBernoulli {
    pub fn new(values: impl Into<Vec<bool>>) -> Self {
        Self {
            values: values.into(),
            next: 0,
            draws: 0,
        }
    }

    /// Script of 0/1 integers, for readability at call sites.
    pub fn from_bits(bits: &[u8]) -> Self {
        Self::new(bits.iter().map(|&b| b != 0).collect::<Vec<_>>())
    }
}

impl BernoulliSource for ScriptedBernoulli {
    fn draw(&mut self) -> Result<bool> {
        if self.next >= self.values.len() {
            return Err(Error::Exhausted { drawn: self.draws });
        }
        let v = self.values[self.next];
        self.next += 1;
        self.draws += 1;
        Ok(v)
    }

    fn draws(&self) -> u64 {
        self.draws
    }
}

/// Scripted `[0,1]` stream, the unit-interval analogue of
/// [`ScriptedBernoulli`]. Values are validated on draw, not construction,
/// so tests can script an out-of-range value and observe the data error.
#[derive(Debug, Clone)]
pub struct ScriptedUnitInterval {
    values: Vec<f64>,
    next: usize,
}

impl ScriptedUnitInterval {
    pub fn new(values: impl Into<Vec<f64>>) -> Self {
        Self {
            values: values.into(),
            next: 0,
        }
    }
}

impl UnitIntervalSource for ScriptedUnitInterval {
    fn draw(&mut self) -> Result<f64> {
        if self.next >= self.values.len() {
            return Err(Error::Exhausted {
                drawn: self.next as u64,
            });
        }
        let v = self.values[self.next];
        self.next += 1;
        Ok(v)
    }
}

/// Adapter turning a `[0,1]`-valued stream into a Bernoulli stream with
/// the same mean: each draw takes one value `w` from the stream plus one
/// uniform `u` and reports `u ≤ w`.
///
/// Conditional on `w` the report is 1 with probability exactly `w`, so the
/// adapted coin has mean `E[W]` and the cost is one uniform per draw.
#[derive(Debug)]
pub struct UnitAdapter<S: UnitIntervalSource> {
    source: S,
    rng: RngStream,
    draws: u64,
}

impl<S: UnitIntervalSource> UnitAdapter<S> {
    pub fn new(source: S, rng: RngStream) -> Self {
        Self {
            source,
            rng,
            draws: 0,
        }
    }
}

impl<S: UnitIntervalSource> BernoulliSource for UnitAdapter<S> {
    fn draw(&mut self) -> Result<bool> {
        let w = self.source.draw()?;
        if !(0.0..=1.0).contains(&w) {
            return Err(Error::data(
                None,
                format!("unit-interval draw {w} is outside [0,1]"),
            ));
        }
        self.draws += 1;
        let u = self.rng.uniform_open01();
        Ok(u <= w)
    }

    fn draws(&self) -> u64 {
        self.draws
    }
}
