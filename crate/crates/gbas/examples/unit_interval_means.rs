//! Estimating the mean of a [0,1]-valued stream, not just a {0,1} one.
//!
//! Each value `w ∈ [0,1]` is converted to a coin flip that succeeds with
//! probability exactly `w` (draw `U ~ Uniform(0,1)`, succeed when
//! `U ≤ w`). The resulting Bernoulli stream has mean `E[W]`, so every
//! GBAS guarantee — unbiasedness, the Gamma error law, exact intervals —
//! transfers to bounded-mean estimation unchanged.
//!
//! Run with: `cargo run --example unit_interval_means`

use gbas::analysis::exact_ci;
use gbas::distributions::{UnitAdapter, UnitIntervalSource};
use gbas::estimators::gbas_literal;
use gbas::RngStream;

/// A synthetic [0,1] stream: W = U², so E[W] = 1/3.
struct SquaredUniform(RngStream);

impl UnitIntervalSource for SquaredUniform {
    fn draw(&mut self) -> gbas::Result<f64> {
        let u = self.0.uniform_open01();
        Ok(u * u)
    }
}

fn main() -> gbas::Result<()> {
    let seed = 404;
    let values = SquaredUniform(RngStream::new(seed, 0));
    let mut coin = UnitAdapter::new(values, RngStream::new(seed, 1));
    let mut aux = RngStream::new(seed, 2);

    let k = 385; // exact-search k for (ε, δ) = (0.1, 0.05)
    let outcome = gbas_literal(&mut coin, &mut aux, k, Some(1_000_000_000))?;
    let interval = exact_ci(outcome.p_hat, outcome.k, 0.95)?;

    println!("estimating E[W] for W = U², true mean 1/3\n");
    println!("draws          {}", outcome.draws);
    println!("estimate       {:.6}", outcome.p_hat);
    println!("rel. error     {:+.4}", outcome.p_hat * 3.0 - 1.0);
    println!("95% exact CI   [{:.6}, {:.6}]", interval.lo, interval.hi);
    println!(
        "covers 1/3     {}",
        interval.lo <= 1.0 / 3.0 && 1.0 / 3.0 <= interval.hi
    );
    Ok(())
}
