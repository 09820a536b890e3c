//! One full estimation round: plan `k`, run GBAS against a coin of
//! (pretend-)unknown mean, and report the estimate with its exact
//! confidence interval.
//!
//! The interval comes from the pivot `p/p̂ ~ Gamma(k, k−1)`, whose law
//! involves no unknowns — so the stated level is exact at any sample
//! size, not an asymptotic approximation.
//!
//! Run with: `cargo run --example estimate_with_interval`

use gbas::analysis::{exact_ci, min_k_exact};
use gbas::distributions::synthetic_bernoulli;
use gbas::estimators::gbas_literal;
use gbas::RngStream;

fn main() -> gbas::Result<()> {
    let truth = 0.37; // hidden from the estimator, used only to judge it
    let (epsilon, delta) = (0.1, 0.05);

    let plan = min_k_exact(epsilon, delta)?;
    println!(
        "guarantee: relative error ≤ {epsilon} with probability ≥ {}",
        1.0 - delta
    );
    println!("planned success target k = {}\n", plan.k);

    let seed = 2026;
    let mut coin = synthetic_bernoulli(RngStream::new(seed, 0), truth)?;
    let mut aux = RngStream::new(seed, 1);
    let outcome = gbas_literal(&mut coin, &mut aux, plan.k, Some(1_000_000_000))?;

    let interval = exact_ci(outcome.p_hat, outcome.k, 0.95)?;
    println!("draws used     {}", outcome.draws);
    println!("estimate       {:.6}", outcome.p_hat);
    println!("true mean      {truth:.6}");
    println!(
        "rel. error     {:+.4}  (target ±{epsilon})",
        outcome.p_hat / truth - 1.0
    );
    println!(
        "95% exact CI   [{:.6}, {:.6}]  (covers truth: {})",
        interval.lo,
        interval.hi,
        interval.lo <= truth && truth <= interval.hi
    );
    println!(
        "\nexpected cost at this p was k/p = {:.0} draws",
        plan.k as f64 / truth
    );
    Ok(())
}
