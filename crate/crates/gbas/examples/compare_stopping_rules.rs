//! GBAS versus the classical DKLR stopping rule at matched guarantees.
//!
//! Both deliver `P(|p̂/p − 1| > ε) ≤ δ` without knowing `p`, and both
//! cost Θ(1/p) draws — but the constants differ by several-fold. The
//! comparison runs each estimator on its own replicate set at the same
//! `(ε, δ, p)` and reports mean draw counts and observed failure
//! fractions.
//!
//! Run with: `cargo run --example compare_stopping_rules`

use gbas::harness::compare_estimators;

fn main() -> gbas::Result<()> {
    let (p, n, seed) = (0.4, 5_000, 88);

    println!("{:>6} {:>6} {:>8} {:>14} {:>14} {:>12}", "ε", "δ", "gbas k", "gbas draws", "dklr draws", "dklr/gbas");
    for &(epsilon, delta) in &[(0.3, 0.25), (0.2, 0.1), (0.1, 0.05)] {
        let cmp = compare_estimators(p, epsilon, delta, n, seed, None)?;
        println!(
            "{:>6} {:>6} {:>8} {:>14.1} {:>14.1} {:>12.2}",
            epsilon, delta, cmp.plan.k, cmp.gbas.mean_draws, cmp.dklr.mean_draws, cmp.draw_ratio
        );
    }

    let cmp = compare_estimators(p, 0.2, 0.1, n, seed, None)?;
    println!("\nat (ε, δ) = (0.2, 0.1): observed failure fractions over {n} runs:");
    println!(
        "  gbas  {:.4}  (planned exact failure {:.4})   dklr  {:.4}   budget δ = 0.1",
        cmp.gbas.failure_fraction, cmp.plan.exact_failure, cmp.dklr.failure_fraction
    );
    println!("\nDKLR's universal constants make it very conservative; the");
    println!("exact Gamma law lets GBAS stop several times sooner.");
    Ok(())
}
