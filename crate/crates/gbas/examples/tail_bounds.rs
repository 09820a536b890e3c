//! Exact failure probabilities, their Chernoff majorant, and the
//! relative-error density.
//!
//! The failure probability `P(|p̂/p − 1| > ε)` is an incomplete-gamma
//! expression, so it can be evaluated exactly; the Chernoff form
//! `(γ e^{1−γ})^k` (γ = 1 ∓ ε) is what the closed-form planner
//! integrates. The gap between the two is the price of a closed form.
//!
//! Run with: `cargo run --example tail_bounds`

use gbas::analysis::{chernoff_tail_bound, failure_probability_exact, relative_error_density};

fn main() -> gbas::Result<()> {
    let epsilon = 0.1;
    println!("P(|p̂/p − 1| > {epsilon}) as k grows:\n");
    println!("{:>6} {:>14} {:>14} {:>8}", "k", "exact", "chernoff", "ratio");
    for &k in &[10u64, 50, 100, 200, 400, 800] {
        let exact = failure_probability_exact(k, epsilon)?;
        let bound =
            chernoff_tail_bound(k, 1.0 / (1.0 + epsilon))? + chernoff_tail_bound(k, 1.0 / (1.0 - epsilon))?;
        println!("{:>6} {:>14.4e} {:>14.4e} {:>8.2}", k, exact, bound, bound / exact);
    }

    println!("\nrelative-error density at k = 20 (an asymmetric, right-skewed law):\n");
    let k = 20;
    for i in 0..=16 {
        let s = -0.8 + 0.1 * i as f64;
        let f = relative_error_density(k, s)?;
        let bar = "#".repeat((f * 30.0).round() as usize);
        println!("  s = {s:+.1}  {f:7.4}  {bar}");
    }
    println!("\nThe skew is why planning uses the two tails separately rather");
    println!("than a symmetric normal approximation.");
    Ok(())
}
