//! Planning the success target `k`.
//!
//! GBAS stops after `k` successes, and `k` alone sets the accuracy: pick
//! it so that `P(|p̂/p − 1| > ε) ≤ δ` and the guarantee holds for every
//! `p`. This example contrasts the exact search with the closed-form
//! bound, and prices the run via `E[draws] = k/p`.
//!
//! Run with: `cargo run --example plan`

use gbas::analysis::{min_k_exact, plan_from_bound};

fn main() -> gbas::Result<()> {
    println!("smallest k meeting P(|p̂/p − 1| > ε) ≤ δ\n");
    println!(
        "{:>6} {:>6} {:>9} {:>14} {:>9} {:>14}",
        "ε", "δ", "exact k", "failure at k", "bound k", "failure at k"
    );
    for &(epsilon, delta) in &[
        (0.2, 0.25),
        (0.15, 0.1),
        (0.1, 0.05),
        (0.05, 0.01),
        (0.01, 0.001),
    ] {
        let exact = min_k_exact(epsilon, delta)?;
        let bound = plan_from_bound(epsilon, delta)?;
        println!(
            "{:>6} {:>6} {:>9} {:>14.3e} {:>9} {:>14.3e}",
            epsilon, delta, exact.k, exact.exact_failure, bound.k, bound.exact_failure
        );
    }

    println!("\nThe closed form is safe but conservative: it overshoots the");
    println!("exact k by roughly 4x, and every extra success costs 1/p draws.");

    let plan = min_k_exact(0.1, 0.05)?;
    println!("\ncost preview for (ε, δ) = (0.1, 0.05), k = {}:", plan.k);
    println!("{:>8} {:>16}", "p", "expected draws");
    for &p in &[0.5, 0.1, 0.01, 0.001] {
        println!("{:>8} {:>16.0}", p, plan.k as f64 / p);
    }
    Ok(())
}
