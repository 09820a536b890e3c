//! The replication harness: seeded, parallel, byte-reproducible.
//!
//! Every replicate draws from its own counter-derived RNG streams, so a
//! report depends only on the experiment config — not on thread count or
//! scheduling. This example runs the same experiment sequentially and on
//! a thread pool, verifies the reports are byte-identical, and prints
//! the aggregate summary.
//!
//! Run with: `cargo run --example replication_harness`

use gbas::harness::{run_replications, EstimatorSpec, ExperimentConfig, OutputFormat};

fn main() -> gbas::Result<()> {
    let config = ExperimentConfig {
        estimator: EstimatorSpec::GbasCollapsed { p: 0.25, k: 15 },
        replicates: 50_000,
        master_seed: 99,
        budget: Some(1_000_000_000),
        format: OutputFormat::Json,
        include_records: false,
    };

    let sequential = run_replications(&config, None)?;
    let parallel = run_replications(&config, Some(8))?;
    println!(
        "sequential and 8-thread reports identical: {}\n",
        sequential.to_json() == parallel.to_json()
    );

    let agg = &sequential.aggregates;
    println!("p̂ over {} replicates:", config.replicates);
    println!("  mean {:.6}   sd {:.6}   range [{:.4}, {:.4}]", agg.p_hat.mean, agg.p_hat.sd, agg.p_hat.min, agg.p_hat.max);
    println!("draws per replicate:");
    println!("  mean {:.2}   sd {:.2}   range [{}, {}]  (k/p = {})", agg.draws.mean, agg.draws.sd, agg.draws.min, agg.draws.max, 15.0 / 0.25);
    for check in &sequential.checks {
        println!("  check {:24} {}", check.name, check.value);
    }
    Ok(())
}
