//! Estimating from data streams instead of synthetic coins.
//!
//! Any `BernoulliSource` can feed the estimator: here a newline-delimited
//! {0,1} stream (as a file would provide) and a pre-recorded draw
//! sequence. The estimator consumes draws strictly left to right and
//! stops at the k-th success, so a finite stream either completes the run
//! or fails loudly with the number of draws consumed.
//!
//! Run with: `cargo run --example stream_sources`

use std::io::Cursor;

use gbas::distributions::ScriptedBernoulli;
use gbas::estimators::gbas_literal;
use gbas::source::StreamBernoulli;
use gbas::RngStream;

fn main() -> gbas::Result<()> {
    // A {0,1} stream, one value per line, as `gbas estimate --input`
    // would read from disk. 60% ones.
    let text = "1\n0\n1\n1\n0\n1\n0\n1\n1\n0\n1\n1\n0\n1\n0\n1\n1\n0\n1\n1\n";
    let mut stream = StreamBernoulli::new(Cursor::new(text));
    let mut aux = RngStream::new(7, 0);
    let outcome = gbas_literal(&mut stream, &mut aux, 5, None)?;
    println!("line stream:   p̂ = {:.4} after {} draws", outcome.p_hat, outcome.draws);

    // The same draws as an in-memory script.
    let bits = text.lines().map(|l| l == "1").collect::<Vec<_>>();
    let mut scripted = ScriptedBernoulli::new(bits);
    let mut aux = RngStream::new(7, 0);
    let outcome = gbas_literal(&mut scripted, &mut aux, 5, None)?;
    println!("scripted:      p̂ = {:.4} after {} draws", outcome.p_hat, outcome.draws);

    // Exhaustion is an error, not a silent truncation: ask for more
    // successes than the stream can deliver.
    let mut short = ScriptedBernoulli::new(vec![true, false, true]);
    let mut aux = RngStream::new(7, 1);
    match gbas_literal(&mut short, &mut aux, 5, None) {
        Err(e) => println!("short stream:  {e}"),
        Ok(_) => unreachable!("three draws cannot contain five successes"),
    }
    Ok(())
}
