//! Deterministic, splittable random-number streams.
//!
//! Every piece of randomness in this crate flows through an [`RngStream`]:
//! a ChaCha12 generator addressed by a `(master seed, stream index)` pair.
//! ChaCha is counter-based, so distinct stream indices select statistically
//! independent keystreams from the same master seed, and a stream's output
//! is a pure function of its address. That is what makes parallel
//! replication schedule-independent: replicate `i` always consumes stream
//! `i`'s draws no matter which thread runs it.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// A single deterministic stream of uniform variates.
///
/// Two streams constructed with the same `(master_seed, stream_index)`
/// produce bit-identical draw sequences on every platform. A stream is
/// single-owner: it is not shareable across threads, but distinct streams
/// may be driven in parallel freely.
#[derive(Debug, Clone)]
pub struct RngStream {
    rng: ChaCha12Rng,
    master_seed: u64,
    stream_index: u64,
}

impl RngStream {
    pub fn new(master_seed: u64, stream_index: u64) -> Self {
        let mut rng = ChaCha12Rng::seed_from_u64(master_seed);
        rng.set_stream(stream_index);
        Self {
            rng,
            master_seed,
            stream_index,
        }
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn stream_index(&self) -> u64 {
        self.stream_index
    }

    /// Next uniform variate in the **open** interval (0, 1).
    ///
    /// The top 52 bits of a ChaCha word are mapped to `(w + 0.5) * 2^-52`,
    /// so every value is exactly representable, the endpoints 0 and 1 are
    /// unreachable, and `ln(u)` is always finite. Exponential and
    /// geometric inversion sampling rely on this.
    pub fn uniform_open01(&mut self) -> f64 {
        let w = self.rng.next_u64() >> 12;
        (w as f64 + 0.5) * (0.5f64).powi(52)
    }

    /// Raw 64-bit output, exposed for hashing-style consumers.
    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }
}
