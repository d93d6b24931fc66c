//! Meet-in-the-middle search for quadruples with two symmetric blocks.
//!
//! The driver picks an order `p`, admissible row sums
//! `(sigma_a, sigma_b, sigma_c, sigma_d)`, and a norm cap `B`. The build
//! phase tabulates the autocorrelation sums of every surviving symmetric
//! `(a, b)` pair under the prime-weighted hash; the probe phase draws
//! random `(c, d)` with the remaining row sums and looks for an exact
//! cancellation `I(a) + I(b) = -I(c) - I(d)`. A match is a quadruple
//! feeding the Hadamard arrays directly, and every emitted hit is
//! re-verified before it leaves the engine.

mod candidates;
mod engine;
mod progress;
mod table;

use std::time::Duration;

use crate::error::Error;
use crate::quad::SigmaDecomposition;

pub use candidates::generate_symmetric_candidates;
pub use engine::{SearchEngine, SearchHit, SearchSummary, StopReason};
pub use progress::{Checkpoint, ProgressRecord};
pub use table::{LookupTable, TableStats};

/// Default norm cap on stored autocorrelation sums.
pub const DEFAULT_BOUND: u64 = 1200;

/// Largest supported search order.
pub const MAX_ORDER: usize = 99;

/// How `(c, d)` pairs are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeMode {
    /// Uniform random pairs with the configured row sums, counter-seeded
    /// per trial.
    Random,
    /// Every pair exactly once, in a fixed order. Intended for small
    /// orders where the whole space fits in a run.
    Exhaustive,
}

/// Everything that determines a search: the order, the row-sum
/// decomposition, the norm cap, seeding, parallelism, and table options.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub p: usize,
    pub sigma: SigmaDecomposition,
    /// Norm cap `B` on stored sums.
    pub bound: u64,
    pub seed: u64,
    /// Absolute cap on the trial counter; `None` runs until stopped.
    pub max_trials: Option<u64>,
    pub workers: usize,
    /// Additive slack for the spectral bound filter.
    pub dft_slack: f64,
    /// Store one record per distinct sum instead of one per pair.
    pub dedup_sigma: bool,
    pub probe_mode: ProbeMode,
    /// Cap in bytes on the estimated table footprint.
    pub memory_budget: Option<u64>,
    pub progress_interval: Duration,
}

impl SearchConfig {
    pub fn new(p: usize, sigma: SigmaDecomposition) -> Self {
        Self {
            p,
            sigma,
            bound: DEFAULT_BOUND,
            seed: 0,
            max_trials: None,
            workers: 1,
            dft_slack: 1e-9,
            dedup_sigma: false,
            probe_mode: ProbeMode::Random,
            memory_budget: None,
            progress_interval: Duration::from_secs(1),
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.p % 2 == 0 || self.p < 3 || self.p > MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                p: self.p,
                max: MAX_ORDER,
            });
        }
        // re-validate in case the decomposition was built for another order
        SigmaDecomposition::new(self.p, self.sigma.as_array())?;
        if self.workers == 0 {
            return Err(Error::ZeroWorkers);
        }
        if self.dft_slack < 0.0 {
            return Err(Error::NegativeTolerance(self.dft_slack));
        }
        Ok(())
    }

    /// Digest over every field that shapes table content or the trial
    /// stream, plus the prime indexing convention. Worker count, trial
    /// caps, and budgets are deliberately excluded: they do not change
    /// what any given trial index produces.
    pub fn digest(&self) -> String {
        let canonical = format!(
            "p={};sigmas={:?};bound={};seed={};dft_slack={};dedup={};mode={:?};prime_base={}",
            self.p,
            self.sigma.as_array(),
            self.bound,
            self.seed,
            self.dft_slack.to_bits(),
            self.dedup_sigma,
            self.probe_mode,
            crate::primes::FIRST_PRIME_INDEX,
        );
        format!("{:016x}", fnv1a64(canonical.as_bytes()))
    }
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &byte in bytes {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}
