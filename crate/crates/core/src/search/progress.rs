//! Machine-readable progress records and resumable checkpoints.

use serde::{Deserialize, Serialize};

use crate::error::Error;

use super::SearchConfig;

/// One periodic progress sample, intended to be emitted as one JSON object
/// per line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProgressRecord {
    pub elapsed_secs: f64,
    /// Trials completed in this run.
    pub trials: u64,
    pub trials_per_sec: f64,
    pub hits: u64,
}

/// Resumable search state. The random pair for trial `t` is derived from
/// `(seed, t)` alone, so the trial counter is the entire generator state:
/// restarting from `next_trial` reproduces the stream exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    /// Digest of the configuration this checkpoint belongs to.
    pub config_digest: String,
    pub seed: u64,
    /// First trial index that has not been processed.
    pub next_trial: u64,
    /// Hits emitted so far.
    pub hits: u64,
}

impl Checkpoint {
    pub fn new(config: &SearchConfig, next_trial: u64, hits: u64) -> Self {
        Self {
            config_digest: config.digest(),
            seed: config.seed,
            next_trial,
            hits,
        }
    }

    /// Rejects a checkpoint written under a different configuration.
    pub fn matches(&self, config: &SearchConfig) -> Result<(), Error> {
        let expected = config.digest();
        if self.config_digest != expected || self.seed != config.seed {
            return Err(Error::CheckpointMismatch {
                expected,
                found: self.config_digest.clone(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::SigmaDecomposition;

    #[test]
    fn checkpoint_round_trip_and_mismatch() {
        let sigma = SigmaDecomposition::new(3, [3, -1, 1, 1]).unwrap();
        let config = SearchConfig::new(3, sigma);
        let ckpt = Checkpoint::new(&config, 42, 1);
        assert!(ckpt.matches(&config).is_ok());

        let mut other = config.clone();
        other.bound = 999;
        assert!(matches!(
            ckpt.matches(&other),
            Err(Error::CheckpointMismatch { .. })
        ));
    }
}
