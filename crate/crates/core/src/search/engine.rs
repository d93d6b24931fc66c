//! The probe loop: repeatedly draw `(c, d)`, test against the table, and
//! emit verified quadruples.
//!
//! Randomness is counter-based: the pair for trial `t` is generated by a
//! ChaCha stream seeded from a mix of `(seed, t)`, so trials are
//! independent of worker scheduling, a run can resume from a bare trial
//! counter, and a single-worker run is bit-reproducible. Workers claim
//! batches of trial indices from a shared counter and send hits to the
//! calling thread, which owns the callbacks.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::mpsc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::paf::PafVector;
use crate::quad::{is_complementary, Quadruple};
use crate::seq::Sequence;

use super::candidates::FixedWeightMasks;
use super::table::LookupTable;
use super::{Checkpoint, ProbeMode, ProgressRecord, SearchConfig};

/// A verified quadruple found by the search, together with the matched
/// autocorrelation sum and provenance of the trial that produced it.
#[derive(Debug, Clone)]
pub struct SearchHit {
    pub quadruple: Quadruple,
    pub delta: PafVector,
    pub trial: u64,
    pub elapsed: Duration,
}

/// Why a run returned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// The configured trial cap was reached.
    TrialLimit,
    /// Exhaustive mode ran out of `(c, d)` pairs.
    SpaceExhausted,
    /// The hit callback returned `ControlFlow::Break`.
    CallerStopped,
}

/// Totals for one `run` invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSummary {
    /// Trials processed in this run.
    pub trials: u64,
    /// First unprocessed trial index; feed this to a checkpoint. In
    /// multi-worker runs stopped by the caller this is an upper watermark
    /// (a few claimed trials may be skipped); single-worker runs are exact.
    pub next_trial: u64,
    pub hits: u64,
    pub elapsed: Duration,
    pub stop: StopReason,
}

enum ProbeSpace {
    Random {
        template_c: Vec<i8>,
        template_d: Vec<i8>,
    },
    Exhaustive {
        c_pool: Vec<Sequence>,
        d_pool: Vec<Sequence>,
    },
}

/// A built table plus the probe-side sampling state.
pub struct SearchEngine {
    config: SearchConfig,
    table: LookupTable,
    space: ProbeSpace,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn trial_seed(seed: u64, trial: u64) -> u64 {
    splitmix64(seed ^ splitmix64(trial))
}

fn fixed_weight_template(p: usize, sigma: i32) -> Vec<i8> {
    let plus = ((p as i32 + sigma) / 2) as usize;
    let mut template = vec![-1i8; p];
    for slot in template.iter_mut().take(plus) {
        *slot = 1;
    }
    template
}

fn fixed_weight_sequences(p: usize, sigma: i32) -> Vec<Sequence> {
    let plus = ((p as i32 + sigma) / 2) as usize;
    FixedWeightMasks::new(p, plus)
        .map(|mask| {
            let entries: Vec<i8> = (0..p)
                .map(|j| if mask >> j & 1 == 1 { 1 } else { -1 })
                .collect();
            Sequence::new(entries).expect("entries are ±1 and p is odd")
        })
        .collect()
}

impl SearchEngine {
    /// Validates the configuration and builds the lookup table.
    pub fn build(config: SearchConfig) -> Result<Self, Error> {
        config.validate()?;
        let table = LookupTable::build(&config)?;
        let space = match config.probe_mode {
            ProbeMode::Random => ProbeSpace::Random {
                template_c: fixed_weight_template(config.p, config.sigma.sigma_c),
                template_d: fixed_weight_template(config.p, config.sigma.sigma_d),
            },
            ProbeMode::Exhaustive => ProbeSpace::Exhaustive {
                c_pool: fixed_weight_sequences(config.p, config.sigma.sigma_c),
                d_pool: fixed_weight_sequences(config.p, config.sigma.sigma_d),
            },
        };
        Ok(Self {
            config,
            table,
            space,
        })
    }

    pub fn config(&self) -> &SearchConfig {
        &self.config
    }

    pub fn table(&self) -> &LookupTable {
        &self.table
    }

    /// Number of `(c, d)` pairs in exhaustive mode; `None` when probing
    /// randomly.
    pub fn exhaustive_space(&self) -> Option<u64> {
        match &self.space {
            ProbeSpace::Random { .. } => None,
            ProbeSpace::Exhaustive { c_pool, d_pool } => {
                Some(c_pool.len() as u64 * d_pool.len() as u64)
            }
        }
    }

    pub fn checkpoint(&self, next_trial: u64, hits: u64) -> Checkpoint {
        Checkpoint::new(&self.config, next_trial, hits)
    }

    fn trial_limit(&self) -> Option<u64> {
        match (self.config.max_trials, self.exhaustive_space()) {
            (Some(t), Some(s)) => Some(t.min(s)),
            (Some(t), None) => Some(t),
            (None, Some(s)) => Some(s),
            (None, None) => None,
        }
    }

    fn pair_for_trial(&self, trial: u64) -> (Sequence, Sequence) {
        match &self.space {
            ProbeSpace::Random {
                template_c,
                template_d,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(self.config.seed, trial));
                let mut c = template_c.clone();
                let mut d = template_d.clone();
                c.shuffle(&mut rng);
                d.shuffle(&mut rng);
                (
                    Sequence::new(c).expect("template entries are ±1"),
                    Sequence::new(d).expect("template entries are ±1"),
                )
            }
            ProbeSpace::Exhaustive { c_pool, d_pool } => {
                let ci = (trial / d_pool.len() as u64) as usize;
                let di = (trial % d_pool.len() as u64) as usize;
                (c_pool[ci].clone(), d_pool[di].clone())
            }
        }
    }

    /// Processes one trial; returns the verified hits it produced (at most
    /// one in random mode, every stored witness in exhaustive mode).
    fn process_trial(&self, trial: u64, started: Instant) -> Vec<SearchHit> {
        let (c, d) = self.pair_for_trial(trial);
        let Some(delta) = self.table.probe(&c, &d) else {
            return Vec::new();
        };
        let witnesses = match self.config.probe_mode {
            ProbeMode::Random => vec![self
                .table
                .recover(&delta)
                .expect("probe returned a matched delta")],
            ProbeMode::Exhaustive => self.table.recover_all(&delta),
        };
        let elapsed = started.elapsed();
        witnesses
            .into_iter()
            .map(|(a, b)| {
                let quadruple = Quadruple::new(a, b, c.clone(), d.clone())
                    .expect("pools and probes share one length");
                // a matched table record is a proof; fail loudly if not
                assert!(
                    is_complementary(&quadruple),
                    "emitted quadruple must satisfy the autocorrelation condition"
                );
                assert!(
                    quadruple.a().is_symmetric() && quadruple.b().is_symmetric(),
                    "recovered blocks must be symmetric"
                );
                SearchHit {
                    quadruple,
                    delta: delta.clone(),
                    trial,
                    elapsed,
                }
            })
            .collect()
    }

    /// Runs the probe loop from `start_trial` until the trial budget or the
    /// probe space is exhausted, or the hit callback breaks. Progress is
    /// reported on the calling thread at the configured interval and once
    /// at the end.
    pub fn run<H, P>(&self, start_trial: u64, mut on_hit: H, mut on_progress: P) -> SearchSummary
    where
        H: FnMut(SearchHit) -> ControlFlow<()>,
        P: FnMut(&ProgressRecord),
    {
        let started = Instant::now();
        let limit = self.trial_limit();
        let summary = if self.config.workers <= 1 {
            self.run_single(start_trial, limit, started, &mut on_hit, &mut on_progress)
        } else {
            self.run_parallel(start_trial, limit, started, &mut on_hit, &mut on_progress)
        };
        on_progress(&ProgressRecord {
            elapsed_secs: summary.elapsed.as_secs_f64(),
            trials: summary.trials,
            trials_per_sec: summary.trials as f64 / summary.elapsed.as_secs_f64().max(1e-9),
            hits: summary.hits,
        });
        summary
    }

    fn stop_reason_at_limit(&self) -> StopReason {
        match self.exhaustive_space() {
            Some(space) if self.trial_limit() == Some(space) => StopReason::SpaceExhausted,
            _ => StopReason::TrialLimit,
        }
    }

    fn run_single<H, P>(
        &self,
        start_trial: u64,
        limit: Option<u64>,
        started: Instant,
        on_hit: &mut H,
        on_progress: &mut P,
    ) -> SearchSummary
    where
        H: FnMut(SearchHit) -> ControlFlow<()>,
        P: FnMut(&ProgressRecord),
    {
        let mut trial = start_trial;
        let mut hits = 0u64;
        let mut last_progress = Instant::now();
        let stop = 'outer: loop {
            if limit.is_some_and(|l| trial >= l) {
                break self.stop_reason_at_limit();
            }
            let found = self.process_trial(trial, started);
            trial += 1;
            for hit in found {
                hits += 1;
                if on_hit(hit).is_break() {
                    break 'outer StopReason::CallerStopped;
                }
            }
            if last_progress.elapsed() >= self.config.progress_interval {
                last_progress = Instant::now();
                let elapsed = started.elapsed();
                on_progress(&ProgressRecord {
                    elapsed_secs: elapsed.as_secs_f64(),
                    trials: trial - start_trial,
                    trials_per_sec: (trial - start_trial) as f64
                        / elapsed.as_secs_f64().max(1e-9),
                    hits,
                });
            }
        };
        SearchSummary {
            trials: trial - start_trial,
            next_trial: trial,
            hits,
            elapsed: started.elapsed(),
            stop,
        }
    }

    fn run_parallel<H, P>(
        &self,
        start_trial: u64,
        limit: Option<u64>,
        started: Instant,
        on_hit: &mut H,
        on_progress: &mut P,
    ) -> SearchSummary
    where
        H: FnMut(SearchHit) -> ControlFlow<()>,
        P: FnMut(&ProgressRecord),
    {
        const BATCH: u64 = 256;
        let next = AtomicU64::new(start_trial);
        let done = AtomicU64::new(0);
        let stop = AtomicBool::new(false);
        let mut hits = 0u64;
        let mut caller_stopped = false;

        std::thread::scope(|scope| {
            let (tx, rx) = mpsc::channel::<SearchHit>();
            for _ in 0..self.config.workers {
                let tx = tx.clone();
                let next = &next;
                let done = &done;
                let stop = &stop;
                scope.spawn(move || {
                    while !stop.load(Ordering::Relaxed) {
                        let t0 = next.fetch_add(BATCH, Ordering::Relaxed);
                        let t1 = match limit {
                            Some(l) => {
                                if t0 >= l {
                                    break;
                                }
                                (t0 + BATCH).min(l)
                            }
                            None => t0 + BATCH,
                        };
                        for trial in t0..t1 {
                            if stop.load(Ordering::Relaxed) {
                                break;
                            }
                            for hit in self.process_trial(trial, started) {
                                if tx.send(hit).is_err() {
                                    return;
                                }
                            }
                            done.fetch_add(1, Ordering::Relaxed);
                        }
                    }
                });
            }
            drop(tx);

            let mut last_progress = Instant::now();
            loop {
                match rx.recv_timeout(Duration::from_millis(50)) {
                    Ok(hit) => {
                        hits += 1;
                        if on_hit(hit).is_break() {
                            caller_stopped = true;
                            stop.store(true, Ordering::Relaxed);
                        }
                    }
                    Err(mpsc::RecvTimeoutError::Timeout) => {}
                    Err(mpsc::RecvTimeoutError::Disconnected) => break,
                }
                if last_progress.elapsed() >= self.config.progress_interval {
                    last_progress = Instant::now();
                    let elapsed = started.elapsed();
                    let trials = done.load(Ordering::Relaxed);
                    on_progress(&ProgressRecord {
                        elapsed_secs: elapsed.as_secs_f64(),
                        trials,
                        trials_per_sec: trials as f64 / elapsed.as_secs_f64().max(1e-9),
                        hits,
                    });
                }
            }
        });

        let trials = done.load(Ordering::Relaxed);
        let next_trial = if caller_stopped {
            next.load(Ordering::Relaxed).min(limit.unwrap_or(u64::MAX))
        } else {
            limit.unwrap_or_else(|| next.load(Ordering::Relaxed))
        };
        SearchSummary {
            trials,
            next_trial,
            hits,
            elapsed: started.elapsed(),
            stop: if caller_stopped {
                StopReason::CallerStopped
            } else {
                self.stop_reason_at_limit()
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::SigmaDecomposition;

    fn engine_p3() -> SearchEngine {
        let sigma = SigmaDecomposition::new(3, [3, -1, 1, 1]).unwrap();
        let mut config = SearchConfig::new(3, sigma);
        config.bound = 4;
        config.seed = 1;
        SearchEngine::build(config).unwrap()
    }

    #[test]
    fn order_three_hits_immediately() {
        let engine = engine_p3();
        let mut first = None;
        let summary = engine.run(
            0,
            |hit| {
                first = Some(hit);
                ControlFlow::Break(())
            },
            |_| {},
        );
        assert_eq!(summary.stop, StopReason::CallerStopped);
        let hit = first.expect("order 3 space hits on every trial");
        assert!(is_complementary(&hit.quadruple));
        assert_eq!(hit.quadruple.a().entries(), &[1, 1, 1]);
        assert_eq!(hit.quadruple.b().entries(), &[1, -1, -1]);
    }

    #[test]
    fn seeded_runs_reproduce_first_hit() {
        let engine = engine_p3();
        let grab_first = || {
            let mut out = None;
            engine.run(
                0,
                |hit| {
                    out = Some((hit.trial, hit.quadruple.clone()));
                    ControlFlow::Break(())
                },
                |_| {},
            );
            out.unwrap()
        };
        assert_eq!(grab_first(), grab_first());
    }

    #[test]
    fn trial_limit_terminates_cleanly() {
        let sigma = SigmaDecomposition::new(3, [-1, -1, 1, 3]).unwrap();
        let mut config = SearchConfig::new(3, sigma);
        config.max_trials = Some(5);
        let engine = SearchEngine::build(config).unwrap();
        let summary = engine.run(0, |_| ControlFlow::Continue(()), |_| {});
        assert_eq!(summary.trials, 5);
        assert_eq!(summary.next_trial, 5);
        assert_eq!(summary.stop, StopReason::TrialLimit);
    }

    #[test]
    fn resume_skips_processed_trials() {
        let engine = engine_p3();
        let mut config_limited = engine.config().clone();
        config_limited.max_trials = Some(10);
        let limited = SearchEngine::build(config_limited).unwrap();

        let mut trials_seen = Vec::new();
        limited.run(
            7,
            |hit| {
                trials_seen.push(hit.trial);
                ControlFlow::Continue(())
            },
            |_| {},
        );
        assert!(trials_seen.iter().all(|&t| (7..10).contains(&t)));
    }

    #[test]
    fn exhaustive_mode_covers_the_space() {
        let sigma = SigmaDecomposition::new(3, [-1, 3, 1, 1]).unwrap();
        let mut config = SearchConfig::new(3, sigma);
        config.probe_mode = ProbeMode::Exhaustive;
        let engine = SearchEngine::build(config).unwrap();
        assert_eq!(engine.exhaustive_space(), Some(9));
        let mut hits = 0;
        let summary = engine.run(
            0,
            |_| {
                hits += 1;
                ControlFlow::Continue(())
            },
            |_| {},
        );
        assert_eq!(summary.stop, StopReason::SpaceExhausted);
        assert_eq!(summary.trials, 9);
        // every (c, d) pair matches the single stored (a, b) record
        assert_eq!(hits, 9);
    }

    #[test]
    fn parallel_hit_set_matches_single_worker() {
        let sigma = SigmaDecomposition::new(5, [1, 1, 3, 3]).unwrap();
        let mut config = SearchConfig::new(5, sigma);
        config.max_trials = Some(200);
        config.seed = 7;
        let single = SearchEngine::build(config.clone()).unwrap();
        let mut single_hits = Vec::new();
        single.run(
            0,
            |hit| {
                single_hits.push((hit.trial, hit.quadruple.clone()));
                ControlFlow::Continue(())
            },
            |_| {},
        );

        config.workers = 3;
        let parallel = SearchEngine::build(config).unwrap();
        let mut parallel_hits = Vec::new();
        let summary = parallel.run(
            0,
            |hit| {
                parallel_hits.push((hit.trial, hit.quadruple.clone()));
                ControlFlow::Continue(())
            },
            |_| {},
        );
        assert_eq!(summary.trials, 200);
        single_hits.sort_by_key(|(t, _)| *t);
        parallel_hits.sort_by_key(|(t, _)| *t);
        assert_eq!(single_hits, parallel_hits);
    }
}
