//! The frozen lookup table at the core of the meet-in-the-middle search.
//!
//! Build phase: enumerate the two symmetric candidate pools, form the
//! autocorrelation sum `Sigma = I(a) + I(b)` of every pair, keep those with
//! `||Sigma|| <= B`, and group the surviving records by the prime-weighted
//! hash `h(Sigma)`. Records store `Sigma` inline together with the 32-bit
//! pool indices that regenerate it, so recovery needs no rescanning.
//!
//! Probe phase: for random `(c, d)` compute `Delta = -I(c) - I(d)`, reject
//! on the norm cap, then look up the bucket at `h(Delta)` and compare
//! stored vectors exactly. The hash only routes to a bucket; equality is
//! always decided on the full vector, so colliding hashes can never
//! produce a false hit.
//!
//! After the freeze pass the table is immutable and may be probed from any
//! number of threads.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::Error;
use crate::paf::{hash_with_weights, paf_unchecked, PafVector};
use crate::primes;
use crate::seq::Sequence;

use super::candidates::CandidatePool;
use super::SearchConfig;

/// Bytes per record: the transient hash column plus pool indices plus the
/// inline `Sigma` coordinates.
fn record_bytes(m: usize) -> u64 {
    (8 + 8 + 2 * m) as u64
}

/// Size and shape statistics of a built (or aborted) table.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct TableStats {
    /// Surviving symmetric candidates with row sum `sigma_a`.
    pub pool_a: u64,
    /// Surviving symmetric candidates with row sum `sigma_b`.
    pub pool_b: u64,
    /// Stored records (pairs, or distinct sums when deduplication is on).
    pub entry_count: u64,
    /// Distinct hash values.
    pub unique_hash_count: u64,
    /// Largest number of records sharing one hash value.
    pub max_bucket_size: u64,
}

#[derive(Debug, Clone, Copy)]
struct RawRecord {
    hash: i64,
    a: u32,
    b: u32,
}

/// Frozen multimap from `h(Sigma)` to stored `(Sigma, a_index, b_index)`
/// records.
#[derive(Debug)]
pub struct LookupTable {
    m: usize,
    bound: u64,
    pool_a: CandidatePool,
    pool_b: CandidatePool,
    /// `m` coordinates per record, in bucket order.
    sigma_coords: Vec<i16>,
    pairs: Vec<(u32, u32)>,
    /// hash -> (first record, record count)
    index: HashMap<i64, (u32, u32)>,
    stats: TableStats,
    weights: Vec<i64>,
}

impl LookupTable {
    /// Enumerates both candidate pools and stores every pair whose
    /// autocorrelation sum passes the norm cap. Deterministic for a fixed
    /// configuration; honors `config.memory_budget` and reports partial
    /// statistics when it would be exceeded.
    pub fn build(config: &SearchConfig) -> Result<Self, Error> {
        config.validate()?;
        let p = config.p;
        let m = (p - 1) / 2;
        let pool_a = CandidatePool::build(p, config.sigma.sigma_a, config.dft_slack)?;
        let pool_b = CandidatePool::build(p, config.sigma.sigma_b, config.dft_slack)?;
        // 32-bit pool indices must suffice
        assert!(pool_a.len() < u32::MAX as usize && pool_b.len() < u32::MAX as usize);
        let weights = primes::hash_weights(m);
        let bound = config.bound;

        let budget = config.memory_budget.unwrap_or(u64::MAX);
        let counted = std::sync::atomic::AtomicU64::new(0);
        let over_budget = std::sync::atomic::AtomicBool::new(false);

        let nb = pool_b.len();
        let chunks: Vec<Vec<RawRecord>> = (0..pool_a.len())
            .into_par_iter()
            .fold(Vec::new, |mut acc: Vec<RawRecord>, ai| {
                if over_budget.load(std::sync::atomic::Ordering::Relaxed) {
                    return acc;
                }
                let paf_a = pool_a.paf_row(ai);
                let mut sigma = vec![0i16; m];
                let mut found = 0u64;
                for bi in 0..nb {
                    let paf_b = pool_b.paf_row(bi);
                    let mut norm: u64 = 0;
                    for ((s, &x), &y) in sigma.iter_mut().zip(paf_a).zip(paf_b) {
                        let sum = x + y;
                        *s = sum;
                        norm += (i64::from(sum) * i64::from(sum)) as u64;
                    }
                    if norm > bound {
                        continue;
                    }
                    acc.push(RawRecord {
                        hash: hash_with_weights(&sigma, &weights),
                        a: ai as u32,
                        b: bi as u32,
                    });
                    found += 1;
                }
                if found > 0 {
                    let total = counted.fetch_add(found, std::sync::atomic::Ordering::Relaxed)
                        + found;
                    if total.saturating_mul(record_bytes(m)) > budget {
                        over_budget.store(true, std::sync::atomic::Ordering::Relaxed);
                    }
                }
                acc
            })
            .collect();

        let stats_so_far = TableStats {
            pool_a: pool_a.len() as u64,
            pool_b: pool_b.len() as u64,
            entry_count: counted.load(std::sync::atomic::Ordering::Relaxed),
            unique_hash_count: 0,
            max_bucket_size: 0,
        };
        if over_budget.load(std::sync::atomic::Ordering::Relaxed) {
            return Err(Error::MemoryBudget {
                needed_bytes: stats_so_far.entry_count.saturating_mul(record_bytes(m)),
                budget_bytes: budget,
                partial: stats_so_far,
            });
        }

        let total: usize = chunks.iter().map(Vec::len).sum();
        let mut records = Vec::with_capacity(total);
        for chunk in chunks {
            records.extend_from_slice(&chunk);
        }
        records.par_sort_unstable_by_key(|r| (r.hash, r.a, r.b));

        if config.dedup_sigma {
            records = dedup_by_sigma(records, &pool_a, &pool_b);
        }

        // freeze: materialize Sigma inline and index the bucket ranges
        let mut sigma_coords = vec![0i16; records.len() * m];
        let mut pairs = Vec::with_capacity(records.len());
        for (k, record) in records.iter().enumerate() {
            let row = &mut sigma_coords[k * m..(k + 1) * m];
            let paf_a = pool_a.paf_row(record.a as usize);
            let paf_b = pool_b.paf_row(record.b as usize);
            for ((s, &x), &y) in row.iter_mut().zip(paf_a).zip(paf_b) {
                *s = x + y;
            }
            pairs.push((record.a, record.b));
        }
        let mut index = HashMap::new();
        let mut unique = 0u64;
        let mut max_bucket = 0u64;
        let mut start = 0usize;
        while start < records.len() {
            let hash = records[start].hash;
            let mut end = start + 1;
            while end < records.len() && records[end].hash == hash {
                end += 1;
            }
            index.insert(hash, (start as u32, (end - start) as u32));
            unique += 1;
            max_bucket = max_bucket.max((end - start) as u64);
            start = end;
        }

        let stats = TableStats {
            pool_a: pool_a.len() as u64,
            pool_b: pool_b.len() as u64,
            entry_count: records.len() as u64,
            unique_hash_count: unique,
            max_bucket_size: max_bucket,
        };
        Ok(Self {
            m,
            bound,
            pool_a,
            pool_b,
            sigma_coords,
            pairs,
            index,
            stats,
            weights,
        })
    }

    pub fn stats(&self) -> &TableStats {
        &self.stats
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn sigma_row(&self, k: usize) -> &[i16] {
        &self.sigma_coords[k * self.m..(k + 1) * self.m]
    }

    /// Probes one `(c, d)` pair: computes `Delta = -I(c) - I(d)`, rejects
    /// fast on the norm cap, then requires an exact coordinatewise match in
    /// the bucket at `h(Delta)`. Returns the matched `Delta`.
    pub fn probe(&self, c: &Sequence, d: &Sequence) -> Option<PafVector> {
        let paf_c = paf_unchecked(c);
        let paf_d = paf_unchecked(d);
        let mut delta = vec![0i16; self.m];
        let mut norm: u64 = 0;
        for ((t, &x), &y) in delta.iter_mut().zip(paf_c.coords()).zip(paf_d.coords()) {
            let v = -x - y;
            *t = v;
            norm += (i64::from(v) * i64::from(v)) as u64;
        }
        if norm > self.bound {
            return None;
        }
        let delta = PafVector::new(delta);
        if self.lookup(&delta).is_some() {
            Some(delta)
        } else {
            None
        }
    }

    fn lookup(&self, delta: &PafVector) -> Option<usize> {
        let hash = hash_with_weights(delta.coords(), &self.weights);
        let &(start, len) = self.index.get(&hash)?;
        (start..start + len)
            .map(|k| k as usize)
            .find(|&k| self.sigma_row(k) == delta.coords())
    }

    /// Regenerates the first stored `(a, b)` with `I(a) + I(b) = Delta`.
    /// Errors when no record matches exactly, which is how a bare hash
    /// collision announces itself.
    pub fn recover(&self, delta: &PafVector) -> Result<(Sequence, Sequence), Error> {
        let k = self.lookup(delta).ok_or(Error::RecordNotFound)?;
        Ok(self.regenerate(k, delta))
    }

    /// Every stored `(a, b)` with `I(a) + I(b) = Delta`, in table order.
    pub fn recover_all(&self, delta: &PafVector) -> Vec<(Sequence, Sequence)> {
        let hash = hash_with_weights(delta.coords(), &self.weights);
        let Some(&(start, len)) = self.index.get(&hash) else {
            return Vec::new();
        };
        (start..start + len)
            .map(|k| k as usize)
            .filter(|&k| self.sigma_row(k) == delta.coords())
            .map(|k| self.regenerate(k, delta))
            .collect()
    }

    fn regenerate(&self, k: usize, delta: &PafVector) -> (Sequence, Sequence) {
        let (ai, bi) = self.pairs[k];
        let a = self.pool_a.sequence(ai as usize);
        let b = self.pool_b.sequence(bi as usize);
        let sum = paf_unchecked(&a)
            .try_add(&paf_unchecked(&b))
            .expect("pool rows share one length");
        assert_eq!(
            sum.coords(),
            delta.coords(),
            "stored record does not regenerate its sum"
        );
        (a, b)
    }
}

/// Keeps one record per distinct `Sigma` (the smallest `(a, b)` pair).
/// Equal sums always share a hash, so scanning runs of equal hash finds
/// every duplicate.
fn dedup_by_sigma(
    records: Vec<RawRecord>,
    pool_a: &CandidatePool,
    pool_b: &CandidatePool,
) -> Vec<RawRecord> {
    let mut out = Vec::with_capacity(records.len());
    let mut start = 0usize;
    let sigma_of = |r: &RawRecord| -> Vec<i16> {
        pool_a
            .paf_row(r.a as usize)
            .iter()
            .zip(pool_b.paf_row(r.b as usize))
            .map(|(&x, &y)| x + y)
            .collect()
    };
    while start < records.len() {
        let hash = records[start].hash;
        let mut end = start + 1;
        while end < records.len() && records[end].hash == hash {
            end += 1;
        }
        let mut run: Vec<(Vec<i16>, RawRecord)> = records[start..end]
            .iter()
            .map(|r| (sigma_of(r), *r))
            .collect();
        run.sort_by(|(sx, rx), (sy, ry)| sx.cmp(sy).then((rx.a, rx.b).cmp(&(ry.a, ry.b))));
        run.dedup_by(|next, kept| next.0 == kept.0);
        out.extend(run.into_iter().map(|(_, r)| r));
        start = end;
    }
    out
}
