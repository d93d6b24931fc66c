//! Prime lookup backing the autocorrelation hash.
//!
//! The hash of an autocorrelation vector is a dot product with the primes
//! `P_500, P_1000, …`, so only every 500th prime is ever requested, up to
//! index `500 · (p - 1) / 2`. A plain sieve of Eratosthenes is regenerated
//! with a doubled limit whenever the cache runs short and kept in a global
//! for the lifetime of the process.

use std::sync::{Mutex, OnceLock};

use crate::error::Error;

/// Indexing convention: `P_1 = 2`.
pub const FIRST_PRIME_INDEX: usize = 1;

fn cache() -> &'static Mutex<Vec<u64>> {
    static CACHE: OnceLock<Mutex<Vec<u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// Upper bound on the n-th prime, valid for n >= 6 (Rosser's theorem).
fn nth_prime_upper_bound(n: usize) -> usize {
    if n < 6 {
        return 16;
    }
    let n_f = n as f64;
    (n_f * (n_f.ln() + n_f.ln().ln())).ceil() as usize + 16
}

fn sieve_to(limit: usize) -> Vec<u64> {
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for candidate in 2..=limit {
        if !composite[candidate] {
            primes.push(candidate as u64);
            let mut multiple = candidate * candidate;
            while multiple <= limit {
                composite[multiple] = true;
                multiple += candidate;
            }
        }
    }
    primes
}

/// The `k`-th prime with `P_1 = 2`.
pub fn nth_prime(k: usize) -> Result<u64, Error> {
    if k == 0 {
        return Err(Error::ZeroPrimeIndex);
    }
    let mut primes = cache().lock().expect("prime cache poisoned");
    if primes.len() < k {
        let mut limit = nth_prime_upper_bound(k);
        loop {
            let sieved = sieve_to(limit);
            if sieved.len() >= k {
                *primes = sieved;
                break;
            }
            limit *= 2;
        }
    }
    Ok(primes[k - 1])
}

/// The primes `[P_500, P_1000, …, P_{500·m}]` used as hash weights for
/// autocorrelation vectors with `m` coordinates.
pub fn hash_weights(m: usize) -> Vec<i64> {
    (1..=m)
        .map(|s| nth_prime(500 * s).expect("index is positive") as i64)
        .collect()
}
