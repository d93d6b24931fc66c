//! Helpers shared by the integration test binaries.

#![allow(dead_code)] // each test binary uses a different subset

use rand::rngs::StdRng;
use rand::Rng;

use hadamard::{circulant, symmetric_from_half, HalfVector, Sequence};

pub fn seq(entries: &[i8]) -> Sequence {
    Sequence::from_slice(entries).unwrap()
}

pub fn random_sequence(rng: &mut StdRng, p: usize) -> Sequence {
    let entries: Vec<i8> = (0..p).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
    Sequence::new(entries).unwrap()
}

pub fn random_symmetric(rng: &mut StdRng, p: usize) -> Sequence {
    let m = (p - 1) / 2;
    let half: Vec<i8> = (0..m).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
    symmetric_from_half(&HalfVector::new(half).unwrap())
}

/// Every `{-1, 1}`-sequence of length `p`.
pub fn all_sequences(p: usize) -> Vec<Sequence> {
    (0..1u32 << p)
        .map(|bits| {
            let entries: Vec<i8> = (0..p)
                .map(|j| if bits >> j & 1 == 1 { 1 } else { -1 })
                .collect();
            Sequence::new(entries).unwrap()
        })
        .collect()
}

/// Every symmetric sequence of odd length `p`.
pub fn all_symmetric(p: usize) -> Vec<Sequence> {
    let m = (p - 1) / 2;
    (0..1u32 << m)
        .map(|bits| {
            let half: Vec<i8> = (0..m)
                .map(|j| if bits >> j & 1 == 1 { 1 } else { -1 })
                .collect();
            symmetric_from_half(&HalfVector::new(half).unwrap())
        })
        .collect()
}

/// Independent autocorrelation oracle: the first row of `A A^T` for the
/// circulant `A`.
pub fn paf_by_matrix_oracle(a: &Sequence) -> Vec<i64> {
    let m_a = circulant(a);
    let gram = m_a.mul(&m_a.transpose());
    (1..=a.half_len()).map(|s| gram.get(0, s)).collect()
}
