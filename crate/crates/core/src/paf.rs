//! Periodic autocorrelation vectors and the hash/norm pair used to index
//! them.
//!
//! For a sequence `a = [a_0, …, a_{p-1}]` the coordinate `s` of its
//! autocorrelation vector is
//!
//! ```text
//! I_s(a) = sum_{k=0}^{p-1} a_k a_{k+s}      (indices mod p)
//! ```
//!
//! for `s = 1, …, (p-1)/2`. Coordinate 0 is omitted: it always equals `p`.
//! The remaining coordinates `s` and `p - s` coincide, so this half-vector
//! carries the full autocorrelation spectrum. All arithmetic here is exact
//! integer arithmetic.

use crate::error::Error;
use crate::primes;
use crate::seq::Sequence;

/// A vector of periodic autocorrelation coordinates, or a sum/difference of
/// such vectors. Coordinates fit in `i16`: each is a sum of at most
/// `2p <= 198` terms `±1` over the supported range.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PafVector {
    coords: Vec<i16>,
}

impl PafVector {
    pub fn new(coords: Vec<i16>) -> Self {
        Self { coords }
    }

    pub fn zero(len: usize) -> Self {
        Self {
            coords: vec![0; len],
        }
    }

    pub fn coords(&self) -> &[i16] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn max_coord(&self) -> Option<i16> {
        self.coords.iter().copied().max()
    }

    pub fn negated(&self) -> PafVector {
        PafVector {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }

    /// Coordinatewise sum; errors when the coordinate counts differ.
    pub fn try_add(&self, other: &PafVector) -> Result<PafVector, Error> {
        if self.len() != other.len() {
            return Err(Error::CoordLengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(PafVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&x, &y)| x + y)
                .collect(),
        })
    }
}

impl std::ops::Add for &PafVector {
    type Output = PafVector;

    fn add(self, rhs: &PafVector) -> PafVector {
        self.try_add(rhs).expect("coordinate counts must match")
    }
}

/// The periodic autocorrelation vector `[I_1(a), …, I_{(p-1)/2}(a)]`.
///
/// Requires `p >= 3`; the length-1 sequence has no off-diagonal
/// autocorrelation coordinates.
pub fn paf(a: &Sequence) -> Result<PafVector, Error> {
    let p = a.len();
    if p < 3 {
        return Err(Error::SequenceTooShort(p));
    }
    Ok(paf_unchecked(a))
}

/// Same as [`paf`] but maps the length-1 sequence to the empty vector
/// instead of erroring. Used where a degenerate order is meaningful
/// (e.g. checking the quadruple condition at `p = 1`).
pub(crate) fn paf_unchecked(a: &Sequence) -> PafVector {
    let p = a.len();
    let entries = a.entries();
    let m = (p - 1) / 2;
    let mut coords = Vec::with_capacity(m);
    for s in 1..=m {
        let mut acc: i32 = 0;
        for k in 0..p {
            let k_shift = if k + s >= p { k + s - p } else { k + s };
            acc += i32::from(entries[k]) * i32::from(entries[k_shift]);
        }
        coords.push(acc as i16);
    }
    PafVector { coords }
}

/// The norm `||x|| = sum_s x_s^2`, exact.
pub fn norm(x: &PafVector) -> u64 {
    x.coords
        .iter()
        .map(|&c| {
            let c = i64::from(c);
            (c * c) as u64
        })
        .sum()
}

/// The rendezvous hash `h(x) = sum_s x_s · P_{500·s}`, a fixed linear
/// functional on autocorrelation vectors. For the supported range
/// (`p <= 99`, coordinates bounded by `2p`) the value stays far below
/// `2^63`.
pub fn paf_hash(x: &PafVector) -> i64 {
    let weights = primes::hash_weights(x.len());
    hash_with_weights(x.coords(), &weights)
}

/// Hash with a precomputed weight row, for hot loops.
pub(crate) fn hash_with_weights(coords: &[i16], weights: &[i64]) -> i64 {
    coords
        .iter()
        .zip(weights)
        .map(|(&c, &w)| i64::from(c) * w)
        .sum()
}
