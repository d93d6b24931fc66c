//! Candidate generation for the table side of the search: all symmetric
//! sequences with a prescribed row sum that survive the spectral bound.
//!
//! A symmetric sequence `[1, x, reverse(x)]` is determined by its half
//! vector `x` of length `m = (p-1)/2`, which is stored as a bit mask. Masks
//! of fixed weight are enumerated in increasing numeric order (Gosper's
//! next-same-weight trick), which corresponds to lexicographic order on `x`
//! with `-1 < +1`.

use crate::bound::{dft_bound_check_with, CosineTable};
use crate::error::Error;
use crate::paf::paf_unchecked;
use crate::seq::{RowSumTarget, Sequence};

/// Iterator over all masks with `weight` bits set among the low `width`
/// bits, in increasing numeric order.
pub(crate) struct FixedWeightMasks {
    next: Option<u64>,
    limit: u64,
}

impl FixedWeightMasks {
    pub(crate) fn new(width: usize, weight: usize) -> Self {
        assert!(width < 64, "mask width must fit in u64");
        assert!(weight <= width);
        let limit = 1u64 << width;
        let next = if weight == 0 {
            Some(0)
        } else {
            Some((1u64 << weight) - 1)
        };
        Self { next, limit }
    }
}

impl Iterator for FixedWeightMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let current = self.next?;
        if current >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if current == 0 {
            None // the single weight-0 mask
        } else {
            // Gosper's hack: smallest larger integer with equal popcount
            let lowest = current & current.wrapping_neg();
            let ripple = current + lowest;
            Some(ripple | (((current ^ ripple) / lowest) >> 2))
        };
        Some(current)
    }
}

/// Decodes a half-vector mask into the symmetric sequence
/// `[1, x, reverse(x)]`. Bit `m - 1 - j` of the mask gives `x_j`
/// (set = `+1`), so numerically ordered masks decode in lexicographic
/// order of `x`.
pub(crate) fn symmetric_sequence_from_mask(p: usize, mask: u64) -> Sequence {
    let m = (p - 1) / 2;
    let mut entries = vec![1i8; p];
    for j in 0..m {
        let sign = if mask >> (m - 1 - j) & 1 == 1 { 1 } else { -1 };
        entries[1 + j] = sign;
        entries[p - 1 - j] = sign;
    }
    Sequence::new(entries).expect("entries are ±1 and p is odd")
}

fn half_weight_for_sum(p: usize, sigma: i32) -> Result<usize, Error> {
    let m = (p as i32 - 1) / 2;
    // row sum of [1, x, xR] is 1 + 2·sum(x)
    if (sigma - 1) % 2 != 0 {
        return Err(Error::InfeasibleRowSum { sigma, p });
    }
    let half_sum = (sigma - 1) / 2;
    if half_sum.abs() > m || (m + half_sum) % 2 != 0 {
        return Err(Error::InfeasibleRowSum { sigma, p });
    }
    Ok(((m + half_sum) / 2) as usize)
}

/// All symmetric sequences of length `p` with the given row sum that pass
/// the spectral bound with slack `dft_slack`, in lexicographic order of
/// their half vectors. Errors when no half vector can reach the row sum.
pub fn generate_symmetric_candidates(
    p: usize,
    sigma: RowSumTarget,
    dft_slack: f64,
) -> Result<Vec<Sequence>, Error> {
    let pool = CandidatePool::build(p, sigma.value(), dft_slack)?;
    Ok((0..pool.len()).map(|i| pool.sequence(i)).collect())
}

/// A frozen, ordered pool of surviving half vectors together with their
/// precomputed autocorrelation vectors. The pool side of the lookup table
/// stores indices into this.
#[derive(Debug, Clone)]
pub(crate) struct CandidatePool {
    p: usize,
    m: usize,
    masks: Vec<u64>,
    pafs: Vec<i16>, // m coordinates per candidate, row-major
}

impl CandidatePool {
    pub(crate) fn build(p: usize, sigma: i32, dft_slack: f64) -> Result<Self, Error> {
        if dft_slack < 0.0 {
            return Err(Error::NegativeTolerance(dft_slack));
        }
        let m = (p - 1) / 2;
        let weight = half_weight_for_sum(p, sigma)?;
        let table = CosineTable::new(p);
        let mut masks = Vec::new();
        let mut pafs = Vec::new();
        for mask in FixedWeightMasks::new(m.max(1), weight) {
            if m == 0 && mask != 0 {
                continue;
            }
            let candidate = symmetric_sequence_from_mask(p, mask);
            if !dft_bound_check_with(&table, &candidate, dft_slack)? {
                continue;
            }
            masks.push(mask);
            pafs.extend_from_slice(paf_unchecked(&candidate).coords());
        }
        Ok(Self { p, m, masks, pafs })
    }

    pub(crate) fn len(&self) -> usize {
        self.masks.len()
    }

    pub(crate) fn sequence(&self, index: usize) -> Sequence {
        symmetric_sequence_from_mask(self.p, self.masks[index])
    }

    pub(crate) fn paf_row(&self, index: usize) -> &[i16] {
        &self.pafs[index * self.m..(index + 1) * self.m]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_weight_counts() {
        assert_eq!(FixedWeightMasks::new(5, 0).count(), 1);
        assert_eq!(FixedWeightMasks::new(5, 2).count(), 10);
        assert_eq!(FixedWeightMasks::new(5, 5).count(), 1);
        let all: Vec<u64> = FixedWeightMasks::new(4, 2).collect();
        assert_eq!(all, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
    }

    #[test]
    fn order_three_pools() {
        let sum_three = RowSumTarget::new(3, 3).unwrap();
        let pool = generate_symmetric_candidates(3, sum_three, 1e-9).unwrap();
        assert_eq!(pool.len(), 1);
        assert_eq!(pool[0].entries(), &[1, 1, 1]);

        let sum_minus_one = RowSumTarget::new(-1, 3).unwrap();
        let pool = generate_symmetric_candidates(3, sum_minus_one, 1e-9).unwrap();
        assert_eq!(pool.len(), 1);
        assert_eq!(pool[0].entries(), &[1, -1, -1]);
    }

    #[test]
    fn infeasible_row_sum_rejected() {
        // sigma = 1 needs half sum 0 over m = 1 entries: impossible
        let sigma = RowSumTarget::new(1, 3).unwrap();
        assert_eq!(
            generate_symmetric_candidates(3, sigma, 1e-9).unwrap_err(),
            Error::InfeasibleRowSum { sigma: 1, p: 3 }
        );
    }

    #[test]
    fn candidates_are_symmetric_with_requested_sum() {
        let sigma = RowSumTarget::new(-5, 11).unwrap();
        let pool = generate_symmetric_candidates(11, sigma, 1e-9).unwrap();
        assert!(!pool.is_empty());
        for a in &pool {
            assert!(a.is_symmetric());
            assert_eq!(a.row_sum(), -5);
        }
    }

    #[test]
    fn lexicographic_order_of_halves() {
        let sigma = RowSumTarget::new(1, 9).unwrap();
        let pool = generate_symmetric_candidates(9, sigma, 1e-9).unwrap();
        let halves: Vec<Vec<i8>> = pool.iter().map(|a| a.entries()[1..=4].to_vec()).collect();
        let mut sorted = halves.clone();
        sorted.sort();
        assert_eq!(halves, sorted);
    }

    #[test]
    fn pool_paf_rows_match_sequences() {
        let pool = CandidatePool::build(9, 1, 1e-9).unwrap();
        for i in 0..pool.len() {
            let expected = paf_unchecked(&pool.sequence(i));
            assert_eq!(pool.paf_row(i), expected.coords());
        }
    }
}
