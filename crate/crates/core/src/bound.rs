//! Spectral feasibility filter for symmetric circulant blocks.
//!
//! A symmetric circulant of odd order `p` with first row `a` has the real
//! eigenvalues
//!
//! ```text
//! lambda_k = a_0 + 2 sum_{j=1}^{(p-1)/2} a_j cos(2 pi k j / p)
//! ```
//!
//! If such a block appears in a Hadamard matrix of order `4p`, every
//! eigenvalue is bounded by `2 sqrt(p)` in absolute value. Checking this
//! bound discards most candidate rows long before any pairing work
//! happens. Cosines are tabulated once per order in double precision; the
//! comparison allows a small additive slack so rounding never rejects a
//! true solution.

use crate::error::Error;
use crate::seq::Sequence;

/// Cosine lookup `cos(2 pi t / p)` for `t = 0, …, p-1`.
#[derive(Debug, Clone)]
pub struct CosineTable {
    p: usize,
    values: Vec<f64>,
}

impl CosineTable {
    pub fn new(p: usize) -> Self {
        let values = (0..p)
            .map(|t| (2.0 * std::f64::consts::PI * t as f64 / p as f64).cos())
            .collect();
        Self { p, values }
    }

    pub fn order(&self) -> usize {
        self.p
    }

    /// `cos(2 pi t / p)`, reducing `t` modulo `p`.
    pub fn get(&self, t: usize) -> f64 {
        self.values[t % self.p]
    }
}

/// Tests whether every eigenvalue of the symmetric circulant with first row
/// `a` satisfies `|lambda_k| <= 2 sqrt(p) + tolerance`.
///
/// Errors on non-symmetric input (the bound presumes real eigenvalues) and
/// on negative tolerance.
pub fn dft_bound_check(a: &Sequence, tolerance: f64) -> Result<bool, Error> {
    let table = CosineTable::new(a.len());
    dft_bound_check_with(&table, a, tolerance)
}

/// [`dft_bound_check`] with a caller-provided cosine table, so candidate
/// generation can reuse one table across an entire enumeration.
pub fn dft_bound_check_with(
    table: &CosineTable,
    a: &Sequence,
    tolerance: f64,
) -> Result<bool, Error> {
    if tolerance < 0.0 {
        return Err(Error::NegativeTolerance(tolerance));
    }
    let p = a.len();
    if let Some(j) = (1..p).find(|&j| a.get(j) != a.get(p - j)) {
        return Err(Error::NotSymmetric {
            index: j,
            mirror: p - j,
        });
    }
    let limit = 2.0 * (p as f64).sqrt() + tolerance;
    let m = a.half_len();
    for k in 1..=m {
        let mut acc = f64::from(a.get(0));
        for j in 1..=m {
            acc += 2.0 * f64::from(a.get(j)) * table.get(k * j);
        }
        if acc.abs() > limit {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(entries: &[i8]) -> Sequence {
        Sequence::from_slice(entries).unwrap()
    }

    #[test]
    fn all_ones_length_seven_passes() {
        // each k sums a full cosine period: lambda_k = 1 + 2(-1/2) = 0
        let a = seq(&[1, 1, 1, 1, 1, 1, 1]);
        assert!(dft_bound_check(&a, 0.0).unwrap());
    }

    #[test]
    fn non_symmetric_rejected() {
        let a = seq(&[1, 1, -1]);
        assert_eq!(
            dft_bound_check(&a, 0.0).unwrap_err(),
            Error::NotSymmetric { index: 1, mirror: 2 }
        );
    }

    #[test]
    fn negative_tolerance_rejected() {
        let a = seq(&[1, 1, 1]);
        assert!(matches!(
            dft_bound_check(&a, -1.0).unwrap_err(),
            Error::NegativeTolerance(_)
        ));
    }

    #[test]
    fn adversarial_order_47_fails() {
        // pick a_j = sign(cos(2 pi j / 47)): the k = 1 eigenvalue then sums
        // absolute cosine values and blows far past 2 sqrt(47)
        let table = CosineTable::new(47);
        let mut entries = vec![0i8; 47];
        entries[0] = 1;
        for j in 1..=23 {
            let s = if table.get(j) >= 0.0 { 1 } else { -1 };
            entries[j] = s;
            entries[47 - j] = s;
        }
        let a = seq(&entries);
        assert!(!dft_bound_check(&a, 0.0).unwrap());
    }

    #[test]
    fn cosine_table_periodicity() {
        let table = CosineTable::new(13);
        for t in 0..13 {
            assert_eq!(table.get(t), table.get(t + 13));
        }
        assert!((table.get(0) - 1.0).abs() < 1e-15);
    }
}
