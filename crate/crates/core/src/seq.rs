//! ±1 sequences of odd length, the first rows of circulant blocks.
//!
//! A [`Sequence`] `a = [a_0, …, a_{p-1}]` determines the circulant matrix
//! whose row `i` is `a` cyclically shifted right by `i`. Everything in this
//! crate that talks about a circulant block stores only its first row.

use crate::error::Error;

/// A `{-1, 1}`-sequence of odd length `p >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    entries: Vec<i8>,
}

impl Sequence {
    /// Validates that `entries` is nonempty, of odd length, and contains
    /// only `+1` and `-1`.
    pub fn new(entries: Vec<i8>) -> Result<Self, Error> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        if entries.len() % 2 == 0 {
            return Err(Error::EvenLength(entries.len()));
        }
        for (index, &value) in entries.iter().enumerate() {
            if value != 1 && value != -1 {
                return Err(Error::NonUnitEntry { index, value });
            }
        }
        Ok(Self { entries })
    }

    /// Copies a slice of `+1`/`-1` entries.
    pub fn from_slice(entries: &[i8]) -> Result<Self, Error> {
        Self::new(entries.to_vec())
    }

    /// The length `p`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid sequence is never empty
    }

    /// `(p - 1) / 2`, the number of independent autocorrelation coordinates.
    pub fn half_len(&self) -> usize {
        (self.entries.len() - 1) / 2
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn get(&self, index: usize) -> i8 {
        self.entries[index]
    }

    /// Sum of the entries.
    pub fn row_sum(&self) -> i32 {
        self.entries.iter().map(|&e| i32::from(e)).sum()
    }

    /// Whether the circulant with this first row is symmetric,
    /// i.e. `a_j = a_{p-j}` for all `j`.
    pub fn is_symmetric(&self) -> bool {
        let p = self.len();
        (1..p).all(|j| self.entries[j] == self.entries[p - j])
    }

    /// Whether the circulant with this first row is skew (`X^T = -X + 2I`),
    /// i.e. `a_0 = 1` and `a_j = -a_{p-j}` for all `j != 0`.
    pub fn is_skew(&self) -> bool {
        let p = self.len();
        self.entries[0] == 1 && (1..p).all(|j| self.entries[j] == -self.entries[p - j])
    }

    /// The sequence with every entry negated.
    pub fn negated(&self) -> Sequence {
        Sequence {
            entries: self.entries.iter().map(|&e| -e).collect(),
        }
    }

    /// The sequence cyclically shifted left by `s` positions.
    pub fn cyclic_shift(&self, s: usize) -> Sequence {
        let p = self.len();
        let s = s % p;
        let mut entries = Vec::with_capacity(p);
        entries.extend_from_slice(&self.entries[s..]);
        entries.extend_from_slice(&self.entries[..s]);
        Sequence { entries }
    }

    /// The sequence read back to front.
    pub fn reversed(&self) -> Sequence {
        Sequence {
            entries: self.entries.iter().rev().copied().collect(),
        }
    }
}

impl TryFrom<Vec<i8>> for Sequence {
    type Error = Error;

    fn try_from(entries: Vec<i8>) -> Result<Self, Error> {
        Sequence::new(entries)
    }
}

impl std::fmt::Display for Sequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", if *e > 0 { "+1" } else { "-1" })?;
        }
        Ok(())
    }
}

/// A `{-1, 1}`-vector of length `(p - 1) / 2`, the free half of a symmetric
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfVector {
    entries: Vec<i8>,
}

impl HalfVector {
    /// Validates that every entry is `+1` or `-1`. The empty half vector is
    /// allowed and expands to the length-1 sequence `[1]`.
    pub fn new(entries: Vec<i8>) -> Result<Self, Error> {
        for (index, &value) in entries.iter().enumerate() {
            if value != 1 && value != -1 {
                return Err(Error::NonUnitEntry { index, value });
            }
        }
        Ok(Self { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }
}

/// Expands a half vector `x` to the symmetric sequence `[1, x, reverse(x)]`
/// of length `2·len(x) + 1`. The circulant with this first row equals its
/// own transpose.
pub fn symmetric_from_half(x: &HalfVector) -> Sequence {
    let m = x.len();
    let mut entries = Vec::with_capacity(2 * m + 1);
    entries.push(1);
    entries.extend_from_slice(x.entries());
    entries.extend(x.entries().iter().rev());
    Sequence { entries }
}

/// A target row sum for a `{-1, 1}`-sequence of length `p`: an odd integer
/// with `|sigma| <= p` and `sigma ≡ p (mod 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowSumTarget {
    sigma: i32,
}

impl RowSumTarget {
    pub fn new(sigma: i32, p: usize) -> Result<Self, Error> {
        let p_i = p as i32;
        if sigma.unsigned_abs() as usize > p || (sigma - p_i) % 2 != 0 {
            return Err(Error::InfeasibleRowSum { sigma, p });
        }
        Ok(Self { sigma })
    }

    pub fn value(&self) -> i32 {
        self.sigma
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_length() {
        assert_eq!(
            Sequence::new(vec![1, -1]).unwrap_err(),
            Error::EvenLength(2)
        );
    }

    #[test]
    fn rejects_empty() {
        assert_eq!(Sequence::new(vec![]).unwrap_err(), Error::EmptySequence);
    }

    #[test]
    fn rejects_non_unit_entries() {
        assert_eq!(
            Sequence::new(vec![1, 0, -1]).unwrap_err(),
            Error::NonUnitEntry { index: 1, value: 0 }
        );
    }

    #[test]
    fn row_sum_of_all_ones() {
        let a = Sequence::new(vec![1, 1, 1]).unwrap();
        assert_eq!(a.row_sum(), 3);
    }

    #[test]
    fn symmetric_from_half_single_entry() {
        let x = HalfVector::new(vec![-1]).unwrap();
        assert_eq!(symmetric_from_half(&x).entries(), &[1, -1, -1]);
    }

    #[test]
    fn symmetric_from_half_reverses_tail() {
        let x = HalfVector::new(vec![1, -1]).unwrap();
        assert_eq!(symmetric_from_half(&x).entries(), &[1, 1, -1, -1, 1]);
    }

    #[test]
    fn symmetric_from_half_is_symmetric() {
        let x = HalfVector::new(vec![1, -1, -1, 1, -1]).unwrap();
        let a = symmetric_from_half(&x);
        assert!(a.is_symmetric());
        assert!(!a.is_skew());
    }

    #[test]
    fn skew_first_row() {
        // a_1 = 1, a_2 = -1 = -a_1, a_0 = 1
        let a = Sequence::new(vec![1, 1, -1]).unwrap();
        assert!(a.is_skew());
        assert!(!a.is_symmetric());
    }

    #[test]
    fn length_one_is_symmetric_and_skew() {
        let a = Sequence::new(vec![1]).unwrap();
        assert!(a.is_symmetric());
        assert!(a.is_skew());
        let b = Sequence::new(vec![-1]).unwrap();
        assert!(b.is_symmetric());
        assert!(!b.is_skew());
    }

    #[test]
    fn shift_and_reverse_preserve_multiset() {
        let a = Sequence::new(vec![1, -1, -1, 1, 1]).unwrap();
        assert_eq!(a.cyclic_shift(2).entries(), &[-1, 1, 1, 1, -1]);
        assert_eq!(a.reversed().entries(), &[1, 1, -1, -1, 1]);
        assert_eq!(a.cyclic_shift(5), a);
    }

    #[test]
    fn row_sum_target_validation() {
        assert!(RowSumTarget::new(3, 5).is_ok());
        assert!(RowSumTarget::new(-5, 5).is_ok());
        assert_eq!(
            RowSumTarget::new(2, 5).unwrap_err(),
            Error::InfeasibleRowSum { sigma: 2, p: 5 }
        );
        assert_eq!(
            RowSumTarget::new(7, 5).unwrap_err(),
            Error::InfeasibleRowSum { sigma: 7, p: 5 }
        );
    }
}
