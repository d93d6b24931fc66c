//! Quadruple-level certification: the vanishing-autocorrelation condition,
//! symmetry-type classification, and row-sum decompositions.
//!
//! Four circulant `{-1, 1}` blocks `(A, B, C, D)` of odd order `p` feed the
//! Hadamard arrays exactly when their Gram matrices satisfy
//! `A A^T + B B^T + C C^T + D D^T = 4p I`. On first rows this is equivalent
//! to the periodic autocorrelation sums vanishing coordinatewise, which is
//! how [`is_complementary`] tests it (`O(p^2)` instead of `O(p^3)`;
//! the equivalence of the two formulations is itself a tested property).
//!
//! A necessary consequence is the row-sum identity
//! `sigma_A^2 + sigma_B^2 + sigma_C^2 + sigma_D^2 = 4p`, whose admissible
//! solutions [`enumerate_sigma_decompositions`] lists.

use crate::error::Error;
use crate::paf::{paf_unchecked, PafVector};
use crate::seq::Sequence;

/// Four circulant block first rows of one common odd length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadruple {
    a: Sequence,
    b: Sequence,
    c: Sequence,
    d: Sequence,
}

impl Quadruple {
    pub fn new(a: Sequence, b: Sequence, c: Sequence, d: Sequence) -> Result<Self, Error> {
        let p = a.len();
        for (index, block) in [&a, &b, &c, &d].iter().enumerate() {
            if block.len() != p {
                return Err(Error::BlockLengthMismatch {
                    expected: p,
                    index,
                    actual: block.len(),
                });
            }
        }
        Ok(Self { a, b, c, d })
    }

    pub fn p(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &Sequence {
        &self.a
    }

    pub fn b(&self) -> &Sequence {
        &self.b
    }

    pub fn c(&self) -> &Sequence {
        &self.c
    }

    pub fn d(&self) -> &Sequence {
        &self.d
    }

    pub fn blocks(&self) -> [&Sequence; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn row_sums(&self) -> [i32; 4] {
        [
            self.a.row_sum(),
            self.b.row_sum(),
            self.c.row_sum(),
            self.d.row_sum(),
        ]
    }

    /// Coordinatewise sum of the four autocorrelation vectors.
    pub fn paf_sum(&self) -> PafVector {
        let mut total = paf_unchecked(&self.a);
        for block in [&self.b, &self.c, &self.d] {
            total = total
                .try_add(&paf_unchecked(block))
                .expect("equal lengths by construction");
        }
        total
    }
}

/// Whether the four autocorrelation vectors sum to zero, equivalently
/// whether the four circulant Gram matrices sum to `4p I`. Trivially true
/// at `p = 1`.
pub fn is_complementary(q: &Quadruple) -> bool {
    q.paf_sum().is_zero()
}

/// Classification of a single circulant block by its first row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockSymmetry {
    /// `X^T = X`.
    Symmetric,
    /// `X^T = -X + 2I`.
    Skew,
    /// Neither symmetric nor skew.
    Neither,
}

impl BlockSymmetry {
    pub fn as_char(self) -> char {
        match self {
            BlockSymmetry::Symmetric => 's',
            BlockSymmetry::Skew => 'k',
            BlockSymmetry::Neither => 'x',
        }
    }

    /// Presentation rank in type labels: `k` before `s` before `x`, the
    /// order the established names use (`ksss`, `kkss`, `kkks`, `ssxx`).
    fn label_rank(self) -> u8 {
        match self {
            BlockSymmetry::Skew => 0,
            BlockSymmetry::Symmetric => 1,
            BlockSymmetry::Neither => 2,
        }
    }

    fn of(block: &Sequence) -> Self {
        // a length-1 block can be both; label it symmetric
        if block.is_symmetric() {
            BlockSymmetry::Symmetric
        } else if block.is_skew() {
            BlockSymmetry::Skew
        } else {
            BlockSymmetry::Neither
        }
    }
}

/// The symmetry type of a quadruple: one character per block, presented in
/// sorted order (so the type reads `ksss`, `kkss`, `ssxx`, …).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryType {
    blocks: [BlockSymmetry; 4],
}

impl SymmetryType {
    /// Per-block labels in input order `(a, b, c, d)`.
    pub fn blocks(&self) -> [BlockSymmetry; 4] {
        self.blocks
    }

    /// The sorted four-character label.
    pub fn label(&self) -> String {
        let mut sorted = self.blocks;
        sorted.sort_by_key(|b| b.label_rank());
        sorted.iter().map(|b| b.as_char()).collect()
    }
}

impl std::fmt::Display for SymmetryType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

/// Labels each block symmetric / skew / neither using exact first-row
/// tests.
pub fn classify_symmetry(q: &Quadruple) -> SymmetryType {
    SymmetryType {
        blocks: [
            BlockSymmetry::of(q.a()),
            BlockSymmetry::of(q.b()),
            BlockSymmetry::of(q.c()),
            BlockSymmetry::of(q.d()),
        ],
    }
}

/// Row sums `(sigma_A, sigma_B, sigma_C, sigma_D)` admissible for a
/// searched quadruple of order `p`: all odd, squares summing to `4p`,
/// `sigma_A ≡ sigma_B ≡ p (mod 4)`, and `sigma_C, sigma_D > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct SigmaDecomposition {
    pub sigma_a: i32,
    pub sigma_b: i32,
    pub sigma_c: i32,
    pub sigma_d: i32,
}

impl SigmaDecomposition {
    pub fn new(p: usize, sigmas: [i32; 4]) -> Result<Self, Error> {
        let [sa, sb, sc, sd] = sigmas;
        let reason = if p % 2 == 0 {
            return Err(Error::EvenOrder(p));
        } else if sigmas.iter().any(|s| s.rem_euclid(2) == 0) {
            Some("all row sums must be odd")
        } else if sa.rem_euclid(4) != (p as i32).rem_euclid(4)
            || sb.rem_euclid(4) != (p as i32).rem_euclid(4)
        {
            Some("sigma_a and sigma_b must be congruent to p mod 4")
        } else if sc <= 0 || sd <= 0 {
            Some("sigma_c and sigma_d must be positive")
        } else if sigmas.iter().map(|&s| i64::from(s) * i64::from(s)).sum::<i64>()
            != 4 * p as i64
        {
            Some("squares must sum to 4p")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidDecomposition { sigmas, p, reason }),
            None => Ok(Self {
                sigma_a: sa,
                sigma_b: sb,
                sigma_c: sc,
                sigma_d: sd,
            }),
        }
    }

    pub fn as_array(&self) -> [i32; 4] {
        [self.sigma_a, self.sigma_b, self.sigma_c, self.sigma_d]
    }
}

impl std::fmt::Display for SigmaDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {} {} {}",
            self.sigma_a, self.sigma_b, self.sigma_c, self.sigma_d
        )
    }
}

/// All admissible row-sum decompositions for order `p`, deduplicated under
/// the swaps `sigma_a <-> sigma_b` and `sigma_c <-> sigma_d` by keeping the
/// representative with `|sigma_a| <= |sigma_b|` and `sigma_c <= sigma_d`,
/// in lexicographic order. Errors on even `p`.
pub fn enumerate_sigma_decompositions(p: usize) -> Result<Vec<SigmaDecomposition>, Error> {
    if p % 2 == 0 {
        return Err(Error::EvenOrder(p));
    }
    let target = 4 * p as i64;
    let limit = (target as f64).sqrt() as i32 + 1;
    let residue = (p as i32).rem_euclid(4);
    let mut out = Vec::new();
    for sa in -limit..=limit {
        if sa.rem_euclid(4) != residue {
            continue;
        }
        for sb in -limit..=limit {
            if sb.rem_euclid(4) != residue || sa.abs() > sb.abs() {
                continue;
            }
            for sc in (1..=limit).step_by(2) {
                for sd in (sc..=limit).step_by(2) {
                    let squares = [sa, sb, sc, sd]
                        .iter()
                        .map(|&s| i64::from(s) * i64::from(s))
                        .sum::<i64>();
                    if squares == target {
                        out.push(SigmaDecomposition {
                            sigma_a: sa,
                            sigma_b: sb,
                            sigma_c: sc,
                            sigma_d: sd,
                        });
                    }
                }
            }
        }
    }
    out.sort_by_key(|d| d.as_array());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(entries: &[i8]) -> Sequence {
        Sequence::from_slice(entries).unwrap()
    }

    fn quad(a: &[i8], b: &[i8], c: &[i8], d: &[i8]) -> Quadruple {
        Quadruple::new(seq(a), seq(b), seq(c), seq(d)).unwrap()
    }

    #[test]
    fn singleton_quadruple_is_complementary() {
        let q = quad(&[1], &[1], &[1], &[1]);
        assert!(is_complementary(&q));
        assert!(q.paf_sum().is_empty());
    }

    #[test]
    fn order_three_williamson_style() {
        let q = quad(&[1, 1, 1], &[1, -1, -1], &[1, -1, -1], &[1, -1, -1]);
        assert!(is_complementary(&q));
        assert_eq!(classify_symmetry(&q).label(), "ssss");
    }

    #[test]
    fn mismatched_lengths_rejected() {
        let err = Quadruple::new(
            seq(&[1, 1, 1]),
            seq(&[1, 1, 1]),
            seq(&[1, 1, 1, 1, 1]),
            seq(&[1, 1, 1]),
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::BlockLengthMismatch {
                expected: 3,
                index: 2,
                actual: 5
            }
        );
    }

    #[test]
    fn skew_block_labelled_k() {
        // [1, 1, -1] satisfies a_1 = -a_2 with a_0 = 1, so its circulant is skew
        let q = quad(&[1, 1, -1], &[1, 1, 1], &[1, -1, -1], &[1, -1, -1]);
        let ty = classify_symmetry(&q);
        assert_eq!(ty.blocks()[0], BlockSymmetry::Skew);
        assert_eq!(ty.label(), "ksss");
    }

    #[test]
    fn negating_a_skew_block_makes_it_x() {
        let skew = seq(&[1, 1, -1]);
        assert_eq!(BlockSymmetry::of(&skew), BlockSymmetry::Skew);
        assert_eq!(BlockSymmetry::of(&skew.negated()), BlockSymmetry::Neither);
        let symmetric = seq(&[1, -1, -1]);
        assert_eq!(
            BlockSymmetry::of(&symmetric.negated()),
            BlockSymmetry::Symmetric
        );
    }

    #[test]
    fn sigma_decomposition_validation() {
        assert!(SigmaDecomposition::new(47, [3, 7, 7, 9]).is_ok());
        assert!(SigmaDecomposition::new(47, [-1, -5, 9, 9]).is_ok());
        // 1 is not congruent to 47 mod 4
        assert!(matches!(
            SigmaDecomposition::new(47, [1, 7, 7, 9]),
            Err(Error::InvalidDecomposition { .. })
        ));
        // negative sigma_c
        assert!(matches!(
            SigmaDecomposition::new(47, [3, 7, -7, 9]),
            Err(Error::InvalidDecomposition { .. })
        ));
        // squares off target
        assert!(matches!(
            SigmaDecomposition::new(47, [3, 7, 7, 7]),
            Err(Error::InvalidDecomposition { .. })
        ));
        assert!(matches!(
            SigmaDecomposition::new(46, [3, 7, 7, 9]),
            Err(Error::EvenOrder(46))
        ));
    }

    #[test]
    fn enumerate_order_one() {
        let list = enumerate_sigma_decompositions(1).unwrap();
        assert_eq!(list.len(), 1);
        assert_eq!(list[0].as_array(), [1, 1, 1, 1]);
    }

    #[test]
    fn enumerate_order_three() {
        let list = enumerate_sigma_decompositions(3).unwrap();
        let arrays: Vec<[i32; 4]> = list.iter().map(|d| d.as_array()).collect();
        assert_eq!(arrays, vec![[-1, -1, 1, 3], [-1, 3, 1, 1]]);
    }

    #[test]
    fn enumerate_rejects_even_order() {
        assert_eq!(
            enumerate_sigma_decompositions(4).unwrap_err(),
            Error::EvenOrder(4)
        );
    }

    #[test]
    fn enumerate_order_47_contains_known_rows() {
        let list = enumerate_sigma_decompositions(47).unwrap();
        let arrays: Vec<[i32; 4]> = list.iter().map(|d| d.as_array()).collect();
        assert!(arrays.contains(&[3, 7, 7, 9]));
        assert!(arrays.contains(&[-1, -5, 9, 9]));
    }
}
