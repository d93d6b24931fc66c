//! Hadamard arrays built from circulant `{-1, 1}` blocks.
//!
//! Three constructions live here, all consuming four first rows `a, b, c, d`
//! of circulant blocks whose periodic autocorrelations sum to zero:
//!
//! * [`goethals_seidel`] — the classical 4x4 block array giving a real
//!   Hadamard matrix of order `4p`, with no symmetry hypothesis;
//! * [`kharaghani_seberry`] — a complex Hadamard matrix of order `2p`
//!   from four pairwise amicable blocks;
//! * [`two_symmetric_array`] — a complex Hadamard matrix of order `2p`
//!   needing only `A` and `B` symmetric, the other two blocks twisted by
//!   the back-diagonal matrix `R`.
//!
//! Every construction validates its preconditions eagerly and refuses to
//! emit a matrix that would fail verification; the search engine leans on
//! these as final arbiters of its hits.

use crate::error::{ContractViolation, Error};
use crate::matrix::{circulant, GaussInt, IntMatrix, QuarticMatrix};
use crate::paf::paf_unchecked;
use crate::seq::Sequence;

/// Outcome detail for a failed Hadamard check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HadamardViolation {
    /// An entry outside the allowed alphabet.
    Entry { row: usize, col: usize },
    /// A pair of rows whose inner product is wrong (equal indices mean the
    /// row has the wrong self inner product).
    RowPair { first: usize, second: usize },
}

impl std::fmt::Display for HadamardViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HadamardViolation::Entry { row, col } => {
                write!(f, "entry ({row}, {col}) is outside the alphabet")
            }
            HadamardViolation::RowPair { first, second } => {
                write!(f, "rows {first} and {second} are not orthogonal")
            }
        }
    }
}

/// Whether `A B* = B A*` exactly. Errors when the orders differ.
pub fn is_amicable(a: &QuarticMatrix, b: &QuarticMatrix) -> Result<bool, Error> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let left = a.mul(&b.conjugate_transpose());
    let right = b.mul(&a.conjugate_transpose());
    Ok(left == right)
}

/// Packs an amicable pair into `X = (A + B)/2 + i (A - B)/2`, which
/// satisfies `X X* = (A A* + B B*)/2`. For `{-1, 1}` inputs the result has
/// quartic unit entries.
pub fn combine_amicable(a: &QuarticMatrix, b: &QuarticMatrix) -> Result<QuarticMatrix, Error> {
    if !is_amicable(a, b)? {
        return Err(ContractViolation::NotAmicable.into());
    }
    let sum = a.add(b);
    let diff = a.sub(b);
    let half_sum = halved_quartic(&sum).ok_or(ContractViolation::NonIntegralHalves)?;
    let half_diff = halved_quartic(&diff).ok_or(ContractViolation::NonIntegralHalves)?;
    Ok(half_sum.add(&mul_by_i(&half_diff)))
}

fn halved_quartic(m: &QuarticMatrix) -> Option<QuarticMatrix> {
    if m.entries()
        .iter()
        .any(|e| e.re % 2 != 0 || e.im % 2 != 0)
    {
        return None;
    }
    let mut out = QuarticMatrix::zero(m.order());
    for i in 0..m.order() {
        for j in 0..m.order() {
            let e = m.get(i, j);
            out.set(i, j, GaussInt::new(e.re / 2, e.im / 2));
        }
    }
    Some(out)
}

fn mul_by_i(m: &QuarticMatrix) -> QuarticMatrix {
    let mut out = QuarticMatrix::zero(m.order());
    for i in 0..m.order() {
        for j in 0..m.order() {
            let e = m.get(i, j);
            out.set(i, j, GaussInt::new(-e.im, e.re));
        }
    }
    out
}

/// Assembles the order-`2p` array `[[X, Y], [Y*, -X*]]` after verifying the
/// four conditions that make it a complex Hadamard matrix:
///
/// 1. all entries of `X` and `Y` are fourth roots of unity,
/// 2. `X Y = Y X`,
/// 3. `X X* + Y Y* = 2p I`,
/// 4. `X* X + Y* Y = 2p I`.
///
/// Fails with the first violated condition by name.
pub fn two_block_array(x: &QuarticMatrix, y: &QuarticMatrix) -> Result<QuarticMatrix, Error> {
    if x.order() != y.order() {
        return Err(Error::OrderMismatch {
            left: x.order(),
            right: y.order(),
        });
    }
    let p = x.order();
    if !x.is_quartic_units() || !y.is_quartic_units() {
        return Err(ContractViolation::NonQuarticEntries.into());
    }
    if x.mul(y) != y.mul(x) {
        return Err(ContractViolation::NonCommuting.into());
    }
    let target = QuarticMatrix::scaled_identity(p, 2 * p as i64);
    let x_star = x.conjugate_transpose();
    let y_star = y.conjugate_transpose();
    if x.mul(&x_star).add(&y.mul(&y_star)) != target {
        return Err(ContractViolation::LeftGramSum.into());
    }
    if x_star.mul(x).add(&y_star.mul(y)) != target {
        return Err(ContractViolation::RightGramSum.into());
    }
    Ok(QuarticMatrix::from_blocks(
        x,
        y,
        &y_star,
        &x_star.negated(),
    ))
}

fn validate_equal_odd_lengths(blocks: [&Sequence; 4]) -> Result<usize, Error> {
    let p = blocks[0].len();
    for (index, block) in blocks.iter().enumerate() {
        if block.len() != p {
            return Err(Error::BlockLengthMismatch {
                expected: p,
                index,
                actual: block.len(),
            });
        }
    }
    Ok(p)
}

fn is_complementary_seqs(blocks: [&Sequence; 4]) -> bool {
    let m = blocks[0].half_len();
    let mut total = vec![0i32; m];
    for block in blocks {
        for (t, &c) in total.iter_mut().zip(paf_unchecked(block).coords()) {
            *t += i32::from(c);
        }
    }
    total.iter().all(|&t| t == 0)
}

/// The Goethals–Seidel array: a real Hadamard matrix of order `4p` from
/// four circulant blocks whose autocorrelations sum to zero. No symmetry
/// is required of any block.
pub fn goethals_seidel(
    a: &Sequence,
    b: &Sequence,
    c: &Sequence,
    d: &Sequence,
) -> Result<IntMatrix, Error> {
    validate_equal_odd_lengths([a, b, c, d])?;
    if !is_complementary_seqs([a, b, c, d]) {
        return Err(ContractViolation::NotComplementary.into());
    }
    Ok(goethals_seidel_assemble(a, b, c, d))
}

/// Raw assembly without the autocorrelation precondition; output is only
/// Hadamard when the precondition holds.
fn goethals_seidel_assemble(
    a: &Sequence,
    b: &Sequence,
    c: &Sequence,
    d: &Sequence,
) -> IntMatrix {
    let p = a.len();
    let a_m = circulant(a);
    let br = circulant(b).reversed_columns();
    let cr = circulant(c).reversed_columns();
    let dr = circulant(d).reversed_columns();
    let ct_r = circulant(c).transpose().reversed_columns();
    let dt_r = circulant(d).transpose().reversed_columns();
    let bt_r = circulant(b).transpose().reversed_columns();
    let br_neg = br.negated();
    let cr_neg = cr.negated();
    let dr_neg = dr.negated();
    let bt_r_neg = bt_r.negated();
    let ct_r_neg = ct_r.negated();
    let dt_r_neg = dt_r.negated();

    let grid: [[&IntMatrix; 4]; 4] = [
        [&a_m, &br, &cr, &dr],
        [&br_neg, &a_m, &dt_r_neg, &ct_r],
        [&cr_neg, &dt_r, &a_m, &bt_r_neg],
        [&dr_neg, &ct_r_neg, &bt_r, &a_m],
    ];
    let mut h = IntMatrix::zero(4 * p);
    for (bi, row) in grid.iter().enumerate() {
        for (bj, block) in row.iter().enumerate() {
            for i in 0..p {
                for j in 0..p {
                    h.set(bi * p + i, bj * p + j, block.get(i, j));
                }
            }
        }
    }
    h
}

/// The Kharaghani–Seberry array: a complex Hadamard matrix of order `2p`
/// from four pairwise amicable circulant blocks whose autocorrelations sum
/// to zero.
pub fn kharaghani_seberry(
    a: &Sequence,
    b: &Sequence,
    c: &Sequence,
    d: &Sequence,
) -> Result<QuarticMatrix, Error> {
    validate_equal_odd_lengths([a, b, c, d])?;
    let blocks: Vec<QuarticMatrix> = [a, b, c, d]
        .iter()
        .map(|s| QuarticMatrix::from_int(&circulant(s)))
        .collect();
    for i in 0..4 {
        for j in (i + 1)..4 {
            if !is_amicable(&blocks[i], &blocks[j])? {
                return Err(ContractViolation::NotAmicable.into());
            }
        }
    }
    if !is_complementary_seqs([a, b, c, d]) {
        return Err(ContractViolation::NotComplementary.into());
    }
    let a_m = circulant(a);
    let b_m = circulant(b);
    let c_m = circulant(c);
    let d_m = circulant(d);
    // halves of sums and differences of ±1 matrices are always integral
    let x = a_m.add(&b_m).halved().expect("entries are ±1");
    let y = a_m.sub(&b_m).halved().expect("entries are ±1");
    let v = c_m.add(&d_m).halved().expect("entries are ±1");
    let w = c_m.sub(&d_m).halved().expect("entries are ±1");
    Ok(QuarticMatrix::from_blocks(
        &QuarticMatrix::from_re_im(&x, &y),
        &QuarticMatrix::from_re_im(&v, &w),
        &QuarticMatrix::from_re_im(&v.negated(), &w),
        &QuarticMatrix::from_re_im(&x, &y.negated()),
    ))
}

/// The two-symmetric-block array: a complex Hadamard matrix of order `2p`
/// from circulant blocks with autocorrelations summing to zero, where only
/// `A` and `B` must be symmetric. `C` and `D` enter through the
/// back-diagonal twist `DR`:
///
/// ```text
/// X = (A + B)/2 + i (A - B)/2      Y = (C + DR)/2 + i (C - DR)/2
/// ```
///
/// and the result is `[[X, Y], [Y*, -X*]]`, assembled and verified by
/// [`two_block_array`].
pub fn two_symmetric_array(
    a: &Sequence,
    b: &Sequence,
    c: &Sequence,
    d: &Sequence,
) -> Result<QuarticMatrix, Error> {
    validate_equal_odd_lengths([a, b, c, d])?;
    if !a.is_symmetric() {
        return Err(ContractViolation::BlockNotSymmetric('a').into());
    }
    if !b.is_symmetric() {
        return Err(ContractViolation::BlockNotSymmetric('b').into());
    }
    if !is_complementary_seqs([a, b, c, d]) {
        return Err(ContractViolation::NotComplementary.into());
    }
    let a_m = circulant(a);
    let b_m = circulant(b);
    let c_m = circulant(c);
    let dr = circulant(d).reversed_columns();
    let x = QuarticMatrix::from_re_im(
        &a_m.add(&b_m).halved().expect("entries are ±1"),
        &a_m.sub(&b_m).halved().expect("entries are ±1"),
    );
    let y = QuarticMatrix::from_re_im(
        &c_m.add(&dr).halved().expect("entries are ±1"),
        &c_m.sub(&dr).halved().expect("entries are ±1"),
    );
    two_block_array(&x, &y)
}

/// Whether `H` is a real Hadamard matrix: all entries `±1` and
/// `H H^T = n I` exactly.
pub fn is_real_hadamard(h: &IntMatrix) -> bool {
    real_hadamard_violation(h).is_none()
}

/// Diagnostic variant of [`is_real_hadamard`]: reports the first failing
/// entry or row pair.
pub fn real_hadamard_violation(h: &IntMatrix) -> Option<HadamardViolation> {
    let n = h.order();
    for i in 0..n {
        for j in 0..n {
            let e = h.get(i, j);
            if e != 1 && e != -1 {
                return Some(HadamardViolation::Entry { row: i, col: j });
            }
        }
    }
    for i in 0..n {
        for j in i..n {
            let dot: i64 = h.row(i).iter().zip(h.row(j)).map(|(&x, &y)| x * y).sum();
            let expected = if i == j { n as i64 } else { 0 };
            if dot != expected {
                return Some(HadamardViolation::RowPair { first: i, second: j });
            }
        }
    }
    None
}

/// Whether `K` is a complex Hadamard matrix over the fourth roots of unity:
/// all entries in `{1, i, -1, -i}` and `K K* = n I` exactly.
pub fn is_complex_hadamard(k: &QuarticMatrix) -> bool {
    complex_hadamard_violation(k).is_none()
}

/// Diagnostic variant of [`is_complex_hadamard`]: reports the first failing
/// entry or row pair.
pub fn complex_hadamard_violation(k: &QuarticMatrix) -> Option<HadamardViolation> {
    if let Some((row, col)) = k.first_non_unit() {
        return Some(HadamardViolation::Entry { row, col });
    }
    let n = k.order();
    for i in 0..n {
        for j in i..n {
            let mut dot = GaussInt::new(0, 0);
            for t in 0..n {
                dot += k.get(i, t) * k.get(j, t).conj();
            }
            let expected = if i == j {
                GaussInt::new(n as i64, 0)
            } else {
                GaussInt::new(0, 0)
            };
            if dot != expected {
                return Some(HadamardViolation::RowPair { first: i, second: j });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::BackDiagonal;

    fn seq(entries: &[i8]) -> Sequence {
        Sequence::from_slice(entries).unwrap()
    }

    #[test]
    fn symmetric_circulants_are_amicable() {
        let a = QuarticMatrix::from_int(&circulant(&seq(&[1, -1, 1, 1, -1])));
        let b = QuarticMatrix::from_int(&circulant(&seq(&[1, 1, -1, -1, 1])));
        assert!(is_amicable(&a, &b).unwrap());
    }

    #[test]
    fn circulant_and_twisted_circulant_are_amicable() {
        let a = QuarticMatrix::from_int(&circulant(&seq(&[1, 1, -1, 1, -1, -1, 1])));
        let br = QuarticMatrix::from_int(
            &circulant(&seq(&[1, -1, -1, 1, 1, 1, -1])).reversed_columns(),
        );
        assert!(is_amicable(&a, &br).unwrap());
    }

    #[test]
    fn non_amicable_pair_detected() {
        // a non-symmetric circulant against a symmetric one
        let a = QuarticMatrix::from_int(&circulant(&seq(&[1, -1, -1, 1, 1])));
        let b = QuarticMatrix::from_int(&circulant(&seq(&[1, 1, -1, -1, 1])));
        assert!(!is_amicable(&a, &b).unwrap());
        assert_eq!(
            combine_amicable(&a, &b).unwrap_err(),
            Error::Contract(ContractViolation::NotAmicable)
        );
    }

    #[test]
    fn amicability_order_mismatch() {
        let a = QuarticMatrix::from_int(&circulant(&seq(&[1, 1, 1])));
        let b = QuarticMatrix::from_int(&circulant(&seq(&[1, 1, 1, 1, 1])));
        assert_eq!(
            is_amicable(&a, &b).unwrap_err(),
            Error::OrderMismatch { left: 3, right: 5 }
        );
    }

    #[test]
    fn combine_amicable_identical_blocks() {
        let ones = QuarticMatrix::from_int(&IntMatrix::from_rows(vec![vec![1; 3]; 3]));
        assert_eq!(combine_amicable(&ones, &ones).unwrap(), ones);
    }

    #[test]
    fn combine_amicable_opposite_singletons() {
        let plus = QuarticMatrix::from_int(&IntMatrix::scaled_identity(1, 1));
        let minus = QuarticMatrix::from_int(&IntMatrix::scaled_identity(1, -1));
        let x = combine_amicable(&plus, &minus).unwrap();
        assert_eq!(x.get(0, 0), GaussInt::new(0, 1));
    }

    #[test]
    fn combine_amicable_gram_identity() {
        let a = QuarticMatrix::from_int(&circulant(&seq(&[1, -1, 1, 1, -1])));
        let b = QuarticMatrix::from_int(&circulant(&seq(&[1, 1, 1, 1, 1])));
        let x = combine_amicable(&a, &b).unwrap();
        let lhs = x.mul(&x.conjugate_transpose());
        let gram_sum = a
            .mul(&a.conjugate_transpose())
            .add(&b.mul(&b.conjugate_transpose()));
        let rhs = halved_quartic(&gram_sum).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn two_block_array_singletons() {
        let one = QuarticMatrix::scaled_identity(1, 1);
        let z = two_block_array(&one, &one).unwrap();
        assert_eq!(z.get(0, 0), GaussInt::new(1, 0));
        assert_eq!(z.get(0, 1), GaussInt::new(1, 0));
        assert_eq!(z.get(1, 0), GaussInt::new(1, 0));
        assert_eq!(z.get(1, 1), GaussInt::new(-1, 0));
        assert!(is_complex_hadamard(&z));
    }

    #[test]
    fn two_block_array_imaginary_singleton() {
        let mut x = QuarticMatrix::zero(1);
        x.set(0, 0, GaussInt::new(0, 1));
        let y = QuarticMatrix::scaled_identity(1, 1);
        let z = two_block_array(&x, &y).unwrap();
        assert_eq!(z.get(0, 0), GaussInt::new(0, 1));
        assert_eq!(z.get(0, 1), GaussInt::new(1, 0));
        assert_eq!(z.get(1, 0), GaussInt::new(1, 0));
        assert_eq!(z.get(1, 1), GaussInt::new(0, 1));
        assert!(is_complex_hadamard(&z));
    }

    #[test]
    fn two_block_array_names_failed_condition() {
        let zero = QuarticMatrix::zero(1);
        assert_eq!(
            two_block_array(&zero, &zero).unwrap_err(),
            Error::Contract(ContractViolation::NonQuarticEntries)
        );
        // all-ones blocks commute and have unit entries but the Gram sum
        // comes out rank one instead of 2p I
        let x = QuarticMatrix::from_int(&IntMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]));
        assert_eq!(
            two_block_array(&x, &x).unwrap_err(),
            Error::Contract(ContractViolation::LeftGramSum)
        );
    }

    #[test]
    fn goethals_seidel_order_four() {
        let one = seq(&[1]);
        let h = goethals_seidel(&one, &one, &one, &one).unwrap();
        assert_eq!(h.order(), 4);
        assert!(is_real_hadamard(&h));
    }

    #[test]
    fn goethals_seidel_order_twelve() {
        let a = seq(&[1, 1, 1]);
        let b = seq(&[1, -1, -1]);
        let h = goethals_seidel(&a, &b, &b, &b).unwrap();
        assert_eq!(h.order(), 12);
        assert!(is_real_hadamard(&h));
    }

    #[test]
    fn goethals_seidel_rejects_bad_quadruple() {
        let a = seq(&[1, 1, 1]);
        assert_eq!(
            goethals_seidel(&a, &a, &a, &a).unwrap_err(),
            Error::Contract(ContractViolation::NotComplementary)
        );
    }

    /// Exhaustive at p = 3: assembly yields a Hadamard matrix exactly when
    /// the autocorrelation sums vanish.
    #[test]
    fn goethals_seidel_iff_complementary() {
        let mut seqs = Vec::new();
        for bits in 0..8u8 {
            let entries: Vec<i8> = (0..3)
                .map(|j| if bits >> j & 1 == 1 { 1 } else { -1 })
                .collect();
            seqs.push(seq(&entries));
        }
        for a in &seqs {
            for b in &seqs {
                for c in &seqs {
                    for d in &seqs {
                        let complementary = is_complementary_seqs([a, b, c, d]);
                        let h = goethals_seidel_assemble(a, b, c, d);
                        assert_eq!(is_real_hadamard(&h), complementary);
                    }
                }
            }
        }
    }

    #[test]
    fn kharaghani_seberry_singletons() {
        let one = seq(&[1]);
        let k = kharaghani_seberry(&one, &one, &one, &one).unwrap();
        assert_eq!(k.get(0, 0), GaussInt::new(1, 0));
        assert_eq!(k.get(0, 1), GaussInt::new(1, 0));
        assert_eq!(k.get(1, 0), GaussInt::new(-1, 0));
        assert_eq!(k.get(1, 1), GaussInt::new(1, 0));
        assert!(is_complex_hadamard(&k));
    }

    #[test]
    fn kharaghani_seberry_order_six() {
        let a = seq(&[1, 1, 1]);
        let b = seq(&[1, -1, -1]);
        let k = kharaghani_seberry(&a, &b, &b, &b).unwrap();
        assert_eq!(k.order(), 6);
        assert!(is_complex_hadamard(&k));
        assert!(k.is_quartic_units());
    }

    #[test]
    fn kharaghani_seberry_rejects_non_amicable() {
        // c is not symmetric, so it fails amicability with the symmetric a
        let a = seq(&[1, 1, -1, -1, 1]);
        let b = seq(&[1, -1, 1, 1, -1]);
        let c = seq(&[1, 1, 1, -1, -1]);
        let err = kharaghani_seberry(&a, &b, &c, &c).unwrap_err();
        assert_eq!(err, Error::Contract(ContractViolation::NotAmicable));
    }

    #[test]
    fn two_symmetric_array_singletons() {
        let one = seq(&[1]);
        let k = two_symmetric_array(&one, &one, &one, &one).unwrap();
        assert_eq!(k.get(0, 0), GaussInt::new(1, 0));
        assert_eq!(k.get(0, 1), GaussInt::new(1, 0));
        assert_eq!(k.get(1, 0), GaussInt::new(1, 0));
        assert_eq!(k.get(1, 1), GaussInt::new(-1, 0));
        assert!(is_complex_hadamard(&k));
    }

    #[test]
    fn two_symmetric_array_order_six() {
        let a = seq(&[1, 1, 1]);
        let b = seq(&[1, -1, -1]);
        let c = seq(&[-1, 1, 1]);
        let k = two_symmetric_array(&a, &b, &c, &c).unwrap();
        assert_eq!(k.order(), 6);
        assert!(is_complex_hadamard(&k));
    }

    #[test]
    fn two_symmetric_array_rejects_asymmetric_a() {
        let a = seq(&[1, 1, -1]);
        let b = seq(&[1, -1, -1]);
        assert_eq!(
            two_symmetric_array(&a, &b, &b, &b).unwrap_err(),
            Error::Contract(ContractViolation::BlockNotSymmetric('a'))
        );
    }

    #[test]
    fn two_symmetric_array_rejects_bad_sums() {
        let a = seq(&[1, 1, 1]);
        assert_eq!(
            two_symmetric_array(&a, &a, &a, &a).unwrap_err(),
            Error::Contract(ContractViolation::NotComplementary)
        );
    }

    #[test]
    fn hadamard_checks_reject_counterexamples() {
        let all_ones = IntMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(
            real_hadamard_violation(&all_ones),
            Some(HadamardViolation::RowPair { first: 0, second: 1 })
        );
        let with_zero = IntMatrix::from_rows(vec![vec![1, 0], vec![1, -1]]);
        assert_eq!(
            real_hadamard_violation(&with_zero),
            Some(HadamardViolation::Entry { row: 0, col: 1 })
        );
        let order_two = IntMatrix::from_rows(vec![vec![1, 1], vec![1, -1]]);
        assert!(is_real_hadamard(&order_two));
        assert!(is_real_hadamard(&IntMatrix::scaled_identity(1, 1)));
    }

    #[test]
    fn complex_check_rejects_non_orthogonal_rows() {
        let ones = QuarticMatrix::from_int(&IntMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]));
        assert_eq!(
            complex_hadamard_violation(&ones),
            Some(HadamardViolation::RowPair { first: 0, second: 1 })
        );
    }

    #[test]
    fn back_diagonal_twist_keeps_symmetry() {
        // (D R) = (D R)^T for circulant D
        let d = circulant(&seq(&[1, -1, 1, 1, -1, -1, 1]));
        let r = BackDiagonal::new(7).matrix();
        let dr = d.mul(&r);
        assert!(dr.is_symmetric());
    }
}
