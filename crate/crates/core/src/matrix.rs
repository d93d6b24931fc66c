//! Dense exact matrices over the integers and the Gaussian integers.
//!
//! Orders stay small (at most 188 here), so everything is plain row-major
//! `O(n^3)` arithmetic with no structured fast paths. Entries of any product
//! formed in this crate are bounded by the matrix order, far inside `i64`.

use num_complex::Complex;

use crate::seq::Sequence;

/// A Gaussian integer.
pub type GaussInt = Complex<i64>;

/// Square integer matrix, dense row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            entries: vec![0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::scaled_identity(order, 1)
    }

    pub fn scaled_identity(order: usize, scale: i64) -> Self {
        let mut m = Self::zero(order);
        for i in 0..order {
            m.set(i, i, scale);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in &rows {
            assert_eq!(row.len(), order, "rows must form a square matrix");
            entries.extend_from_slice(row);
        }
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.order + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.order;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn negated(&self) -> IntMatrix {
        IntMatrix {
            order: self.order,
            entries: self.entries.iter().map(|&e| -e).collect(),
        }
    }

    /// Right multiplication by the back-diagonal matrix: reverses columns.
    pub fn reversed_columns(&self) -> IntMatrix {
        let n = self.order;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, n - 1 - j, self.get(i, j));
            }
        }
        out
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.order, rhs.order, "matrix orders must match");
        let n = self.order;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let lhs_ik = self.get(i, k);
                if lhs_ik == 0 {
                    continue;
                }
                let rhs_row = rhs.row(k);
                let out_row = &mut out.entries[i * n..(i + 1) * n];
                for (o, &r) in out_row.iter_mut().zip(rhs_row) {
                    *o += lhs_ik * r;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.order, rhs.order, "matrix orders must match");
        IntMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&x, &y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.order, rhs.order, "matrix orders must match");
        IntMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&x, &y)| x - y)
                .collect(),
        }
    }

    /// Whether every entry is `+1` or `-1`.
    pub fn is_pm_one(&self) -> bool {
        self.entries.iter().all(|&e| e == 1 || e == -1)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Exact halving; `None` when some entry is odd.
    pub fn halved(&self) -> Option<IntMatrix> {
        if self.entries.iter().any(|&e| e % 2 != 0) {
            return None;
        }
        Some(IntMatrix {
            order: self.order,
            entries: self.entries.iter().map(|&e| e / 2).collect(),
        })
    }
}

/// The back-diagonal permutation matrix `R` (ones on the anti-diagonal).
/// It satisfies `R = R^T`, `R·R = I`, and `R X^T = X R` for every circulant
/// `X` of the same order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BackDiagonal {
    order: usize,
}

impl BackDiagonal {
    pub fn new(order: usize) -> Self {
        Self { order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.order);
        for i in 0..self.order {
            m.set(i, self.order - 1 - i, 1);
        }
        m
    }
}

/// The circulant matrix with first row `a`: row `i` is `a` cyclically
/// shifted right by `i`, i.e. entry `(i, j)` is `a_{(j - i) mod p}`.
pub fn circulant(a: &Sequence) -> IntMatrix {
    let p = a.len();
    let mut m = IntMatrix::zero(p);
    for i in 0..p {
        for j in 0..p {
            let k = (j + p - i) % p;
            m.set(i, j, i64::from(a.get(k)));
        }
    }
    m
}

/// Square matrix over the Gaussian integers. Hadamard candidates restrict
/// entries to the fourth roots of unity `{1, i, -1, -i}`; intermediate
/// products may hold arbitrary Gaussian integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticMatrix {
    order: usize,
    entries: Vec<GaussInt>,
}

impl QuarticMatrix {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            entries: vec![GaussInt::new(0, 0); order * order],
        }
    }

    pub fn scaled_identity(order: usize, scale: i64) -> Self {
        let mut m = Self::zero(order);
        for i in 0..order {
            m.set(i, i, GaussInt::new(scale, 0));
        }
        m
    }

    /// Embeds an integer matrix as the real part.
    pub fn from_int(m: &IntMatrix) -> Self {
        Self {
            order: m.order(),
            entries: m.entries.iter().map(|&e| GaussInt::new(e, 0)).collect(),
        }
    }

    /// Builds `re + i·im` from two integer matrices of equal order.
    pub fn from_re_im(re: &IntMatrix, im: &IntMatrix) -> Self {
        assert_eq!(re.order(), im.order(), "matrix orders must match");
        Self {
            order: re.order(),
            entries: re
                .entries
                .iter()
                .zip(&im.entries)
                .map(|(&r, &i)| GaussInt::new(r, i))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> GaussInt {
        self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: GaussInt) {
        self.entries[i * self.order + j] = value;
    }

    pub fn entries(&self) -> &[GaussInt] {
        &self.entries
    }

    pub fn conjugate_transpose(&self) -> QuarticMatrix {
        let n = self.order;
        let mut out = QuarticMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn transpose(&self) -> QuarticMatrix {
        let n = self.order;
        let mut out = QuarticMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn negated(&self) -> QuarticMatrix {
        QuarticMatrix {
            order: self.order,
            entries: self.entries.iter().map(|&e| -e).collect(),
        }
    }

    pub fn mul(&self, rhs: &QuarticMatrix) -> QuarticMatrix {
        assert_eq!(self.order, rhs.order, "matrix orders must match");
        let n = self.order;
        let mut out = QuarticMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let lhs_ik = self.get(i, k);
                if lhs_ik.re == 0 && lhs_ik.im == 0 {
                    continue;
                }
                let rhs_row = &rhs.entries[k * n..(k + 1) * n];
                let out_row = &mut out.entries[i * n..(i + 1) * n];
                for (o, &r) in out_row.iter_mut().zip(rhs_row) {
                    *o += lhs_ik * r;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &QuarticMatrix) -> QuarticMatrix {
        assert_eq!(self.order, rhs.order, "matrix orders must match");
        QuarticMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&x, &y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &QuarticMatrix) -> QuarticMatrix {
        assert_eq!(self.order, rhs.order, "matrix orders must match");
        QuarticMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&x, &y)| x - y)
                .collect(),
        }
    }

    /// Whether every entry lies in `{1, i, -1, -i}`.
    pub fn is_quartic_units(&self) -> bool {
        self.entries.iter().all(|e| is_quartic_unit(*e))
    }

    /// First entry outside `{1, i, -1, -i}`, if any.
    pub fn first_non_unit(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|e| !is_quartic_unit(*e))
            .map(|pos| (pos / self.order, pos % self.order))
    }

    /// Assembles the order-`2p` block matrix `[[tl, tr], [bl, br]]` from
    /// four order-`p` blocks.
    pub fn from_blocks(
        tl: &QuarticMatrix,
        tr: &QuarticMatrix,
        bl: &QuarticMatrix,
        br: &QuarticMatrix,
    ) -> QuarticMatrix {
        let p = tl.order;
        assert!(
            tr.order == p && bl.order == p && br.order == p,
            "blocks must share one order"
        );
        let mut out = QuarticMatrix::zero(2 * p);
        for i in 0..p {
            for j in 0..p {
                out.set(i, j, tl.get(i, j));
                out.set(i, j + p, tr.get(i, j));
                out.set(i + p, j, bl.get(i, j));
                out.set(i + p, j + p, br.get(i, j));
            }
        }
        out
    }
}

pub(crate) fn is_quartic_unit(e: GaussInt) -> bool {
    (e.re.abs() == 1 && e.im == 0) || (e.re == 0 && e.im.abs() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(entries: &[i8]) -> Sequence {
        Sequence::from_slice(entries).unwrap()
    }

    #[test]
    fn circulant_of_singleton() {
        let m = circulant(&seq(&[1]));
        assert_eq!(m.order(), 1);
        assert_eq!(m.get(0, 0), 1);
    }

    #[test]
    fn circulant_shifts_right() {
        let m = circulant(&seq(&[1, -1, -1]));
        assert_eq!(m.row(0), &[1, -1, -1]);
        assert_eq!(m.row(1), &[-1, 1, -1]);
        assert_eq!(m.row(2), &[-1, -1, 1]);
    }

    #[test]
    fn circulant_first_row_is_input() {
        let a = seq(&[1, -1, 1, 1, -1, -1, 1]);
        let m = circulant(&a);
        let first: Vec<i64> = a.entries().iter().map(|&e| i64::from(e)).collect();
        assert_eq!(m.row(0), first.as_slice());
    }

    #[test]
    fn back_diagonal_is_involution() {
        let r = BackDiagonal::new(5).matrix();
        assert_eq!(r.transpose(), r);
        assert_eq!(r.mul(&r), IntMatrix::identity(5));
    }

    #[test]
    fn reversed_columns_matches_r_product() {
        let x = circulant(&seq(&[1, -1, 1, 1, -1]));
        let r = BackDiagonal::new(5).matrix();
        assert_eq!(x.reversed_columns(), x.mul(&r));
    }

    #[test]
    fn r_commutes_with_circulant_transpose() {
        let x = circulant(&seq(&[1, 1, -1, 1, -1, -1, 1]));
        let r = BackDiagonal::new(7).matrix();
        assert_eq!(r.mul(&x.transpose()), x.mul(&r));
    }

    #[test]
    fn quartic_unit_predicate() {
        assert!(is_quartic_unit(GaussInt::new(1, 0)));
        assert!(is_quartic_unit(GaussInt::new(0, -1)));
        assert!(!is_quartic_unit(GaussInt::new(1, 1)));
        assert!(!is_quartic_unit(GaussInt::new(0, 0)));
        assert!(!is_quartic_unit(GaussInt::new(2, 0)));
    }

    #[test]
    fn conjugate_transpose_involution() {
        let x = QuarticMatrix::from_re_im(
            &circulant(&seq(&[1, -1, 1])),
            &circulant(&seq(&[1, 1, -1])),
        );
        assert_eq!(x.conjugate_transpose().conjugate_transpose(), x);
    }
}
