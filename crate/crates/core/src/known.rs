//! Reference quadruples of order 47 with symmetry type `ssxx`, found by the
//! meet-in-the-middle search in this crate's `search` module.
//!
//! Feeding either quadruple to [`two_symmetric_array`] yields a complex
//! Hadamard matrix of order 94; [`goethals_seidel`] yields a real Hadamard
//! matrix of order 188.
//!
//! [`two_symmetric_array`]: crate::arrays::two_symmetric_array
//! [`goethals_seidel`]: crate::arrays::goethals_seidel

use crate::quad::Quadruple;
use crate::seq::Sequence;

/// First rows of the quadruple with row sums `(3, 7, 7, 9)`.
pub const QUAD_47_A: [[i8; 47]; 4] = [
    [
        1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, -1, 1, -1, 1, 1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1,
        1, -1, -1, -1, -1, -1, 1, 1, -1, 1, -1, -1, -1, 1, 1, -1, 1, -1, 1, 1, 1,
    ],
    [
        1, 1, -1, 1, -1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, -1, 1, 1, -1, -1, 1, -1, 1, 1, 1, 1,
        -1, 1, -1, -1, 1, 1, -1, -1, -1, 1, 1, -1, 1, -1, 1, 1, 1, -1, 1, -1, 1,
    ],
    [
        1, 1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, -1, -1, -1, -1,
        -1, 1, -1, -1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, 1, -1, -1, 1, -1, 1, -1,
    ],
    [
        1, 1, 1, 1, 1, 1, -1, -1, 1, 1, 1, 1, -1, 1, 1, -1, 1, -1, 1, -1, -1, 1, 1, -1, 1, 1, -1,
        -1, -1, 1, -1, 1, 1, -1, 1, 1, 1, -1, -1, -1, 1, 1, -1, 1, 1, -1, -1,
    ],
];

/// First rows of the quadruple with row sums `(-1, -5, 9, 9)`.
pub const QUAD_47_B: [[i8; 47]; 4] = [
    [
        1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1, 1, -1, -1, -1, 1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 1,
        1, 1, 1, -1, -1, -1, 1, -1, -1, -1, 1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1,
    ],
    [
        1, -1, -1, -1, 1, 1, -1, -1, 1, -1, 1, -1, -1, -1, 1, -1, 1, 1, -1, -1, 1, -1, 1, 1, 1,
        1, -1, 1, -1, -1, 1, 1, -1, 1, -1, -1, -1, 1, -1, 1, -1, -1, 1, 1, -1, -1, -1,
    ],
    [
        1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, 1, -1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1, -1,
        1, 1, -1, -1, -1, 1, -1, -1, 1, 1, -1, 1, -1, 1, 1, 1, 1, -1, 1, 1, -1,
    ],
    [
        1, 1, 1, 1, 1, 1, -1, 1, -1, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, 1, 1, 1, -1, 1, -1, -1, 1,
        -1, 1, 1, -1, 1, 1, 1, 1, -1, 1, -1, -1, -1, 1, -1, -1, 1, -1, -1, -1,
    ],
];

fn quadruple_from(rows: &[[i8; 47]; 4]) -> Quadruple {
    let [a, b, c, d] = rows;
    Quadruple::new(
        Sequence::from_slice(a).expect("valid row"),
        Sequence::from_slice(b).expect("valid row"),
        Sequence::from_slice(c).expect("valid row"),
        Sequence::from_slice(d).expect("valid row"),
    )
    .expect("equal lengths")
}

/// The order-47 quadruple with row sums `(3, 7, 7, 9)`.
pub fn quadruple_47_a() -> Quadruple {
    quadruple_from(&QUAD_47_A)
}

/// The order-47 quadruple with row sums `(-1, -5, 9, 9)`.
pub fn quadruple_47_b() -> Quadruple {
    quadruple_from(&QUAD_47_B)
}
