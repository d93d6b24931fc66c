//! Exact construction, verification, and search of real and complex
//! Hadamard matrices built from circulant `{-1, 1}` blocks of odd order.
//!
//! The crate has three layers:
//!
//! * **Sequences** ([`seq`], [`paf`], [`bound`], [`primes`]): first rows of
//!   circulant blocks, their periodic autocorrelation vectors, the
//!   spectral feasibility bound, and the prime-weighted hash that indexes
//!   autocorrelation sums. All arithmetic except the cosine evaluation is
//!   exact.
//! * **Matrices** ([`matrix`], [`arrays`], [`quad`]): dense exact matrices
//!   over the integers and Gaussian integers, the Goethals–Seidel,
//!   Kharaghani–Seberry, and two-symmetric-block arrays, Hadamard
//!   verification, and quadruple certification.
//! * **Search** ([`search`]): a meet-in-the-middle engine that tabulates
//!   symmetric-pair autocorrelation sums by hash and probes random
//!   `(c, d)` pairs for exact cancellations, with deterministic seeding
//!   and resumable trial counters.
//!
//! The [`known`] module ships two order-47 quadruples with symmetry type
//! `ssxx`; either one turns into a complex Hadamard matrix of order 94 via
//! [`arrays::two_symmetric_array`] and a real Hadamard matrix of order 188
//! via [`arrays::goethals_seidel`].
//!
//! ```
//! use hadamard::{arrays, known, quad};
//!
//! let q = known::quadruple_47_a();
//! assert!(quad::is_complementary(&q));
//! let k = arrays::two_symmetric_array(q.a(), q.b(), q.c(), q.d()).unwrap();
//! assert_eq!(k.order(), 94);
//! assert!(arrays::is_complex_hadamard(&k));
//! ```

pub mod arrays;
pub mod bound;
pub mod error;
pub mod known;
pub mod matrix;
pub mod paf;
pub mod primes;
pub mod quad;
pub mod search;
pub mod seq;

pub use arrays::{
    combine_amicable, complex_hadamard_violation, goethals_seidel, is_amicable,
    is_complex_hadamard, is_real_hadamard, kharaghani_seberry, real_hadamard_violation,
    two_block_array, two_symmetric_array, HadamardViolation,
};
pub use bound::{dft_bound_check, CosineTable};
pub use error::{ContractViolation, Error};
pub use matrix::{circulant, BackDiagonal, GaussInt, IntMatrix, QuarticMatrix};
pub use paf::{norm, paf, paf_hash, PafVector};
pub use primes::nth_prime;
pub use quad::{
    classify_symmetry, enumerate_sigma_decompositions, is_complementary, BlockSymmetry,
    Quadruple, SigmaDecomposition, SymmetryType,
};
pub use search::{
    generate_symmetric_candidates, Checkpoint, LookupTable, ProbeMode, ProgressRecord,
    SearchConfig, SearchEngine, SearchHit, SearchSummary, StopReason, TableStats,
};
pub use seq::{symmetric_from_half, HalfVector, RowSumTarget, Sequence};
