//! Error types shared across the crate.

use crate::search::TableStats;

/// Errors produced by sequence, matrix, and search operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("sequence must not be empty")]
    EmptySequence,
    #[error("sequence length must be odd, got {0}")]
    EvenLength(usize),
    #[error("entry {index} is {value}, expected +1 or -1")]
    NonUnitEntry { index: usize, value: i8 },
    #[error("periodic autocorrelation needs length >= 3, got {0}")]
    SequenceTooShort(usize),
    #[error("sequence is not symmetric: entry {index} differs from entry {mirror}")]
    NotSymmetric { index: usize, mirror: usize },
    #[error("tolerance must be nonnegative, got {0}")]
    NegativeTolerance(f64),
    #[error("prime index must be at least 1")]
    ZeroPrimeIndex,
    #[error("coordinate count mismatch: {left} vs {right}")]
    CoordLengthMismatch { left: usize, right: usize },
    #[error("matrix order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("blocks must all have length {expected}, block {index} has length {actual}")]
    BlockLengthMismatch {
        expected: usize,
        index: usize,
        actual: usize,
    },
    #[error("order must be odd, got {0}")]
    EvenOrder(usize),
    #[error("row sum {sigma} is infeasible for length {p}")]
    InfeasibleRowSum { sigma: i32, p: usize },
    #[error("row sums {sigmas:?} are not a valid decomposition for length {p}: {reason}")]
    InvalidDecomposition {
        sigmas: [i32; 4],
        p: usize,
        reason: &'static str,
    },
    #[error("search order must be odd, at least 3 and at most {max}, got {p}")]
    UnsupportedOrder { p: usize, max: usize },
    #[error("worker count must be at least 1")]
    ZeroWorkers,
    #[error("{0}")]
    Contract(#[from] ContractViolation),
    #[error("no stored record matches the probed autocorrelation sum")]
    RecordNotFound,
    #[error("table build needs about {needed_bytes} bytes, budget is {budget_bytes}")]
    MemoryBudget {
        needed_bytes: u64,
        budget_bytes: u64,
        partial: TableStats,
    },
    #[error("checkpoint digest {found} does not match configuration digest {expected}")]
    CheckpointMismatch { expected: String, found: String },
}

/// A named precondition of one of the array constructions that the input
/// failed to satisfy. Constructions refuse to produce output rather than
/// return a matrix that is not Hadamard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ContractViolation {
    #[error("blocks are not amicable")]
    NotAmicable,
    #[error("entries must all be fourth roots of unity")]
    NonQuarticEntries,
    #[error("blocks do not commute")]
    NonCommuting,
    #[error("row Gram sum X X* + Y Y* != 2p I")]
    LeftGramSum,
    #[error("column Gram sum X* X + Y* Y != 2p I")]
    RightGramSum,
    #[error("periodic autocorrelation sums do not vanish")]
    NotComplementary,
    #[error("block {0} must be symmetric")]
    BlockNotSymmetric(char),
    #[error("half-sum combination is not integral")]
    NonIntegralHalves,
}
