use thiserror::Error;

use crate::model::LatticePoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bad shape: {0}")]
    BadShape(String),

    #[error("bound a[{row}][{col}] = {value} must be a positive integer")]
    NonPositiveBound { row: usize, col: usize, value: i64 },

    #[error(
        "bounds are not ordered in column {col}: a[{row}][{col}] = {above} exceeds a[{next}][{col}] = {below}; \
         rows 0..n-1 must be nondecreasing in every column (the resultant is symmetric in the \
         polynomials, so permute them so that the largest supports come last)",
        next = row + 1
    )]
    OrderingViolated { row: usize, col: usize, above: i64, below: i64 },

    #[error("generator matrix is singular")]
    SingularGenerators,

    #[error("lattice point ({0}) lies outside the translated Minkowski sum")]
    PointOutOfRange(LatticePoint),

    #[error("point set is not closed: row ({row}) needs column ({column})")]
    NotClosed { row: LatticePoint, column: LatticePoint },

    #[error("unsupported export format `{0}` (expected `triplet` or `dense`)")]
    UnsupportedFormat(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),
}
