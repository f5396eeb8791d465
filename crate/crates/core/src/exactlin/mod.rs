//! Arbitrary-precision integer linear algebra: Hermite and Smith normal
//! forms, lattice saturation and exact membership.
//!
//! Matrices are row-sparse. Every result is an exact integer; rational
//! numbers only appear transiently inside [`Lattice::minimal_multiplier`].

mod hermite;
mod lattice;
mod matrix;
mod smith;
mod sparse;

pub use hermite::{hermite_basis, hnf, is_hermite_basis, HermiteForm};
pub use lattice::{minimal_multiplier, saturate, Lattice};
pub use matrix::IntMatrix;
pub use smith::{snf, SmithForm};
pub use sparse::SparseRow;

/// Exact integer scalar used for every coefficient.
pub type BigIntScalar = num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
}
