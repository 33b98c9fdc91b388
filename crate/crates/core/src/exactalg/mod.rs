//! Exact linear algebra over `Z`, `Q` and `Z_p`.
//!
//! Dense Smith normal forms back everything over the integers; sparse column
//! reduction ([`sparse`]) handles large complexes over fields. Both routes
//! produce [`Presentation`]s, so callers never see which one was used.

mod matrix;
mod presentation;
mod ring;
mod smith;
mod span;
pub mod sparse;

use thiserror::Error;

pub use matrix::Matrix;
pub use presentation::{homs_equal, quotient_presentation, ModuleHom, Presentation};
pub use ring::{bigint_to_i64, CoeffRing, EuclideanRing, Integers, PrimeField, Rationals};
pub use smith::{image_basis, kernel_basis, rank, smith_normal_form, ColumnSpace, SmithForm};
pub use span::Span;
pub use sparse::{sparse_kernel, EchelonBasis, SparseVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unsupported coefficient ring `{0}` (expected z, q, z2 or zp:<prime>)")]
    UnsupportedRing(String),
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("operation requires field coefficients, got {0}")]
    NotAField(CoeffRing),
    #[error("boundary column {column} is not in the span of the cycles")]
    BoundaryNotInCycles { column: usize },
    #[error("cycle generators are linearly dependent")]
    CyclesNotIndependent,
    #[error("vector is not a cycle of the presented module")]
    NotACycle,
    #[error("homomorphisms have different source or target presentations")]
    PresentationMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("column {column} does not respect the source relations")]
    IllDefinedHom { column: usize },
}
