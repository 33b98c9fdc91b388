//! Cup products on simplicial cohomology and the cup-length invariants
//! built from them: plain cup-length, `lcp` of the image `J(φ, ψ)` of
//! `φ* − ψ*` and of the ideal it generates, and zero-divisor cup-length.

mod cup;
mod length;

use thiserror::Error;

use crate::exactalg::AlgebraError;
use crate::homology::HomologyError;

pub use cup::{CohomologyClass, CohomologyRing};
pub use length::{
    cup_length, ideal_generators, j_generators, lcp_ideal, lcp_of_set, zero_divisor_cup_length, CupLength, Square,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("classes live on different complexes")]
    ComplexMismatch,
    #[error("classes have different degrees")]
    DegreeMismatch,
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("cup-length sets must consist of positive-degree classes")]
    DegreeZeroClass,
    #[error("a cohomology module is required")]
    NotCohomology,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}
