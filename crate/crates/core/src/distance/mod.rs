//! Cover certificates for the simplicial cohomological distance.
//!
//! A cover `{K_0, ..., K_n}` of `K` by subcomplexes certifies distance `≤ n`
//! when `φ` and `ψ` induce the same maps on every piece. Lower bounds come
//! from nonzero products of classes in the image of `φ* − ψ*`, or from an
//! exhaustive search that rules out smaller covers.

mod bounds;
mod engine;
mod search;
mod verify;

use std::sync::Arc;

use thiserror::Error;

use crate::complex::{product, ComplexError, SimplicialComplex, SimplicialMap};
use crate::exactalg::{AlgebraError, CoeffRing};
use crate::homology::{HomologyError, Variance};
use crate::ring::RingError;

pub use bounds::{bounds, hscat, hstc, lower_bound, BoundOptions, BoundReport, JFactor, LowerBound, LowerWitness};
pub use search::{search, search_with_stats, SearchOptions, SearchStats, Strategy};
pub use verify::{fast_piece_defects, subdivision_monotonicity_check, verify, CoverCertificate, PieceVerdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistanceError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("lower bounds are only available for cohomology")]
    VarianceUnsupported,
    #[error("exhaustive search needs {candidates} candidate covers, budget is {budget}")]
    BudgetExceeded { candidates: String, budget: u64 },
    #[error("cover size must be at least 1")]
    ZeroSize,
}

/// A pair of simplicial maps `φ, ψ: K -> L` with coefficients and variance.
#[derive(Clone, Debug)]
pub struct DistanceQuery {
    pub phi: SimplicialMap,
    pub psi: SimplicialMap,
    pub ring: CoeffRing,
    pub variance: Variance,
}

impl DistanceQuery {
    pub fn new(
        phi: SimplicialMap,
        psi: SimplicialMap,
        ring: CoeffRing,
        variance: Variance,
    ) -> Result<Self, DistanceError> {
        if phi.source() != psi.source() || phi.target() != psi.target() {
            return Err(ComplexError::ComplexMismatch.into());
        }
        Ok(DistanceQuery { phi, psi, ring, variance })
    }

    /// `(id_K, c)`: the category query.
    pub fn scat(k: &Arc<SimplicialComplex>, ring: CoeffRing) -> Self {
        let id = SimplicialMap::identity(k.clone());
        let c = SimplicialMap::constant_first(k.clone(), k.clone());
        DistanceQuery { phi: id, psi: c, ring, variance: Variance::Cohomology }
    }

    /// `(π₁, π₂)` on the staircase square `K × K`: the complexity query.
    pub fn tc(k: &Arc<SimplicialComplex>, ring: CoeffRing) -> Self {
        let p = product(k, k);
        DistanceQuery { phi: p.proj1, psi: p.proj2, ring, variance: Variance::Cohomology }
    }

    pub fn with_variance(mut self, variance: Variance) -> Self {
        self.variance = variance;
        self
    }

    pub fn with_ring(mut self, ring: CoeffRing) -> Self {
        self.ring = ring;
        self
    }

    pub fn source(&self) -> &Arc<SimplicialComplex> {
        self.phi.source()
    }

    pub fn target(&self) -> &Arc<SimplicialComplex> {
        self.phi.target()
    }
}
