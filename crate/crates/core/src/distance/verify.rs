use rayon::prelude::*;
use serde::Serialize;

use super::engine::Engine;
use super::{DistanceError, DistanceQuery};
use crate::complex::{barycentric_subdivision, sd_map, ComplexError, Cover, Subcomplex};
use crate::exactalg::{CoeffRing, EuclideanRing};
use crate::homology::{maps_equal_between, Backend, ChainComplexData, GradedModule, Variance};
use crate::with_ring;

/// Equality verdicts for one cover piece.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PieceVerdict {
    pub name: String,
    pub facets: usize,
    pub f_vector: Vec<usize>,
    /// Degrees `0..=min(dim K, dim L)`.
    pub per_degree: Vec<bool>,
    pub first_failure: Option<usize>,
    pub equal: bool,
}

/// The outcome of checking a candidate cover against a query.
#[derive(Clone, Debug, Serialize)]
pub struct CoverCertificate {
    pub ring: CoeffRing,
    pub variance: Variance,
    pub covered: bool,
    /// A maximal face of `K` in no piece, by labels.
    pub missing: Option<Vec<String>>,
    pub pieces: Vec<PieceVerdict>,
    pub verified: bool,
    #[serde(skip)]
    pub cover: Cover,
}

impl CoverCertificate {
    /// The bound `n` certified by `n + 1` pieces.
    pub fn bound(&self) -> usize {
        self.pieces.len() - 1
    }
}

/// Checks the cover property and, piece by piece, the equality of the
/// induced maps of the restrictions. Failures are recorded, not raised.
pub fn verify(query: &DistanceQuery, cover: &Cover) -> Result<CoverCertificate, DistanceError> {
    if **cover.parent() != **query.source() {
        return Err(ComplexError::ComplexMismatch.into());
    }
    let check = cover.check();
    let pieces = with_ring!(query.ring, |r| piece_verdicts(&r, query, cover))?;
    let verified = check.covered && pieces.iter().all(|p| p.equal);
    Ok(CoverCertificate {
        ring: query.ring,
        variance: query.variance,
        covered: check.covered,
        missing: check.missing.map(|s| query.source().simplex_labels(&s).iter().map(|l| l.to_string()).collect()),
        pieces,
        verified,
        cover: cover.clone(),
    })
}

fn piece_verdicts<R: EuclideanRing>(
    ring: &R,
    query: &DistanceQuery,
    cover: &Cover,
) -> Result<Vec<PieceVerdict>, DistanceError> {
    let (k, l) = (query.source(), query.target());
    let degrees = k.dim().min(l.dim()) + 1;
    let target_chains = std::sync::Arc::new(ChainComplexData::new(l));
    let on_target = GradedModule::compute(&target_chains, ring, query.variance, Backend::Auto)?;
    cover
        .pieces()
        .par_iter()
        .zip(cover.names().par_iter())
        .map(|(piece, name)| {
            let phi = query.phi.restrict(piece)?;
            let psi = query.psi.restrict(piece)?;
            let chains = std::sync::Arc::new(ChainComplexData::new(piece.complex()));
            let on_piece = GradedModule::compute(&chains, ring, query.variance, Backend::Auto)?;
            let eq = maps_equal_between(&phi, &psi, &on_piece, &on_target)?;
            let mut per_degree = eq.per_degree;
            per_degree.resize(degrees, true);
            Ok(PieceVerdict {
                name: name.clone(),
                facets: piece.complex().facets().len(),
                f_vector: piece.complex().f_vector(),
                first_failure: eq.first_failure,
                equal: eq.first_failure.is_none(),
                per_degree,
            })
        })
        .collect()
}

/// Per-degree defects of a piece through the fast path used by search.
/// Zero in every degree exactly when [`verify`] accepts the piece.
pub fn fast_piece_defects(query: &DistanceQuery, piece: &Subcomplex) -> Vec<usize> {
    with_ring!(query.ring, |r| Engine::new(&r, &query.phi, &query.psi, query.variance).defects(piece))
}

/// Subdivides source, target, maps and pieces, then verifies the result.
/// A verified cover of `(φ, ψ)` should give a verified cover of
/// `(sd φ, sd ψ)` with the same number of pieces.
pub fn subdivision_monotonicity_check(query: &DistanceQuery, cover: &Cover) -> Result<bool, DistanceError> {
    let sd_k = barycentric_subdivision(query.source());
    let sd_l = if query.source() == query.target() { sd_k.clone() } else { barycentric_subdivision(query.target()) };
    let phi = sd_map(&query.phi, &sd_k, &sd_l)?;
    let psi = sd_map(&query.psi, &sd_k, &sd_l)?;
    let pieces = cover.pieces().iter().map(|p| sd_k.subdivide_piece(p)).collect::<Result<Vec<_>, _>>()?;
    let sd_cover = Cover::with_names(sd_k.complex().clone(), pieces, cover.names().to_vec())?;
    let sd_query = DistanceQuery::new(phi, psi, query.ring, query.variance)?;
    Ok(verify(&sd_query, &sd_cover)?.verified)
}
