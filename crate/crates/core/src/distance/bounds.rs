use std::sync::Arc;

use serde::Serialize;

use super::{search, verify, CoverCertificate, DistanceError, DistanceQuery, SearchOptions, Strategy};
use crate::complex::{Cover, SimplicialComplex};
use crate::exactalg::{CoeffRing, EuclideanRing};
use crate::homology::Variance;
use crate::ring::{j_generators, lcp_of_set, CohomologyRing};
use crate::with_ring;

/// One factor `(φ* − ψ*)(y)` of a witness product, `y` being generator
/// `generator` of `H^degree` of the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JFactor {
    pub degree: usize,
    pub generator: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LowerWitness {
    /// No positive-degree class separates the maps.
    Trivial,
    /// A nonzero product of this many classes from `J(φ, ψ)`.
    CupProduct { factors: Vec<JFactor> },
    /// Exhaustive search found no cover with `size` pieces.
    NoSmallerCover { size: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub value: usize,
    pub witness: LowerWitness,
}

/// `lcp J(φ, ψ)` with a nonzero product of maximal length as witness.
pub fn lower_bound(query: &DistanceQuery) -> Result<LowerBound, DistanceError> {
    if query.variance != Variance::Cohomology {
        return Err(DistanceError::VarianceUnsupported);
    }
    with_ring!(query.ring, |r| lower_bound_typed(&r, query))
}

fn lower_bound_typed<R: EuclideanRing>(ring: &R, query: &DistanceQuery) -> Result<LowerBound, DistanceError> {
    let h = CohomologyRing::new(query.source(), ring);
    let target = if query.source() == query.target() { h.clone() } else { CohomologyRing::new(query.target(), ring) };
    let j = j_generators(&query.phi, &query.psi, &h, &target)?;
    let labels: Vec<JFactor> = (1..=target.dim().min(h.dim()))
        .flat_map(|m| (0..target.generators(m).len()).map(move |i| JFactor { degree: m, generator: i }))
        .collect();
    let lcp = lcp_of_set(&h, &j)?;
    let witness = if lcp.length == 0 {
        LowerWitness::Trivial
    } else {
        LowerWitness::CupProduct { factors: lcp.witness.iter().map(|&i| labels[i].clone()).collect() }
    };
    Ok(LowerBound { value: lcp.length, witness })
}

/// How [`hscat`] and [`hstc`] look for an upper bound.
#[derive(Clone, Debug)]
pub struct BoundOptions {
    /// A cover to verify before searching.
    pub cover: Option<Cover>,
    pub strategy: Strategy,
    pub budget: u64,
    pub seed: u64,
    /// Sizes to rule out by exhaustive search, raising the lower bound.
    pub exhaustive: Vec<usize>,
    /// Largest cover size tried by search (default: lower bound + 2).
    pub max_size: Option<usize>,
    pub restarts: usize,
    pub warm_start: Option<Cover>,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            cover: None,
            strategy: Strategy::Greedy,
            budget: 1 << 24,
            seed: 0,
            exhaustive: Vec::new(),
            max_size: None,
            restarts: 64,
            warm_start: None,
        }
    }
}

/// Lower and upper bound for a query, exact when they meet.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub ring: CoeffRing,
    pub lower: LowerBound,
    /// Lower bound from cup products alone, before exhaustive refutation.
    pub cup_lower: LowerBound,
    /// Sizes for which exhaustive search found no cover.
    pub refuted_sizes: Vec<usize>,
    /// Verdict on the supplied cover, if any.
    pub supplied: Option<CoverCertificate>,
    pub upper: Option<usize>,
    pub certificate: Option<CoverCertificate>,
    pub exact: Option<usize>,
}

impl BoundReport {
    pub fn interval(&self) -> (usize, Option<usize>) {
        (self.lower.value, self.upper)
    }
}

/// Bounds on the distance of a query.
///
/// In homology there is no cup-product bound, so `cup_lower` is trivial and
/// the lower end comes from refuted sizes only. In either variance the
/// one-piece cover is tried first, so unequal maps always get lower bound 1.
pub fn bounds(query: &DistanceQuery, opts: &BoundOptions) -> Result<BoundReport, DistanceError> {
    let cup_lower = match query.variance {
        Variance::Cohomology => lower_bound(query)?,
        Variance::Homology => LowerBound { value: 0, witness: LowerWitness::Trivial },
    };
    let mut lower = cup_lower.clone();
    let mut refuted = Vec::new();
    let mut certificate: Option<CoverCertificate> = None;
    let whole = verify(query, &Cover::single(query.source().clone()))?;
    if whole.verified {
        certificate = Some(whole);
    } else {
        refuted.push(1);
        if lower.value < 1 {
            lower = LowerBound { value: 1, witness: LowerWitness::NoSmallerCover { size: 1 } };
        }
    }
    for &size in &opts.exhaustive {
        if refuted.contains(&size) {
            continue;
        }
        let mut so = SearchOptions::new(size, Strategy::Exhaustive);
        so.budget = opts.budget;
        match search(query, &so)? {
            None => {
                refuted.push(size);
                if size > lower.value {
                    lower = LowerBound { value: size, witness: LowerWitness::NoSmallerCover { size } };
                }
            }
            Some(cover) => keep_best(&mut certificate, verify(query, &cover)?),
        }
    }
    let supplied = match &opts.cover {
        Some(c) => Some(verify(query, c)?),
        None => None,
    };
    if let Some(s) = &supplied {
        if s.verified {
            keep_best(&mut certificate, s.clone());
        }
    }
    let max_size = opts.max_size.unwrap_or(lower.value + 2);
    let mut size = lower.value + 1;
    while certificate.as_ref().is_none_or(|c| c.pieces.len() > lower.value + 1) && size <= max_size {
        if certificate.as_ref().is_some_and(|c| c.pieces.len() <= size) {
            break;
        }
        let mut so = SearchOptions::new(size, opts.strategy);
        so.budget = opts.budget;
        so.seed = opts.seed;
        so.restarts = opts.restarts;
        so.warm_start = opts.warm_start.as_ref().map(Cover::canonical_facets);
        if let Some(cover) = search(query, &so)? {
            keep_best(&mut certificate, verify(query, &cover)?);
            break;
        }
        size += 1;
    }
    let upper = certificate.as_ref().map(CoverCertificate::bound);
    if let (Some(u), Variance::Cohomology) = (upper, query.variance) {
        // lcp J ≤ H•sD for any verified cover
        assert!(cup_lower.value <= u, "cup-length bound exceeds a verified cover");
    }
    let exact = upper.filter(|&u| u == lower.value);
    Ok(BoundReport { ring: query.ring, lower, cup_lower, refuted_sizes: refuted, supplied, upper, certificate, exact })
}

fn keep_best(best: &mut Option<CoverCertificate>, cand: CoverCertificate) {
    if best.as_ref().is_none_or(|b| cand.pieces.len() < b.pieces.len()) {
        *best = Some(cand);
    }
}

/// `H•scat(K; R) = H•sD(id, c; R)`.
pub fn hscat(k: &Arc<SimplicialComplex>, ring: CoeffRing, opts: &BoundOptions) -> Result<BoundReport, DistanceError> {
    bounds(&DistanceQuery::scat(k, ring), opts)
}

/// `H•sTC(K; R) = H•sD(π₁, π₂; R)` on `K × K`. A supplied cover must live on
/// the same staircase square, which [`DistanceQuery::tc`] rebuilds
/// deterministically.
pub fn hstc(k: &Arc<SimplicialComplex>, ring: CoeffRing, opts: &BoundOptions) -> Result<BoundReport, DistanceError> {
    let query = DistanceQuery::tc(k, ring);
    let rebase = |c: &Cover| -> Result<Cover, DistanceError> {
        let pieces = c
            .pieces()
            .iter()
            .map(|p| crate::complex::Subcomplex::from_labeled_faces(query.source().clone(), p.labeled_facets()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cover::with_names(query.source().clone(), pieces, c.names().to_vec())?)
    };
    let mut opts = opts.clone();
    opts.cover = opts.cover.as_ref().map(rebase).transpose()?;
    opts.warm_start = opts.warm_start.as_ref().map(rebase).transpose()?;
    bounds(&query, &opts)
}
