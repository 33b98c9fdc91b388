use std::sync::Arc;

use crate::complex::{Simplex, SimplicialComplex, SimplicialMap, Subcomplex};
use crate::exactalg::{kernel_basis, sparse_kernel, EuclideanRing, Span, SparseVec};
use crate::homology::{cohomology, pullback_cochain, push_chain, ChainComplexData, Variance};

/// Piecewise equality test that avoids presenting `H^*(A)` for each piece.
///
/// Cohomology: pull the generators of `H^m(L)` back along both maps once;
/// on a piece `A` the maps agree in degree `m` iff every difference,
/// restricted to `A`, is a coboundary of `A`.
/// Homology: push a cycle basis of `A` forward; the maps agree iff every
/// difference is a boundary of `L`.
///
/// Equality on a piece implies equality on all of its subcomplexes, which is
/// what makes the search below complete and prunable.
pub(crate) struct Engine<R: EuclideanRing> {
    ring: R,
    variance: Variance,
    phi: SimplicialMap,
    psi: SimplicialMap,
    degrees: usize,
    /// Cohomology: per degree, `(φ^# − ψ^#) y_i` on the source.
    diffs: Vec<Vec<Vec<R::Elem>>>,
    /// Homology: per degree, the boundaries of the target.
    boundaries: Vec<Span<R>>,
}

impl<R: EuclideanRing> Engine<R> {
    pub fn new(ring: &R, phi: &SimplicialMap, psi: &SimplicialMap, variance: Variance) -> Self {
        let (k, l) = (phi.source(), phi.target());
        let degrees = k.dim().min(l.dim()) + 1;
        let mut diffs = Vec::new();
        let mut boundaries = Vec::new();
        match variance {
            Variance::Cohomology => {
                let h = cohomology(l, ring);
                for m in 0..degrees {
                    let d = h
                        .degree(m)
                        .lifts()
                        .iter()
                        .map(|y| {
                            let a = pullback_cochain(ring, phi, m, y);
                            let b = pullback_cochain(ring, psi, m, y);
                            a.iter().zip(&b).map(|(x, z)| ring.sub(x, z)).collect()
                        })
                        .collect();
                    diffs.push(d);
                }
            }
            Variance::Homology => {
                let chains = ChainComplexData::new(l);
                for m in 0..degrees {
                    boundaries.push(Span::new(ring, l.count(m), &chains.boundary_columns(ring, m + 1)));
                }
            }
        }
        Engine { ring: ring.clone(), variance, phi: phi.clone(), psi: psi.clone(), degrees, diffs, boundaries }
    }

    pub fn source(&self) -> &Arc<SimplicialComplex> {
        self.phi.source()
    }

    /// Per-degree defect of the piece generated by `facets` (parent indices).
    pub fn defects_of_facets(&self, facets: &[Simplex]) -> Vec<usize> {
        if facets.is_empty() {
            return vec![0; self.degrees];
        }
        let piece = Subcomplex::generated_by(self.source().clone(), facets).expect("facets of the source");
        self.defects(&piece)
    }

    pub fn obstruction(&self, facets: &[Simplex]) -> usize {
        self.defects_of_facets(facets).iter().sum()
    }

    /// Per-degree defect: 0 exactly when the induced maps agree on `piece`.
    pub fn defects(&self, piece: &Subcomplex) -> Vec<usize> {
        let a = piece.complex();
        let chains = ChainComplexData::new(a);
        let ring = &self.ring;
        (0..self.degrees)
            .map(|m| {
                if m > a.dim() {
                    return 0;
                }
                match self.variance {
                    Variance::Cohomology => {
                        let k = self.source();
                        let index: Vec<usize> = a
                            .simplices(m)
                            .iter()
                            .map(|s| k.simplex_index(&piece.to_parent(s)).expect("piece simplex"))
                            .collect();
                        let restricted: Vec<SparseVec<R::Elem>> = self.diffs[m]
                            .iter()
                            .map(|d| {
                                let pairs = index
                                    .iter()
                                    .enumerate()
                                    .filter(|(_, &i)| !ring.is_zero(&d[i]))
                                    .map(|(j, &i)| (j as u32, d[i].clone()))
                                    .collect();
                                SparseVec::from_pairs(ring, pairs)
                            })
                            .filter(|v| !v.is_empty())
                            .collect();
                        if restricted.is_empty() {
                            return 0;
                        }
                        let cob = if m == 0 { Vec::new() } else { chains.coboundary_columns(ring, m - 1) };
                        Span::new(ring, a.count(m), &cob).defect(&restricted)
                    }
                    Variance::Homology => {
                        let cycles: Vec<Vec<R::Elem>> = if ring.is_field() {
                            sparse_kernel(ring, &chains.boundary_columns(ring, m))
                                .iter()
                                .map(|z| z.to_dense(ring, a.count(m)))
                                .collect()
                        } else if m == 0 {
                            (0..a.count(0) as u32)
                                .map(|i| SparseVec::unit(ring, i).to_dense(ring, a.count(0)))
                                .collect()
                        } else {
                            kernel_basis(ring, &chains.boundary_matrix(ring, m)).columns()
                        };
                        let (f, g) =
                            (self.phi.restrict(piece).expect("piece"), self.psi.restrict(piece).expect("piece"));
                        let diffs: Vec<SparseVec<R::Elem>> = cycles
                            .iter()
                            .map(|z| {
                                let a = push_chain(ring, &f, m, z);
                                let b = push_chain(ring, &g, m, z);
                                let d: Vec<R::Elem> = a.iter().zip(&b).map(|(x, y)| ring.sub(x, y)).collect();
                                SparseVec::from_dense(ring, &d)
                            })
                            .filter(|v| !v.is_empty())
                            .collect();
                        self.boundaries[m].defect(&diffs)
                    }
                }
            })
            .collect()
    }
}
