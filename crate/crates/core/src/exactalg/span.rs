use super::sparse::{EchelonBasis, SparseVec};
use super::{ColumnSpace, EuclideanRing, Matrix};

/// Membership oracle for the submodule spanned by a set of vectors.
///
/// Over fields this is a sparse echelon basis; over `Z` it is the lattice
/// spanned by the columns, tested through a Smith normal form.
#[derive(Clone, Debug)]
pub struct Span<R: EuclideanRing> {
    ring: R,
    dim: usize,
    inner: Inner<R>,
}

#[derive(Clone, Debug)]
enum Inner<R: EuclideanRing> {
    Echelon(EchelonBasis<R>),
    Lattice(ColumnSpace<R::Elem>),
}

impl<R: EuclideanRing> Span<R> {
    pub fn new(ring: &R, dim: usize, vectors: &[SparseVec<R::Elem>]) -> Self {
        let inner = if ring.is_field() {
            let mut basis = EchelonBasis::new(ring);
            for v in vectors {
                basis.insert(v, SparseVec::new());
            }
            Inner::Echelon(basis)
        } else {
            let cols: Vec<Vec<R::Elem>> = vectors.iter().map(|v| v.to_dense(ring, dim)).collect();
            Inner::Lattice(ColumnSpace::new(ring, &Matrix::from_columns(ring, dim, &cols)))
        };
        Span { ring: ring.clone(), dim, inner }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, v: &SparseVec<R::Elem>) -> bool {
        match &self.inner {
            Inner::Echelon(b) => b.contains(v),
            Inner::Lattice(cs) => cs.contains(&self.ring, &v.to_dense(&self.ring, self.dim)),
        }
    }

    /// How far `vs` are from lying in the span: over a field, the rank of
    /// `vs` modulo the span; over `Z`, the number of `vs` outside it.
    pub fn defect(&self, vs: &[SparseVec<R::Elem>]) -> usize {
        match &self.inner {
            Inner::Echelon(b) => {
                let mut b = b.clone();
                vs.iter().filter(|v| b.insert(v, SparseVec::new())).count()
            }
            Inner::Lattice(_) => vs.iter().filter(|v| !self.contains(v)).count(),
        }
    }
}
