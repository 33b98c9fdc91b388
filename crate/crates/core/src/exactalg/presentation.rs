use std::sync::Arc;

use super::sparse::{EchelonBasis, SparseVec};
use super::{smith_normal_form, AlgebraError, ColumnSpace, EuclideanRing, Matrix};

/// A finitely generated module `Z / B` presented by generators with
/// representative cycles ("lifts") in an ambient free module.
///
/// Generators come torsion first, in divisibility order, then free.
/// [`Presentation::coordinates`] expresses any cycle in these generators,
/// reducing torsion coordinates modulo their order, so two cycles are equal in
/// the quotient iff their coordinate vectors agree.
#[derive(Clone, Debug)]
pub struct Presentation<R: EuclideanRing> {
    ring: R,
    ambient_dim: usize,
    torsion: Vec<R::Elem>,
    free_rank: usize,
    lifts: Vec<Vec<R::Elem>>,
    backend: Backend<R>,
}

#[derive(Clone, Debug)]
enum Backend<R: EuclideanRing> {
    /// `coords(z) = transform * preimage_cycles(z)`
    Dense { cycles: ColumnSpace<R::Elem>, transform: Matrix<R::Elem> },
    /// Echelon basis of `B + span(lifts)`, tags over the lifts.
    Sparse { basis: EchelonBasis<R> },
}

/// Presents `span(cycles) / span(boundaries)`.
///
/// `cycles` must have linearly independent columns (a basis of the cycle
/// module) and every boundary column must lie in their span.
pub fn quotient_presentation<R: EuclideanRing>(
    ring: &R,
    cycles: &Matrix<R::Elem>,
    boundaries: &Matrix<R::Elem>,
) -> Result<Presentation<R>, AlgebraError> {
    if cycles.rows() != boundaries.rows() {
        return Err(AlgebraError::DimensionMismatch { expected: cycles.rows(), found: boundaries.rows() });
    }
    let space = ColumnSpace::new(ring, cycles);
    if space.rank() != cycles.cols() {
        return Err(AlgebraError::CyclesNotIndependent);
    }
    let mut coeffs = Vec::with_capacity(boundaries.cols());
    for j in 0..boundaries.cols() {
        let c = space.preimage(ring, &boundaries.column(j)).ok_or(AlgebraError::BoundaryNotInCycles { column: j })?;
        coeffs.push(c);
    }
    let relations = Matrix::from_columns(ring, cycles.cols(), &coeffs);
    let snf = smith_normal_form(ring, &relations);

    let mut torsion = Vec::new();
    let mut keep = Vec::new();
    for i in 0..cycles.cols() {
        match snf.diagonal.get(i) {
            Some(d) if ring.is_unit(d) => {}
            Some(d) => {
                torsion.push(d.clone());
                keep.push(i);
            }
            None => keep.push(i),
        }
    }
    let free_rank = cycles.cols() - snf.rank();
    let generators = cycles.mul(ring, &snf.u_inv.select_columns(&keep));
    Ok(Presentation {
        ring: ring.clone(),
        ambient_dim: cycles.rows(),
        torsion,
        free_rank,
        lifts: generators.columns(),
        backend: Backend::Dense { cycles: space, transform: snf.u.select_rows(&keep) },
    })
}

impl<R: EuclideanRing> Presentation<R> {
    /// Field-only constructor from sparse boundary columns and a cycle basis.
    pub fn from_sparse(
        ring: &R,
        ambient_dim: usize,
        boundaries: &[SparseVec<R::Elem>],
        cycle_basis: &[SparseVec<R::Elem>],
    ) -> Result<Self, AlgebraError> {
        if !ring.is_field() {
            return Err(AlgebraError::NotAField(ring.coeff_ring()));
        }
        let mut basis = EchelonBasis::new(ring);
        for b in boundaries {
            basis.insert(b, SparseVec::new());
        }
        let mut lifts = Vec::new();
        for z in cycle_basis {
            if basis.insert(z, SparseVec::unit(ring, lifts.len() as u32)) {
                lifts.push(z.to_dense(ring, ambient_dim));
            }
        }
        Ok(Presentation {
            ring: ring.clone(),
            ambient_dim,
            torsion: Vec::new(),
            free_rank: lifts.len(),
            lifts,
            backend: Backend::Sparse { basis },
        })
    }

    /// `R^free ⊕ R/(d_1) ⊕ ...` presented on standard generators.
    pub fn from_invariants(ring: &R, free_rank: usize, torsion: &[R::Elem]) -> Result<Self, AlgebraError> {
        let n = torsion.len() + free_rank;
        let cycles = Matrix::identity(ring, n);
        let mut rel = Matrix::zeros(ring, n, torsion.len());
        for (i, d) in torsion.iter().enumerate() {
            rel[(i, i)] = d.clone();
        }
        quotient_presentation(ring, &cycles, &rel)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[R::Elem] {
        &self.torsion
    }

    pub fn generator_count(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.generator_count() == 0
    }

    /// Representative cycle of each generator.
    pub fn lifts(&self) -> &[Vec<R::Elem>] {
        &self.lifts
    }

    /// Additive order of generator `i`: `Some(d)` for torsion, `None` for free.
    pub fn order(&self, i: usize) -> Option<&R::Elem> {
        self.torsion.get(i)
    }

    /// Coordinates of a cycle in the generators, torsion entries reduced.
    pub fn coordinates(&self, z: &[R::Elem]) -> Result<Vec<R::Elem>, AlgebraError> {
        if z.len() != self.ambient_dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.ambient_dim, found: z.len() });
        }
        let ring = &self.ring;
        let mut w = match &self.backend {
            Backend::Dense { cycles, transform } => {
                let c = cycles.preimage(ring, z).ok_or(AlgebraError::NotACycle)?;
                transform.mul_vec(ring, &c)
            }
            Backend::Sparse { basis } => basis
                .coordinates(&SparseVec::from_dense(ring, z))
                .ok_or(AlgebraError::NotACycle)?
                .to_dense(ring, self.generator_count()),
        };
        self.reduce_coordinates(&mut w);
        Ok(w)
    }

    pub fn reduce_coordinates(&self, w: &mut [R::Elem]) {
        for (x, d) in w.iter_mut().zip(&self.torsion) {
            *x = self.ring.reduce_mod(x, d);
        }
    }

    /// Whether a coordinate vector is zero in the module.
    pub fn coordinates_vanish(&self, w: &[R::Elem]) -> bool {
        w.iter().enumerate().all(|(i, x)| match self.order(i) {
            Some(d) => self.ring.divides(d, x),
            None => self.ring.is_zero(x),
        })
    }

    /// Whether a cycle represents zero.
    pub fn is_zero(&self, z: &[R::Elem]) -> Result<bool, AlgebraError> {
        Ok(self.coordinates_vanish(&self.coordinates(z)?))
    }

    /// Same invariants and the same generator lifts.
    pub fn same_as(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.ambient_dim == other.ambient_dim
                && self.free_rank == other.free_rank
                && self.torsion == other.torsion
                && self.lifts == other.lifts)
    }

    /// Human-readable summary such as `Z^2 + Z/2`, `0` or `Z2^3`.
    pub fn describe(&self) -> String {
        let base = self.ring.coeff_ring().to_string();
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(base.clone()),
            r => parts.push(format!("{base}^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("{base}/{}", self.ring.format(d)));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Homomorphism between presented modules, as a matrix of generator images
/// in target coordinates (columns indexed by source generators).
#[derive(Clone, Debug)]
pub struct ModuleHom<R: EuclideanRing> {
    source: Arc<Presentation<R>>,
    target: Arc<Presentation<R>>,
    matrix: Matrix<R::Elem>,
}

impl<R: EuclideanRing> ModuleHom<R> {
    /// Validates that each column is compatible with the source relations.
    pub fn new(
        source: Arc<Presentation<R>>,
        target: Arc<Presentation<R>>,
        matrix: Matrix<R::Elem>,
    ) -> Result<Self, AlgebraError> {
        if matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count() {
            return Err(AlgebraError::DimensionMismatch {
                expected: target.generator_count() * source.generator_count(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        let ring = source.ring().clone();
        let mut matrix = matrix;
        for j in 0..matrix.cols() {
            let mut col = matrix.column(j);
            target.reduce_coordinates(&mut col);
            if let Some(d) = source.order(j) {
                let scaled: Vec<_> = col.iter().map(|x| ring.mul(d, x)).collect();
                if !target.coordinates_vanish(&scaled) {
                    return Err(AlgebraError::IllDefinedHom { column: j });
                }
            }
            for (i, x) in col.into_iter().enumerate() {
                matrix[(i, j)] = x;
            }
        }
        Ok(ModuleHom { source, target, matrix })
    }

    /// Builds the hom sending generator `j` to the class of the target cycle `images[j]`.
    pub fn from_cycle_images(
        source: Arc<Presentation<R>>,
        target: Arc<Presentation<R>>,
        images: &[Vec<R::Elem>],
    ) -> Result<Self, AlgebraError> {
        let cols = images.iter().map(|z| target.coordinates(z)).collect::<Result<Vec<_>, _>>()?;
        let m = Matrix::from_columns(source.ring(), target.generator_count(), &cols);
        ModuleHom::new(source, target, m)
    }

    pub fn source(&self) -> &Arc<Presentation<R>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Presentation<R>> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<R::Elem> {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        (0..self.matrix.cols()).all(|j| self.target.coordinates_vanish(&self.matrix.column(j)))
    }

    /// Whether this hom is bijective. Over fields only rank matters; over `Z`
    /// the invariants must agree and the matrix must be unimodular on the
    /// free part with invertible torsion blocks, which is checked via the
    /// cokernel and kernel being trivial.
    pub fn is_isomorphism(&self) -> bool {
        let ring = self.source.ring();
        if self.source.free_rank() != self.target.free_rank() || self.source.torsion() != self.target.torsion() {
            return false;
        }
        let n = self.target.generator_count();
        // relations of the target together with the image columns must present 0
        let mut cols: Vec<Vec<R::Elem>> = self.matrix.columns();
        for (i, d) in self.target.torsion().iter().enumerate() {
            let mut e = vec![ring.zero(); n];
            e[i] = d.clone();
            cols.push(e);
        }
        let m = Matrix::from_columns(ring, n, &cols);
        let snf = smith_normal_form(ring, &m);
        // surjective onto a module with the same invariants => isomorphism (finite generation)
        snf.rank() == n && snf.diagonal.iter().all(|d| ring.is_unit(d))
    }

    /// `self - other`, sharing source and target.
    pub fn difference(&self, other: &Self) -> Result<Self, AlgebraError> {
        if !self.source.same_as(&other.source) || !self.target.same_as(&other.target) {
            return Err(AlgebraError::PresentationMismatch);
        }
        let ring = self.source.ring();
        ModuleHom::new(self.source.clone(), self.target.clone(), self.matrix.sub(ring, &other.matrix))
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &Self) -> Result<Self, AlgebraError> {
        if !inner.target.same_as(&self.source) {
            return Err(AlgebraError::PresentationMismatch);
        }
        let ring = self.source.ring();
        ModuleHom::new(inner.source.clone(), self.target.clone(), self.matrix.mul(ring, &inner.matrix))
    }
}

/// Whether two homs between the same presentations induce the same map,
/// i.e. their difference sends every generator into the target relations.
pub fn homs_equal<R: EuclideanRing>(f: &ModuleHom<R>, g: &ModuleHom<R>) -> Result<bool, AlgebraError> {
    Ok(f.difference(g)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Integers, PrimeField};
    use num_bigint::BigInt;

    fn zi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn z_plus_z2() {
        let cycles = Matrix::identity(&Integers, 2);
        let bounds = Matrix::from_i64_rows(&Integers, &[vec![2], vec![0]]);
        let p = quotient_presentation(&Integers, &cycles, &bounds).unwrap();
        assert_eq!(p.free_rank(), 1);
        assert_eq!(p.torsion(), &[zi(2)]);
        assert!(p.is_zero(&[zi(4), zi(0)]).unwrap());
        assert!(!p.is_zero(&[zi(1), zi(0)]).unwrap());
        assert_eq!(p.describe(), "Z + Z/2");
    }

    #[test]
    fn boundaries_equal_cycles_is_zero_module() {
        let c = Matrix::from_i64_rows(&Integers, &[vec![1, 0], vec![1, 1], vec![0, 1]]);
        let p = quotient_presentation(&Integers, &c, &c).unwrap();
        assert!(p.is_trivial());
    }

    #[test]
    fn boundary_outside_cycles_is_rejected() {
        let c = Matrix::from_i64_rows(&Integers, &[vec![1], vec![0]]);
        let b = Matrix::from_i64_rows(&Integers, &[vec![0], vec![1]]);
        assert!(matches!(
            quotient_presentation(&Integers, &c, &b),
            Err(AlgebraError::BoundaryNotInCycles { column: 0 })
        ));
    }

    #[test]
    fn relation_absorbs_even_difference() {
        let src = Arc::new(Presentation::from_invariants(&Integers, 1, &[]).unwrap());
        let tgt = Arc::new(Presentation::from_invariants(&Integers, 0, &[zi(2)]).unwrap());
        let times =
            |k: i64| ModuleHom::new(src.clone(), tgt.clone(), Matrix::from_i64_rows(&Integers, &[vec![k]])).unwrap();
        assert!(homs_equal(&times(1), &times(3)).unwrap());
        assert!(!homs_equal(&times(1), &times(2)).unwrap());
    }

    #[test]
    fn ill_defined_hom_is_rejected() {
        // Z/2 -> Z cannot send the generator to 1
        let src = Arc::new(Presentation::from_invariants(&Integers, 0, &[zi(2)]).unwrap());
        let tgt = Arc::new(Presentation::from_invariants(&Integers, 1, &[]).unwrap());
        let m = Matrix::from_i64_rows(&Integers, &[vec![1]]);
        assert!(matches!(ModuleHom::new(src, tgt, m), Err(AlgebraError::IllDefinedHom { column: 0 })));
    }

    #[test]
    fn mismatched_presentations_are_reported() {
        let a = Arc::new(Presentation::from_invariants(&Integers, 1, &[]).unwrap());
        let b = Arc::new(Presentation::from_invariants(&Integers, 2, &[]).unwrap());
        let f = ModuleHom::new(a.clone(), a.clone(), Matrix::identity(&Integers, 1)).unwrap();
        let g = ModuleHom::new(a.clone(), b, Matrix::from_i64_rows(&Integers, &[vec![1], vec![0]])).unwrap();
        assert!(matches!(homs_equal(&f, &g), Err(AlgebraError::PresentationMismatch)));
    }

    #[test]
    fn sparse_and_dense_agree_over_a_field() {
        let f = PrimeField::new(2).unwrap();
        let cycles = Matrix::from_i64_rows(&f, &[vec![1, 0], vec![1, 1], vec![0, 1]]);
        let bounds = Matrix::from_i64_rows(&f, &[vec![1], vec![1], vec![0]]);
        let dense = quotient_presentation(&f, &cycles, &bounds).unwrap();
        let sparse = Presentation::from_sparse(
            &f,
            3,
            &[SparseVec::from_dense(&f, &bounds.column(0))],
            &cycles.columns().iter().map(|c| SparseVec::from_dense(&f, c)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(dense.generator_count(), 1);
        assert_eq!(sparse.generator_count(), 1);
        for z in [[1u64, 1, 0], [0, 1, 1], [1, 0, 1]] {
            assert_eq!(dense.is_zero(&z).unwrap(), sparse.is_zero(&z).unwrap());
        }
    }
}
