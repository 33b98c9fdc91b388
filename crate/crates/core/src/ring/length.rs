use std::sync::Arc;

use crate::complex::{product, SimplicialComplex, SimplicialMap};
use crate::exactalg::{kernel_basis, AlgebraError, EuclideanRing, Matrix};
use crate::homology::{induced_map_between, pullback_cochain, Variance};

use super::{CohomologyClass, CohomologyRing, RingError};

/// Nilpotency length of a set of positive-degree classes, with a witness.
#[derive(Clone, Debug)]
pub struct CupLength<R: EuclideanRing> {
    pub length: usize,
    /// Indices into the input set whose product is nonzero (`length` of them).
    pub witness: Vec<usize>,
    pub product: Option<CohomologyClass<R>>,
}

/// The least `n` such that every product of `n + 1` elements of `set`
/// (repetition allowed) vanishes.
///
/// By distributivity it suffices to track the submodule spanned by all
/// `k`-fold products: the `(k+1)`-fold span is that span cupped with `set`.
/// The witness is then recovered by a pruned search over multisets, which
/// is exhaustive up to the sign ambiguity of graded commutativity.
pub fn lcp_of_set<R: EuclideanRing>(
    h: &CohomologyRing<R>,
    set: &[CohomologyClass<R>],
) -> Result<CupLength<R>, RingError> {
    if set.iter().any(|c| c.degree() == 0) {
        return Err(RingError::DegreeZeroClass);
    }
    let mut span = h.reduce(set)?;
    let mut length = 0;
    while !span.is_empty() {
        length += 1;
        let mut next = Vec::new();
        for p in &span {
            for s in set {
                if p.degree() + s.degree() <= h.dim() {
                    next.push(h.cup(p, s)?);
                }
            }
        }
        span = h.reduce(&next)?;
    }
    let (witness, product) = find_witness(h, set, length)?;
    Ok(CupLength { length, witness, product })
}

fn find_witness<R: EuclideanRing>(
    h: &CohomologyRing<R>,
    set: &[CohomologyClass<R>],
    length: usize,
) -> Result<(Vec<usize>, Option<CohomologyClass<R>>), RingError> {
    if length == 0 {
        return Ok((Vec::new(), None));
    }
    let mut stack = Vec::new();
    let found = dfs(h, set, length, 0, &h.one(), &mut stack)?;
    let product = found.inspect(|_p| {
        debug_assert_eq!(stack.len(), length);
    });
    Ok((stack, product))
}

fn dfs<R: EuclideanRing>(
    h: &CohomologyRing<R>,
    set: &[CohomologyClass<R>],
    remaining: usize,
    start: usize,
    acc: &CohomologyClass<R>,
    stack: &mut Vec<usize>,
) -> Result<Option<CohomologyClass<R>>, RingError> {
    if remaining == 0 {
        return Ok(Some(acc.clone()));
    }
    for i in start..set.len() {
        // every later factor has degree >= 1
        if acc.degree() + set[i].degree() + remaining - 1 > h.dim() {
            continue;
        }
        let next = h.cup(acc, &set[i])?;
        if h.is_zero(&next)? {
            continue;
        }
        stack.push(i);
        if let Some(p) = dfs(h, set, remaining - 1, i, &next, stack)? {
            return Ok(Some(p));
        }
        stack.pop();
    }
    Ok(None)
}

/// Classical cup-length: `lcp_of_set` over generators of `H^{>0}`.
pub fn cup_length<R: EuclideanRing>(k: &Arc<SimplicialComplex>, ring: &R) -> Result<CupLength<R>, RingError> {
    let h = CohomologyRing::new(k, ring);
    lcp_of_set(&h, &h.positive_generators())
}

/// `(φ* − ψ*)(y)` for the generators `y` of `H^{>0}` of the common target,
/// as classes in `h` (the ring of the common source).
pub fn j_generators<R: EuclideanRing>(
    phi: &SimplicialMap,
    psi: &SimplicialMap,
    h: &CohomologyRing<R>,
    target: &CohomologyRing<R>,
) -> Result<Vec<CohomologyClass<R>>, RingError> {
    if phi.source() != psi.source() || phi.target() != psi.target() {
        return Err(RingError::ComplexMismatch);
    }
    if **h.complex() != **phi.source() || **target.complex() != **phi.target() {
        return Err(RingError::ComplexMismatch);
    }
    let ring = h.ring();
    let mut out = Vec::new();
    for m in 1..=target.dim().min(h.dim()) {
        for y in target.generators(m) {
            let a = pullback_cochain(ring, phi, m, y.cochain());
            let b = pullback_cochain(ring, psi, m, y.cochain());
            let d = a.iter().zip(&b).map(|(x, z)| ring.sub(x, z)).collect();
            out.push(h.class_unchecked(m, d));
        }
    }
    Ok(out)
}

/// A generating set of the ideal generated by `set`.
pub fn ideal_generators<R: EuclideanRing>(
    h: &CohomologyRing<R>,
    set: &[CohomologyClass<R>],
) -> Result<Vec<CohomologyClass<R>>, RingError> {
    let gens = h.positive_generators();
    let mut all = h.reduce(set)?;
    let mut frontier = all.clone();
    // each step raises degree, so dim steps reach every product
    for _ in 0..h.dim() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in &gens {
                if a.degree() + g.degree() <= h.dim() {
                    next.push(h.cup(a, g)?);
                }
            }
        }
        frontier = h.reduce(&next)?;
        if frontier.is_empty() {
            break;
        }
        all.extend(frontier.iter().cloned());
    }
    h.reduce(&all)
}

/// lcp of the ideal generated by `set`.
pub fn lcp_ideal<R: EuclideanRing>(h: &CohomologyRing<R>, set: &[CohomologyClass<R>]) -> Result<usize, RingError> {
    let ideal = ideal_generators(h, set)?;
    Ok(lcp_of_set(h, &ideal)?.length)
}

/// `H^*(K × K)` with the projections and the diagonal.
pub struct Square<R: EuclideanRing> {
    pub ring: CohomologyRing<R>,
    pub base: CohomologyRing<R>,
    pub proj1: SimplicialMap,
    pub proj2: SimplicialMap,
    pub diagonal: SimplicialMap,
}

impl<R: EuclideanRing> Square<R> {
    pub fn new(k: &Arc<SimplicialComplex>, ring: &R) -> Self {
        let p = product(k, k);
        let n = k.vertex_count() as u32;
        let diagonal = SimplicialMap::new(k.clone(), p.complex.clone(), (0..n).map(|v| v * n + v).collect())
            .expect("the diagonal is a monotone chain map");
        Square {
            ring: CohomologyRing::new(&p.complex, ring),
            base: CohomologyRing::new(k, ring),
            proj1: p.proj1,
            proj2: p.proj2,
            diagonal,
        }
    }

    pub fn j_generators(&self) -> Result<Vec<CohomologyClass<R>>, RingError> {
        j_generators(&self.proj1, &self.proj2, &self.ring, &self.base)
    }

    /// Kernel of the cup product `H^*(K) ⊗ H^*(K) -> H^*(K)`, identified with
    /// `ker Δ^*` on `H^*(K × K)`; one basis per degree, as classes.
    pub fn cup_kernel(&self) -> Result<Vec<CohomologyClass<R>>, RingError> {
        let r = self.ring.ring();
        if !r.is_field() {
            return Err(RingError::Algebra(AlgebraError::NotAField(r.coeff_ring())));
        }
        let hom = induced_map_between(&self.diagonal, self.base.module(), self.ring.module())?;
        debug_assert_eq!(hom.variance, Variance::Cohomology);
        let mut out = Vec::new();
        for m in 0..=self.ring.dim() {
            let p = self.ring.module().degree(m);
            let n = p.generator_count();
            if n == 0 {
                continue;
            }
            let kernel = if m < hom.degrees.len() {
                let mat = hom.degree(m).matrix();
                if mat.rows() == 0 {
                    Matrix::identity(r, n)
                } else {
                    kernel_basis(r, mat)
                }
            } else {
                Matrix::identity(r, n)
            };
            for w in kernel.columns() {
                let mut acc = vec![r.zero(); p.ambient_dim()];
                for (c, lift) in w.iter().zip(p.lifts()) {
                    for (a, x) in acc.iter_mut().zip(lift) {
                        *a = r.add(a, &r.mul(c, x));
                    }
                }
                out.push(self.ring.class_unchecked(m, acc));
            }
        }
        Ok(out)
    }
}

/// Zero-divisor cup-length of `k`, computed as `lcp J(π₁, π₂)` on `K × K`.
pub fn zero_divisor_cup_length<R: EuclideanRing>(
    k: &Arc<SimplicialComplex>,
    ring: &R,
) -> Result<CupLength<R>, RingError> {
    if !ring.is_field() {
        return Err(RingError::Algebra(AlgebraError::NotAField(ring.coeff_ring())));
    }
    let sq = Square::new(k, ring);
    lcp_of_set(&sq.ring, &sq.j_generators()?)
}
