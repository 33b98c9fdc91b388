use std::sync::Arc;

use crate::complex::SimplicialComplex;
use crate::exactalg::{image_basis, EuclideanRing, Matrix, Presentation};
use crate::homology::{graded_module, GradedModule, Variance};

use super::RingError;

/// A cohomology class given by a cocycle representative.
#[derive(Clone, Debug)]
pub struct CohomologyClass<R: EuclideanRing> {
    complex: Arc<SimplicialComplex>,
    degree: usize,
    cochain: Vec<R::Elem>,
}

impl<R: EuclideanRing> CohomologyClass<R> {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cochain(&self) -> &[R::Elem] {
        &self.cochain
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }
}

/// `H^*(K; R)` with its cup product.
#[derive(Clone, Debug)]
pub struct CohomologyRing<R: EuclideanRing> {
    ring: R,
    module: GradedModule<R>,
}

impl<R: EuclideanRing> CohomologyRing<R> {
    pub fn new(k: &Arc<SimplicialComplex>, ring: &R) -> Self {
        CohomologyRing { ring: ring.clone(), module: graded_module(k, ring, Variance::Cohomology) }
    }

    pub fn from_module(module: GradedModule<R>) -> Result<Self, RingError> {
        if module.variance() != Variance::Cohomology {
            return Err(RingError::NotCohomology);
        }
        Ok(CohomologyRing { ring: module.ring().clone(), module })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        self.module.complex()
    }

    pub fn module(&self) -> &GradedModule<R> {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.top_degree()
    }

    pub fn presentation(&self, m: usize) -> Option<&Arc<Presentation<R>>> {
        (m <= self.dim()).then(|| self.module.degree(m))
    }

    /// The class of a cochain, checked to be a cocycle.
    pub fn class(&self, degree: usize, cochain: Vec<R::Elem>) -> Result<CohomologyClass<R>, RingError> {
        let k = self.complex();
        if cochain.len() != k.count(degree) {
            return Err(RingError::ComplexMismatch);
        }
        let chains = self.module.chains();
        for j in 0..k.count(degree + 1) {
            let mut acc = self.ring.zero();
            for &(i, s) in chains.boundary_column(degree + 1, j) {
                let v = &cochain[i as usize];
                acc = if s > 0 { self.ring.add(&acc, v) } else { self.ring.sub(&acc, v) };
            }
            if !self.ring.is_zero(&acc) {
                return Err(RingError::NotACocycle);
            }
        }
        Ok(CohomologyClass { complex: k.clone(), degree, cochain })
    }

    pub(crate) fn class_unchecked(&self, degree: usize, cochain: Vec<R::Elem>) -> CohomologyClass<R> {
        CohomologyClass { complex: self.complex().clone(), degree, cochain }
    }

    /// The unit: the constant 1 cochain on vertices.
    pub fn one(&self) -> CohomologyClass<R> {
        self.class_unchecked(0, vec![self.ring.one(); self.complex().count(0)])
    }

    pub fn zero(&self, degree: usize) -> CohomologyClass<R> {
        self.class_unchecked(degree, vec![self.ring.zero(); self.complex().count(degree)])
    }

    /// The presentation generators of `H^m` as classes.
    pub fn generators(&self, m: usize) -> Vec<CohomologyClass<R>> {
        match self.presentation(m) {
            Some(p) => p.lifts().iter().map(|z| self.class_unchecked(m, z.clone())).collect(),
            None => Vec::new(),
        }
    }

    /// Generators of `H^{>0}`, lowest degree first.
    pub fn positive_generators(&self) -> Vec<CohomologyClass<R>> {
        (1..=self.dim()).flat_map(|m| self.generators(m)).collect()
    }

    /// Coordinates in the generators of `H^m` (torsion entries reduced).
    pub fn coordinates(&self, a: &CohomologyClass<R>) -> Result<Vec<R::Elem>, RingError> {
        self.check(a)?;
        match self.presentation(a.degree) {
            Some(p) => Ok(p.coordinates(&a.cochain)?),
            None => Ok(Vec::new()),
        }
    }

    pub fn is_zero(&self, a: &CohomologyClass<R>) -> Result<bool, RingError> {
        self.check(a)?;
        match self.presentation(a.degree) {
            Some(p) => Ok(p.is_zero(&a.cochain)?),
            None => Ok(true),
        }
    }

    pub fn classes_equal(&self, a: &CohomologyClass<R>, b: &CohomologyClass<R>) -> Result<bool, RingError> {
        if a.degree != b.degree {
            return Ok(self.is_zero(a)? && self.is_zero(b)?);
        }
        self.is_zero(&self.sub(a, b)?)
    }

    pub fn add(&self, a: &CohomologyClass<R>, b: &CohomologyClass<R>) -> Result<CohomologyClass<R>, RingError> {
        self.check(a)?;
        self.check(b)?;
        if a.degree != b.degree {
            return Err(RingError::DegreeMismatch);
        }
        let c = a.cochain.iter().zip(&b.cochain).map(|(x, y)| self.ring.add(x, y)).collect();
        Ok(self.class_unchecked(a.degree, c))
    }

    pub fn sub(&self, a: &CohomologyClass<R>, b: &CohomologyClass<R>) -> Result<CohomologyClass<R>, RingError> {
        self.add(a, &self.scale(b, &self.ring.neg(&self.ring.one())))
    }

    pub fn scale(&self, a: &CohomologyClass<R>, c: &R::Elem) -> CohomologyClass<R> {
        self.class_unchecked(a.degree, a.cochain.iter().map(|x| self.ring.mul(c, x)).collect())
    }

    /// Alexander–Whitney product:
    /// `(a ⌣ b)(v_0..v_{p+q}) = a(v_0..v_p) · b(v_p..v_{p+q})`.
    pub fn cup(&self, a: &CohomologyClass<R>, b: &CohomologyClass<R>) -> Result<CohomologyClass<R>, RingError> {
        self.check(a)?;
        self.check(b)?;
        let (p, q) = (a.degree, b.degree);
        let k = self.complex();
        if p + q > k.dim() {
            return Ok(self.class_unchecked(p + q, Vec::new()));
        }
        let out = k
            .simplices(p + q)
            .iter()
            .map(|s| {
                let x = &a.cochain[k.simplex_index(&s[..=p]).expect("front face")];
                if self.ring.is_zero(x) {
                    return self.ring.zero();
                }
                let y = &b.cochain[k.simplex_index(&s[p..]).expect("back face")];
                self.ring.mul(x, y)
            })
            .collect();
        Ok(self.class_unchecked(p + q, out))
    }

    pub fn cup_all(&self, factors: &[CohomologyClass<R>]) -> Result<CohomologyClass<R>, RingError> {
        let mut acc = self.one();
        for f in factors {
            acc = self.cup(&acc, f)?;
        }
        Ok(acc)
    }

    fn check(&self, a: &CohomologyClass<R>) -> Result<(), RingError> {
        if *a.complex != **self.complex() {
            return Err(RingError::ComplexMismatch);
        }
        Ok(())
    }

    /// A generating set of the submodule spanned by `classes`, with
    /// nonzero members only; classes above the top degree are dropped.
    pub fn reduce(&self, classes: &[CohomologyClass<R>]) -> Result<Vec<CohomologyClass<R>>, RingError> {
        let mut out = Vec::new();
        for m in 0..=self.dim() {
            let here: Vec<&CohomologyClass<R>> = classes.iter().filter(|c| c.degree == m).collect();
            if here.is_empty() {
                continue;
            }
            let p = self.module.degree(m);
            let n = p.generator_count();
            if n == 0 {
                continue;
            }
            let mut cols = Vec::with_capacity(here.len() + p.torsion().len());
            for c in &here {
                cols.push(self.coordinates(c)?);
            }
            for (i, d) in p.torsion().iter().enumerate() {
                let mut e = vec![self.ring.zero(); n];
                e[i] = d.clone();
                cols.push(e);
            }
            let basis = image_basis(&self.ring, &Matrix::from_columns(&self.ring, n, &cols));
            for w in basis.columns() {
                if p.coordinates_vanish(&w) {
                    continue;
                }
                out.push(self.class_unchecked(m, self.combine(p, &w)));
            }
        }
        Ok(out)
    }

    /// Cocycle `Σ w_i · lift_i`.
    fn combine(&self, p: &Presentation<R>, w: &[R::Elem]) -> Vec<R::Elem> {
        let mut acc = vec![self.ring.zero(); p.ambient_dim()];
        for (c, lift) in w.iter().zip(p.lifts()) {
            if self.ring.is_zero(c) {
                continue;
            }
            for (a, x) in acc.iter_mut().zip(lift) {
                *a = self.ring.add(a, &self.ring.mul(c, x));
            }
        }
        acc
    }
}
