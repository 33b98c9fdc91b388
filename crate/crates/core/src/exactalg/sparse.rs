//! Sparse column reduction over fields.
//!
//! Boundary matrices of simplicial complexes have a handful of nonzeros per
//! column and stay sparse under the standard pivot-on-last-row reduction, so
//! large subdivided complexes are handled here rather than by dense Smith
//! normal forms.

use std::collections::HashMap;

use super::EuclideanRing;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec<E> {
    entries: Vec<(u32, E)>,
}

impl<E: Clone> SparseVec<E> {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Builds from unsorted `(index, value)` pairs, summing duplicates.
    pub fn from_pairs<R: EuclideanRing<Elem = E>>(ring: &R, mut pairs: Vec<(u32, E)>) -> Self {
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(u32, E)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match entries.last_mut() {
                Some((j, w)) if *j == i => *w = ring.add(w, &v),
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !ring.is_zero(v));
        SparseVec { entries }
    }

    pub fn from_dense<R: EuclideanRing<Elem = E>>(ring: &R, dense: &[E]) -> Self {
        let entries =
            dense.iter().enumerate().filter(|(_, v)| !ring.is_zero(v)).map(|(i, v)| (i as u32, v.clone())).collect();
        SparseVec { entries }
    }

    pub fn unit<R: EuclideanRing<Elem = E>>(ring: &R, i: u32) -> Self {
        SparseVec { entries: vec![(i, ring.one())] }
    }

    pub fn to_dense<R: EuclideanRing<Elem = E>>(&self, ring: &R, len: usize) -> Vec<E> {
        let mut out = vec![ring.zero(); len];
        for (i, v) in &self.entries {
            out[*i as usize] = v.clone();
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(u32, E)] {
        &self.entries
    }

    pub fn last(&self) -> Option<&(u32, E)> {
        self.entries.last()
    }

    pub fn get(&self, i: u32) -> Option<&E> {
        self.entries.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &self.entries[k].1)
    }

    /// `self + c * other`
    pub fn axpy<R: EuclideanRing<Elem = E>>(&self, ring: &R, c: &E, other: &Self) -> Self {
        if ring.is_zero(c) {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, ring.mul(c, &b[j].1)));
                j += 1;
            } else {
                let mut v = a[i].1.clone();
                ring.add_mul_assign(&mut v, c, &b[j].1);
                if !ring.is_zero(&v) {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn scale<R: EuclideanRing<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        if ring.is_zero(c) {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, ring.mul(c, v))).collect() }
    }

    /// Restricts to indices accepted by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(u32) -> bool) -> Self {
        SparseVec { entries: self.entries.iter().filter(|(i, _)| keep(*i)).cloned().collect() }
    }
}

/// Echelon basis of a subspace over a field, with a pivot on each vector's
/// last index. Every stored vector carries a `tag`: its expression as a
/// combination of tracked generators, which yields coordinates of reduced
/// vectors modulo the untracked part of the span.
#[derive(Clone, Debug)]
pub struct EchelonBasis<R: EuclideanRing> {
    ring: R,
    pivots: HashMap<u32, usize>,
    vectors: Vec<SparseVec<R::Elem>>,
    tags: Vec<SparseVec<R::Elem>>,
}

impl<R: EuclideanRing> EchelonBasis<R> {
    pub fn new(ring: &R) -> Self {
        assert!(ring.is_field(), "echelon bases require field coefficients");
        EchelonBasis { ring: ring.clone(), pivots: HashMap::new(), vectors: Vec::new(), tags: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// Reduces `v` until its last index is not a pivot. Returns the residual
    /// and the accumulated tag combination that was subtracted.
    pub fn reduce(&self, v: &SparseVec<R::Elem>) -> (SparseVec<R::Elem>, SparseVec<R::Elem>) {
        let ring = &self.ring;
        let mut v = v.clone();
        let mut tag = SparseVec::new();
        while let Some((p, x)) = v.last().cloned() {
            let Some(&k) = self.pivots.get(&p) else { break };
            // stored vectors have a unit pivot entry
            let c = ring.neg(&x);
            v = v.axpy(ring, &c, &self.vectors[k]);
            if !self.tags[k].is_empty() {
                tag = tag.axpy(ring, &x, &self.tags[k]);
            }
        }
        (v, tag)
    }

    pub fn contains(&self, v: &SparseVec<R::Elem>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Inserts `v` with the given tag. Returns false if `v` was already in the span.
    pub fn insert(&mut self, v: &SparseVec<R::Elem>, tag: SparseVec<R::Elem>) -> bool {
        let ring = self.ring.clone();
        let (res, used) = self.reduce(v);
        let Some((p, x)) = res.last().cloned() else { return false };
        let inv = ring.inverse(&x).expect("nonzero field element");
        let stored = res.scale(&ring, &inv);
        // stored = (v - sum used) / x, so its tag is (tag - used) / x
        let tag = tag.axpy(&ring, &ring.neg(&ring.one()), &used).scale(&ring, &inv);
        self.pivots.insert(p, self.vectors.len());
        self.vectors.push(stored);
        self.tags.push(tag);
        true
    }

    /// Coordinates of `v` in the tracked generators, provided `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec<R::Elem>) -> Option<SparseVec<R::Elem>> {
        let (res, used) = self.reduce(v);
        res.is_empty().then_some(used)
    }
}

/// Kernel basis of the linear map whose columns are `columns` (over a field).
///
/// Runs the standard column reduction while tracking the column operations;
/// every column that reduces to zero contributes its operation vector.
pub fn sparse_kernel<R: EuclideanRing>(ring: &R, columns: &[SparseVec<R::Elem>]) -> Vec<SparseVec<R::Elem>> {
    assert!(ring.is_field(), "sparse kernel requires field coefficients");
    let mut pivots: HashMap<u32, usize> = HashMap::new();
    let mut reduced: Vec<SparseVec<R::Elem>> = Vec::with_capacity(columns.len());
    let mut ops: Vec<SparseVec<R::Elem>> = Vec::with_capacity(columns.len());
    let mut kernel = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut op = SparseVec::unit(ring, j as u32);
        while let Some((p, x)) = v.last().cloned() {
            let Some(&k) = pivots.get(&p) else { break };
            let (_, y) = reduced[k].last().expect("stored pivot column is nonzero");
            let c = ring.neg(&ring.mul(&x, &ring.inverse(y).expect("unit pivot")));
            v = v.axpy(ring, &c, &reduced[k]);
            op = op.axpy(ring, &c, &ops[k]);
        }
        if let Some((p, _)) = v.last() {
            pivots.insert(*p, reduced.len());
        } else {
            kernel.push(op.clone());
        }
        reduced.push(v);
        ops.push(op);
    }
    kernel
}
