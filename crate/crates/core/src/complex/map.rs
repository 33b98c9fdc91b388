use std::collections::HashMap;
use std::sync::Arc;

use super::{ComplexError, Label, Simplex, SimplicialComplex, Subcomplex};

/// Vertex map between complexes that sends simplices to simplices.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: Arc<SimplicialComplex>,
    target: Arc<SimplicialComplex>,
    assignment: Vec<u32>,
}

impl SimplicialMap {
    /// Validates that every facet of the source lands on a simplex of the target.
    pub fn new(
        source: Arc<SimplicialComplex>,
        target: Arc<SimplicialComplex>,
        assignment: Vec<u32>,
    ) -> Result<Self, ComplexError> {
        if assignment.len() != source.vertex_count() {
            let v = source.labels().get(assignment.len()).map(Label::to_string).unwrap_or_default();
            return Err(ComplexError::MissingAssignment(v));
        }
        if let Some(&w) = assignment.iter().find(|&&w| w as usize >= target.vertex_count()) {
            return Err(ComplexError::UnknownVertex(w.to_string()));
        }
        let map = SimplicialMap { source, target, assignment };
        for f in map.source.facets() {
            if !map.target.contains(&map.image(f)) {
                return Err(ComplexError::NotSimplicial(map.source.format_simplex(f)));
            }
        }
        Ok(map)
    }

    /// Builds a map from `source label -> target label` pairs.
    pub fn from_labels<I, A, B>(
        source: Arc<SimplicialComplex>,
        target: Arc<SimplicialComplex>,
        pairs: I,
    ) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<Label>,
        B: Into<Label>,
    {
        let mut table: HashMap<u32, u32> = HashMap::new();
        for (a, b) in pairs {
            let (a, b): (Label, Label) = (a.into(), b.into());
            let u = source.vertex(&a).ok_or_else(|| ComplexError::UnknownVertex(a.to_string()))?;
            let v = target.vertex(&b).ok_or_else(|| ComplexError::UnknownVertex(b.to_string()))?;
            table.insert(u, v);
        }
        let assignment = (0..source.vertex_count() as u32)
            .map(|u| table.get(&u).copied().ok_or_else(|| ComplexError::MissingAssignment(source.label(u).to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        SimplicialMap::new(source, target, assignment)
    }

    pub fn identity(k: Arc<SimplicialComplex>) -> Self {
        let assignment = (0..k.vertex_count() as u32).collect();
        SimplicialMap { source: k.clone(), target: k, assignment }
    }

    /// The constant map at target vertex `v`.
    pub fn constant(
        source: Arc<SimplicialComplex>,
        target: Arc<SimplicialComplex>,
        v: u32,
    ) -> Result<Self, ComplexError> {
        let n = source.vertex_count();
        SimplicialMap::new(source, target, vec![v; n])
    }

    /// The constant map at the first vertex of `target`.
    pub fn constant_first(source: Arc<SimplicialComplex>, target: Arc<SimplicialComplex>) -> Self {
        SimplicialMap::constant(source, target, 0).expect("a vertex is always a simplex")
    }

    pub fn source(&self) -> &Arc<SimplicialComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialComplex> {
        &self.target
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.assignment[v as usize]
    }

    /// Image vertex set of `s`, sorted and deduplicated.
    pub fn image(&self, s: &[u32]) -> Simplex {
        let mut img: Simplex = s.iter().map(|&v| self.apply(v)).collect();
        img.sort_unstable();
        img.dedup();
        img
    }

    /// The oriented image of `s`: `None` when dimension drops, otherwise the
    /// sorted image simplex and the sign of the sorting permutation.
    pub fn image_with_sign(&self, s: &[u32]) -> Option<(Simplex, i8)> {
        let mut img: Vec<u32> = s.iter().map(|&v| self.apply(v)).collect();
        let mut sign = 1i8;
        // insertion sort counts transpositions; images are short
        for i in 1..img.len() {
            let mut j = i;
            while j > 0 && img[j - 1] > img[j] {
                img.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if img.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((img, sign))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &SimplicialMap) -> Result<Self, ComplexError> {
        if inner.target != self.source {
            return Err(ComplexError::ComplexMismatch);
        }
        let assignment = inner.assignment.iter().map(|&v| self.apply(v)).collect();
        Ok(SimplicialMap { source: inner.source.clone(), target: self.target.clone(), assignment })
    }

    /// The same vertex assignment with source `piece`.
    pub fn restrict(&self, piece: &Subcomplex) -> Result<Self, ComplexError> {
        if **piece.parent() != *self.source {
            return Err(ComplexError::ComplexMismatch);
        }
        let assignment = piece.vertex_map().iter().map(|&v| self.apply(v)).collect();
        Ok(SimplicialMap { source: piece.complex().clone(), target: self.target.clone(), assignment })
    }

    /// Whether `self` and `other` agree on every vertex.
    pub fn same_assignment(&self, other: &SimplicialMap) -> bool {
        self.source == other.source && self.target == other.target && self.assignment == other.assignment
    }

    /// `φ(σ) ∪ ψ(σ)` is a simplex for every σ.
    pub fn is_contiguous_to(&self, other: &SimplicialMap) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.source.facets().iter().all(|f| {
                let mut u = self.image(f);
                u.extend(other.image(f));
                u.sort_unstable();
                u.dedup();
                self.target.contains(&u)
            })
    }

    /// `(source label, target label)` pairs in source vertex order.
    pub fn labeled_pairs(&self) -> Vec<(Label, Label)> {
        self.assignment
            .iter()
            .enumerate()
            .map(|(u, &v)| (self.source.label(u as u32).clone(), self.target.label(v).clone()))
            .collect()
    }
}
