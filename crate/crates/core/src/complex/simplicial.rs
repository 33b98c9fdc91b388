use std::collections::{HashMap, HashSet};
use std::fmt;

use super::{ComplexError, Label};

/// A simplex as sorted vertex indices into its complex's vertex order.
pub type Simplex = Vec<u32>;

/// Finite abstract simplicial complex with a fixed total order on vertices.
///
/// Simplices of each dimension are stored sorted lexicographically; that
/// order is the chain basis used everywhere else in the crate.
#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Vec<Label>,
    lookup: HashMap<Label, u32>,
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    facets: Vec<Simplex>,
}

/// Options for building a complex from maximal faces.
#[derive(Clone, Debug)]
pub struct ComplexBuilder {
    order: Option<Vec<Label>>,
    require_connected: bool,
}

impl Default for ComplexBuilder {
    fn default() -> Self {
        ComplexBuilder { order: None, require_connected: true }
    }
}

impl ComplexBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fixes the vertex order explicitly instead of sorting labels.
    pub fn order<I, V>(mut self, order: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<Label>,
    {
        self.order = Some(order.into_iter().map(Into::into).collect());
        self
    }

    /// Accepts complexes whose 1-skeleton is disconnected (cover pieces).
    pub fn allow_disconnected(mut self) -> Self {
        self.require_connected = false;
        self
    }

    pub fn build<F, I, V>(&self, faces: F) -> Result<SimplicialComplex, ComplexError>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = V>,
        V: Into<Label>,
    {
        let faces: Vec<Vec<Label>> = faces.into_iter().map(|f| f.into_iter().map(Into::into).collect()).collect();
        if faces.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        for (k, face) in faces.iter().enumerate() {
            if face.is_empty() {
                return Err(ComplexError::EmptyFace { index: k });
            }
            let mut seen = HashSet::new();
            for v in face {
                if !seen.insert(v) {
                    return Err(ComplexError::DuplicateVertexInFace { face: k, vertex: v.to_string() });
                }
            }
        }
        let labels: Vec<Label> = match &self.order {
            Some(order) => {
                let mut seen = HashSet::new();
                for v in order {
                    if !seen.insert(v) {
                        return Err(ComplexError::DuplicateVertexInOrder(v.to_string()));
                    }
                }
                let used: HashSet<&Label> = faces.iter().flatten().collect();
                if let Some(v) = order.iter().find(|v| !used.contains(v)) {
                    return Err(ComplexError::UnusedVertex(v.to_string()));
                }
                order.clone()
            }
            None => {
                let mut all: Vec<Label> = faces.iter().flatten().cloned().collect();
                all.sort();
                all.dedup();
                all
            }
        };
        let lookup: HashMap<Label, u32> = labels.iter().enumerate().map(|(i, l)| (l.clone(), i as u32)).collect();
        let mut indexed = Vec::with_capacity(faces.len());
        for face in &faces {
            let mut s = face
                .iter()
                .map(|v| lookup.get(v).copied().ok_or_else(|| ComplexError::UnknownVertex(v.to_string())))
                .collect::<Result<Simplex, _>>()?;
            s.sort_unstable();
            indexed.push(s);
        }
        SimplicialComplex::from_indexed(labels, indexed, self.require_connected)
    }
}

impl SimplicialComplex {
    /// Downward closure of the given faces, vertex order = sorted labels,
    /// connectivity required.
    pub fn from_maximal_faces<F, I, V>(faces: F) -> Result<Self, ComplexError>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = V>,
        V: Into<Label>,
    {
        ComplexBuilder::new().build(faces)
    }

    /// Builds from faces given as sorted indices into `labels`.
    pub(crate) fn from_indexed(
        labels: Vec<Label>,
        faces: Vec<Simplex>,
        require_connected: bool,
    ) -> Result<Self, ComplexError> {
        if faces.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        let dim = faces.iter().map(|f| f.len() - 1).max().unwrap_or(0);
        let mut sets: Vec<HashSet<Simplex>> = vec![HashSet::new(); dim + 1];
        for face in &faces {
            if sets[face.len() - 1].contains(face) {
                continue;
            }
            let n = face.len();
            for mask in 1u64..(1u64 << n) {
                let sub: Simplex = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| face[i]).collect();
                sets[sub.len() - 1].insert(sub);
            }
        }
        let mut simplices: Vec<Vec<Simplex>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        for level in &mut simplices {
            level.sort_unstable();
        }
        let index: Vec<HashMap<Simplex, usize>> =
            simplices.iter().map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        if simplices[0].len() != labels.len() {
            let present: HashSet<u32> = simplices[0].iter().map(|s| s[0]).collect();
            let missing = (0..labels.len() as u32).find(|v| !present.contains(v)).unwrap_or(0);
            return Err(ComplexError::UnusedVertex(labels[missing as usize].to_string()));
        }
        // a simplex is maximal iff it is not a facet of a simplex one dimension up
        let mut covered: Vec<HashSet<&Simplex>> = vec![HashSet::new(); dim + 1];
        for d in 1..=dim {
            for s in &simplices[d] {
                for skip in 0..s.len() {
                    let face: Simplex = s.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| *v).collect();
                    let idx = index[d - 1][&face];
                    covered[d - 1].insert(&simplices[d - 1][idx]);
                }
            }
        }
        let mut facets = Vec::new();
        for d in (0..=dim).rev() {
            for s in &simplices[d] {
                if !covered[d].contains(s) {
                    facets.push(s.clone());
                }
            }
        }
        drop(covered);
        let lookup = labels.iter().enumerate().map(|(i, l)| (l.clone(), i as u32)).collect();
        let complex = SimplicialComplex { labels, lookup, simplices, index, facets };
        if require_connected {
            let comps = complex.components();
            if comps.len() > 1 {
                return Err(ComplexError::DisconnectedComplex { components: comps.len() });
            }
        }
        Ok(complex)
    }

    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| if d % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// Simplices of dimension `d` in basis order (empty past the top dimension).
    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    pub fn simplex_index(&self, s: &[u32]) -> Option<usize> {
        if s.is_empty() {
            return None;
        }
        self.index.get(s.len() - 1)?.get(s).copied()
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        self.simplex_index(s).is_some()
    }

    /// Inclusion-maximal simplices, highest dimension first.
    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> &Label {
        &self.labels[v as usize]
    }

    pub fn vertex(&self, label: &Label) -> Option<u32> {
        self.lookup.get(label).copied()
    }

    /// Converts a labeled face into a sorted index simplex.
    pub fn simplex_from_labels<V: Into<Label>>(
        &self,
        face: impl IntoIterator<Item = V>,
    ) -> Result<Simplex, ComplexError> {
        let mut s = face
            .into_iter()
            .map(|v| {
                let l: Label = v.into();
                self.vertex(&l).ok_or_else(|| ComplexError::UnknownVertex(l.to_string()))
            })
            .collect::<Result<Simplex, _>>()?;
        s.sort_unstable();
        Ok(s)
    }

    pub fn simplex_labels(&self, s: &[u32]) -> Vec<Label> {
        s.iter().map(|v| self.label(*v).clone()).collect()
    }

    /// `[a, b, c]` rendering of a simplex by labels.
    pub fn format_simplex(&self, s: &[u32]) -> String {
        let parts: Vec<String> = s
            .iter()
            .map(|v| {
                let l = self.label(*v).as_str();
                if l.contains(',') {
                    format!("({l})")
                } else {
                    l.to_string()
                }
            })
            .collect();
        format!("[{}]", parts.join(", "))
    }

    /// Vertex sets of the connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(p: &mut [u32], mut x: u32) -> u32 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for e in self.simplices(1) {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
        let mut groups: HashMap<u32, Vec<u32>> = HashMap::new();
        for v in 0..n as u32 {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut out: Vec<Vec<u32>> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Labeled maximal faces, for serialization.
    pub fn labeled_facets(&self) -> Vec<Vec<Label>> {
        self.facets.iter().map(|f| self.simplex_labels(f)).collect()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || (self.labels == other.labels && self.simplices == other.simplices)
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.labels.len())
            .field("f_vector", &self.f_vector())
            .finish()
    }
}
