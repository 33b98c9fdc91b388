use std::sync::Arc;

use super::{ComplexError, Label, Simplex, SimplicialComplex, SimplicialMap};

/// A nonempty downward-closed subset of a parent complex.
///
/// The piece is also materialized as a complex in its own right, whose vertex
/// order is inherited from the parent so orientations agree.
#[derive(Clone, Debug)]
pub struct Subcomplex {
    parent: Arc<SimplicialComplex>,
    complex: Arc<SimplicialComplex>,
    vertex_map: Vec<u32>,
}

impl Subcomplex {
    /// Downward closure of `faces` (parent vertex indices) inside `parent`.
    pub fn generated_by(parent: Arc<SimplicialComplex>, faces: &[Simplex]) -> Result<Self, ComplexError> {
        if faces.is_empty() {
            return Err(ComplexError::EmptyPiece);
        }
        for f in faces {
            if !parent.contains(f) {
                return Err(ComplexError::NotASubcomplex(parent.format_simplex(f)));
            }
        }
        let mut used: Vec<u32> = faces.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        let mut local = vec![u32::MAX; parent.vertex_count()];
        for (i, &v) in used.iter().enumerate() {
            local[v as usize] = i as u32;
        }
        let labels: Vec<Label> = used.iter().map(|&v| parent.label(v).clone()).collect();
        let faces: Vec<Simplex> = faces.iter().map(|f| f.iter().map(|&v| local[v as usize]).collect()).collect();
        let complex = SimplicialComplex::from_indexed(labels, faces, false)?;
        Ok(Subcomplex { parent, complex: Arc::new(complex), vertex_map: used })
    }

    /// Like [`Subcomplex::generated_by`] with faces given by labels.
    pub fn from_labeled_faces<F, I, V>(parent: Arc<SimplicialComplex>, faces: F) -> Result<Self, ComplexError>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = V>,
        V: Into<Label>,
    {
        let faces = faces.into_iter().map(|f| parent.simplex_from_labels(f)).collect::<Result<Vec<_>, _>>()?;
        Subcomplex::generated_by(parent, &faces)
    }

    pub fn whole(parent: Arc<SimplicialComplex>) -> Self {
        let facets = parent.facets().to_vec();
        Subcomplex::generated_by(parent, &facets).expect("a complex generates itself")
    }

    pub fn parent(&self) -> &Arc<SimplicialComplex> {
        &self.parent
    }

    /// The piece as a standalone complex (vertex order inherited).
    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    /// Local vertex index -> parent vertex index (strictly increasing).
    pub fn vertex_map(&self) -> &[u32] {
        &self.vertex_map
    }

    pub fn to_parent(&self, s: &[u32]) -> Simplex {
        s.iter().map(|&v| self.vertex_map[v as usize]).collect()
    }

    /// Maximal faces of the piece, in parent indices.
    pub fn facets_in_parent(&self) -> Vec<Simplex> {
        self.complex.facets().iter().map(|f| self.to_parent(f)).collect()
    }

    /// Whether the parent simplex `s` lies in this piece.
    pub fn contains(&self, s: &[u32]) -> bool {
        let mut local = Vec::with_capacity(s.len());
        for v in s {
            match self.vertex_map.binary_search(v) {
                Ok(i) => local.push(i as u32),
                Err(_) => return false,
            }
        }
        self.complex.contains(&local)
    }

    pub fn is_subcomplex_of(&self, other: &Subcomplex) -> bool {
        self.parent == other.parent && self.facets_in_parent().iter().all(|f| other.contains(f))
    }

    pub fn inclusion(&self) -> SimplicialMap {
        SimplicialMap::new(self.complex.clone(), self.parent.clone(), self.vertex_map.clone())
            .expect("inclusion of a subcomplex is simplicial")
    }

    pub fn labeled_facets(&self) -> Vec<Vec<Label>> {
        self.complex.labeled_facets()
    }
}

/// Outcome of a covering check, with a missing maximal face on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCheck {
    pub covered: bool,
    pub missing: Option<Simplex>,
}

/// Whether every simplex of `parent` lies in some piece.
///
/// Only the parent's facets need checking: pieces are downward closed.
pub fn is_cover(parent: &SimplicialComplex, pieces: &[Subcomplex]) -> Result<CoverCheck, ComplexError> {
    if pieces.iter().any(|p| **p.parent() != *parent) {
        return Err(ComplexError::ComplexMismatch);
    }
    let missing = parent.facets().iter().find(|f| !pieces.iter().any(|p| p.contains(f))).cloned();
    Ok(CoverCheck { covered: missing.is_none(), missing })
}

/// A named family of candidate pieces of one complex.
///
/// The family need not cover; [`Cover::check`] decides that, so printed
/// tables can be loaded and judged rather than rejected on read.
#[derive(Clone, Debug)]
pub struct Cover {
    parent: Arc<SimplicialComplex>,
    pieces: Vec<Subcomplex>,
    names: Vec<String>,
}

impl Cover {
    pub fn new(parent: Arc<SimplicialComplex>, pieces: Vec<Subcomplex>) -> Result<Self, ComplexError> {
        let names = (0..pieces.len()).map(|i| format!("K{i}")).collect();
        Cover::with_names(parent, pieces, names)
    }

    pub fn with_names(
        parent: Arc<SimplicialComplex>,
        pieces: Vec<Subcomplex>,
        names: Vec<String>,
    ) -> Result<Self, ComplexError> {
        if pieces.is_empty() {
            return Err(ComplexError::EmptyPiece);
        }
        if pieces.iter().any(|p| *p.parent() != parent) || names.len() != pieces.len() {
            return Err(ComplexError::ComplexMismatch);
        }
        Ok(Cover { parent, pieces, names })
    }

    /// Builds pieces from facet lists in parent indices.
    pub fn from_facets(parent: Arc<SimplicialComplex>, pieces: &[Vec<Simplex>]) -> Result<Self, ComplexError> {
        let pieces =
            pieces.iter().map(|p| Subcomplex::generated_by(parent.clone(), p)).collect::<Result<Vec<_>, _>>()?;
        Cover::new(parent, pieces)
    }

    pub fn single(parent: Arc<SimplicialComplex>) -> Self {
        Cover::new(parent.clone(), vec![Subcomplex::whole(parent)]).expect("one piece")
    }

    pub fn parent(&self) -> &Arc<SimplicialComplex> {
        &self.parent
    }

    pub fn pieces(&self) -> &[Subcomplex] {
        &self.pieces
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn check(&self) -> CoverCheck {
        is_cover(&self.parent, &self.pieces).expect("pieces share the parent")
    }

    /// The family with one more piece appended.
    pub fn with_piece(&self, piece: Subcomplex, name: impl Into<String>) -> Result<Self, ComplexError> {
        let mut pieces = self.pieces.clone();
        let mut names = self.names.clone();
        pieces.push(piece);
        names.push(name.into());
        Cover::with_names(self.parent.clone(), pieces, names)
    }

    /// Canonical form: each piece's facets sorted, for comparisons.
    pub fn canonical_facets(&self) -> Vec<Vec<Simplex>> {
        self.pieces
            .iter()
            .map(|p| {
                let mut f = p.facets_in_parent();
                f.sort();
                f
            })
            .collect()
    }
}
