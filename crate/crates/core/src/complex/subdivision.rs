use std::sync::Arc;

use super::{ComplexError, Label, Simplex, SimplicialComplex, SimplicialMap, Subcomplex};

/// `sd K` together with the carrier map back to `K`.
///
/// Vertex `i` of `sd K` is the barycenter of a simplex of `K`; vertices are
/// ordered by (dimension, basis index) so every chain of faces is increasing.
#[derive(Clone, Debug)]
pub struct Subdivision {
    base: Arc<SimplicialComplex>,
    complex: Arc<SimplicialComplex>,
    carrier: SimplicialMap,
    offsets: Vec<u32>,
    barycenters: Vec<Simplex>,
}

impl Subdivision {
    pub fn base(&self) -> &Arc<SimplicialComplex> {
        &self.base
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    /// Sends `σ̂` to the largest vertex of `σ`.
    pub fn carrier(&self) -> &SimplicialMap {
        &self.carrier
    }

    /// The sd vertex of a simplex of the base.
    pub fn barycenter(&self, s: &[u32]) -> Option<u32> {
        let i = self.base.simplex_index(s)?;
        Some(self.offsets[s.len() - 1] + i as u32)
    }

    /// The base simplex whose barycenter is sd vertex `v`.
    pub fn simplex_of(&self, v: u32) -> &Simplex {
        &self.barycenters[v as usize]
    }

    /// `sd A` as a subcomplex of `sd K`, for a piece `A` of `K`.
    pub fn subdivide_piece(&self, piece: &Subcomplex) -> Result<Subcomplex, ComplexError> {
        if **piece.parent() != *self.base {
            return Err(ComplexError::ComplexMismatch);
        }
        let mut faces = Vec::new();
        for f in piece.facets_in_parent() {
            for flag in flags(&f) {
                let mut chain: Simplex = flag.iter().map(|s| self.barycenter(s).expect("face of a simplex")).collect();
                chain.sort_unstable();
                faces.push(chain);
            }
        }
        Subcomplex::generated_by(self.complex.clone(), &faces)
    }
}

/// All maximal chains `{v_a} ⊂ {v_a, v_b} ⊂ ... ⊂ f`, each face sorted.
fn flags(f: &[u32]) -> Vec<Vec<Simplex>> {
    if f.len() == 1 {
        return vec![vec![f.to_vec()]];
    }
    let mut out = Vec::new();
    for skip in 0..f.len() {
        let face: Simplex = f.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| *v).collect();
        for mut chain in flags(&face) {
            chain.push(f.to_vec());
            out.push(chain);
        }
    }
    out
}

fn barycenter_label(k: &SimplicialComplex, s: &[u32]) -> Label {
    let parts: Vec<&str> = s.iter().map(|&v| k.label(v).as_str()).collect();
    Label::new(format!("{{{}}}", parts.join("|")))
}

/// One barycentric subdivision of `k`.
pub fn barycentric_subdivision(k: &Arc<SimplicialComplex>) -> Subdivision {
    let mut offsets = Vec::with_capacity(k.dim() + 1);
    let mut barycenters = Vec::new();
    for d in 0..=k.dim() {
        offsets.push(barycenters.len() as u32);
        barycenters.extend(k.simplices(d).iter().cloned());
    }
    let labels: Vec<Label> = barycenters.iter().map(|s| barycenter_label(k, s)).collect();
    let vertex = |s: &Simplex| offsets[s.len() - 1] + k.simplex_index(s).expect("face of a simplex") as u32;
    let mut faces = Vec::new();
    for f in k.facets() {
        for flag in flags(f) {
            faces.push(flag.iter().map(vertex).collect::<Simplex>());
        }
    }
    let complex =
        Arc::new(SimplicialComplex::from_indexed(labels, faces, false).expect("subdivision of a valid complex"));
    let assignment = barycenters.iter().map(|s| *s.last().expect("nonempty simplex")).collect();
    let carrier = SimplicialMap::new(complex.clone(), k.clone(), assignment).expect("carrier is simplicial");
    Subdivision { base: k.clone(), complex, carrier, offsets, barycenters }
}

/// `sd φ`: the barycenter of `σ` goes to the barycenter of `φ(σ)`.
pub fn sd_map(
    phi: &SimplicialMap,
    sd_source: &Subdivision,
    sd_target: &Subdivision,
) -> Result<SimplicialMap, ComplexError> {
    if *phi.source() != *sd_source.base() || *phi.target() != *sd_target.base() {
        return Err(ComplexError::ComplexMismatch);
    }
    let assignment = sd_source
        .barycenters
        .iter()
        .map(|s| sd_target.barycenter(&phi.image(s)).expect("image of a simplex is a simplex"))
        .collect();
    SimplicialMap::new(sd_source.complex().clone(), sd_target.complex().clone(), assignment)
}
