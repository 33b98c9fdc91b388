use std::sync::Arc;

use super::{graded_module, GradedModule, Variance};
use crate::complex::{ComplexError, SimplicialComplex, SimplicialMap};
use crate::exactalg::{homs_equal, AlgebraError, EuclideanRing, ModuleHom};

/// One module homomorphism per degree.
#[derive(Clone, Debug)]
pub struct GradedHom<R: EuclideanRing> {
    pub variance: Variance,
    pub degrees: Vec<ModuleHom<R>>,
}

impl<R: EuclideanRing> GradedHom<R> {
    pub fn degree(&self, m: usize) -> &ModuleHom<R> {
        &self.degrees[m]
    }

    pub fn is_isomorphism(&self) -> bool {
        self.degrees.iter().all(ModuleHom::is_isomorphism)
    }
}

/// `φ^#` on a cochain of the target: `(φ^# y)(σ) = ±y(φ(σ))`, zero on
/// simplices whose image is degenerate.
pub fn pullback_cochain<R: EuclideanRing>(ring: &R, phi: &SimplicialMap, m: usize, y: &[R::Elem]) -> Vec<R::Elem> {
    let (k, l) = (phi.source(), phi.target());
    k.simplices(m)
        .iter()
        .map(|s| match phi.image_with_sign(s) {
            Some((t, sign)) => {
                let v = &y[l.simplex_index(&t).expect("simplicial map")];
                if sign > 0 {
                    v.clone()
                } else {
                    ring.neg(v)
                }
            }
            None => ring.zero(),
        })
        .collect()
}

/// `φ_#` on a chain of the source.
pub fn push_chain<R: EuclideanRing>(ring: &R, phi: &SimplicialMap, m: usize, z: &[R::Elem]) -> Vec<R::Elem> {
    let (k, l) = (phi.source(), phi.target());
    let mut out = vec![ring.zero(); l.count(m)];
    for (s, c) in k.simplices(m).iter().zip(z) {
        if ring.is_zero(c) {
            continue;
        }
        if let Some((t, sign)) = phi.image_with_sign(s) {
            let i = l.simplex_index(&t).expect("simplicial map");
            let c = if sign > 0 { c.clone() } else { ring.neg(c) };
            out[i] = ring.add(&out[i], &c);
        }
    }
    out
}

/// Induced map between precomputed modules of `φ`'s source and target.
///
/// Cohomology goes `H*(target) -> H*(source)`, homology the other way.
/// Degrees above either complex's dimension are omitted.
pub fn induced_map_between<R: EuclideanRing>(
    phi: &SimplicialMap,
    on_source: &GradedModule<R>,
    on_target: &GradedModule<R>,
) -> Result<GradedHom<R>, HomologyError> {
    if **on_source.complex() != **phi.source() || **on_target.complex() != **phi.target() {
        return Err(HomologyError::Complex(ComplexError::ComplexMismatch));
    }
    if on_source.variance() != on_target.variance() {
        return Err(HomologyError::VarianceMismatch);
    }
    let ring = on_source.ring();
    let variance = on_source.variance();
    let top = on_source.top_degree().min(on_target.top_degree());
    let mut degrees = Vec::with_capacity(top + 1);
    for m in 0..=top {
        let hom = match variance {
            Variance::Cohomology => {
                let (src, tgt) = (on_target.degree(m), on_source.degree(m));
                let images: Vec<_> = src.lifts().iter().map(|y| pullback_cochain(ring, phi, m, y)).collect();
                ModuleHom::from_cycle_images(src.clone(), tgt.clone(), &images)?
            }
            Variance::Homology => {
                let (src, tgt) = (on_source.degree(m), on_target.degree(m));
                let images: Vec<_> = src.lifts().iter().map(|z| push_chain(ring, phi, m, z)).collect();
                ModuleHom::from_cycle_images(src.clone(), tgt.clone(), &images)?
            }
        };
        degrees.push(hom);
    }
    Ok(GradedHom { variance, degrees })
}

/// Induced map of `φ` over `ring`, computing both modules.
pub fn induced_map<R: EuclideanRing>(phi: &SimplicialMap, ring: &R, variance: Variance) -> GradedHom<R> {
    let src = graded_module(phi.source(), ring, variance);
    let tgt = if phi.source() == phi.target() { src.clone() } else { graded_module(phi.target(), ring, variance) };
    induced_map_between(phi, &src, &tgt).expect("modules built from the map's own complexes")
}

/// Degreewise comparison of two induced maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapsEqual {
    pub per_degree: Vec<bool>,
    pub first_failure: Option<usize>,
}

impl MapsEqual {
    pub fn equal(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn maps_equal_between<R: EuclideanRing>(
    phi: &SimplicialMap,
    psi: &SimplicialMap,
    on_source: &GradedModule<R>,
    on_target: &GradedModule<R>,
) -> Result<MapsEqual, HomologyError> {
    if phi.source() != psi.source() || phi.target() != psi.target() {
        return Err(HomologyError::Complex(ComplexError::ComplexMismatch));
    }
    let f = induced_map_between(phi, on_source, on_target)?;
    let g = induced_map_between(psi, on_source, on_target)?;
    let per_degree = f.degrees.iter().zip(&g.degrees).map(|(a, b)| homs_equal(a, b)).collect::<Result<Vec<_>, _>>()?;
    let first_failure = per_degree.iter().position(|ok| !ok);
    Ok(MapsEqual { per_degree, first_failure })
}

/// Whether `φ` and `ψ` induce the same map in every degree.
pub fn maps_equal<R: EuclideanRing>(
    phi: &SimplicialMap,
    psi: &SimplicialMap,
    ring: &R,
    variance: Variance,
) -> Result<MapsEqual, HomologyError> {
    let src = graded_module(phi.source(), ring, variance);
    let tgt = if phi.source() == phi.target() { src.clone() } else { graded_module(phi.target(), ring, variance) };
    maps_equal_between(phi, psi, &src, &tgt)
}

/// The identity hom of `H^*(k)` as a graded hom, for comparisons.
pub fn identity_hom<R: EuclideanRing>(k: &Arc<SimplicialComplex>, ring: &R, variance: Variance) -> GradedHom<R> {
    induced_map(&SimplicialMap::identity(k.clone()), ring, variance)
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("modules have different variance")]
    VarianceMismatch,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Integers, PrimeField};

    fn arc(faces: &[&[u32]]) -> Arc<SimplicialComplex> {
        Arc::new(SimplicialComplex::from_maximal_faces(faces.iter().map(|f| f.to_vec())).unwrap())
    }

    #[test]
    fn identity_versus_constant_on_sphere() {
        let s2 = arc(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let id = SimplicialMap::identity(s2.clone());
        let c = SimplicialMap::constant_first(s2.clone(), s2.clone());
        let f = PrimeField::new(2).unwrap();
        let r = maps_equal(&id, &c, &f, Variance::Cohomology).unwrap();
        assert_eq!(r.per_degree, vec![true, true, false]);
        assert_eq!(r.first_failure, Some(2));
        assert!(maps_equal(&id, &id, &Integers, Variance::Homology).unwrap().equal());
        assert!(identity_hom(&s2, &Integers, Variance::Cohomology).is_isomorphism());
        let hc = induced_map(&c, &Integers, Variance::Cohomology);
        assert!(hc.degree(0).is_isomorphism());
        assert!(hc.degree(2).is_zero());
    }

    #[test]
    fn loop_in_projective_plane() {
        let rp2 = arc(&[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 5],
            &[1, 4, 6],
            &[1, 5, 6],
            &[2, 3, 6],
            &[2, 4, 5],
            &[2, 5, 6],
            &[3, 4, 5],
            &[3, 4, 6],
        ]);
        let c3 = arc(&[&[0, 1], &[1, 2], &[0, 2]]);
        let iota = SimplicialMap::from_labels(c3.clone(), rp2.clone(), [(0, 1), (1, 2), (2, 5)]).unwrap();
        let c = SimplicialMap::constant_first(c3, rp2);
        let h = induced_map(&iota, &Integers, Variance::Homology);
        assert!(!h.degree(1).is_zero());
        assert!(maps_equal(&iota, &c, &Integers, Variance::Cohomology).unwrap().equal());
        assert_eq!(maps_equal(&iota, &c, &Integers, Variance::Homology).unwrap().first_failure, Some(1));
    }
}
