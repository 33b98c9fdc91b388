//! Built-in triangulations, covers and maps.
//!
//! The 9-vertex `CP²` and 11-vertex `RP³` are the unions of the maximal faces
//! of their bundled covers, since the pieces of a cover cover `K`.
//! `s2xs2_printed` is a reference family on `S²₄ × S²₄` whose second and
//! third pieces coincide; it is kept verbatim and does not cover.

use std::sync::Arc;

use crate::complex::{product, Cover, SimplicialComplex, SimplicialMap};
use crate::io::{parse_complex, parse_cover, parse_map, IoError};

const CP2_9: &str = include_str!("../fixtures/cp2_9.complex");
const RP3_11: &str = include_str!("../fixtures/rp3_11.complex");
const RP2_6: &str = include_str!("../fixtures/rp2_6.complex");
const S2_4: &str = include_str!("../fixtures/s2_4.complex");
const C3: &str = include_str!("../fixtures/c3.complex");
const K5: &str = include_str!("../fixtures/k5.complex");
const TRIANGLE: &str = include_str!("../fixtures/triangle.complex");

const CP2_COVER: &str = include_str!("../fixtures/cp2_9.cover");
const RP3_COVER: &str = include_str!("../fixtures/rp3_11.cover");
const S1XS2_COVER: &str = include_str!("../fixtures/c3xs2_4.cover");
const S2XS2_PRINTED: &str = include_str!("../fixtures/s2_4xs2_4_printed.cover");
const K5_COVER: &str = include_str!("../fixtures/k5.cover");
const C3_HOMOLOGY_COVER: &str = include_str!("../fixtures/c3_homology.cover");
const LOOP: &str = include_str!("../fixtures/loop_c3_rp2_6.map");

/// Names accepted by [`complex`]; the short aliases `cp2`, `rp3`, `rp2`,
/// `s2`, `s1`, `s1xs2` and `s2xs2` work too.
pub const COMPLEXES: &[&str] =
    &["cp2_9", "rp3_11", "rp2_6", "s2_4", "c3", "k5", "point", "triangle", "c3xs2_4", "s2_4xs2_4"];

/// Names accepted by [`cover`], each with the complex it lives on.
pub const COVERS: &[(&str, &str)] = &[
    ("cp2", "cp2_9"),
    ("rp3", "rp3_11"),
    ("s1xs2", "c3xs2_4"),
    ("s2xs2_printed", "s2_4xs2_4"),
    ("k5", "k5"),
    ("c3_homology", "c3"),
];

fn parse(text: &str) -> Arc<SimplicialComplex> {
    Arc::new(parse_complex(text).expect("built-in complex parses"))
}

pub fn cp2_9() -> Arc<SimplicialComplex> {
    parse(CP2_9)
}

pub fn rp3_11() -> Arc<SimplicialComplex> {
    parse(RP3_11)
}

pub fn rp2_6() -> Arc<SimplicialComplex> {
    parse(RP2_6)
}

pub fn s2_4() -> Arc<SimplicialComplex> {
    parse(S2_4)
}

pub fn c3() -> Arc<SimplicialComplex> {
    parse(C3)
}

pub fn k5() -> Arc<SimplicialComplex> {
    parse(K5)
}

pub fn point() -> Arc<SimplicialComplex> {
    parse("0\n")
}

/// The full 2-simplex.
pub fn triangle() -> Arc<SimplicialComplex> {
    parse(TRIANGLE)
}

/// Staircase `C₃ × S²₄`, a triangulation of `S¹ × S²`.
pub fn c3_x_s2_4() -> Arc<SimplicialComplex> {
    product(&c3(), &s2_4()).complex
}

/// Staircase `S²₄ × S²₄`.
pub fn s2_4_x_s2_4() -> Arc<SimplicialComplex> {
    product(&s2_4(), &s2_4()).complex
}

pub fn complex(name: &str) -> Option<Arc<SimplicialComplex>> {
    Some(match name {
        "cp2_9" | "cp2" => cp2_9(),
        "rp3_11" | "rp3" => rp3_11(),
        "rp2_6" | "rp2" => rp2_6(),
        "s2_4" | "s2" => s2_4(),
        "c3" | "s1" => c3(),
        "k5" => k5(),
        "point" => point(),
        "triangle" => triangle(),
        "c3xs2_4" | "s1xs2" => c3_x_s2_4(),
        "s2_4xs2_4" | "s2xs2" => s2_4_x_s2_4(),
        _ => return None,
    })
}

/// A built-in cover, parsed onto `parent` (which must carry its labels).
pub fn cover_on(name: &str, parent: &Arc<SimplicialComplex>) -> Option<Result<Cover, IoError>> {
    let text = match name {
        "cp2" => CP2_COVER,
        "rp3" => RP3_COVER,
        "s1xs2" => S1XS2_COVER,
        "s2xs2_printed" => S2XS2_PRINTED,
        "k5" => K5_COVER,
        "c3_homology" => C3_HOMOLOGY_COVER,
        _ => return None,
    };
    Some(parse_cover(text, parent))
}

/// A built-in cover on its own fixture complex.
pub fn cover(name: &str) -> Option<Cover> {
    let (_, on) = COVERS.iter().find(|(n, _)| *n == name)?;
    let parent = complex(on)?;
    Some(cover_on(name, &parent)?.expect("built-in cover parses"))
}

/// The noncontractible loop `ι: C₃ → RP²₆`.
pub fn rp2_loop() -> SimplicialMap {
    parse_map(LOOP, &c3(), &rp2_6()).expect("built-in map parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_validates() {
        for name in COMPLEXES {
            let k = complex(name).unwrap();
            assert!(k.is_connected(), "{name}");
        }
        for (name, _) in COVERS {
            assert!(cover(name).is_some(), "{name}");
        }
    }

    #[test]
    fn reconstructed_triangulations() {
        let cp2 = cp2_9();
        assert_eq!(cp2.vertex_count(), 9);
        assert_eq!(cp2.f_vector(), vec![9, 36, 84, 90, 36]);
        assert_eq!(cp2.euler_characteristic(), 3);
        let rp3 = rp3_11();
        assert_eq!(rp3.vertex_count(), 11);
        assert_eq!(rp3.facets().len(), 40);
        assert_eq!(rp3.euler_characteristic(), 0);
    }

    #[test]
    fn printed_covers_lie_in_products() {
        let t3 = cover("s1xs2").unwrap();
        assert_eq!(t3.parent().facets().len(), 36);
        let t4 = cover("s2xs2_printed").unwrap();
        assert_eq!(t4.parent().facets().len(), 96);
        assert_eq!(t4.canonical_facets()[1], t4.canonical_facets()[2]);
    }
}
