//! Building complexes: from faces, from files, products and subdivision.

use std::sync::Arc;

use cohodist::complex::{barycentric_subdivision, product, ComplexBuilder, SimplicialComplex, Subcomplex};
use cohodist::{fixtures, io};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The boundary of a tetrahedron, built from its maximal faces.
    let s2 = Arc::new(SimplicialComplex::from_maximal_faces([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])?);
    println!("S2: f-vector {:?}, chi {}", s2.f_vector(), s2.euler_characteristic());

    // Labels are opaque strings; an explicit order fixes the chain basis.
    let path = ComplexBuilder::new().order(["c", "b", "a"]).build([["a", "b"], ["b", "c"]])?;
    println!("path: order {:?}", path.labels().iter().map(|l| l.as_str()).collect::<Vec<_>>());

    // The text format round-trips.
    let text = io::write_complex(&s2);
    let back = io::parse_complex(&text)?;
    assert_eq!(back.labeled_facets(), s2.labeled_facets());
    print!("{text}");

    // Staircase products carry their projections.
    let p = product(&fixtures::c3(), &s2);
    println!("C3 x S2: {} top simplices, chi {}", p.complex.facets().len(), p.complex.euler_characteristic());
    let f = &p.complex.facets()[0];
    println!(
        "  {} projects to {} and {}",
        p.complex.format_simplex(f),
        fixtures::c3().format_simplex(&p.proj1.image(f)),
        s2.format_simplex(&p.proj2.image(f))
    );

    // Barycentric subdivision and its carrier map.
    let sd = barycentric_subdivision(&fixtures::k5());
    println!("sd K5: f-vector {:?}", sd.complex().f_vector());
    let v = sd.barycenter(&[0, 1]).expect("an edge of K5");
    println!(
        "  barycenter of [1, 2] is {}, carried to {}",
        sd.complex().label(v),
        fixtures::k5().label(sd.carrier().apply(v))
    );

    // Subcomplexes generated by faces, and their subdivisions.
    let star = Subcomplex::from_labeled_faces(fixtures::k5(), [["1", "2"], ["1", "3"]])?;
    let sd_star = sd.subdivide_piece(&star)?;
    println!("  a 2-edge piece subdivides to {:?}", sd_star.complex().f_vector());
    Ok(())
}
