//! Homology and cohomology with several coefficient rings, and induced maps.

use cohodist::exactalg::{Integers, PrimeField, Rationals};
use cohodist::fixtures;
use cohodist::homology::{cohomology, homology, induced_map, maps_equal, Variance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rp2 = fixtures::rp2_6();
    println!("RP2   H_*(Z)  = {:?}", homology(&rp2, &Integers).describe());
    println!("RP2   H^*(Z)  = {:?}", cohomology(&rp2, &Integers).describe());
    println!("RP2   H^*(Q)  = {:?}", cohomology(&rp2, &Rationals).describe());
    println!("RP2   H^*(Z2) = {:?}", cohomology(&rp2, &PrimeField::new(2)?).describe());
    println!("RP3   H^*(Z)  = {:?}", cohomology(&fixtures::rp3_11(), &Integers).describe());
    println!("CP2   H^*(Z)  = {:?}", cohomology(&fixtures::cp2_9(), &Integers).describe());

    // A loop around RP2 is nonzero on H_1 but zero on H^1 with integer coefficients.
    let iota = fixtures::rp2_loop();
    let h1 = induced_map(&iota, &Integers, Variance::Homology);
    println!("loop is nonzero on H_1: {}", !h1.degree(1).is_zero());
    let c = cohodist::complex::SimplicialMap::constant_first(iota.source().clone(), iota.target().clone());
    println!("loop vs constant, cohomology: {:?}", maps_equal(&iota, &c, &Integers, Variance::Cohomology)?);
    println!("loop vs constant, homology:   {:?}", maps_equal(&iota, &c, &Integers, Variance::Homology)?);
    Ok(())
}
