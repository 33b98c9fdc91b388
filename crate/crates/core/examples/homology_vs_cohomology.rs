//! A map pair that agrees on integral cohomology but not on homology.

use cohodist::complex::SimplicialMap;
use cohodist::distance::{bounds, verify, BoundOptions, DistanceQuery};
use cohodist::exactalg::CoeffRing;
use cohodist::fixtures;
use cohodist::homology::Variance;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let iota = fixtures::rp2_loop();
    let c = SimplicialMap::constant_first(iota.source().clone(), iota.target().clone());
    let co = DistanceQuery::new(iota.clone(), c.clone(), CoeffRing::Integers, Variance::Cohomology)?;
    let ho = co.clone().with_variance(Variance::Homology);

    println!("cohomology: {:?}", bounds(&co, &BoundOptions::default())?.interval());
    let cover = fixtures::cover("c3_homology").unwrap();
    println!("homology, 2-piece cover verified: {}", verify(&ho, &cover)?.verified);
    let report = bounds(&ho, &BoundOptions { cover: Some(cover), ..BoundOptions::default() })?;
    println!("homology: {:?}, exact {:?}", report.interval(), report.exact);
    Ok(())
}
