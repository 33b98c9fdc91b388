//! Checking cover certificates for the category of three manifolds.

use std::time::Instant;

use cohodist::distance::{bounds, BoundOptions, DistanceQuery};
use cohodist::exactalg::CoeffRing;
use cohodist::fixtures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (cover, on) in [("cp2", "cp2_9"), ("rp3", "rp3_11"), ("s1xs2", "c3xs2_4")] {
        let k = fixtures::complex(on).unwrap();
        let query = DistanceQuery::scat(&k, CoeffRing::PrimeField(2));
        let opts = BoundOptions { cover: fixtures::cover(cover), max_size: Some(0), ..BoundOptions::default() };
        let start = Instant::now();
        let report = bounds(&query, &opts)?;
        let cert = report.supplied.as_ref().unwrap();
        println!(
            "{on}: {} pieces verified={}  cup-length bound {}  interval {:?}  ({:.1?})",
            cert.pieces.len(),
            cert.verified,
            report.cup_lower.value,
            report.interval(),
            start.elapsed()
        );
    }
    Ok(())
}
