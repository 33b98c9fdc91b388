//! Complexity of the 2-sphere: a reference family that fails to cover,
//! and a search for a real certificate.

use cohodist::distance::{hstc, verify, BoundOptions, DistanceQuery};
use cohodist::exactalg::CoeffRing;
use cohodist::fixtures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s2 = fixtures::s2_4();
    for ring in [CoeffRing::PrimeField(2), CoeffRing::Rationals] {
        let query = DistanceQuery::tc(&s2, ring);
        let printed = fixtures::cover_on("s2xs2_printed", query.source()).unwrap()?;
        let cert = verify(&query, &printed)?;
        println!(
            "{ring}: reference family covers? {}  pieces equal? {:?}  uncovered {:?}",
            cert.covered,
            cert.pieces.iter().map(|p| p.equal).collect::<Vec<_>>(),
            cert.missing
        );
        let opts = BoundOptions { warm_start: Some(printed), restarts: 4, ..BoundOptions::default() };
        let report = hstc(&s2, ring, &opts)?;
        println!(
            "{ring}: zero-divisor bound {}  interval {:?}  exact {:?}",
            report.cup_lower.value,
            report.interval(),
            report.exact
        );
    }
    Ok(())
}
