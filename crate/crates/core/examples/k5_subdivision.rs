//! Exhaustive search on the complete graph K5, before and after subdivision.

use cohodist::complex::barycentric_subdivision;
use cohodist::distance::{hscat, search_with_stats, verify, BoundOptions, DistanceQuery, SearchOptions, Strategy};
use cohodist::exactalg::CoeffRing;
use cohodist::{fixtures, io};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z2 = CoeffRing::PrimeField(2);
    let k5 = fixtures::k5();
    let query = DistanceQuery::scat(&k5, z2);

    let (two, stats) = search_with_stats(&query, &SearchOptions::new(2, Strategy::Exhaustive))?;
    println!("K5: 2-piece cover exists? {}  ({} pieces evaluated)", two.is_some(), stats.evaluations);
    let cert = verify(&query, &fixtures::cover("k5").unwrap())?;
    println!("K5: bundled 3-piece cover verified? {}", cert.verified);

    let report = hscat(&k5, z2, &BoundOptions { exhaustive: vec![2], ..BoundOptions::default() })?;
    println!("K5: interval {:?}, exact {:?}", report.interval(), report.exact);

    let sd = barycentric_subdivision(&k5);
    let report = hscat(sd.complex(), z2, &BoundOptions::default())?;
    println!("sd K5: interval {:?}, exact {:?}", report.interval(), report.exact);
    if let Some(c) = &report.certificate {
        print!("{}", io::write_cover(&c.cover));
    }
    Ok(())
}
