//! Cup products, cup-length and zero-divisor cup-length.

use cohodist::exactalg::{Integers, PrimeField, Rationals};
use cohodist::fixtures;
use cohodist::ring::{cup_length, zero_divisor_cup_length, CohomologyRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z2 = PrimeField::new(2)?;

    // a generates H^1(RP3; Z2) and a^3 generates H^3.
    let h = CohomologyRing::new(&fixtures::rp3_11(), &z2);
    let a = h.generators(1).remove(0);
    let a3 = h.cup_all(&[a.clone(), a.clone(), a])?;
    println!("RP3: a^3 is zero? {}", h.is_zero(&a3)?);

    for (name, k) in [("CP2", fixtures::cp2_9()), ("RP3", fixtures::rp3_11()), ("S1xS2", fixtures::c3_x_s2_4())] {
        let c = cup_length(&k, &z2)?;
        println!("cup-length({name}; Z2) = {}", c.length);
    }
    println!("cup-length(RP3; Z) = {}", cup_length(&fixtures::rp3_11(), &Integers)?.length);

    // Zero divisors of S2: over Z2 the square of x(1) + (1)x is 2 x(x) = 0.
    let s2 = fixtures::s2_4();
    println!("zdcl(S2; Z2) = {}", zero_divisor_cup_length(&s2, &z2)?.length);
    println!("zdcl(S2; Q)  = {}", zero_divisor_cup_length(&s2, &Rationals)?.length);
    Ok(())
}
