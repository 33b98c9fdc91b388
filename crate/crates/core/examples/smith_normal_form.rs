//! Exact Smith normal form and abelian group presentations.

use cohodist::exactalg::{kernel_basis, smith_normal_form, EuclideanRing, Integers, Matrix, Presentation, PrimeField};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z = Integers;
    let m = Matrix::from_i64_rows(&z, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&z, &m);
    println!("invariant factors over Z: {:?}", snf.diagonal.iter().map(|d| d.to_string()).collect::<Vec<_>>());

    // U M V = D, checked exactly.
    let d = snf.u.mul(&z, &m).mul(&z, &snf.v);
    assert!(d.sub(&z, &snf.diagonal_matrix(&z)).is_zero(&z));

    // Entries may grow past 64 bits without loss.
    let big = Matrix::from_i64_rows(&z, &[vec![i64::MAX, 3], vec![5, i64::MAX]]);
    let det_factor = smith_normal_form(&z, &big).diagonal.last().cloned().unwrap();
    println!("last invariant factor of a large matrix: {det_factor}");

    // The same matrix over Z_2 has rank 0: every entry is even.
    let f2 = PrimeField::new(2)?;
    let m2 = Matrix::from_i64_rows(&f2, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    println!("kernel over Z2 has dimension {}", kernel_basis(&f2, &m2).cols());

    // A finitely generated group from its invariants.
    let g = Presentation::from_invariants(&z, 1, &[z.from_i64(2), z.from_i64(6)])?;
    println!("presentation: {}", g.describe());
    Ok(())
}
