// Exact adjugates over Q(i): `A adj(A) = det(A) Id` on seeded matrices.

use lgorbit::exact::SquareMatrix;
use lgorbit::sampling::{random_matrix, sample_rng};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = SquareMatrix::from_i64_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]])?;
    let (adj, det) = a.adjugate();
    println!("A =\n{a}\nadj A =\n{adj}\ndet A = {det}");
    assert_eq!(&a * &adj, SquareMatrix::identity(3).scale(&det));

    for k in 0..5 {
        let m = random_matrix(&mut sample_rng(42, k), 4);
        let (adj, det) = m.adjugate();
        assert_eq!(&adj * &m, SquareMatrix::identity(4).scale(&det));
        println!("sample {k}: det = {det}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
