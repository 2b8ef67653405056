// The symplectic form `Ω = Im ℋ` on orbit tangent spaces.

use lgorbit::lgfib::{su_tangent_is_isotropic, symplectic_ranks};
use lgorbit::liecore::{weyl_orbit_points, FormSpec};
use lgorbit::orbit::{adjoint_point, sample_sl, OrbitSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let form = FormSpec::trace();
    for n in 1..=2 {
        let spec = OrbitSpec::minimal_default(n);
        let a = adjoint_point(&sample_sl(n, 5, 8), &spec)?;
        let (gram, span) = symplectic_ranks(&a, &form)?;
        println!("n = {n}: Gram rank {gram}, tangent rank {span}");
        assert_eq!(gram, 4 * n);
        for p in weyl_orbit_points(spec.h0())? {
            assert!(su_tangent_is_isotropic(&p, &form)?);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
