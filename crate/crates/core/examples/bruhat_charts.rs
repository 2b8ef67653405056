// Bruhat charts: parametrized orbit points and chart potentials.

use lgorbit::exact::GaussianRational;
use lgorbit::lgfib::chart_potential_poly;
use lgorbit::liecore::FormSpec;
use lgorbit::orbit::{chart_coordinates, chart_membership, chart_param, model_inverse, orbit_membership, OrbitSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = OrbitSpec::minimal_default(2);
    let values: Vec<GaussianRational> = [1, -2, 3, 1].iter().map(|&v| GaussianRational::from_i64(v)).collect();
    for j in 0..spec.dim() {
        let (y, x) = chart_coordinates(&spec, j, &values)?;
        let a = chart_param(&spec, j, &y, &x)?;
        assert!(orbit_membership(&a, &spec)?);
        assert!(chart_membership(&model_inverse(&a, spec.n())?, j)?);
        let pot = chart_potential_poly(&spec, j, &FormSpec::trace())?;
        println!("chart {}: f = {}", j + 1, pot.to_infix());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
