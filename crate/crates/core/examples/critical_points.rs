// Critical points of the height potential and their chart Hessians.

use lgorbit::lgfib::critical_points;
use lgorbit::liecore::FormSpec;
use lgorbit::orbit::OrbitSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=3 {
        let spec = OrbitSpec::minimal_default(n);
        let points = critical_points(&spec, &FormSpec::trace())?;
        assert_eq!(points.len(), n + 1);
        println!("n = {n}");
        for c in &points {
            assert!(c.nondegenerate);
            println!(
                "  chart {}: f = {}, R = {}, det Hess = {}",
                c.index + 1,
                c.f_value,
                c.r_value,
                c.hessian.det()
            );
        }
    }
    let sl2 = OrbitSpec::minimal_i64(1, &[1, -1])?;
    let c = &critical_points(&sl2, &FormSpec::trace())?[0];
    println!("sl(2) Hessian at H0:\n{}", c.hessian);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
