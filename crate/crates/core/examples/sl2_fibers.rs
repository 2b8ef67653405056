// Fibers of `f = 2x` on `x² + yz = 1` and their closures in P³.

use lgorbit::exact::GaussianRational;
use lgorbit::lgfib::{conic_parametrization, sl2_fiber};
use lgorbit::polyideal::OrderKind;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for c in [0, 1, 2, -2, 6] {
        let fiber = sl2_fiber(&GaussianRational::from_i64(c))?;
        println!(
            "c = {c}: closure {:?}, smooth = {}",
            fiber.closure.to_strings(OrderKind::GradedRevLex),
            fiber.smooth
        );
        if fiber.smooth {
            for (s, r) in [(1, 0), (0, 1), (2, 3)] {
                let p = conic_parametrization(&fiber, &GaussianRational::from_i64(s), &GaussianRational::from_i64(r))?;
                assert!(fiber.closure_contains(&p));
                println!("  [{s}:{r}] -> {p}");
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
