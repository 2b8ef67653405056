// The homogenized orbit ideal pulled back to the Segre ambient equals the
// ideal of 2×2 minors.

use lgorbit::polyideal::{ideal_equal, minors_ideal, segre_pullback, GroebnerOptions, OrderKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = GroebnerOptions::default();
    for n in 1..=2 {
        let pb = segre_pullback(n, opts)?;
        println!("n = {n}: orbit ideal {:?}", pb.orbit.to_strings(OrderKind::GradedRevLex));
        println!("  homogenized: {} generators", pb.homogenized.generators().len());
        let equal = ideal_equal(&pb.pulled_back, &minors_ideal(n), OrderKind::GradedRevLex, opts)?;
        println!("  equals 2x2 minors: {equal}");
        assert!(equal);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
