// Reduced Gröbner bases and ideal membership.

use lgorbit::polyideal::{GroebnerOptions, OrderKind, Polynomial, PolynomialIdeal};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ideal = PolynomialIdeal::parse(&["x", "y", "z"], &["x - y^2", "y - z^3"])?;
    for kind in [OrderKind::Lex, OrderKind::GradedRevLex] {
        let basis = ideal.groebner(kind, GroebnerOptions::default())?;
        let shown: Vec<String> = basis.iter().map(|p| p.to_string_with(ideal.variables(), kind)).collect();
        println!("{kind:?}: {shown:?}");
    }
    let names = ideal.variables().to_vec();
    let member = Polynomial::parse("x - z^6", &names)?;
    assert!(ideal.contains(&member, GroebnerOptions::default())?);
    let closure = ideal.homogenize("t", GroebnerOptions::default())?;
    println!("projective closure: {:?}", closure.to_strings(OrderKind::GradedRevLex));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
