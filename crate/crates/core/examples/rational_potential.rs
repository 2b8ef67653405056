// `f_H = (n+1) R_H` on orbit points, and `R_H` written out for sl(3).

use lgorbit::lgfib::{potential_f, rational_potential_r, rational_potential_symbolic};
use lgorbit::liecore::FormSpec;
use lgorbit::orbit::{adjoint_point, default_sample_length, sample_sl_indexed, OrbitSpec};
use lgorbit::polyideal::OrderKind;
use lgorbit::segre::segre_matrix;
use lgorbit::Error;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = OrbitSpec::minimal_i64(2, &[3, -2, -1])?;
    let form = FormSpec::trace();
    for k in 0..4 {
        let g = sample_sl_indexed(2, 7, k, default_sample_length(2));
        let f = potential_f(&adjoint_point(&g, &spec)?, &spec, &form)?;
        let r = rational_potential_r(&segre_matrix(&g), &spec)?;
        println!("sample {k}: f = {f}, R = {r}");
        assert_eq!(f, &r * &lgorbit::exact::GaussianRational::from_i64(3));
    }

    let sigma = lgorbit::segre::IncidencePair::from_i64(&[1, 1, 0], &[1, -1, 5])?;
    assert!(matches!(rational_potential_r(&sigma.outer(), &spec), Err(Error::Indeterminate)));

    let sym = rational_potential_symbolic(&spec)?;
    println!("numerator:   {}", sym.numerator.to_string_with(&sym.variables, OrderKind::Lex));
    println!("denominator: {}", sym.denominator.to_string_with(&sym.variables, OrderKind::Lex));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
