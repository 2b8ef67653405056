// The minimal orbit of sl(3) as matrices and as tensors `v ⊗ ε`.

use lgorbit::orbit::{
    adjoint_point, default_sample_length, model_inverse, model_map, orbit_membership, sample_sl_indexed,
    tensor_point, OrbitSpec,
};
use lgorbit::segre::segre_coords;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 2;
    let spec = OrbitSpec::minimal_default(n);
    println!("H0 =\n{}", spec.h0().mat());
    for k in 0..3 {
        let g = sample_sl_indexed(n, 2024, k, default_sample_length(n));
        let a = adjoint_point(&g, &spec)?;
        let t = tensor_point(&g);
        assert!(orbit_membership(&a, &spec)?);
        assert_eq!(model_map(&t, n)?, a);
        assert_eq!(model_inverse(&a, n)?.outer(), t.outer());
        println!("sample {k}: Segre point {}", segre_coords(&g));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
