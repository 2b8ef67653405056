//! The minimal adjoint orbit in its two incarnations.
//!
//! * the matrix model `Ad(G)·H₀ ⊂ sl(n+1)` with `H₀ = diag(n, −1, …, −1)`;
//! * the tensor model: pairs `(v, ε)` with `ε(v) = 1`, i.e. the orbit of
//!   `e₁ ⊗ ε₁` under `g·(v ⊗ ε) = gv ⊗ ε∘g⁻¹`.
//!
//! The two are matched by the equivariant affine map `A = (n+1)·(v⊗ε) − Id`.
//! Chart indices `j` are 0-based throughout the library: chart `j` is centered
//! at `e_j ⊗ ε_j = (0 j)·H₀`, and chart `0` is the identity chart.

mod spec;
mod tensor;

pub use spec::OrbitSpec;
pub use tensor::TensorPoint;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, SquareMatrix, UnivariatePolynomial};
use crate::liecore::{
    exp_ad_nilpotent, nilradical_positions, require_in_span, GroupElement, LieElement, RootSign,
    WeylElement,
};
use crate::sampling::{nonzero_gaussian, sample_rng, SampleRng};
use rand::Rng;

/// Default number of transvections per sampled group element.
pub fn default_sample_length(n: usize) -> usize {
    4 * (n + 1)
}

/// Product of `length` seeded transvections `Id + c·E_ij`; exactly unimodular.
pub fn sample_sl(n: usize, seed: u64, length: usize) -> GroupElement {
    sample_sl_with(n, &mut crate::sampling::rng(seed), length)
}

/// The `index`-th group element of a seeded run.
pub fn sample_sl_indexed(n: usize, seed: u64, index: u64, length: usize) -> GroupElement {
    sample_sl_with(n, &mut sample_rng(seed, index), length)
}

fn sample_sl_with(n: usize, rng: &mut SampleRng, length: usize) -> GroupElement {
    let d = n + 1;
    let mut g = GroupElement::identity(d);
    for _ in 0..length {
        let i = rng.gen_range(0..d);
        let mut j = rng.gen_range(0..d - 1);
        if j >= i {
            j += 1;
        }
        let c = nonzero_gaussian(rng);
        g = g.compose(&GroupElement::transvection(d, i, j, &c));
    }
    g
}

fn check_dim(spec: &OrbitSpec, dim: usize) -> Result<()> {
    if spec.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            found: dim,
        });
    }
    Ok(())
}

/// `Ad(g)H₀ = g·H₀·adj(g)`.
pub fn adjoint_point(g: &GroupElement, spec: &OrbitSpec) -> Result<LieElement> {
    check_dim(spec, g.dim())?;
    Ok(g.ad(spec.h0()))
}

/// `(g e₁, ε₁ ∘ adj g)`: the first column of `g` and the first row of its
/// adjugate. Requires `det g = 1`, which [`GroupElement`] guarantees.
pub fn tensor_point(g: &GroupElement) -> TensorPoint {
    let (adj, _) = g.mat().adjugate();
    TensorPoint::new_unchecked(g.mat().col(0), adj.row(0))
}

/// The annihilating polynomial `∏ (x − a)` over the distinct eigenvalues of
/// the diagonal `H₀`; for the minimal orbit this is `(x − n)(x + 1)`.
pub fn orbit_polynomial(spec: &OrbitSpec) -> UnivariatePolynomial {
    let mut eig = spec.h0().mat().diag();
    eig.sort();
    eig.dedup();
    UnivariatePolynomial::from_roots(&eig)
}

/// Orbit membership through the minimal-polynomial equations: a trace-zero
/// `A` is on the orbit of the minimal `H₀` iff `(A − nI)(A + I) = 0`.
pub fn orbit_membership(a: &LieElement, spec: &OrbitSpec) -> Result<bool> {
    check_dim(spec, a.dim())?;
    Ok(orbit_polynomial(spec).eval_matrix(a.mat()).is_zero())
}

/// `A = (n+1)·(v⊗ε) − Id`; sends `e₁⊗ε₁` to `H₀` and is `Ad`-equivariant.
pub fn model_map(point: &TensorPoint, n: usize) -> Result<LieElement> {
    if point.dim() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: point.dim(),
        });
    }
    let pairing = point.pairing();
    if !pairing.is_one() {
        return Err(Error::PairingNotOne(pairing.to_string()));
    }
    let d = n + 1;
    let m = point.outer().scale(&GaussianRational::from_i64(d as i64));
    Ok(LieElement::from_matrix_unchecked(&m - &SquareMatrix::identity(d)))
}

/// `v ⊗ ε = (A + Id)/(n+1)` as a matrix.
pub fn model_inverse_matrix(a: &LieElement, n: usize) -> SquareMatrix {
    let d = n + 1;
    (a.mat() + &SquareMatrix::identity(d)).scale(&GaussianRational::ratio(1, d as i64))
}

/// Inverse of [`model_map`] for orbit points, factored as a tensor point.
pub fn model_inverse(a: &LieElement, n: usize) -> Result<TensorPoint> {
    TensorPoint::from_rank_one(&model_inverse_matrix(a, n))
}

/// Bruhat chart around `(0 j)·H₀`:
/// `(Y, X) ↦ e^{ad Y} e^{ad X} · ((0 j)·H₀)` with `Y ∈ 𝔫⁻`, `X ∈ 𝔫⁺` of the
/// center. `Y` is supported on column `j`, `X` on row `j`.
pub fn chart_param(
    spec: &OrbitSpec,
    j: usize,
    y: &LieElement,
    x: &LieElement,
) -> Result<LieElement> {
    let center = chart_center(spec, j)?;
    check_dim(spec, y.dim())?;
    check_dim(spec, x.dim())?;
    require_in_span(y, &nilradical_positions(&center, RootSign::Negative)?, RootSign::Negative)?;
    require_in_span(x, &nilradical_positions(&center, RootSign::Positive)?, RootSign::Positive)?;
    let inner = exp_ad_nilpotent(x, &center)?;
    exp_ad_nilpotent(y, &inner)
}

/// `(0 j)·H₀`, the center of chart `j`.
pub fn chart_center(spec: &OrbitSpec, j: usize) -> Result<LieElement> {
    if j >= spec.dim() {
        return Err(Error::IndexOutOfRange {
            index: j,
            dim: spec.dim(),
        });
    }
    Ok(WeylElement::transposition(spec.dim(), 0, j).act(spec.h0()))
}

/// Builds chart coordinates `(Y, X)` for chart `j` from `2n` scalars: the
/// first `n` fill column `j` of `Y` (rows in increasing order, skipping `j`),
/// the last `n` fill row `j` of `X`.
pub fn chart_coordinates(
    spec: &OrbitSpec,
    j: usize,
    values: &[GaussianRational],
) -> Result<(LieElement, LieElement)> {
    let d = spec.dim();
    let n = spec.n();
    if values.len() != 2 * n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n,
            found: values.len(),
        });
    }
    if j >= d {
        return Err(Error::IndexOutOfRange { index: j, dim: d });
    }
    let others: Vec<usize> = (0..d).filter(|&k| k != j).collect();
    let mut y = SquareMatrix::zeros(d);
    let mut x = SquareMatrix::zeros(d);
    for (slot, &k) in others.iter().enumerate() {
        y[(k, j)] = values[slot].clone();
        x[(j, k)] = values[n + slot].clone();
    }
    Ok((
        LieElement::from_matrix_unchecked(y),
        LieElement::from_matrix_unchecked(x),
    ))
}

/// Both characterizations of the chart domain `D_j` at a tensor point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartTest {
    /// `v_j ≠ 0`.
    pub coordinate: bool,
    /// Value of `Σ_k (v_j · ε_k)²`.
    pub complement_value: GaussianRational,
}

impl ChartTest {
    pub fn polynomial_says_inside(&self) -> bool {
        !self.complement_value.is_zero()
    }

    /// The polynomial test is sound (nonzero ⇒ inside); the converse can fail
    /// only at points whose covector is isotropic, `Σ ε_k² = 0`.
    pub fn agree(&self) -> bool {
        self.coordinate == self.polynomial_says_inside()
    }
}

/// `Σ_k (v_j ε_k)²`, whose zero set is the complement of chart `j`.
pub fn complement_polynomial(point: &TensorPoint, j: usize) -> GaussianRational {
    let vj = &point.v()[j];
    point
        .eps()
        .iter()
        .map(|e| {
            let t = vj * e;
            &t * &t
        })
        .sum()
}

pub fn chart_test(point: &TensorPoint, j: usize) -> Result<ChartTest> {
    if j >= point.dim() {
        return Err(Error::IndexOutOfRange {
            index: j,
            dim: point.dim(),
        });
    }
    Ok(ChartTest {
        coordinate: !point.v()[j].is_zero(),
        complement_value: complement_polynomial(point, j),
    })
}

/// Whether the orbit point lies in the domain of chart `j`, i.e. `v_j ≠ 0`.
pub fn chart_membership(point: &TensorPoint, j: usize) -> Result<bool> {
    Ok(chart_test(point, j)?.coordinate)
}
