use num_rational::BigRational;
use num_traits::{One, Zero};

use super::elements::LieElement;
use crate::error::{Error, Result};
use crate::exact::{GaussianRational, SquareMatrix};

/// Multiplier on the trace form: `⟨X, Y⟩ = scale · tr(XY)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpec {
    scale: GaussianRational,
}

impl FormSpec {
    pub fn new(scale: GaussianRational) -> Result<Self> {
        if scale.is_zero() {
            return Err(Error::Invalid("form scale must be nonzero".into()));
        }
        Ok(Self { scale })
    }

    /// The plain trace form, `tr(XY)`.
    pub fn trace() -> Self {
        Self {
            scale: GaussianRational::one(),
        }
    }

    /// The Cartan–Killing form of `sl(n+1)`, `tr(ad X ad Y) = 2(n+1) tr(XY)`.
    pub fn killing(n: usize) -> Self {
        Self {
            scale: GaussianRational::from_i64(2 * (n as i64 + 1)),
        }
    }

    pub fn scale(&self) -> &GaussianRational {
        &self.scale
    }
}

impl Default for FormSpec {
    fn default() -> Self {
        Self::trace()
    }
}

fn check_dims(x: &LieElement, y: &LieElement) -> Result<()> {
    x.mat().check_same_dim(y.mat())
}

/// `tr(XY)` without forming the product.
fn trace_of_product(x: &SquareMatrix, y: &SquareMatrix) -> GaussianRational {
    let d = x.dim();
    let mut acc = GaussianRational::zero();
    for i in 0..d {
        for k in 0..d {
            let a = &x[(i, k)];
            let b = &y[(k, i)];
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
    }
    acc
}

pub fn bilinear_form(x: &LieElement, y: &LieElement, form: &FormSpec) -> Result<GaussianRational> {
    check_dims(x, y)?;
    Ok(&trace_of_product(x.mat(), y.mat()) * form.scale())
}

/// `ℋ_τ(X, Y) = −⟨X, τY⟩ = scale · tr(X Y*)`: conjugate-linear in `Y` and
/// positive definite at trace scale.
pub fn hermitian_form(
    x: &LieElement,
    y: &LieElement,
    form: &FormSpec,
) -> Result<GaussianRational> {
    check_dims(x, y)?;
    let tau_y = y.tau();
    Ok(-(&trace_of_product(x.mat(), tau_y.mat()) * form.scale()))
}

/// `Ω = Im ℋ_τ`, the real symplectic form on `sl(n+1)` viewed over ℝ.
pub fn omega(x: &LieElement, y: &LieElement, form: &FormSpec) -> Result<BigRational> {
    Ok(hermitian_form(x, y, form)?.im().clone())
}

/// The fixed basis of `sl(d)`: all `E_ij` with `i ≠ j` in row-major order,
/// followed by `E_ii − E_{i+1,i+1}` for `i = 0..d-1`.
pub fn sl_basis(dim: usize) -> Vec<LieElement> {
    let mut basis = Vec::with_capacity(dim * dim - 1);
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                basis.push(LieElement::from_matrix_unchecked(SquareMatrix::unit(dim, i, j)));
            }
        }
    }
    for i in 0..dim - 1 {
        let mut m = SquareMatrix::zeros(dim);
        m[(i, i)] = GaussianRational::one();
        m[(i + 1, i + 1)] = GaussianRational::from_i64(-1);
        basis.push(LieElement::from_matrix_unchecked(m));
    }
    basis
}

/// Coordinates of a trace-zero matrix in [`sl_basis`].
pub fn sl_coordinates(x: &LieElement) -> Vec<GaussianRational> {
    let d = x.dim();
    let m = x.mat();
    let mut coords = Vec::with_capacity(d * d - 1);
    for i in 0..d {
        for j in 0..d {
            if i != j {
                coords.push(m[(i, j)].clone());
            }
        }
    }
    // diag = Σ c_k (e_k − e_{k+1})  ⇒  c_k = d_0 + … + d_k
    let mut partial = GaussianRational::zero();
    for k in 0..d - 1 {
        partial += &m[(k, k)];
        coords.push(partial.clone());
    }
    coords
}

/// Matrix of `Z ↦ [X, Z]` on [`sl_basis`]; column `k` holds the coordinates
/// of `[X, B_k]`.
pub fn ad_operator(x: &LieElement) -> SquareMatrix {
    let basis = sl_basis(x.dim());
    let cols: Vec<Vec<GaussianRational>> =
        basis.iter().map(|b| sl_coordinates(&x.bracket(b))).collect();
    SquareMatrix::from_fn(basis.len(), |i, j| cols[j][i].clone())
}

/// A real basis of `su(d)`: `E_ij − E_ji` and `i(E_ij + E_ji)` for `i < j`,
/// and `i(E_kk − E_{k+1,k+1})`.
pub fn su_basis(dim: usize) -> Vec<LieElement> {
    let i_unit = GaussianRational::i();
    let mut basis = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            let eab = SquareMatrix::unit(dim, a, b);
            let eba = SquareMatrix::unit(dim, b, a);
            basis.push(LieElement::from_matrix_unchecked(&eab - &eba));
            basis.push(LieElement::from_matrix_unchecked((&eab + &eba).scale(&i_unit)));
        }
    }
    for k in 0..dim - 1 {
        let mut m = SquareMatrix::zeros(dim);
        m[(k, k)] = i_unit.clone();
        m[(k + 1, k + 1)] = -&i_unit;
        basis.push(LieElement::from_matrix_unchecked(m));
    }
    basis
}

/// Real spanning set of the tangent space `{[Z, A]}` at an orbit point `A`:
/// `[B, A]` and `[iB, A]` for every `B` in [`sl_basis`].
pub fn real_tangent_spanning_set(a: &LieElement) -> Vec<LieElement> {
    let i_unit = GaussianRational::i();
    sl_basis(a.dim())
        .into_iter()
        .flat_map(|b| {
            let ib = b.scale(&i_unit);
            [b.bracket(a), ib.bracket(a)]
        })
        .collect()
}

/// Gram matrix `Ω(v_k, v_l)` of a family of tangent vectors (rational entries).
pub fn omega_gram(vectors: &[LieElement], form: &FormSpec) -> Result<SquareMatrix> {
    let n = vectors.len();
    let mut gram = SquareMatrix::zeros(n);
    for k in 0..n {
        for l in 0..n {
            gram[(k, l)] = GaussianRational::from_real(omega(&vectors[k], &vectors[l], form)?);
        }
    }
    Ok(gram)
}

/// Rank over ℚ of a family of matrices regarded as real vectors
/// (real and imaginary parts of every entry).
pub fn real_span_rank(vectors: &[LieElement]) -> usize {
    let rows: Vec<Vec<GaussianRational>> = vectors
        .iter()
        .map(|v| {
            v.mat()
                .entries()
                .iter()
                .flat_map(|e| {
                    [
                        GaussianRational::from_real(e.re().clone()),
                        GaussianRational::from_real(e.im().clone()),
                    ]
                })
                .collect()
        })
        .collect();
    crate::exact::rank_of_rows(rows)
}
