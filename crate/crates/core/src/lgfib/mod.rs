//! The Landau–Ginzburg layer: the height potential `f_H(A) = ⟨H, A⟩`, its
//! degree-zero extension `R_H(M) = tr(MH)/tr(M)`, critical points and their
//! Hessians in Bruhat charts, and the fibers of the `sl(2)` model.

mod fiber;

pub use fiber::{
    conic_parametrization, conic_preimage, fiber_jacobian_rank, sl2_fiber, FiberDescription,
};

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, SquareMatrix};
use crate::liecore::{
    bilinear_form, omega, omega_gram, real_span_rank, real_tangent_spanning_set, su_basis,
    weyl_orbit_points, FormSpec, GroupElement, LieElement,
};
use crate::orbit::{chart_center, chart_coordinates, model_map, OrbitSpec, TensorPoint};
use crate::polyideal::{PolyMatrix, Polynomial};

/// `f_H(A) = scale · tr(HA)`.
pub fn potential_f(a: &LieElement, spec: &OrbitSpec, form: &FormSpec) -> Result<GaussianRational> {
    bilinear_form(spec.h(), a, form)
}

/// `R_H(M) = tr(MH) / tr(M)`; undefined on `tr M = 0`, which is exactly the
/// incidence locus `Σ` for rank-one `M`.
pub fn rational_potential_r(m: &SquareMatrix, spec: &OrbitSpec) -> Result<GaussianRational> {
    m.check_same_dim(spec.h().mat())?;
    let den = m.trace();
    if den.is_zero() {
        return Err(Error::Indeterminate);
    }
    let num = (m * spec.h().mat()).trace();
    Ok(&num / &den)
}

/// Critical values of `f_H` read off the Weyl orbit of `H₀`; valid for any
/// diagonal `H₀`.
pub fn weyl_critical_values(spec: &OrbitSpec, form: &FormSpec) -> Result<Vec<GaussianRational>> {
    weyl_orbit_points(spec.h0())?
        .iter()
        .map(|p| potential_f(p, spec, form))
        .collect()
}

/// One critical point of `f_H` on the minimal orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalDatum {
    /// 0-based chart index `j`; the point is `(0 j)·H₀`.
    pub index: usize,
    #[serde(skip)]
    pub point: LieElement,
    #[serde(skip)]
    pub tensor: TensorPoint,
    pub f_value: GaussianRational,
    pub r_value: GaussianRational,
    #[serde(skip)]
    pub hessian: SquareMatrix,
    pub nondegenerate: bool,
}

/// Second-order jet of `f_H` in chart `j` at the origin:
/// `(f(0), ∇f(0), Hess f(0))` in the coordinates of [`chart_coordinates`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartJet {
    pub constant: GaussianRational,
    pub gradient: Vec<GaussianRational>,
    pub hessian: SquareMatrix,
}

/// Jet of `u ↦ f_H(Ad(g) e^{ad Y} e^{ad X} C)`, `C = (0 j)·H₀`, from the
/// expansion `C + [X,C] + [Y,C] + [Y,[X,C]] + ½[X,[X,C]] + ½[Y,[Y,C]] + …`.
pub fn chart_jet_at(
    spec: &OrbitSpec,
    j: usize,
    g: &GroupElement,
    form: &FormSpec,
) -> Result<ChartJet> {
    let center = chart_center(spec, j)?;
    if g.dim() != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            found: g.dim(),
        });
    }
    let m = 2 * spec.n();
    let f = |a: &LieElement| potential_f(&g.ad(a), spec, form);
    let coords = |k: usize, l: Option<usize>| {
        let mut vals = vec![GaussianRational::zero(); m];
        vals[k] = GaussianRational::from_i64(1);
        if let Some(l) = l {
            vals[l] = &vals[l] + &GaussianRational::from_i64(1);
        }
        chart_coordinates(spec, j, &vals)
    };
    let half = GaussianRational::ratio(1, 2);
    let quadratic = |y: &LieElement, x: &LieElement| -> Result<GaussianRational> {
        let xc = x.bracket(&center);
        let term = y
            .bracket(&xc)
            .add(&x.bracket(&xc).scale(&half))
            .add(&y.bracket(&y.bracket(&center)).scale(&half));
        f(&term)
    };
    let constant = f(&center)?;
    let mut gradient = Vec::with_capacity(m);
    let mut diag_q = Vec::with_capacity(m);
    for k in 0..m {
        let (y, x) = coords(k, None)?;
        gradient.push(f(&x.bracket(&center).add(&y.bracket(&center)))?);
        diag_q.push(quadratic(&y, &x)?);
    }
    let mut hessian = SquareMatrix::zeros(m);
    for k in 0..m {
        hessian[(k, k)] = &diag_q[k] + &diag_q[k];
        for l in k + 1..m {
            let (y, x) = coords(k, Some(l))?;
            let mixed = &(&quadratic(&y, &x)? - &diag_q[k]) - &diag_q[l];
            hessian[(k, l)] = mixed.clone();
            hessian[(l, k)] = mixed;
        }
    }
    Ok(ChartJet {
        constant,
        gradient,
        hessian,
    })
}

/// Jet of the potential in chart `j` centered at the critical point itself.
pub fn chart_jet(spec: &OrbitSpec, j: usize, form: &FormSpec) -> Result<ChartJet> {
    chart_jet_at(spec, j, &GroupElement::identity(spec.dim()), form)
}

/// Complex Hessian of `f_H` at the critical point `(0 j)·H₀` in chart
/// coordinates, with its nondegeneracy. Requires regular `H`.
pub fn hessian_at_critical(
    spec: &OrbitSpec,
    j: usize,
    form: &FormSpec,
) -> Result<(SquareMatrix, bool)> {
    spec.require_minimal()?;
    spec.require_regular()?;
    let jet = chart_jet(spec, j, form)?;
    let nondegenerate = !jet.hessian.det().is_zero();
    Ok((jet.hessian, nondegenerate))
}

/// The `n+1` critical points of `f_H` on the minimal orbit. Each is checked
/// to have vanishing chart gradient and to match its tensor twin `e_j ⊗ ε_j`.
pub fn critical_points(spec: &OrbitSpec, form: &FormSpec) -> Result<Vec<CriticalDatum>> {
    spec.require_minimal()?;
    spec.require_regular()?;
    let d = spec.dim();
    let mut out = Vec::with_capacity(d);
    for j in 0..d {
        let point = chart_center(spec, j)?;
        let tensor = TensorPoint::basis(d, j);
        if model_map(&tensor, spec.n())? != point {
            return Err(Error::Invalid(format!("tensor twin of critical point {j} disagrees")));
        }
        let jet = chart_jet(spec, j, form)?;
        if jet.gradient.iter().any(|g| !g.is_zero()) {
            return Err(Error::Invalid(format!("chart gradient at critical point {j} is nonzero")));
        }
        let r_value = rational_potential_r(&tensor.outer(), spec)?;
        let nondegenerate = !jet.hessian.det().is_zero();
        out.push(CriticalDatum {
            index: j,
            point,
            tensor,
            f_value: jet.constant,
            r_value,
            hessian: jet.hessian,
            nondegenerate,
        });
    }
    Ok(out)
}

/// The chart potential as an explicit polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartPotential {
    /// `y1..yn` (column `j` of `Y`) then `x1..xn` (row `j` of `X`).
    pub variables: Vec<String>,
    pub polynomial: Polynomial,
}

impl ChartPotential {
    pub fn constant_term(&self) -> BigRational {
        self.polynomial.constant_term()
    }

    /// Polynomial gradient evaluated at the origin.
    pub fn gradient_at_origin(&self) -> Vec<BigRational> {
        (0..self.variables.len())
            .map(|k| self.polynomial.derivative(k).constant_term())
            .collect()
    }

    pub fn hessian_at_origin(&self) -> SquareMatrix {
        let m = self.variables.len();
        SquareMatrix::from_fn(m, |k, l| {
            GaussianRational::from_real(self.polynomial.derivative(k).derivative(l).constant_term())
        })
    }

    pub fn to_infix(&self) -> String {
        self.polynomial
            .to_string_with(&self.variables, crate::polyideal::OrderKind::GradedRevLex)
    }
}

/// `(y, x) ↦ f_H(e^{ad Y} e^{ad X}·(0 j)H₀)` expanded symbolically. The form
/// scale must be real.
pub fn chart_potential_poly(spec: &OrbitSpec, j: usize, form: &FormSpec) -> Result<ChartPotential> {
    spec.require_minimal()?;
    let d = spec.dim();
    let n = spec.n();
    let center = chart_center(spec, j)?;
    if !form.scale().is_real() {
        return Err(Error::Invalid("chart expansion needs a real form scale".into()));
    }
    let nvars = 2 * n;
    let others: Vec<usize> = (0..d).filter(|&k| k != j).collect();
    let mut y = PolyMatrix::zeros(d, nvars);
    let mut x = PolyMatrix::zeros(d, nvars);
    for (slot, &k) in others.iter().enumerate() {
        y.set(k, j, Polynomial::var(nvars, slot));
        x.set(j, k, Polynomial::var(nvars, n + slot));
    }
    let c = PolyMatrix::from_matrix(center.mat(), nvars)?;
    let h = PolyMatrix::from_matrix(spec.h().mat(), nvars)?;
    let p = PolyMatrix::exp_ad_nilpotent(&y, &PolyMatrix::exp_ad_nilpotent(&x, &c)?)?;
    let polynomial = h.mul(&p).trace().scale(form.scale().re());
    let variables = (1..=n)
        .map(|k| format!("y{k}"))
        .chain((1..=n).map(|k| format!("x{k}")))
        .collect();
    Ok(ChartPotential {
        variables,
        polynomial,
    })
}

/// `R_H` on the generic `g = (a_ij)`: numerator `Σ λ_i a_i1 (adj g)_1i` and
/// denominator `Σ a_i1 (adj g)_1i`, over the variables `a11, …, a_dd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicRationalPotential {
    pub variables: Vec<String>,
    pub numerator: Polynomial,
    pub denominator: Polynomial,
}

pub fn rational_potential_symbolic(spec: &OrbitSpec) -> Result<SymbolicRationalPotential> {
    let d = spec.dim();
    let g = PolyMatrix::generic(d);
    let nvars = d * d;
    let adj_row = g.adjugate_row(0);
    let lambdas = spec.lambdas();
    let mut numerator = Polynomial::zero(nvars);
    let mut denominator = Polynomial::zero(nvars);
    for i in 0..d {
        let m_ii = g.entry(i, 0) * &adj_row[i];
        numerator = &numerator + &m_ii.scale(&lambdas[i]);
        denominator = &denominator + &m_ii;
    }
    let variables = (0..nvars)
        .map(|k| {
            if d < 10 {
                format!("a{}{}", k / d + 1, k % d + 1)
            } else {
                format!("a{}_{}", k / d + 1, k % d + 1)
            }
        })
        .collect();
    Ok(SymbolicRationalPotential {
        variables,
        numerator,
        denominator,
    })
}

/// Whether `Ω` vanishes on `{[u, P] : u ∈ su(n+1)}` at the orbit point `P`.
pub fn su_tangent_is_isotropic(point: &LieElement, form: &FormSpec) -> Result<bool> {
    let tangents: Vec<LieElement> = su_basis(point.dim()).iter().map(|u| u.bracket(point)).collect();
    for a in &tangents {
        for b in &tangents {
            if !omega(a, b, form)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(rank of the Ω-Gram matrix, real dimension of the tangent space)` at an
/// orbit point; `Ω` is symplectic there iff the two agree.
pub fn symplectic_ranks(point: &LieElement, form: &FormSpec) -> Result<(usize, usize)> {
    let vectors = real_tangent_spanning_set(point);
    let gram = omega_gram(&vectors, form)?;
    Ok((gram.rank(), real_span_rank(&vectors)))
}
