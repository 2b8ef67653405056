use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::liecore::{real_diagonal, LieElement};

/// One Landau–Ginzburg instance: the orbit through `H₀` in `sl(n+1)` and the
/// diagonal potential direction `H = diag(λ₁, …, λ_{n+1})`.
///
/// Construction only validates shapes and traces. Regularity of `H` is a
/// precondition of the critical-point machinery and is checked there, so a
/// degenerate `H` can still be built and reported on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSpec {
    n: usize,
    h0: LieElement,
    h: LieElement,
}

impl OrbitSpec {
    /// Minimal orbit `H₀ = diag(n, −1, …, −1)` with `H = diag(lambdas)`.
    pub fn minimal(n: usize, lambdas: &[BigRational]) -> Result<Self> {
        Self::with_h0(LieElement::minimal_h0(n), lambdas)
    }

    /// Same as [`Self::minimal`] with small integer eigenvalues.
    pub fn minimal_i64(n: usize, lambdas: &[i64]) -> Result<Self> {
        let l: Vec<BigRational> = lambdas
            .iter()
            .map(|&v| BigRational::from_integer(v.into()))
            .collect();
        Self::minimal(n, &l)
    }

    /// Orbit through an arbitrary real diagonal trace-zero `H₀`.
    pub fn with_h0(h0: LieElement, lambdas: &[BigRational]) -> Result<Self> {
        if h0.dim() < 2 {
            return Err(Error::Invalid("need n >= 1".into()));
        }
        real_diagonal(&h0)?;
        let d = h0.dim();
        if lambdas.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: lambdas.len(),
            });
        }
        let diag: Vec<GaussianRational> =
            lambdas.iter().cloned().map(GaussianRational::from_real).collect();
        let h = LieElement::diagonal(&diag)?;
        Ok(Self { n: d - 1, h0, h })
    }

    /// The default integer regular potential `H = diag(n, n−2, …, −n)`.
    pub fn minimal_default(n: usize) -> Self {
        let lambdas: Vec<i64> = (0..=n).map(|k| n as i64 - 2 * k as i64).collect();
        Self::minimal_i64(n, &lambdas).expect("symmetric spectrum is trace-zero")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n + 1
    }

    pub fn h0(&self) -> &LieElement {
        &self.h0
    }

    pub fn h(&self) -> &LieElement {
        &self.h
    }

    pub fn lambdas(&self) -> Vec<BigRational> {
        self.h.mat().diag().into_iter().map(|x| x.re().clone()).collect()
    }

    pub fn is_minimal(&self) -> bool {
        self.h0 == LieElement::minimal_h0(self.n)
    }

    /// Index pairs `(i, j)`, `i < j`, with `λ_i = λ_j`.
    pub fn repeated_eigenvalues(&self) -> Vec<(usize, usize)> {
        let l = self.lambdas();
        let mut out = Vec::new();
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                if (&l[i] - &l[j]).is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        self.repeated_eigenvalues().is_empty()
    }

    pub fn require_regular(&self) -> Result<()> {
        let repeated = self.repeated_eigenvalues();
        if repeated.is_empty() {
            Ok(())
        } else {
            Err(Error::NotRegular { repeated })
        }
    }

    pub fn require_minimal(&self) -> Result<()> {
        if self.is_minimal() {
            Ok(())
        } else {
            Err(Error::NotMinimalOrbit)
        }
    }
}
