use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, SquareMatrix};

/// A decomposable tensor `v ⊗ ε` given by its factors. Points of the orbit of
/// `e₁ ⊗ ε₁` are exactly those with `ε(v) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoint {
    v: Vec<GaussianRational>,
    eps: Vec<GaussianRational>,
}

impl TensorPoint {
    /// Validates lengths and `ε(v) = 1`.
    pub fn new(v: Vec<GaussianRational>, eps: Vec<GaussianRational>) -> Result<Self> {
        if v.len() != eps.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                found: eps.len(),
            });
        }
        let p = Self { v, eps };
        let pairing = p.pairing();
        if !pairing.is_one() {
            return Err(Error::PairingNotOne(pairing.to_string()));
        }
        Ok(p)
    }

    pub(crate) fn new_unchecked(v: Vec<GaussianRational>, eps: Vec<GaussianRational>) -> Self {
        Self { v, eps }
    }

    /// `e_j ⊗ ε_j` (0-based `j`).
    pub fn basis(dim: usize, j: usize) -> Self {
        let mut v = vec![GaussianRational::zero(); dim];
        v[j] = GaussianRational::one();
        Self {
            eps: v.clone(),
            v,
        }
    }

    /// Factors a rank-one matrix `M = v ⊗ ε` normalized so that `v` is a
    /// column of `M`. Errors on the zero matrix; the caller is responsible
    /// for `M` having rank one.
    pub fn from_rank_one(m: &SquareMatrix) -> Result<Self> {
        let d = m.dim();
        let (i, j) = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .find(|&p| !m[p].is_zero())
            .ok_or(Error::ZeroVector)?;
        let pivot_inv = m[(i, j)].inv().expect("nonzero pivot");
        let v = m.col(j);
        let eps = m.row(i).iter().map(|x| x * &pivot_inv).collect();
        Ok(Self { v, eps })
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    pub fn v(&self) -> &[GaussianRational] {
        &self.v
    }

    pub fn eps(&self) -> &[GaussianRational] {
        &self.eps
    }

    /// `ε(v) = tr(v ⊗ ε)`.
    pub fn pairing(&self) -> GaussianRational {
        self.v.iter().zip(&self.eps).map(|(a, b)| a * b).sum()
    }

    pub fn outer(&self) -> SquareMatrix {
        SquareMatrix::outer(&self.v, &self.eps).expect("equal lengths")
    }
}
