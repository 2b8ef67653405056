use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, SquareMatrix};

/// A trace-zero matrix, i.e. an element of `sl(n+1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieElement(SquareMatrix);

impl LieElement {
    pub fn new(mat: SquareMatrix) -> Result<Self> {
        let tr = mat.trace();
        if !tr.is_zero() {
            return Err(Error::NotTraceZero(tr.to_string()));
        }
        Ok(Self(mat))
    }

    pub fn zero(dim: usize) -> Self {
        Self(SquareMatrix::zeros(dim))
    }

    pub fn diagonal(diag: &[GaussianRational]) -> Result<Self> {
        Self::new(SquareMatrix::diagonal(diag))
    }

    /// `diag(n, −1, …, −1)` in `sl(n+1)`.
    pub fn minimal_h0(n: usize) -> Self {
        let mut diag = vec![GaussianRational::from_i64(-1); n + 1];
        diag[0] = GaussianRational::from_i64(n as i64);
        Self(SquareMatrix::diagonal(&diag))
    }

    pub fn mat(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn bracket(&self, other: &Self) -> Self {
        Self(self.0.commutator(&other.0))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self(self.0.scale(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `τ(Z) = −Z*`, the conjugation of the compact form `su(n+1)`.
    pub fn tau(&self) -> Self {
        Self(-&self.0.adjoint())
    }

    pub(crate) fn from_matrix_unchecked(mat: SquareMatrix) -> Self {
        debug_assert!(mat.trace().is_zero());
        Self(mat)
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieElement({:?})", self.0)
    }
}

/// A determinant-one matrix, i.e. an element of `SL(n+1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement(SquareMatrix);

impl GroupElement {
    pub fn new(mat: SquareMatrix) -> Result<Self> {
        let det = mat.det();
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(Self(mat))
    }

    pub fn identity(dim: usize) -> Self {
        Self(SquareMatrix::identity(dim))
    }

    /// The transvection `Id + c·E_ij` (`i ≠ j`).
    pub fn transvection(dim: usize, i: usize, j: usize, c: &GaussianRational) -> Self {
        assert_ne!(i, j, "transvection needs an off-diagonal position");
        let mut m = SquareMatrix::identity(dim);
        m[(i, j)] = c.clone();
        Self(m)
    }

    pub fn mat(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// `g⁻¹ = adj g` since `det g = 1`.
    pub fn inverse(&self) -> Self {
        Self(self.0.adjugate().0)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    /// `Ad(g)X = g·X·g⁻¹`.
    pub fn ad(&self, x: &LieElement) -> LieElement {
        LieElement::from_matrix_unchecked(&(&self.0 * x.mat()) * self.inverse().mat())
    }

    pub(crate) fn from_matrix_unchecked(mat: SquareMatrix) -> Self {
        Self(mat)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({:?})", self.0)
    }
}

/// A Weyl group element of type A: a permutation of `{0, …, n}`.
///
/// `perm[k]` is the image of index `k`; the action on matrices is
/// conjugation by the permutation matrix `P e_k = e_{perm[k]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
}

impl WeylElement {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Invalid(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(Self { perm })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            perm: (0..dim).collect(),
        }
    }

    /// The transposition `(a b)`; `(a a)` is the identity.
    pub fn transposition(dim: usize, a: usize, b: usize) -> Self {
        let mut perm: Vec<usize> = (0..dim).collect();
        perm.swap(a, b);
        Self { perm }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn matrix(&self) -> SquareMatrix {
        let d = self.perm.len();
        let mut m = SquareMatrix::zeros(d);
        for (k, &p) in self.perm.iter().enumerate() {
            m[(p, k)] = GaussianRational::one();
        }
        m
    }

    /// `w·X = P X P⁻¹`; on diagonal matrices this permutes the diagonal.
    pub fn act(&self, x: &LieElement) -> LieElement {
        let p = self.matrix();
        LieElement::from_matrix_unchecked(&(&p * x.mat()) * &p.transpose())
    }

    /// The permutation matrix as a group element, with sign fixed so that
    /// the determinant is one (odd permutations are negated on one column).
    pub fn group_representative(&self) -> GroupElement {
        let mut m = self.matrix();
        if m.det() != GaussianRational::one() {
            for i in 0..m.dim() {
                m[(i, 0)] = -&m[(i, 0)];
            }
        }
        GroupElement::from_matrix_unchecked(m)
    }
}
