use num_rational::BigRational;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::exact::{GaussianRational, SquareMatrix};

/// Square matrix with polynomial entries over ℚ, all in one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(dim: usize, nvars: usize) -> Self {
        Self {
            dim,
            nvars,
            entries: vec![Polynomial::zero(nvars); dim * dim],
        }
    }

    pub fn identity(dim: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(dim, nvars);
        for i in 0..dim {
            m.entries[i * dim + i] = Polynomial::one(nvars);
        }
        m
    }

    pub fn from_fn(dim: usize, nvars: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let entries: Vec<Polynomial> = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        assert!(entries.iter().all(|p| p.nvars() == nvars), "entry ring mismatch");
        Self { dim, nvars, entries }
    }

    /// Constant matrix; entries must be real.
    pub fn from_matrix(m: &SquareMatrix, nvars: usize) -> Result<Self> {
        let mut out = Self::zeros(m.dim(), nvars);
        for i in 0..m.dim() {
            for j in 0..m.dim() {
                let z = &m[(i, j)];
                if !z.is_real() {
                    return Err(Error::Invalid(format!("entry ({i},{j}) = {z} is not real")));
                }
                out.entries[i * m.dim() + j] = Polynomial::constant(nvars, z.re().clone());
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert_eq!(p.nvars(), self.nvars, "entry ring mismatch");
        self.entries[i * self.dim + j] = p;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.dim, self.nvars, |i, j| self.entry(i, j) + other.entry(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.dim, self.nvars, |i, j| self.entry(i, j) - other.entry(i, j))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_fn(self.dim, self.nvars, |i, j| self.entry(i, j).scale(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Self::from_fn(self.dim, self.nvars, |i, j| {
            let mut acc = Polynomial::zero(self.nvars);
            for k in 0..self.dim {
                let (a, b) = (self.entry(i, k), other.entry(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Polynomial {
        let mut acc = Polynomial::zero(self.nvars);
        for i in 0..self.dim {
            acc = &acc + self.entry(i, i);
        }
        acc
    }

    /// `Σ ad(X)^k Z / k!`; fails unless the series stops within `dim²` terms.
    pub fn exp_ad_nilpotent(x: &Self, z: &Self) -> Result<Self> {
        let cap = x.dim * x.dim;
        let mut acc = z.clone();
        let mut term = z.clone();
        for k in 1..=cap {
            term = x.commutator(&term).scale(&BigRational::new(1.into(), (k as i64).into()));
            if term.is_zero() {
                return Ok(acc);
            }
            acc = acc.add(&term);
        }
        Err(Error::NotNilpotent { steps: cap })
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let d = self.dim - 1;
        Self::from_fn(d, self.nvars, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self.entry(si, sj).clone()
        })
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Polynomial {
        match self.dim {
            0 => Polynomial::one(self.nvars),
            1 => self.entry(0, 0).clone(),
            _ => {
                let mut acc = Polynomial::zero(self.nvars);
                for j in 0..self.dim {
                    if self.entry(0, j).is_zero() {
                        continue;
                    }
                    let c = self.cofactor(0, j);
                    acc = &acc + &(self.entry(0, j) * &c);
                }
                acc
            }
        }
    }

    /// `(−1)^{i+j} det A(i|j)`.
    pub fn cofactor(&self, i: usize, j: usize) -> Polynomial {
        let m = self.minor(i, j).det();
        if (i + j) % 2 == 0 {
            m
        } else {
            -&m
        }
    }

    /// Row `i` of the classical adjoint: `(adj A)_{ik} = C_{ki}`.
    pub fn adjugate_row(&self, i: usize) -> Vec<Polynomial> {
        (0..self.dim).map(|k| self.cofactor(k, i)).collect()
    }

    pub fn eval(&self, point: &[GaussianRational]) -> SquareMatrix {
        SquareMatrix::from_fn(self.dim, |i, j| self.entry(i, j).eval(point))
    }

    /// The generic matrix whose entry `(i, j)` is variable `i·dim + j`.
    pub fn generic(dim: usize) -> Self {
        let nvars = dim * dim;
        Self::from_fn(dim, nvars, |i, j| Polynomial::var(nvars, i * dim + j))
    }
}
