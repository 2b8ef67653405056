//! Dense square matrices over ℚ(i) with exact elimination routines.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::GaussianRational;
use super::univariate::UnivariatePolynomial;
use crate::error::{Error, Result};

type Scalar = GaussianRational;

/// Row-major `dim × dim` matrix of Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<Scalar>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Invalid("matrix must have at least one row".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self { dim, entries })
    }

    /// Convenience constructor from small integers, mostly for tests and examples.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn diagonal(diag: &[Scalar]) -> Self {
        Self::from_fn(diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                Scalar::zero()
            }
        })
    }

    /// The elementary matrix `E_ij` (0-based), i.e. `e_i ⊗ ε_j`.
    pub fn unit(dim: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(dim);
        m[(i, j)] = Scalar::one();
        m
    }

    /// `v ⊗ ε`, the matrix with entries `v_i ε_j`.
    pub fn outer(v: &[Scalar], eps: &[Scalar]) -> Result<Self> {
        if v.len() != eps.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                found: eps.len(),
            });
        }
        Ok(Self::from_fn(v.len(), |i, j| &v[i] * &eps[j]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.entries[i * self.dim..(i + 1) * self.dim].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim).map(|i| self.row(i)).collect()
    }

    pub fn diag(&self) -> Vec<Scalar> {
        (0..self.dim).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim).map(|i| &self[(i, i)]).sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].clone())
    }

    /// Conjugate transpose `Z*`.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|k| &self[(i, k)] * &v[k]).sum())
            .collect()
    }

    /// Row vector times matrix, `ε·A`.
    pub fn covec_mul(&self, eps: &[Scalar]) -> Vec<Scalar> {
        (0..self.dim)
            .map(|j| (0..self.dim).map(|k| &eps[k] * &self[(k, j)]).sum())
            .collect()
    }

    /// The submatrix with row `i` and column `j` removed, `A(i|j)`.
    pub fn minor_matrix(&self, i: usize, j: usize) -> Self {
        let d = self.dim - 1;
        Self::from_fn(d, |r, c| {
            let rr = if r < i { r } else { r + 1 };
            let cc = if c < j { c } else { c + 1 };
            self[(rr, cc)].clone()
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    pub fn det(&self) -> Scalar {
        if self.dim == 0 {
            return Scalar::one();
        }
        let mut rows = self.rows();
        let (pivots, sign) = bareiss(&mut rows);
        if pivots.len() < self.dim {
            return Scalar::zero();
        }
        let last = rows[self.dim - 1][self.dim - 1].clone();
        if sign {
            -last
        } else {
            last
        }
    }

    /// Cofactor `C_ij = (−1)^{i+j} det A(i|j)`.
    pub fn cofactor(&self, i: usize, j: usize) -> Scalar {
        let m = self.minor_matrix(i, j).det();
        if (i + j) % 2 == 0 {
            m
        } else {
            -m
        }
    }

    /// Classical adjoint (transpose of the cofactor matrix) together with the
    /// determinant. For dimension 1 the adjugate is `[1]`.
    pub fn adjugate(&self) -> (Self, Scalar) {
        let det = self.det();
        if self.dim == 1 {
            return (Self::identity(1), det);
        }
        let adj = Self::from_fn(self.dim, |i, j| self.cofactor(j, i));
        (adj, det)
    }

    /// Exact rank via fraction-free elimination.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows())
    }

    /// Basis of the right kernel `{x : A x = 0}`, read off the reduced row
    /// echelon form (ordinary Gauss–Jordan, independent of [`Self::rank`]).
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        kernel_of_rows(self.rows(), self.dim)
    }

    /// Inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let (adj, det) = self.adjugate();
        let inv = det.inv()?;
        Some(adj.scale(&inv))
    }

    /// Monic polynomial of least degree annihilating the matrix, found as the
    /// first linear dependency among `Id, A, A², …`.
    pub fn minimal_polynomial(&self) -> UnivariatePolynomial {
        let d = self.dim;
        let mut powers: Vec<Self> = vec![Self::identity(d)];
        loop {
            let k = powers.len();
            let next = &powers[k - 1] * self;
            // columns: vec(A^0) .. vec(A^{k-1}); rhs: vec(A^k)
            let rows: Vec<Vec<Scalar>> = (0..d * d)
                .map(|e| {
                    let mut row: Vec<Scalar> =
                        powers.iter().map(|p| p.entries[e].clone()).collect();
                    row.push(next.entries[e].clone());
                    row
                })
                .collect();
            if let Some(coeffs) = solve_consistent(rows, k) {
                // A^k = Σ c_i A^i  ⇒  p(x) = x^k − Σ c_i x^i
                let mut poly: Vec<Scalar> = coeffs.into_iter().map(|c| -c).collect();
                poly.push(Scalar::one());
                return UnivariatePolynomial::new(poly);
            }
            powers.push(next);
        }
    }

    /// Parses the JSON matrix literal format: an array of rows whose entries are
    /// strings such as `"p/q"` or `"p/q+r/s i"`.
    pub fn from_json(text: &str) -> Result<Self> {
        let rows: Vec<Vec<String>> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.dim)
                .map(|i| {
                    serde_json::Value::Array(
                        self.row(i)
                            .iter()
                            .map(|x| serde_json::Value::String(x.to_string()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }
}

/// In-place Bareiss elimination on a rectangular row list. Returns the pivot
/// columns and whether an odd number of row swaps occurred. After the call the
/// last pivot entry of a full-rank square input equals ± the determinant.
fn bareiss(rows: &mut [Vec<Scalar>]) -> (Vec<usize>, bool) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut prev = Scalar::one();
    let mut pivots = Vec::new();
    let mut swapped = false;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
            swapped = !swapped;
        }
        let pivot = rows[r][c].clone();
        for i in r + 1..nrows {
            let factor = rows[i][c].clone();
            for j in c + 1..ncols {
                let v = &(&pivot * &rows[i][j]) - &(&factor * &rows[r][j]);
                rows[i][j] = &v / &prev;
            }
            rows[i][c] = Scalar::zero();
        }
        // rows above keep their entries; the square case only reads the diagonal
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    (pivots, swapped)
}

pub(crate) fn rank_of_rows(mut rows: Vec<Vec<Scalar>>) -> usize {
    bareiss(&mut rows).0.len()
}

/// Gauss–Jordan reduction to RREF. Returns pivot columns.
fn rref(rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..rows[i].len() {
                    let v = &f * &rows[r][j];
                    rows[i][j] -= &v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn kernel_of_rows(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let pivots = rref(&mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Scalar::zero(); ncols];
            x[f] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -&rows[r][f];
            }
            x
        })
        .collect()
}

/// Solves the augmented system `[M | b]` with `unknowns` columns; `None` if
/// inconsistent. Free variables are set to zero.
fn solve_consistent(mut rows: Vec<Vec<Scalar>>, unknowns: usize) -> Option<Vec<Scalar>> {
    let pivots = rref(&mut rows, unknowns + 1);
    if pivots.contains(&unknowns) {
        return None;
    }
    let mut x = vec![Scalar::zero(); unknowns];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = rows[r][unknowns].clone();
    }
    Some(x)
}

impl Index<(usize, usize)> for SquareMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for SquareMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.entries[i * self.dim + j]
    }
}

impl<'a> Mul<&'a SquareMatrix> for &'a SquareMatrix {
    type Output = SquareMatrix;
    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let d = self.dim;
        let mut out = SquareMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.entries[i * d + j] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a SquareMatrix> for &'a SquareMatrix {
    type Output = SquareMatrix;
    fn add(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        SquareMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a SquareMatrix> for &'a SquareMatrix {
    type Output = SquareMatrix;
    fn sub(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        SquareMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &SquareMatrix {
    type Output = SquareMatrix;
    fn neg(self) -> SquareMatrix {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn adjugate_of_identity() {
        let id = SquareMatrix::identity(3);
        let (adj, det) = id.adjugate();
        assert_eq!(adj, id);
        assert_eq!(det, Scalar::one());
    }

    #[test]
    fn adjugate_two_by_two_hand_rule() {
        // adj [[a,b],[c,d]] = [[d,-b],[-c,a]]
        let (adj, det) = m(&[&[1, 1], &[0, 1]]).adjugate();
        assert_eq!(adj, m(&[&[1, -1], &[0, 1]]));
        assert_eq!(det, Scalar::one());
        let (adj, det) = m(&[&[2, 3], &[5, 7]]).adjugate();
        assert_eq!(adj, m(&[&[7, -3], &[-5, 2]]));
        assert_eq!(det, Scalar::from_i64(-1));
    }

    #[test]
    fn adjugate_of_singular_and_dim_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (adj, det) = a.adjugate();
        assert!(det.is_zero());
        assert!((&a * &adj).is_zero());
        let (adj1, det1) = m(&[&[5]]).adjugate();
        assert_eq!(adj1, m(&[&[1]]));
        assert_eq!(det1, Scalar::from_i64(5));
    }

    #[test]
    fn determinant_needs_pivoting() {
        let a = m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(a.det(), Scalar::from_i64(-1));
        let b = m(&[&[0, 0, 2], &[0, 3, 0], &[5, 0, 0]]);
        assert_eq!(b.det(), Scalar::from_i64(-30));
    }

    #[test]
    fn minimal_polynomial_examples() {
        let h0 = SquareMatrix::diagonal(&[2.into(), (-1).into(), (-1).into()]);
        assert_eq!(
            h0.minimal_polynomial().coefficients(),
            &[Scalar::from_i64(-2), Scalar::from_i64(-1), Scalar::one()]
        );
        assert_eq!(
            SquareMatrix::identity(4).minimal_polynomial().coefficients(),
            &[Scalar::from_i64(-1), Scalar::one()]
        );
        // e1 ⊗ ε2 squares to zero
        let e12 = SquareMatrix::unit(3, 0, 1);
        assert!((&e12 * &e12).is_zero());
        assert_eq!(
            e12.minimal_polynomial().coefficients(),
            &[Scalar::zero(), Scalar::zero(), Scalar::one()]
        );
        let zero = SquareMatrix::zeros(2);
        assert_eq!(zero.minimal_polynomial().coefficients(), &[Scalar::zero(), Scalar::one()]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(SquareMatrix::zeros(3).rank(), 0);
        assert_eq!(SquareMatrix::unit(3, 0, 0).rank(), 1);
        assert_eq!(SquareMatrix::identity(4).rank(), 4);
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.kernel_basis().len(), 1);
        for k in a.kernel_basis() {
            assert!(a.mul_vec(&k).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn json_literal_roundtrip() {
        let text = r#"[["1/2", "0"], ["-3+1/3 i", "i"]]"#;
        let a = SquareMatrix::from_json(text).unwrap();
        assert_eq!(a[(1, 0)], "-3+1/3 i".parse().unwrap());
        assert_eq!(SquareMatrix::from_json(&a.to_json()).unwrap(), a);
        assert!(SquareMatrix::from_json(r#"[["1", "2"]]"#).is_err());
        assert!(SquareMatrix::from_json(r#"[["0.5"]]"#).is_err());
    }
}
