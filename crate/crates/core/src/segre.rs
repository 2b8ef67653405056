//! Segre coordinates of orbit points, the rank-one eigenstructure, the
//! incidence variety `Σ = {ξ(w) = 0}`, and the linear change between the
//! Segre ambient `P((n+1)²−1)` and the homogenization ambient `(A, t)`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, SquareMatrix};
use crate::liecore::{GroupElement, LieElement};

/// A point of projective space, stored with its first nonzero coordinate
/// scaled to one so that equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ProjectivePoint {
    coords: Vec<GaussianRational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<GaussianRational>) -> Result<Self> {
        let pivot = coords.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
        let inv = pivot.inv().expect("nonzero");
        let coords = coords.iter().map(|c| c * &inv).collect();
        Ok(Self { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| GaussianRational::from_i64(c)).collect())
    }

    /// The normalized representative.
    pub fn coords(&self) -> &[GaussianRational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Whether `other` is a nonzero multiple of this point's representative.
    pub fn represents(&self, other: &[GaussianRational]) -> bool {
        ProjectivePoint::new(other.to_vec()).is_ok_and(|p| &p == self)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `M_ij = a_i1 · (adj g)_1j`, built directly from the cofactors of `g`.
pub fn segre_matrix(g: &GroupElement) -> SquareMatrix {
    let m = g.mat();
    let d = m.dim();
    // (adj g)_1j = C_j1
    let adj_row: Vec<GaussianRational> = (0..d).map(|j| m.cofactor(j, 0)).collect();
    SquareMatrix::from_fn(d, |i, j| &m[(i, 0)] * &adj_row[j])
}

/// The `(n+1)²` Segre coordinates of the orbit point of `g`, row-major.
pub fn segre_coords(g: &GroupElement) -> ProjectivePoint {
    ProjectivePoint::new(segre_matrix(g).entries().to_vec()).expect("first column of g is nonzero")
}

/// All 2×2 minors `z_ij z_kl − z_il z_kj`, `i < k`, `j < l`.
pub fn two_by_two_minors(z: &SquareMatrix) -> Vec<GaussianRational> {
    let d = z.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for k in i + 1..d {
            for j in 0..d {
                for l in j + 1..d {
                    out.push(&(&z[(i, j)] * &z[(k, l)]) - &(&z[(i, l)] * &z[(k, j)]));
                }
            }
        }
    }
    out
}

pub fn is_rank_one_locus(z: &SquareMatrix) -> bool {
    two_by_two_minors(z).iter().all(Zero::is_zero)
}

/// The image direction and kernel of a rank-one `M` read off from `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenstructure {
    /// `w₁`, the first column of `g`; `M w₁ = w₁`.
    pub image: Vec<GaussianRational>,
    /// `w₂, …, w_{n+1}`, the remaining columns; `M w_k = 0`.
    pub kernel: Vec<Vec<GaussianRational>>,
}

/// Requires `tr M = 1`.
pub fn eigenstructure(m: &SquareMatrix, g: &GroupElement) -> Result<Eigenstructure> {
    m.check_same_dim(g.mat())?;
    let tr = m.trace();
    if !tr.is_one() {
        return Err(Error::PairingNotOne(tr.to_string()));
    }
    let gm = g.mat();
    Ok(Eigenstructure {
        image: gm.col(0),
        kernel: (1..gm.dim()).map(|k| gm.col(k)).collect(),
    })
}

/// A vector and a covector; a point of `Σ` when `ξ(w) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidencePair {
    w: Vec<GaussianRational>,
    xi: Vec<GaussianRational>,
}

impl IncidencePair {
    pub fn new(w: Vec<GaussianRational>, xi: Vec<GaussianRational>) -> Result<Self> {
        if w.len() != xi.len() {
            return Err(Error::DimensionMismatch {
                expected: w.len(),
                found: xi.len(),
            });
        }
        if w.iter().all(Zero::is_zero) || xi.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(Self { w, xi })
    }

    pub fn from_i64(w: &[i64], xi: &[i64]) -> Result<Self> {
        let lift = |v: &[i64]| v.iter().map(|&c| GaussianRational::from_i64(c)).collect();
        Self::new(lift(w), lift(xi))
    }

    pub fn w(&self) -> &[GaussianRational] {
        &self.w
    }

    pub fn xi(&self) -> &[GaussianRational] {
        &self.xi
    }

    pub fn pairing(&self) -> GaussianRational {
        self.w.iter().zip(&self.xi).map(|(a, b)| a * b).sum()
    }

    pub fn outer(&self) -> SquareMatrix {
        SquareMatrix::outer(&self.w, &self.xi).expect("equal lengths")
    }
}

pub fn incidence_member(pair: &IncidencePair) -> bool {
    pair.pairing().is_zero()
}

/// `Z ↦ (A, t) = ((n+1)Z − tr(Z)·Id, tr Z)`.
pub fn ambient_change(z: &SquareMatrix) -> (LieElement, GaussianRational) {
    let d = z.dim();
    let t = z.trace();
    let a = &z.scale(&GaussianRational::from_i64(d as i64)) - &SquareMatrix::identity(d).scale(&t);
    (LieElement::from_matrix_unchecked(a), t)
}

/// `(A, t) ↦ Z = (A + t·Id)/(n+1)`.
pub fn ambient_change_inverse(a: &LieElement, t: &GaussianRational) -> SquareMatrix {
    let d = a.dim();
    (a.mat() + &SquareMatrix::identity(d).scale(t)).scale(&GaussianRational::ratio(1, d as i64))
}

/// `(A − n t Id)(A + t Id)`, the homogenized minimal-polynomial equations.
pub fn homogenized_equations(a: &LieElement, t: &GaussianRational) -> SquareMatrix {
    let d = a.dim();
    let n = GaussianRational::from_i64(d as i64 - 1);
    let id = SquareMatrix::identity(d);
    let left = a.mat() - &id.scale(&(&n * t));
    let right = a.mat() + &id.scale(t);
    &left * &right
}
