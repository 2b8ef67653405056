use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::elements::LieElement;
use crate::error::{Error, Result};
use crate::exact::{GaussianRational, SquareMatrix};

/// Which nilradical `𝔫^±` of a diagonal element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootSign {
    Positive,
    Negative,
}

impl RootSign {
    pub fn label(self) -> &'static str {
        match self {
            RootSign::Positive => "positive",
            RootSign::Negative => "negative",
        }
    }
}

/// Real diagonal of a diagonal element; errors on off-diagonal entries or
/// non-real diagonal entries (root signs need an ordering).
pub(crate) fn real_diagonal(h: &LieElement) -> Result<Vec<BigRational>> {
    if !h.mat().is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    h.mat()
        .diag()
        .into_iter()
        .map(|d| {
            if d.is_real() {
                Ok(d.re().clone())
            } else {
                Err(Error::Invalid(format!("diagonal entry {d} is not real")))
            }
        })
        .collect()
}

/// Finite matrix exponential `Σ X^k / k!` of a nilpotent matrix.
pub fn exp_nilpotent(x: &SquareMatrix) -> Result<SquareMatrix> {
    let d = x.dim();
    let mut term = SquareMatrix::identity(d);
    let mut acc = SquareMatrix::identity(d);
    for k in 1..=d {
        term = (&term * x).scale(&GaussianRational::ratio(1, k as i64));
        if term.is_zero() {
            return Ok(acc);
        }
        acc = &acc + &term;
    }
    Err(Error::NotNilpotent { steps: d })
}

fn require_nilpotent(x: &LieElement) -> Result<()> {
    // ad(X) is nilpotent iff X is nilpotent (sl has trivial center), and a
    // nilpotent d×d matrix satisfies X^d = 0; the cap stays below (n+1)².
    let d = x.dim();
    let mut p = x.mat().clone();
    for _ in 1..d {
        if p.is_zero() {
            return Ok(());
        }
        p = &p * x.mat();
    }
    if p.is_zero() {
        Ok(())
    } else {
        Err(Error::NotNilpotent { steps: d })
    }
}

/// `e^{ad X} Z = Σ_k ad(X)^k Z / k!`, a finite sum for nilpotent `X`.
pub fn exp_ad_nilpotent(x: &LieElement, z: &LieElement) -> Result<LieElement> {
    x.mat().check_same_dim(z.mat())?;
    require_nilpotent(x)?;
    let mut term = z.clone();
    let mut acc = z.clone();
    let cap = x.dim() * x.dim();
    for k in 1..=cap {
        term = x.bracket(&term).scale(&GaussianRational::ratio(1, k as i64));
        if term.is_zero() {
            return Ok(acc);
        }
        acc = acc.add(&term);
    }
    Err(Error::NotNilpotent { steps: cap })
}

/// Distinct diagonal matrices obtained by permuting the diagonal of `h0`:
/// the Weyl orbit `𝒲·H₀`, of size `|𝒲| / |𝒲_{H₀}|`. Output is in
/// lexicographically decreasing order of the diagonal, so `h0` sorted
/// decreasingly comes first.
pub fn weyl_orbit_points(h0: &LieElement) -> Result<Vec<LieElement>> {
    let mut diag = real_diagonal(h0)?;
    diag.sort_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    loop {
        let entries: Vec<GaussianRational> =
            diag.iter().cloned().map(GaussianRational::from_real).collect();
        out.push(LieElement::from_matrix_unchecked(SquareMatrix::diagonal(&entries)));
        if !prev_permutation(&mut diag) {
            break;
        }
    }
    Ok(out)
}

/// Steps to the previous permutation in lexicographic order; handles
/// repeated values, so every distinct arrangement is visited once.
fn prev_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] <= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] >= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Positions `(i, j)` (0-based) of the root spaces `E_ij` of `𝔫^±_{H₀}`,
/// i.e. with `α_ij(H₀) = h_i − h_j` positive or negative.
pub fn nilradical_positions(h0: &LieElement, sign: RootSign) -> Result<Vec<(usize, usize)>> {
    let diag = real_diagonal(h0)?;
    let d = diag.len();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            let alpha = &diag[i] - &diag[j];
            let keep = match sign {
                RootSign::Positive => alpha.is_positive(),
                RootSign::Negative => alpha.is_negative(),
            };
            if keep {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

pub fn nilradical_basis(h0: &LieElement, sign: RootSign) -> Result<Vec<LieElement>> {
    let d = h0.dim();
    Ok(nilradical_positions(h0, sign)?
        .into_iter()
        .map(|(i, j)| LieElement::from_matrix_unchecked(SquareMatrix::unit(d, i, j)))
        .collect())
}

/// Complex dimension of the centralizer `𝔷(H₀)` in `sl`: the Cartan plus the
/// root spaces with `α(H₀) = 0`.
pub fn centralizer_dim(h0: &LieElement) -> Result<usize> {
    let diag = real_diagonal(h0)?;
    let d = diag.len();
    let zero_roots = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && (&diag[i] - &diag[j]).is_zero())
        .count();
    Ok(d - 1 + zero_roots)
}

/// Checks that `x` is supported on the given root positions.
pub(crate) fn require_in_span(
    x: &LieElement,
    positions: &[(usize, usize)],
    sign: RootSign,
) -> Result<()> {
    let d = x.dim();
    let outside: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .filter(|p| !x.mat()[*p].is_zero() && !positions.contains(p))
        .collect();
    if outside.is_empty() {
        Ok(())
    } else {
        Err(Error::OutsideNilradical {
            sign: sign.label(),
            positions: outside,
        })
    }
}
