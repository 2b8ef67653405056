//! Fibers of `f_H(A) = 2x` on the `sl(2)` orbit `x² + yz = 1`, where
//! `A = [[x, y], [z, −x]]` and `H = diag(1, −1)`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, SquareMatrix};
use crate::polyideal::{Polynomial, PolynomialIdeal};
use crate::segre::ProjectivePoint;

/// The level set `f = c` and its closure in `P³` with coordinates `[x:y:z:t]`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberDescription {
    pub level: BigRational,
    /// Over `(x, y, z)`: `x − c/2` and `x² + yz − 1`.
    pub affine: PolynomialIdeal,
    /// Over `(x, y, z, t)`: `x − (c/2)t` and `x² + yz − t²`.
    pub closure: PolynomialIdeal,
    /// The points at infinity, `t = 0`.
    pub boundary_points: Vec<ProjectivePoint>,
    /// `c ≠ ±2`; at `c = ±2` the fiber passes through the critical point `±H₀`.
    pub smooth: bool,
    /// The critical point `(x, y, z)` on a singular fiber.
    pub critical_point: Option<[BigRational; 3]>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `1 − c²/4`: the fiber is `yz = k` at `x = c/2`.
fn conic_constant(c: &BigRational) -> BigRational {
    q(1) - c * c / q(4)
}

pub fn sl2_fiber(c: &GaussianRational) -> Result<FiberDescription> {
    if !c.is_real() {
        return Err(Error::Invalid("fiber level must be rational".into()));
    }
    let c = c.re().clone();
    let half = &c / q(2);
    let affine_vars = ["x", "y", "z"];
    let x = Polynomial::var(3, 0);
    let quadric = PolynomialIdeal::parse(&affine_vars, &["x^2 + y*z - 1"])?;
    let level_eq = &x - &Polynomial::constant(3, half.clone());
    let affine = PolynomialIdeal::new(
        affine_vars.iter().map(|s| s.to_string()).collect(),
        vec![level_eq, quadric.generators()[0].clone()],
    )?;
    let closure_vars = ["x", "y", "z", "t"];
    let level_h = &Polynomial::var(4, 0) - &Polynomial::var(4, 3).scale(&half);
    let quadric_h = Polynomial::parse("x^2 + y*z - t^2", &closure_vars.map(String::from))?;
    let closure = PolynomialIdeal::new(closure_vars.map(String::from).to_vec(), vec![level_h, quadric_h])?;
    let boundary_points = vec![
        ProjectivePoint::from_i64(&[0, 1, 0, 0])?,
        ProjectivePoint::from_i64(&[0, 0, 1, 0])?,
    ];
    let smooth = !conic_constant(&c).is_zero();
    let critical_point = (!smooth).then(|| [half.clone(), q(0), q(0)]);
    Ok(FiberDescription {
        level: c,
        affine,
        closure,
        boundary_points,
        smooth,
        critical_point,
    })
}

impl FiberDescription {
    /// Every closure equation vanishes at the projective point.
    pub fn closure_contains(&self, p: &ProjectivePoint) -> bool {
        self.closure
            .generators()
            .iter()
            .all(|g| g.eval(p.coords()).is_zero())
    }

    pub fn affine_contains(&self, point: &[GaussianRational; 3]) -> bool {
        self.affine.generators().iter().all(|g| g.eval(point).is_zero())
    }

    /// The matrix `[[x, y], [z, −x]]` of an affine point.
    pub fn as_matrix(point: &[GaussianRational; 3]) -> SquareMatrix {
        SquareMatrix::from_rows(vec![
            vec![point[0].clone(), point[1].clone()],
            vec![point[2].clone(), -&point[0]],
        ])
        .expect("2x2")
    }
}

/// Rank of the Jacobian of the affine fiber equations at a point.
pub fn fiber_jacobian_rank(fiber: &FiberDescription, point: &[GaussianRational; 3]) -> usize {
    let rows: Vec<Vec<GaussianRational>> = fiber
        .affine
        .generators()
        .iter()
        .map(|g| (0..3).map(|k| g.derivative(k).eval(point)).collect())
        .collect();
    let mut padded = rows;
    padded.push(vec![GaussianRational::zero(); 3]);
    SquareMatrix::from_rows(padded).expect("3x3").rank()
}

/// `[s:r] ↦ [(c/2)sr : s² : (1 − c²/4)r² : sr]`, the conic closure of a
/// smooth fiber; for `c = 0` this is `[0 : s² : r² : sr]`.
pub fn conic_parametrization(
    fiber: &FiberDescription,
    s: &GaussianRational,
    r: &GaussianRational,
) -> Result<ProjectivePoint> {
    let half = GaussianRational::from_real(&fiber.level / q(2));
    let k = GaussianRational::from_real(conic_constant(&fiber.level));
    let sr = s * r;
    ProjectivePoint::new(vec![&half * &sr, s * s, &k * &(r * r), sr])
}

/// A preimage `[s:r]` of a closure point: `[y : t]` when `y ≠ 0`, else `[0:1]`.
pub fn conic_preimage(p: &ProjectivePoint) -> (GaussianRational, GaussianRational) {
    let c = p.coords();
    if c[1].is_zero() {
        (GaussianRational::zero(), GaussianRational::one())
    } else {
        (c[1].clone(), c[3].clone())
    }
}
