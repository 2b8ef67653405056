//! Exact multivariate polynomials over ℚ, Buchberger Gröbner bases, ideal
//! homogenization, and the comparison of the homogenized orbit ideal with
//! the ideal of 2×2 minors.

mod groebner;
mod ideal;
mod order;
mod polymatrix;
mod polynomial;

pub use groebner::{
    groebner_basis, is_groebner_basis, normal_form, s_polynomial, GroebnerOptions, DEFAULT_PAIR_CAP,
};
pub use ideal::{
    ambient_pullback, ideal_equal, minors_ideal, orbit_ideal, segre_ideals_agree, segre_pullback,
    segre_variable_names, sl_variable_names, substitute_linear, symbolic_sl_matrix, IdealFile,
    LinearSubstitution, PolynomialIdeal, SegrePullback,
};
pub use order::{MonomialOrder, OrderKind};
pub use polymatrix::PolyMatrix;
pub use polynomial::{Exponents, Polynomial};

#[cfg(test)]
mod tests;
