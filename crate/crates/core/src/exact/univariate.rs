use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use super::matrix::SquareMatrix;
use super::scalar::GaussianRational;

/// Univariate polynomial over ℚ(i), coefficients lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial {
    coefficients: Vec<GaussianRational>,
}

impl UnivariatePolynomial {
    /// Trailing zero coefficients are dropped, so the zero polynomial is `[]`.
    pub fn new(mut coefficients: Vec<GaussianRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    /// `∏ (x − r)` over the given roots.
    pub fn from_roots(roots: &[GaussianRational]) -> Self {
        roots.iter().fold(Self::new(vec![GaussianRational::one()]), |acc, r| {
            &acc * &Self::new(vec![-r, GaussianRational::one()])
        })
    }

    pub fn coefficients(&self) -> &[GaussianRational] {
        &self.coefficients
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coefficients.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        self.coefficients
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &SquareMatrix) -> SquareMatrix {
        let d = a.dim();
        let mut acc = SquareMatrix::zeros(d);
        for c in self.coefficients.iter().rev() {
            acc = &(&acc * a) + &SquareMatrix::identity(d).scale(c);
        }
        acc
    }
}

impl<'a> Mul<&'a UnivariatePolynomial> for &'a UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn mul(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        if self.coefficients.is_empty() || rhs.coefficients.is_empty() {
            return UnivariatePolynomial::new(Vec::new());
        }
        let mut out =
            vec![GaussianRational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UnivariatePolynomial::new(out)
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{k}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_linear_factors() {
        let p = UnivariatePolynomial::from_roots(&[2.into(), (-1).into()]);
        // (x − 2)(x + 1) = x² − x − 2
        assert_eq!(
            p.coefficients(),
            &[(-2).into(), (-1).into(), GaussianRational::one()]
        );
        assert_eq!(p.degree(), Some(2));
        assert!(p.eval(&2.into()).is_zero());
        assert!(p.eval(&(-1).into()).is_zero());
    }

    #[test]
    fn zero_polynomial_is_trimmed() {
        let z = UnivariatePolynomial::new(vec![GaussianRational::zero(); 3]);
        assert_eq!(z.degree(), None);
        assert_eq!(z.to_string(), "0");
    }
}
