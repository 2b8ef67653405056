//! The Lie-theoretic layer on `sl(n+1)`.
//!
//! Bilinear forms, `ad` and `Ad`, nilpotent exponentials, the Weyl group of
//! type A, nilradicals of diagonal elements, and the Hermitian form
//! `ℋ_τ(X, Y) = −⟨X, τY⟩` whose imaginary part `Ω` is the symplectic form.
//!
//! `τ` is fixed to `Z ↦ −Z*`, the conjugation of the compact real form
//! `su(n+1)`. Operator matrices are written on the basis returned by
//! [`sl_basis`].

mod elements;
mod forms;
mod roots;

pub use elements::{GroupElement, LieElement, WeylElement};
pub use forms::{
    ad_operator, bilinear_form, hermitian_form, omega, omega_gram, real_span_rank,
    real_tangent_spanning_set, sl_basis, sl_coordinates, su_basis, FormSpec,
};
pub use roots::{
    centralizer_dim, exp_ad_nilpotent, exp_nilpotent, nilradical_basis, nilradical_positions,
    weyl_orbit_points, RootSign,
};

pub(crate) use roots::{real_diagonal, require_in_span};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{GaussianRational, SquareMatrix};
    use crate::sampling::{random_trace_zero, sample_rng};
    use num_traits::{Signed, Zero};
    use proptest::prelude::*;

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from_i64(n)
    }

    fn lie(rows: &[&[i64]]) -> LieElement {
        LieElement::new(SquareMatrix::from_i64_rows(rows).unwrap()).unwrap()
    }

    fn e(d: usize, i: usize, j: usize) -> LieElement {
        LieElement::new(SquareMatrix::unit(d, i, j)).unwrap()
    }

    fn sl2_h0() -> LieElement {
        lie(&[&[1, 0], &[0, -1]])
    }

    fn random_lie(seed: u64, idx: u64, dim: usize) -> LieElement {
        LieElement::new(random_trace_zero(&mut sample_rng(seed, idx), dim)).unwrap()
    }

    /// Brute-force Killing form: trace of the composed ad operators.
    fn killing_by_ad(x: &LieElement, y: &LieElement) -> GaussianRational {
        (&ad_operator(x) * &ad_operator(y)).trace()
    }

    #[test]
    fn trace_form_on_sl2() {
        let h0 = sl2_h0();
        assert_eq!(bilinear_form(&h0, &h0, &FormSpec::trace()).unwrap(), q(2));
        assert_eq!(bilinear_form(&e(2, 0, 1), &e(2, 1, 0), &FormSpec::trace()).unwrap(), q(1));
    }

    #[test]
    fn killing_scale_matches_ad_traces() {
        let h0 = sl2_h0();
        assert_eq!(killing_by_ad(&h0, &h0), q(8));
        assert_eq!(bilinear_form(&h0, &h0, &FormSpec::killing(1)).unwrap(), q(8));
        for n in 1..=3 {
            let d = n + 1;
            for idx in 0..4 {
                let x = random_lie(11, idx, d);
                let y = random_lie(12, idx, d);
                assert_eq!(
                    killing_by_ad(&x, &y),
                    bilinear_form(&x, &y, &FormSpec::killing(n)).unwrap()
                );
            }
        }
    }

    #[test]
    fn bilinear_form_rejects_dimension_mismatch() {
        assert!(bilinear_form(&sl2_h0(), &LieElement::minimal_h0(2), &FormSpec::trace()).is_err());
        assert!(FormSpec::new(GaussianRational::zero()).is_err());
    }

    #[test]
    fn ad_of_h0_scales_e_by_two() {
        // bracket oracle: [diag(1,-1), E] = 2E
        let h0 = sl2_h0();
        let bracket = h0.bracket(&e(2, 0, 1));
        assert_eq!(bracket, e(2, 0, 1).scale(&q(2)));
        let ad = ad_operator(&h0);
        // basis order: E_01, E_10, H
        assert_eq!(ad.col(0), vec![q(2), q(0), q(0)]);
        assert_eq!(ad.col(1), vec![q(0), q(-2), q(0)]);
        assert_eq!(ad.col(2), vec![q(0), q(0), q(0)]);
    }

    #[test]
    fn ad_x_kills_x() {
        for idx in 0..5 {
            let x = random_lie(3, idx, 3);
            let image = ad_operator(&x).mul_vec(&sl_coordinates(&x));
            assert!(image.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn ad_spectrum_of_minimal_h0_in_sl3() {
        let h0 = LieElement::minimal_h0(2);
        let ad = ad_operator(&h0);
        assert!(ad.is_diagonal());
        // oracle: α_ij(H0) = h_i − h_j over all E_ij, zero on the Cartan
        let h = [2i64, -1, -1];
        let mut expected: Vec<i64> = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    expected.push(h[i] - h[j]);
                }
            }
        }
        expected.extend([0, 0]);
        let mut got: Vec<GaussianRational> = ad.diag();
        got.sort();
        let mut expected: Vec<GaussianRational> = expected.into_iter().map(q).collect();
        expected.sort();
        assert_eq!(got, expected);
        let count = |v: i64| got.iter().filter(|x| **x == q(v)).count();
        assert_eq!((count(3), count(-3), count(0)), (2, 2, 4));
    }

    #[test]
    fn coordinates_roundtrip() {
        for idx in 0..5 {
            let x = random_lie(5, idx, 4);
            let coords = sl_coordinates(&x);
            let basis = sl_basis(4);
            let rebuilt = basis
                .iter()
                .zip(&coords)
                .fold(LieElement::zero(4), |acc, (b, c)| acc.add(&b.scale(c)));
            assert_eq!(rebuilt, x);
        }
    }

    #[test]
    fn exp_ad_examples() {
        let h0 = sl2_h0();
        let ee = e(2, 0, 1);
        let ff = e(2, 1, 0);
        assert_eq!(exp_ad_nilpotent(&LieElement::zero(2), &h0).unwrap(), h0);
        for x in [GaussianRational::from_i64(1), GaussianRational::ratio(3, 2)] {
            // two-term oracle: ad(E)²H0 = 0
            let got = exp_ad_nilpotent(&ee.scale(&x), &h0).unwrap();
            let expected = h0.sub(&ee.scale(&(&x * &q(2))));
            assert_eq!(got, expected);
        }
        // three-term oracle at y = 1: E − H0 − F
        let got = exp_ad_nilpotent(&ff, &ee).unwrap();
        assert_eq!(got, ee.sub(&h0).sub(&ff));
    }

    #[test]
    fn exp_ad_rejects_non_nilpotent() {
        assert!(matches!(
            exp_ad_nilpotent(&sl2_h0(), &e(2, 0, 1)),
            Err(crate::Error::NotNilpotent { .. })
        ));
    }

    #[test]
    fn weyl_orbit_examples() {
        let pts = weyl_orbit_points(&sl2_h0()).unwrap();
        assert_eq!(pts, vec![sl2_h0(), sl2_h0().scale(&q(-1))]);
        assert_eq!(weyl_orbit_points(&LieElement::minimal_h0(2)).unwrap().len(), 3);
        let regular = LieElement::diagonal(&[q(3), q(-1), q(-2)]).unwrap();
        let pts = weyl_orbit_points(&regular).unwrap();
        assert_eq!(pts.len(), 6);
        for (a, p) in pts.iter().enumerate() {
            assert_eq!(p.mat().minimal_polynomial(), regular.mat().minimal_polynomial());
            for b in pts.iter().skip(a + 1) {
                assert_ne!(p, b);
            }
        }
        assert!(matches!(weyl_orbit_points(&e(2, 0, 1)), Err(crate::Error::NotDiagonal)));
    }

    #[test]
    fn weyl_orbit_sizes_are_multinomial() {
        for n in 1..=6usize {
            let pts = weyl_orbit_points(&LieElement::minimal_h0(n)).unwrap();
            assert_eq!(pts.len(), n + 1);
        }
        let h = LieElement::diagonal(&[q(1), q(1), q(-1), q(-1)]).unwrap();
        assert_eq!(weyl_orbit_points(&h).unwrap().len(), 6);
    }

    #[test]
    fn weyl_transposition_acts_on_diagonal() {
        let h0 = LieElement::minimal_h0(2);
        let w = WeylElement::transposition(3, 0, 1);
        assert_eq!(w.act(&h0).mat().diag(), vec![q(-1), q(2), q(-1)]);
        assert_eq!(w.group_representative().mat().det(), q(1));
        assert!(WeylElement::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn nilradical_examples() {
        assert_eq!(nilradical_basis(&sl2_h0(), RootSign::Positive).unwrap(), vec![e(2, 0, 1)]);
        let w_h0 = WeylElement::transposition(3, 0, 1).act(&LieElement::minimal_h0(2));
        // row 2 (index 1), off-diagonal
        assert_eq!(
            nilradical_positions(&w_h0, RootSign::Positive).unwrap(),
            vec![(1, 0), (1, 2)]
        );
        assert_eq!(
            nilradical_positions(&w_h0, RootSign::Negative).unwrap(),
            vec![(0, 1), (2, 1)]
        );
    }

    #[test]
    fn root_count_identity() {
        for n in 2..=3usize {
            let d = n + 1;
            let cases = [
                LieElement::minimal_h0(n),
                weyl_orbit_points(&LieElement::minimal_h0(n)).unwrap()[1].clone(),
                LieElement::diagonal(
                    &(0..d).map(|k| q(2 * k as i64 - n as i64)).collect::<Vec<_>>(),
                )
                .unwrap(),
            ];
            for h in cases {
                let plus = nilradical_basis(&h, RootSign::Positive).unwrap().len();
                let minus = nilradical_basis(&h, RootSign::Negative).unwrap().len();
                assert_eq!(plus + minus + centralizer_dim(&h).unwrap(), d * d - 1);
            }
        }
    }

    #[test]
    fn omega_examples() {
        let ee = e(2, 0, 1);
        let i_e = ee.scale(&GaussianRational::i());
        let form = FormSpec::trace();
        assert_eq!(hermitian_form(&ee, &ee, &form).unwrap(), q(1));
        assert_eq!(omega(&i_e, &ee, &form).unwrap(), q(1).re().clone());
        assert!(omega(&ee, &ee, &form).unwrap().is_zero());
        // Lagrangian oracle on su(2) at H0
        let h0 = sl2_h0();
        let tangents: Vec<LieElement> = su_basis(2).iter().map(|u| u.bracket(&h0)).collect();
        for a in &tangents {
            for b in &tangents {
                assert!(omega(a, b, &form).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn omega_gram_has_full_rank_on_minimal_orbit_tangent() {
        let h0 = LieElement::minimal_h0(2);
        let tangent = real_tangent_spanning_set(&h0);
        assert_eq!(real_span_rank(&tangent), 8);
        let gram = omega_gram(&tangent, &FormSpec::trace()).unwrap();
        assert_eq!(gram.rank(), 8);
    }

    #[test]
    fn exp_nilpotent_inverts() {
        let x = SquareMatrix::from_i64_rows(&[&[0, 2, 1], &[0, 0, 3], &[0, 0, 0]]).unwrap();
        let ex = exp_nilpotent(&x).unwrap();
        let emx = exp_nilpotent(&-&x).unwrap();
        assert_eq!(&ex * &emx, SquareMatrix::identity(3));
        assert!(exp_nilpotent(&SquareMatrix::identity(2)).is_err());
    }

    fn random_nilpotent(seed: u64, d: usize) -> LieElement {
        // strictly upper triangular, conjugated by a random transvection
        let mut rng = sample_rng(seed, 99);
        let mut m = crate::sampling::random_matrix(&mut rng, d);
        for i in 0..d {
            for j in 0..=i {
                m[(i, j)] = GaussianRational::zero();
            }
        }
        let c = crate::sampling::nonzero_gaussian(&mut rng);
        let g = GroupElement::transvection(d, d - 1, 0, &c);
        g.ad(&LieElement::new(m).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn form_is_symmetric_bilinear_and_ad_invariant(seed in any::<u64>(), n in 1usize..=3) {
            let d = n + 1;
            let x = random_lie(seed, 0, d);
            let y = random_lie(seed, 1, d);
            let z = random_lie(seed, 2, d);
            let form = FormSpec::trace();
            let c = crate::sampling::small_gaussian(&mut sample_rng(seed, 3));
            let lhs = bilinear_form(&x.scale(&c).add(&z), &y, &form).unwrap();
            let rhs = &(&c * &bilinear_form(&x, &y, &form).unwrap()) + &bilinear_form(&z, &y, &form).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(bilinear_form(&x, &y, &form).unwrap(), bilinear_form(&y, &x, &form).unwrap());
            let inv = &bilinear_form(&z.bracket(&x), &y, &form).unwrap()
                + &bilinear_form(&x, &z.bracket(&y), &form).unwrap();
            prop_assert!(inv.is_zero());
        }

        #[test]
        fn exp_ad_is_automorphism_and_conjugation(seed in any::<u64>(), n in 1usize..=3) {
            let d = n + 1;
            let x = random_nilpotent(seed, d);
            let y = random_lie(seed, 1, d);
            let z = random_lie(seed, 2, d);
            let lhs = exp_ad_nilpotent(&x, &y.bracket(&z)).unwrap();
            let rhs = exp_ad_nilpotent(&x, &y).unwrap().bracket(&exp_ad_nilpotent(&x, &z).unwrap());
            prop_assert_eq!(&lhs, &rhs);
            let ex = exp_nilpotent(x.mat()).unwrap();
            let ex_inv = exp_nilpotent(&-x.mat()).unwrap();
            let conj = &(&ex * z.mat()) * &ex_inv;
            let via_series = exp_ad_nilpotent(&x, &z).unwrap();
            prop_assert_eq!(via_series.mat(), &conj);
        }

        #[test]
        fn hermitian_form_is_conjugate_symmetric_and_positive(seed in any::<u64>(), n in 1usize..=3) {
            let d = n + 1;
            let x = random_lie(seed, 0, d);
            let y = random_lie(seed, 1, d);
            let form = FormSpec::trace();
            prop_assert_eq!(
                hermitian_form(&x, &y, &form).unwrap(),
                hermitian_form(&y, &x, &form).unwrap().conj()
            );
            if !x.is_zero() {
                let hxx = hermitian_form(&x, &x, &form).unwrap();
                prop_assert!(hxx.is_real() && hxx.re().is_positive());
                let ix = x.scale(&GaussianRational::i());
                prop_assert!(!omega(&ix, &x, &form).unwrap().is_zero());
            }
        }
    }
}
