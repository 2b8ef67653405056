use super::*;
use crate::exact::GaussianRational;
use crate::orbit::{adjoint_point, default_sample_length, sample_sl_indexed, OrbitSpec};
use crate::sampling::{nonzero_gaussian, random_vector, sample_rng};
use num_traits::Zero;
use proptest::prelude::*;

fn vars(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn opts() -> GroebnerOptions {
    GroebnerOptions::default()
}

#[test]
fn single_division_step() {
    let names = vars(&["x", "y", "z"]);
    let order = MonomialOrder::grevlex(names.clone());
    let f = Polynomial::parse("x^2", &names).unwrap();
    let g = Polynomial::parse("x^2 + y*z - 1", &names).unwrap();
    let r = normal_form(&f, std::slice::from_ref(&g), &order).unwrap();
    assert_eq!(r, Polynomial::parse("1 - y*z", &names).unwrap());
    assert!(normal_form(&g, std::slice::from_ref(&g), &order).unwrap().is_zero());
    assert_eq!(normal_form(&r, &[g], &order).unwrap(), r);
}

#[test]
fn normal_form_rejects_other_rings() {
    let order = MonomialOrder::grevlex(vars(&["x", "y"]));
    let f = Polynomial::var(3, 0);
    assert!(matches!(
        normal_form(&f, &[Polynomial::var(2, 0)], &order),
        Err(crate::Error::VariableMismatch(_))
    ));
}

#[test]
fn textbook_grlex_basis() {
    // x^3 - 2xy, x^2 y - 2y^2 + x under grlex: reduced basis x^2, xy, y^2 - x/2
    let ideal = PolynomialIdeal::parse(&["x", "y"], &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]).unwrap();
    let gb = ideal.groebner(OrderKind::GradedLex, opts()).unwrap();
    let names = vars(&["x", "y"]);
    let expected: Vec<Polynomial> = ["y^2 - 1/2*x", "x*y", "x^2"]
        .iter()
        .map(|s| Polynomial::parse(s, &names).unwrap())
        .collect();
    let mut got = gb.clone();
    got.sort_by_key(|p| format!("{p:?}"));
    let mut want = expected;
    want.sort_by_key(|p| format!("{p:?}"));
    assert_eq!(got, want);
    assert!(is_groebner_basis(&gb, &ideal.order(OrderKind::GradedLex)).unwrap());
}

#[test]
fn lex_elimination_basis() {
    // x^2 + y^2 - 1, x - y under lex x > y: basis x - y, y^2 - 1/2
    let ideal = PolynomialIdeal::parse(&["x", "y"], &["x^2 + y^2 - 1", "x - y"]).unwrap();
    let gb = ideal.groebner(OrderKind::Lex, opts()).unwrap();
    let names = vars(&["x", "y"]);
    assert_eq!(gb.len(), 2);
    assert!(gb.contains(&Polynomial::parse("x - y", &names).unwrap()));
    assert!(gb.contains(&Polynomial::parse("y^2 - 1/2", &names).unwrap()));
}

#[test]
fn principal_ideal_basis_is_monic_generator() {
    let ideal = PolynomialIdeal::parse(&["x", "y"], &["3*x^2 - 6*y"]).unwrap();
    let gb = ideal.groebner(OrderKind::GradedRevLex, opts()).unwrap();
    assert_eq!(gb, vec![Polynomial::parse("x^2 - 2*y", &vars(&["x", "y"])).unwrap()]);
}

#[test]
fn pair_cap_aborts() {
    let ideal = PolynomialIdeal::parse(&["x", "y", "z"], &["x^2 - y", "x*y - z", "y*z - x"]).unwrap();
    let err = ideal.groebner(OrderKind::GradedRevLex, GroebnerOptions { pair_cap: 0 }).unwrap_err();
    assert_eq!(err, crate::Error::ResourceCap(0));
}

#[test]
fn sl2_orbit_ideal_is_the_quadric() {
    let ideal = orbit_ideal(&OrbitSpec::minimal_i64(1, &[1, -1]).unwrap()).unwrap();
    assert_eq!(ideal.variables(), &vars(&["a11", "a12", "a21"])[..]);
    let quadric = PolynomialIdeal::parse(&["a11", "a12", "a21"], &["a11^2 + a12*a21 - 1"]).unwrap();
    assert!(ideal_equal(&ideal, &quadric, OrderKind::GradedRevLex, opts()).unwrap());
}

#[test]
fn sl3_orbit_ideal_vanishes_on_orbit() {
    let spec = OrbitSpec::minimal_default(2);
    let ideal = orbit_ideal(&spec).unwrap();
    assert_eq!(ideal.generators().len(), 9);
    assert!(ideal.generators().iter().all(|g| g.total_degree() == Some(2)));
    for idx in 0..20 {
        let g = sample_sl_indexed(2, 3, idx, default_sample_length(2));
        let a = adjoint_point(&g, &spec).unwrap();
        let mut point = a.mat().entries().to_vec();
        point.pop();
        assert!(ideal.generators().iter().all(|p| p.eval(&point).is_zero()));
    }
}

#[test]
fn homogenize_quadric() {
    let ideal = PolynomialIdeal::parse(&["x", "y", "z"], &["x^2 + y*z - 1"]).unwrap();
    let h = ideal.homogenize("t", opts()).unwrap();
    let expected = PolynomialIdeal::parse(&["x", "y", "z", "t"], &["x^2 + y*z - t^2"]).unwrap();
    assert!(ideal_equal(&h, &expected, OrderKind::GradedRevLex, opts()).unwrap());
    assert!(h.homogenize("t", opts()).is_err());
}

#[test]
fn homogenization_needs_a_graded_basis() {
    // twisted cubic: raw homogenization misses y^2 - x z
    let ideal = PolynomialIdeal::parse(&["x", "y", "z"], &["y - x^2", "z - x^3"]).unwrap();
    let names = vars(&["x", "y", "z", "t"]);
    let witness = Polynomial::parse("y^2 - x*z", &names).unwrap();
    let true_hom = ideal.homogenize("t", opts()).unwrap();
    let naive = ideal.homogenize_generators("t").unwrap();
    assert!(true_hom.contains(&witness, opts()).unwrap());
    assert!(!naive.contains(&witness, opts()).unwrap());
    // roundtrip: t := 1 gives back I
    let back = true_hom.dehomogenize("t").unwrap();
    assert!(ideal_equal(&back, &ideal, OrderKind::GradedRevLex, opts()).unwrap());
}

#[test]
fn homogeneous_input_is_unchanged() {
    let ideal = PolynomialIdeal::parse(&["x", "y"], &["x^2 - y^2", "x*y"]).unwrap();
    let h = ideal.homogenize("t", opts()).unwrap();
    let lifted = PolynomialIdeal::parse(&["x", "y", "t"], &["x^2 - y^2", "x*y"]).unwrap();
    assert!(ideal_equal(&h, &lifted, OrderKind::GradedRevLex, opts()).unwrap());
}

#[test]
fn ideal_equality_basics() {
    let a = PolynomialIdeal::parse(&["x", "y"], &["x - y", "x^2 + y"]).unwrap();
    let b = PolynomialIdeal::parse(&["x", "y"], &["2*x^2 + 2*y", "3*y - 3*x"]).unwrap();
    assert!(ideal_equal(&a, &b, OrderKind::GradedRevLex, opts()).unwrap());
    let x = PolynomialIdeal::parse(&["x", "y"], &["x"]).unwrap();
    let x2 = PolynomialIdeal::parse(&["x", "y"], &["x^2"]).unwrap();
    assert!(!ideal_equal(&x, &x2, OrderKind::GradedRevLex, opts()).unwrap());
    let other = PolynomialIdeal::parse(&["x", "z"], &["x"]).unwrap();
    assert!(ideal_equal(&x, &other, OrderKind::Lex, opts()).is_err());
}

#[test]
fn minors_ideal_small_cases() {
    let m1 = minors_ideal(1);
    assert_eq!(m1.generators().len(), 1);
    assert_eq!(m1.to_strings(OrderKind::Lex), vec!["z11*z22 - z12*z21".to_string()]);
    assert_eq!(minors_ideal(2).generators().len(), 9);
}

#[test]
fn sl2_pullback_is_a_multiple_of_the_minor() {
    let pb = segre_pullback(1, opts()).unwrap();
    assert!(pb.exact_homogenization);
    let names = segre_variable_names(2);
    let expected = Polynomial::parse("-4*z11*z22 + 4*z12*z21", &names).unwrap();
    assert_eq!(pb.pulled_back.generators(), &[expected]);
    assert!(segre_ideals_agree(1, opts()).unwrap());
}

#[test]
fn identity_substitution_and_unassigned() {
    let ideal = PolynomialIdeal::parse(&["x", "y"], &["x^2 - y"]).unwrap();
    let id = LinearSubstitution::identity(vars(&["x", "y"]));
    assert_eq!(substitute_linear(&ideal, &id).unwrap(), ideal);
    let mut partial = LinearSubstitution::new(vars(&["x", "y"]), vars(&["u"]));
    partial.assign_str("x", "2*u + 1").unwrap();
    assert_eq!(
        substitute_linear(&ideal, &partial).unwrap_err(),
        crate::Error::UnassignedVariable("y".into())
    );
    assert!(partial.assign_str("y", "u^2").is_err());
}

#[test]
fn pulled_back_quadric_vanishes_on_rank_one() {
    let ideal = PolynomialIdeal::parse(&["a11", "a12", "a21", "t"], &["a11^2 + a12*a21 - t^2"]).unwrap();
    let pulled = substitute_linear(&ideal, &ambient_pullback(1)).unwrap();
    for idx in 0..20 {
        let mut rng = sample_rng(11, idx);
        let v = random_vector(&mut rng, 2);
        let e = random_vector(&mut rng, 2);
        let point: Vec<GaussianRational> = (0..4).map(|k| &v[k / 2] * &e[k % 2]).collect();
        assert!(pulled.generators()[0].eval(&point).is_zero());
    }
}

#[test]
fn substitutions_compose() {
    let xy = vars(&["x", "y"]);
    let uv = vars(&["u", "v"]);
    let mut first = LinearSubstitution::new(xy.clone(), uv.clone());
    first.assign_str("x", "u + 2*v").unwrap();
    first.assign_str("y", "u - v + 1").unwrap();
    let mut second = LinearSubstitution::new(uv.clone(), xy.clone());
    second.assign_str("u", "3*x - y").unwrap();
    second.assign_str("v", "x").unwrap();
    let both = second.after(&first).unwrap();
    for g in ["x^2*y - 3", "x*y + y^2 - x"] {
        let p = Polynomial::parse(g, &xy).unwrap();
        let step = second.apply(&first.apply(&p).unwrap()).unwrap();
        assert_eq!(both.apply(&p).unwrap(), step);
    }
}

#[test]
fn ideal_file_roundtrip() {
    let text = r#"{"variables":["x","y","z"],"generators":["x^2 + y*z - 1"]}"#;
    let file = IdealFile::from_json(text).unwrap();
    let ideal = file.to_ideal().unwrap();
    let back = ideal.to_file(OrderKind::GradedRevLex);
    assert_eq!(back.generators, vec!["x^2 + y*z - 1".to_string()]);
    let bad = r#"{"variables":["x"],"generators":["0.5*x"]}"#;
    assert!(IdealFile::from_json(bad).unwrap().to_ideal().is_err());
}

#[test]
fn cached_basis_is_reused() {
    let mut ideal = PolynomialIdeal::parse(&["x", "y"], &["x^2 - y", "x*y - 1"]).unwrap();
    assert!(ideal.cached_basis().is_none());
    let gb = ideal.ensure_groebner(OrderKind::GradedRevLex, opts()).unwrap().to_vec();
    assert!(is_groebner_basis(&gb, &ideal.order(OrderKind::GradedRevLex)).unwrap());
    assert_eq!(ideal.groebner(OrderKind::GradedRevLex, opts()).unwrap(), gb);
}

fn small_poly_strategy() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -4i64..5), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn basis_is_independent_of_generator_order(
        a in small_poly_strategy(),
        b in small_poly_strategy(),
        c in small_poly_strategy(),
    ) {
        let mk = |t: &Vec<(Vec<u32>, i64)>| Polynomial::from_terms(
            3,
            t.iter().map(|(e, c)| (e.clone(), num_rational::BigRational::from_integer((*c).into()))),
        );
        let names = vars(&["x", "y", "z"]);
        let gens = vec![mk(&a), mk(&b), mk(&c)];
        let mut rev = gens.clone();
        rev.reverse();
        let i1 = PolynomialIdeal::new(names.clone(), gens).unwrap();
        let i2 = PolynomialIdeal::new(names, rev).unwrap();
        let g1 = i1.groebner(OrderKind::GradedRevLex, opts()).unwrap();
        let g2 = i2.groebner(OrderKind::GradedRevLex, opts()).unwrap();
        prop_assert_eq!(&g1, &g2);
        prop_assert!(is_groebner_basis(&g1, &i1.order(OrderKind::GradedRevLex)).unwrap());
        prop_assert!(ideal_equal(&i1, &i2, OrderKind::GradedRevLex, opts()).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent(a in small_poly_strategy(), b in small_poly_strategy()) {
        let mk = |t: &Vec<(Vec<u32>, i64)>| Polynomial::from_terms(
            3,
            t.iter().map(|(e, c)| (e.clone(), num_rational::BigRational::from_integer((*c).into()))),
        );
        let order = MonomialOrder::grevlex(vars(&["x", "y", "z"]));
        let g = vec![mk(&b)];
        let r = normal_form(&mk(&a), &g, &order).unwrap();
        prop_assert_eq!(normal_form(&r, &g, &order).unwrap(), r);
    }
}

#[test]
fn gaussian_eval_sanity() {
    let mut rng = sample_rng(1, 1);
    let c = nonzero_gaussian(&mut rng);
    let p = Polynomial::var(1, 0);
    assert_eq!(p.eval(std::slice::from_ref(&c)), c);
}

#[test]
fn segre_agreement_sl3_and_sl4() {
    for n in [2, 3] {
        let pb = segre_pullback(n, opts()).unwrap();
        assert!(pb.exact_homogenization);
        // the homogenized basis has as many elements as there are minors
        assert_eq!(pb.homogenized.generators().len(), minors_ideal(n).generators().len());
        assert!(segre_ideals_agree(n, opts()).unwrap());
    }
}
