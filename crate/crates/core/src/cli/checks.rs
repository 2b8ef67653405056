//! The `verify` checks. Each one draws its samples from `(seed, index)` only,
//! so reports do not depend on evaluation order.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{format_rational, GaussianRational, SquareMatrix};
use crate::lgfib::{
    chart_jet, chart_potential_poly, conic_parametrization, conic_preimage, critical_points,
    fiber_jacobian_rank, hessian_at_critical, potential_f, rational_potential_r, sl2_fiber,
    su_tangent_is_isotropic, symplectic_ranks, FiberDescription,
};
use crate::liecore::{centralizer_dim, omega, weyl_orbit_points, FormSpec, LieElement};
use crate::orbit::{
    adjoint_point, chart_coordinates, chart_membership, chart_param, chart_test, default_sample_length,
    model_inverse, model_inverse_matrix, orbit_membership, sample_sl_indexed, tensor_point, OrbitSpec,
    TensorPoint,
};
use crate::polyideal::{ideal_equal, minors_ideal, segre_pullback, GroebnerOptions, OrderKind, PolynomialIdeal};
use crate::sampling::{
    random_matrix, random_trace_zero, random_vector, sample_rng, small_gaussian, small_rational,
    split_seed, SampleRng,
};
use crate::segre::{
    ambient_change, ambient_change_inverse, eigenstructure, homogenized_equations, incidence_member,
    is_rank_one_locus, segre_matrix, IncidencePair, ProjectivePoint,
};

use super::report::VerificationReport;

/// Everything a check needs besides its name.
#[derive(Clone, Debug)]
pub struct CheckContext {
    pub spec: OrbitSpec,
    pub samples: usize,
    pub seed: u64,
    pub form: FormSpec,
    pub options: GroebnerOptions,
}

impl CheckContext {
    pub fn n(&self) -> usize {
        self.spec.n()
    }

    fn dim(&self) -> usize {
        self.spec.dim()
    }

    /// Independent sample stream `tag` of this run.
    fn rng(&self, tag: u64, index: usize) -> SampleRng {
        sample_rng(split_seed(self.seed, tag), index as u64)
    }

    fn group_sample(&self, tag: u64, index: usize) -> crate::liecore::GroupElement {
        sample_sl_indexed(
            self.n(),
            split_seed(self.seed, tag),
            index as u64,
            default_sample_length(self.n()),
        )
    }

    fn report(&self, name: &str, anchor: &str) -> VerificationReport {
        VerificationReport::new(name, self.n(), self.seed, anchor)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Adjugate,
    TraceOne,
    Ratmap,
    Hessian,
    Symplectic,
    Lagrangian,
    Charts,
    Incidence,
    FiberSl2,
    Segre,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Adjugate,
        Check::TraceOne,
        Check::Ratmap,
        Check::Hessian,
        Check::Symplectic,
        Check::Lagrangian,
        Check::Charts,
        Check::Incidence,
        Check::FiberSl2,
        Check::Segre,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Adjugate => "adjugate",
            Check::TraceOne => "trace-one",
            Check::Ratmap => "ratmap",
            Check::Hessian => "hessian",
            Check::Symplectic => "symplectic",
            Check::Lagrangian => "lagrangian",
            Check::Charts => "charts",
            Check::Incidence => "incidence",
            Check::FiberSl2 => "fiber-sl2",
            Check::Segre => "segre",
        }
    }

    pub fn anchor(self) -> &'static str {
        match self {
            Check::Adjugate => "adjugate identities A adj(A) = adj(A) A = det(A) Id and column cofactor expansion",
            Check::TraceOne => "Segre point M of an orbit point has tr M = det g = 1, image w1 and kernel w2..w_{n+1}",
            Check::Ratmap => "the potential extends to the Segre compactification as f_H = (n+1) R_H, undefined on the incidence variety",
            Check::Hessian => "the n+1 critical points of f_H are nondegenerate (Lefschetz fibration)",
            Check::Symplectic => "Omega = Im of the Hermitian form is symplectic on the orbit",
            Check::Lagrangian => "Omega vanishes on su(n+1)-tangents at the Weyl points (Lagrangian zero section)",
            Check::Charts => "Bruhat charts cover the orbit; chart potentials are critical at their centers with value (n+1) lambda_j",
            Check::Incidence => "the boundary of the compactification is the incidence variety of rank-one traceless matrices",
            Check::FiberSl2 => "sl(2) model: critical values +-2, regular fibers are conics with two points at infinity",
            Check::Segre => "the homogenized orbit ideal pulls back to the ideal of 2x2 minors (Segre embedding)",
        }
    }

    pub fn run(self, ctx: &CheckContext) -> Result<VerificationReport> {
        let start = std::time::Instant::now();
        let mut report = match self {
            Check::Adjugate => adjugate(ctx),
            Check::TraceOne => trace_one(ctx),
            Check::Ratmap => ratmap(ctx),
            Check::Hessian => hessian(ctx),
            Check::Symplectic => symplectic(ctx),
            Check::Lagrangian => lagrangian(ctx),
            Check::Charts => charts(ctx),
            Check::Incidence => incidence(ctx),
            Check::FiberSl2 => fiber_sl2(ctx),
            Check::Segre => segre(ctx),
        }?;
        report.timing_ms = start.elapsed().as_millis() as u64;
        Ok(report)
    }
}

fn mat(m: &SquareMatrix) -> Value {
    m.to_json_value()
}

fn vec_json(v: &[GaussianRational]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

fn scalar(c: &GaussianRational) -> Value {
    Value::String(c.to_string())
}

fn is_zero_vec(v: &[GaussianRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// A random point of `Σ`: nonzero `w`, nonzero `ξ` with `ξ(w) = 0`.
fn incidence_sample(rng: &mut SampleRng, d: usize) -> IncidencePair {
    loop {
        let w = random_vector(rng, d);
        let Some(p) = w.iter().position(|c| !c.is_zero()) else {
            continue;
        };
        let mut xi = random_vector(rng, d);
        let rest: GaussianRational = (0..d).filter(|&k| k != p).map(|k| &xi[k] * &w[k]).sum();
        xi[p] = &(-&rest) / &w[p];
        if let Ok(pair) = IncidencePair::new(w, xi) {
            return pair;
        }
    }
}

/// A random rank-one matrix `w ⊗ ξ` with both factors nonzero.
fn rank_one_sample(rng: &mut SampleRng, d: usize) -> SquareMatrix {
    loop {
        let w = random_vector(rng, d);
        let xi = random_vector(rng, d);
        if !is_zero_vec(&w) && !is_zero_vec(&xi) {
            return SquareMatrix::outer(&w, &xi).expect("equal lengths");
        }
    }
}

/// A tensor point with `v_j = 0`, outside chart `j`.
fn off_chart_point(rng: &mut SampleRng, d: usize, j: usize) -> TensorPoint {
    loop {
        let mut v = random_vector(rng, d);
        v[j] = GaussianRational::zero();
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            continue;
        };
        let mut eps = random_vector(rng, d);
        let rest: GaussianRational = (0..d).filter(|&k| k != p).map(|k| &eps[k] * &v[k]).sum();
        eps[p] = &(&GaussianRational::one() - &rest) / &v[p];
        return TensorPoint::new(v, eps).expect("pairing is one by construction");
    }
}

fn adjugate(ctx: &CheckContext) -> Result<VerificationReport> {
    let mut r = ctx.report("adjugate", Check::Adjugate.anchor());
    let d = ctx.dim();
    for k in 0..ctx.samples {
        let a = random_matrix(&mut ctx.rng(0, k), d);
        let (adj, det) = a.adjugate();
        let scalar_id = SquareMatrix::identity(d).scale(&det);
        let left = &a * &adj == scalar_id;
        let right = &adj * &a == scalar_id;
        let columns = (0..d).all(|j| {
            let s: GaussianRational = (0..d).map(|i| &a[(i, j)] * &adj[(j, i)]).sum();
            s == det
        });
        if !(left && right && columns) {
            r.fail(json!({
                "sample_index": k,
                "matrix": mat(&a),
                "adjugate": mat(&adj),
                "det": scalar(&det),
                "left": left,
                "right": right,
                "columns": columns,
            }));
        }
    }
    r.sample_count = ctx.samples;
    r.detail("dim", d);
    Ok(r)
}

fn trace_one(ctx: &CheckContext) -> Result<VerificationReport> {
    let mut r = ctx.report("trace-one", Check::TraceOne.anchor());
    for k in 0..ctx.samples {
        let g = ctx.group_sample(0, k);
        let m = segre_matrix(&g);
        let trace_ok = m.trace().is_one();
        let det_ok = g.mat().det().is_one();
        let tensor_ok = tensor_point(&g).outer() == m;
        let model_ok = model_inverse_matrix(&adjoint_point(&g, &ctx.spec)?, ctx.n()) == m;
        let eigen_ok = trace_ok
            && eigenstructure(&m, &g).is_ok_and(|es| {
                m.mul_vec(&es.image) == es.image && es.kernel.iter().all(|w| is_zero_vec(&m.mul_vec(w)))
            });
        if !(trace_ok && det_ok && tensor_ok && model_ok && eigen_ok) {
            r.fail(json!({
                "sample_index": k,
                "g": mat(g.mat()),
                "segre_matrix": mat(&m),
                "trace": scalar(&m.trace()),
                "det": scalar(&g.mat().det()),
                "tensor_agrees": tensor_ok,
                "model_agrees": model_ok,
                "eigenstructure": eigen_ok,
            }));
        }
    }
    r.sample_count = ctx.samples;
    Ok(r)
}

fn ratmap(ctx: &CheckContext) -> Result<VerificationReport> {
    let mut r = ctx.report("ratmap", Check::Ratmap.anchor());
    let n = ctx.n();
    let factor = ctx.form.scale() * &GaussianRational::from_i64(n as i64 + 1);
    for k in 0..ctx.samples {
        let g = ctx.group_sample(0, k);
        let a = adjoint_point(&g, &ctx.spec)?;
        let m = segre_matrix(&g);
        let f = potential_f(&a, &ctx.spec, &ctx.form)?;
        let rv = rational_potential_r(&m, &ctx.spec)?;
        if f != &factor * &rv {
            r.fail(json!({
                "sample_index": k,
                "g": mat(g.mat()),
                "orbit_point": mat(a.mat()),
                "f": scalar(&f),
                "r": scalar(&rv),
            }));
        }
    }
    let mut indeterminate = 0;
    for k in 0..ctx.samples {
        let pair = incidence_sample(&mut ctx.rng(1, k), ctx.dim());
        match rational_potential_r(&pair.outer(), &ctx.spec) {
            Err(Error::Indeterminate) => indeterminate += 1,
            other => r.fail(json!({
                "sigma_index": k,
                "w": vec_json(pair.w()),
                "xi": vec_json(pair.xi()),
                "result": format!("{other:?}"),
            })),
        }
    }
    r.sample_count = ctx.samples;
    r.detail("factor", scalar(&factor));
    r.detail("indeterminate_on_sigma", indeterminate);
    Ok(r)
}

fn hessian(ctx: &CheckContext) -> Result<VerificationReport> {
    let mut r = ctx.report("hessian", Check::Hessian.anchor());
    let mut dets = Vec::new();
    let mut hessians = Vec::new();
    for j in 0..ctx.dim() {
        let (h, nondegenerate) = hessian_at_critical(&ctx.spec, j, &ctx.form)?;
        let symbolic = chart_potential_poly(&ctx.spec, j, &ctx.form)?.hessian_at_origin();
        let det = h.det();
        if !nondegenerate || symbolic != h {
            r.fail(json!({
                "chart": j + 1,
                "hessian": mat(&h),
                "symbolic_hessian": mat(&symbolic),
                "det": scalar(&det),
            }));
        }
        dets.push(scalar(&det));
        hessians.push(mat(&h));
    }
    r.sample_count = ctx.dim();
    r.detail("hessian_dets", dets);
    r.detail("hessians", hessians);
    Ok(r)
}

fn symplectic(ctx: &CheckContext) -> Result<VerificationReport> {
    let mut r = ctx.report("symplectic", Check::Symplectic.anchor());
    let d = ctx.dim();
    let i = GaussianRational::i();
    for k in 0..ctx.samples {
        let mut rng = ctx.rng(0, k);
        let x = loop {
            let m = random_trace_zero(&mut rng, d);
            if !m.is_zero() {
                break LieElement::new(m)?;
            }
        };
        let w = omega(&x.scale(&i), &x, &ctx.form)?;
        if w.is_zero() {
            r.fail(json!({ "sample_index": k, "x": mat(x.mat()) }));
        }
    }
    let expected = 2 * (d * d - 1 - centralizer_dim(ctx.spec.h0())?);
    let points = ctx.samples.min(20);
    for k in 0..points {
        let g = ctx.group_sample(1, k);
        let a = adjoint_point(&g, &ctx.spec)?;
        let (gram, span) = symplectic_ranks(&a, &ctx.form)?;
        if gram != expected || span != expected {
            r.fail(json!({
                "point_index": k,
                "orbit_point": mat(a.mat()),
                "gram_rank": gram,
                "tangent_rank": span,
            }));
        }
    }
    r.sample_count = ctx.samples;
    r.detail("gram_points", points);
    r.detail("real_dimension", expected);
    Ok(r)
}

fn lagrangian(ctx: &CheckContext) -> Result<VerificationReport> {
    let mut r = ctx.report("lagrangian", Check::Lagrangian.anchor());
    let points = weyl_orbit_points(ctx.spec.h0())?;
    for (k, p) in points.iter().enumerate() {
        if !su_tangent_is_isotropic(p, &ctx.form)? {
            r.fail(json!({ "point_index": k, "point": mat(p.mat()) }));
        }
    }
    r.sample_count = points.len();
    Ok(r)
}

fn charts(ctx: &CheckContext) -> Result<VerificationReport> {
    let mut r = ctx.report("charts", Check::Charts.anchor());
    ctx.spec.require_minimal()?;
    let n = ctx.n();
    let d = ctx.dim();
    for k in 0..ctx.samples {
        let j = k % d;
        let mut rng = ctx.rng(0, k);
        let values: Vec<GaussianRational> = (0..2 * n).map(|_| small_gaussian(&mut rng)).collect();
        let (y, x) = chart_coordinates(&ctx.spec, j, &values)?;
        let a = chart_param(&ctx.spec, j, &y, &x)?;
        let on_orbit = orbit_membership(&a, &ctx.spec)?;
        let in_chart = on_orbit && model_inverse(&a, n).is_ok_and(|t| chart_membership(&t, j).unwrap_or(false));
        if !in_chart {
            r.fail(json!({
                "sample_index": k,
                "chart": j + 1,
                "coordinates": vec_json(&values),
                "point": mat(a.mat()),
                "on_orbit": on_orbit,
            }));
        }
    }
    let lambdas = ctx.spec.lambdas();
    let mut constants = Vec::new();
    for (j, lambda) in lambdas.iter().enumerate() {
        let jet = chart_jet(&ctx.spec, j, &ctx.form)?;
        let expected = &(ctx.form.scale() * &GaussianRational::from_i64(d as i64))
            * &GaussianRational::from_real(lambda.clone());
        let poly = chart_potential_poly(&ctx.spec, j, &ctx.form)?;
        let poly_ok = GaussianRational::from_real(poly.constant_term()) == expected
            && poly.gradient_at_origin().iter().all(Zero::is_zero);
        if !is_zero_vec(&jet.gradient) || jet.constant != expected || !poly_ok {
            r.fail(json!({
                "center": j + 1,
                "constant": scalar(&jet.constant),
                "expected": scalar(&expected),
                "gradient": vec_json(&jet.gradient),
            }));
        }
        constants.push(scalar(&jet.constant));
    }
    let mut exceptions = 0usize;
    for k in 0..ctx.samples {
        let j = (k / 2) % d;
        let point = if k % 2 == 0 {
            tensor_point(&ctx.group_sample(2, k))
        } else {
            off_chart_point(&mut ctx.rng(3, k), d, j)
        };
        let t = chart_test(&point, j)?;
        if t.agree() {
            continue;
        }
        let isotropic = point.eps().iter().map(|e| e * e).sum::<GaussianRational>().is_zero();
        if isotropic && t.coordinate {
            exceptions += 1;
        } else {
            r.fail(json!({
                "agreement_index": k,
                "chart": j + 1,
                "v": vec_json(point.v()),
                "eps": vec_json(point.eps()),
                "complement_value": scalar(&t.complement_value),
            }));
        }
    }
    r.sample_count = ctx.samples;
    r.detail("center_values", constants);
    r.detail("isotropic_exceptions", exceptions);
    Ok(r)
}

fn incidence(ctx: &CheckContext) -> Result<VerificationReport> {
    let mut r = ctx.report("incidence", Check::Incidence.anchor());
    let d = ctx.dim();
    for k in 0..ctx.samples {
        let pair = incidence_sample(&mut ctx.rng(0, k), d);
        let z = pair.outer();
        let (a, t) = ambient_change(&z);
        let ok = incidence_member(&pair)
            && is_rank_one_locus(&z)
            && z.trace().is_zero()
            && matches!(rational_potential_r(&z, &ctx.spec), Err(Error::Indeterminate))
            && t.is_zero()
            && homogenized_equations(&a, &t).is_zero()
            && ambient_change_inverse(&a, &t) == z;
        if !ok {
            r.fail(json!({
                "sigma_index": k,
                "w": vec_json(pair.w()),
                "xi": vec_json(pair.xi()),
            }));
        }
        let g = ctx.group_sample(1, k);
        let m = segre_matrix(&g);
        let (a, t) = ambient_change(&m);
        let w = g.mat().col(0);
        let xi: Vec<GaussianRational> = (0..d).map(|j| g.mat().cofactor(j, 0)).collect();
        let off_sigma = IncidencePair::new(w, xi).is_ok_and(|p| !incidence_member(&p));
        let ok = off_sigma
            && t.is_one()
            && a == adjoint_point(&g, &ctx.spec)?
            && homogenized_equations(&a, &t).is_zero();
        if !ok {
            r.fail(json!({ "orbit_index": k, "g": mat(g.mat()), "segre_matrix": mat(&m) }));
        }
    }
    r.sample_count = ctx.samples;
    Ok(r)
}

fn two() -> BigRational {
    BigRational::from_integer(2.into())
}

fn closure_point(fiber: &FiberDescription, rng: &mut SampleRng) -> ProjectivePoint {
    let half = GaussianRational::from_real(&fiber.level / &two());
    loop {
        let y = small_gaussian(rng);
        let t = small_gaussian(rng);
        if y.is_zero() {
            continue;
        }
        let x = &half * &t;
        let z = &(&(&t * &t) - &(&x * &x)) / &y;
        if let Ok(p) = ProjectivePoint::new(vec![x, y, z, t]) {
            return p;
        }
    }
}

fn fiber_sl2(ctx: &CheckContext) -> Result<VerificationReport> {
    let spec = OrbitSpec::minimal_i64(1, &[1, -1])?;
    let form = FormSpec::trace();
    let mut r = VerificationReport::new("fiber-sl2", 1, ctx.seed, Check::FiberSl2.anchor());
    let mut values: Vec<GaussianRational> = critical_points(&spec, &form)?.into_iter().map(|c| c.f_value).collect();
    values.sort();
    let expected = vec![GaussianRational::from_i64(-2), GaussianRational::from_i64(2)];
    if values != expected {
        r.fail(json!({ "critical_values": vec_json(&values) }));
    }
    let q = |v: i64| GaussianRational::from_i64(v);
    let regular = sl2_fiber(&q(0))?;
    let target = PolynomialIdeal::parse(&["x", "y", "z", "t"], &["x", "y*z - t^2"])?;
    let closure_ok = ideal_equal(&regular.closure, &target, OrderKind::GradedRevLex, ctx.options)?;
    let boundary = vec![ProjectivePoint::from_i64(&[0, 1, 0, 0])?, ProjectivePoint::from_i64(&[0, 0, 1, 0])?];
    if !closure_ok || regular.boundary_points != boundary || !regular.smooth {
        r.fail(json!({ "level": "0", "closure_matches": closure_ok }));
    }
    for c in [2, -2] {
        let fiber = sl2_fiber(&q(c))?;
        let rank = fiber
            .critical_point
            .as_ref()
            .map(|p| fiber_jacobian_rank(&fiber, &p.clone().map(GaussianRational::from_real)));
        if fiber.smooth || rank != Some(1) {
            r.fail(json!({ "level": c.to_string(), "smooth": fiber.smooth, "jacobian_rank": rank }));
        }
    }
    let mut levels = Vec::new();
    for k in 0..ctx.samples {
        let mut rng = ctx.rng(0, k);
        let level = loop {
            let c = small_rational(&mut rng) * two();
            if c != two()
                && c != -two()
            {
                break c;
            }
        };
        let fiber = sl2_fiber(&GaussianRational::from_real(level.clone()))?;
        let mut points = vec![closure_point(&fiber, &mut rng)];
        points.extend(fiber.boundary_points.iter().cloned());
        for p in points {
            let (s, t) = conic_preimage(&p);
            let back = conic_parametrization(&fiber, &s, &t)?;
            if !fiber.closure_contains(&p) || back != p || !fiber.smooth {
                r.fail(json!({
                    "sample_index": k,
                    "level": format_rational(&level),
                    "point": p.to_string(),
                    "image_of_preimage": back.to_string(),
                }));
            }
        }
        levels.push(Value::String(format_rational(&level)));
    }
    r.sample_count = ctx.samples;
    r.detail("critical_values", vec_json(&values));
    r.detail("boundary", boundary.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    r.detail("levels", levels);
    Ok(r)
}

fn segre(ctx: &CheckContext) -> Result<VerificationReport> {
    let mut r = ctx.report("segre", Check::Segre.anchor());
    let n = ctx.n();
    let d = ctx.dim();
    let pb = segre_pullback(n, ctx.options)?;
    let minors = minors_ideal(n);
    if n <= 2 {
        if !pb.exact_homogenization {
            return Err(Error::ResourceCap(ctx.options.pair_cap));
        }
        let equal = ideal_equal(&pb.pulled_back, &minors, OrderKind::GradedRevLex, ctx.options)?;
        if !equal {
            r.fail(json!({ "ideal_equal": false, "pulled_back": pb.pulled_back.to_strings(OrderKind::GradedRevLex) }));
        }
        r.detail("ideal_equal", equal);
    } else {
        r.detail("ideal_equal", Value::Null);
    }
    for k in 0..ctx.samples {
        let z = if k % 2 == 0 {
            rank_one_sample(&mut ctx.rng(0, k), d)
        } else {
            segre_matrix(&ctx.group_sample(1, k))
        };
        let bad: Vec<usize> = pb
            .pulled_back
            .generators()
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.eval(z.entries()).is_zero())
            .map(|(i, _)| i)
            .collect();
        if !bad.is_empty() {
            r.fail(json!({ "sample_index": k, "z": mat(&z), "nonvanishing_generators": bad }));
        }
    }
    r.sample_count = ctx.samples;
    r.detail("exact_homogenization", pb.exact_homogenization);
    r.detail("homogenized_generators", pb.homogenized.generators().len());
    r.detail("minors", minors.generators().len());
    Ok(r)
}

/// Runs every check and folds the results into one report.
pub fn run_all(ctx: &CheckContext) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    let mut r = ctx.report("all", "every check above, one report per check");
    let mut reports = Vec::new();
    for check in Check::ALL {
        let sub = check.run(ctx)?;
        if !sub.passed {
            r.fail(json!({ "check_name": sub.check_name }));
        }
        reports.push(sub.to_value());
    }
    r.sample_count = ctx.samples;
    r.detail("reports", reports);
    r.timing_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}
