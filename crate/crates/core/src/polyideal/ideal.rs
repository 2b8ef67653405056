use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::groebner::{groebner_basis, normal_form, GroebnerOptions};
use super::order::{MonomialOrder, OrderKind};
use super::polymatrix::PolyMatrix;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::orbit::OrbitSpec;

/// An ideal of `ℚ[variables]` given by generators, with an optional cached
/// Gröbner basis for one order.
#[derive(Clone, Debug)]
pub struct PolynomialIdeal {
    variables: Vec<String>,
    generators: Vec<Polynomial>,
    cache: Option<(OrderKind, Vec<Polynomial>)>,
}

impl PartialEq for PolynomialIdeal {
    /// Presentation equality (same variables and generators); use
    /// [`ideal_equal`] for equality of ideals.
    fn eq(&self, other: &Self) -> bool {
        self.variables == other.variables && self.generators == other.generators
    }
}

impl PolynomialIdeal {
    pub fn new(variables: Vec<String>, generators: Vec<Polynomial>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &variables {
            if !seen.insert(v) {
                return Err(Error::VariableMismatch(format!("duplicate variable `{v}`")));
            }
        }
        for g in &generators {
            if g.nvars() != variables.len() {
                return Err(Error::VariableMismatch(format!(
                    "generator in {} variables, ideal over {}",
                    g.nvars(),
                    variables.len()
                )));
            }
        }
        Ok(Self {
            variables,
            generators,
            cache: None,
        })
    }

    /// Parses each generator over the given variable names.
    pub fn parse<S: AsRef<str>>(variables: &[&str], generators: &[S]) -> Result<Self> {
        let vars: Vec<String> = variables.iter().map(|s| s.to_string()).collect();
        let gens = generators
            .iter()
            .map(|g| Polynomial::parse(g.as_ref(), &vars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vars, gens)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn order(&self, kind: OrderKind) -> MonomialOrder {
        MonomialOrder::new(kind, self.variables.clone())
    }

    pub fn cached_basis(&self) -> Option<(OrderKind, &[Polynomial])> {
        self.cache.as_ref().map(|(k, b)| (*k, b.as_slice()))
    }

    /// Reduced Gröbner basis for `kind`, reusing the cache when it matches.
    pub fn groebner(&self, kind: OrderKind, options: GroebnerOptions) -> Result<Vec<Polynomial>> {
        if let Some((k, b)) = &self.cache {
            if *k == kind {
                return Ok(b.clone());
            }
        }
        groebner_basis(&self.generators, &self.order(kind), options)
    }

    /// Computes and caches the Gröbner basis for `kind`.
    pub fn ensure_groebner(&mut self, kind: OrderKind, options: GroebnerOptions) -> Result<&[Polynomial]> {
        let stale = !matches!(&self.cache, Some((k, _)) if *k == kind);
        if stale {
            let b = groebner_basis(&self.generators, &self.order(kind), options)?;
            self.cache = Some((kind, b));
        }
        Ok(&self.cache.as_ref().expect("just filled").1)
    }

    /// Normal form of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial, kind: OrderKind, options: GroebnerOptions) -> Result<Polynomial> {
        let basis = self.groebner(kind, options)?;
        normal_form(f, &basis, &self.order(kind))
    }

    pub fn contains(&self, f: &Polynomial, options: GroebnerOptions) -> Result<bool> {
        Ok(self.normal_form(f, OrderKind::GradedRevLex, options)?.is_zero())
    }

    pub fn to_strings(&self, kind: OrderKind) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| g.to_string_with(&self.variables, kind))
            .collect()
    }

    /// The homogenization `I^hom ⊂ ℚ[variables, t]`: homogenizations of a
    /// graded Gröbner basis. Homogenizing the raw generators can give a
    /// strictly smaller ideal.
    pub fn homogenize(&self, t: &str, options: GroebnerOptions) -> Result<Self> {
        if self.variables.iter().any(|v| v == t) {
            return Err(Error::VariableMismatch(format!("`{t}` is already a variable")));
        }
        let basis = self.groebner(OrderKind::GradedRevLex, options)?;
        let mut vars = self.variables.clone();
        vars.push(t.to_string());
        Self::new(vars, basis.iter().map(Polynomial::homogenize).collect())
    }

    /// Homogenizes each generator as given, without a Gröbner basis.
    pub fn homogenize_generators(&self, t: &str) -> Result<Self> {
        if self.variables.iter().any(|v| v == t) {
            return Err(Error::VariableMismatch(format!("`{t}` is already a variable")));
        }
        let mut vars = self.variables.clone();
        vars.push(t.to_string());
        Self::new(vars, self.generators.iter().map(Polynomial::homogenize).collect())
    }

    /// Sets `t := 1` and drops it from the ring.
    pub fn dehomogenize(&self, t: &str) -> Result<Self> {
        let k = self.position(t)?;
        let mut vars = self.variables.clone();
        vars.remove(k);
        Self::new(vars, self.generators.iter().map(|g| g.dehomogenize(k)).collect())
    }

    /// Adds generators (over the same variables).
    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Self::new(self.variables.clone(), gens)
    }

    pub fn position(&self, name: &str) -> Result<usize> {
        self.variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnassignedVariable(name.to_string()))
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        Ok(Polynomial::var(self.nvars(), self.position(name)?))
    }

    pub fn to_file(&self, kind: OrderKind) -> IdealFile {
        IdealFile {
            variables: self.variables.clone(),
            generators: self.to_strings(kind),
            order: Some(kind),
        }
    }
}

/// `I = J` iff each generator set reduces to zero modulo the other's basis.
pub fn ideal_equal(
    a: &PolynomialIdeal,
    b: &PolynomialIdeal,
    kind: OrderKind,
    options: GroebnerOptions,
) -> Result<bool> {
    if a.variables != b.variables {
        return Err(Error::VariableMismatch("ideals over different variable lists".into()));
    }
    let order = a.order(kind);
    let ga = a.groebner(kind, options)?;
    let gb = b.groebner(kind, options)?;
    for g in a.generators() {
        if !normal_form(g, &gb, &order)?.is_zero() {
            return Ok(false);
        }
    }
    for g in b.generators() {
        if !normal_form(g, &ga, &order)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A linear change of variables: every source variable is sent to a linear
/// form (constant term allowed) in the target variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubstitution {
    source: Vec<String>,
    target: Vec<String>,
    images: BTreeMap<String, Polynomial>,
}

impl LinearSubstitution {
    pub fn new(source: Vec<String>, target: Vec<String>) -> Self {
        Self {
            source,
            target,
            images: BTreeMap::new(),
        }
    }

    pub fn identity(vars: Vec<String>) -> Self {
        let mut s = Self::new(vars.clone(), vars.clone());
        for (k, v) in vars.iter().enumerate() {
            s.images.insert(v.clone(), Polynomial::var(vars.len(), k));
        }
        s
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }

    /// Assigns `var ↦ image`; the image must have degree at most one.
    pub fn assign(&mut self, var: &str, image: Polynomial) -> Result<()> {
        if !self.source.iter().any(|v| v == var) {
            return Err(Error::VariableMismatch(format!("`{var}` is not a source variable")));
        }
        if image.nvars() != self.target.len() {
            return Err(Error::VariableMismatch("image over the wrong ring".into()));
        }
        if image.total_degree().unwrap_or(0) > 1 {
            return Err(Error::Invalid(format!("image of `{var}` is not linear")));
        }
        self.images.insert(var.to_string(), image);
        Ok(())
    }

    pub fn assign_str(&mut self, var: &str, image: &str) -> Result<()> {
        let p = Polynomial::parse(image, &self.target)?;
        self.assign(var, p)
    }

    pub fn image(&self, var: &str) -> Option<&Polynomial> {
        self.images.get(var)
    }

    fn ordered_images(&self) -> Result<Vec<Polynomial>> {
        self.source
            .iter()
            .map(|v| {
                self.images
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::UnassignedVariable(v.clone()))
            })
            .collect()
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.nvars() != self.source.len() {
            return Err(Error::VariableMismatch("polynomial over the wrong ring".into()));
        }
        p.compose(&self.ordered_images()?)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &LinearSubstitution) -> Result<LinearSubstitution> {
        if first.target != self.source {
            return Err(Error::VariableMismatch("substitutions do not compose".into()));
        }
        let mut out = LinearSubstitution::new(first.source.clone(), self.target.clone());
        for v in &first.source {
            let img = first
                .images
                .get(v)
                .ok_or_else(|| Error::UnassignedVariable(v.clone()))?;
            out.images.insert(v.clone(), self.apply(img)?);
        }
        Ok(out)
    }
}

/// Generatorwise pullback of an ideal along a linear substitution.
pub fn substitute_linear(ideal: &PolynomialIdeal, map: &LinearSubstitution) -> Result<PolynomialIdeal> {
    if ideal.variables() != map.source() {
        return Err(Error::VariableMismatch(
            "substitution source differs from the ideal's variables".into(),
        ));
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| map.apply(g))
        .collect::<Result<Vec<_>>>()?;
    PolynomialIdeal::new(map.target().to_vec(), gens)
}

fn index_name(prefix: &str, dim: usize, i: usize, j: usize) -> String {
    if dim < 10 {
        format!("{prefix}{}{}", i + 1, j + 1)
    } else {
        format!("{prefix}{}_{}", i + 1, j + 1)
    }
}

/// Independent coordinates on `sl(dim)`: all `a_ij` except `a_{dim,dim}`,
/// row-major.
pub fn sl_variable_names(dim: usize) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if !(i == dim - 1 && j == dim - 1) {
                out.push(index_name("a", dim, i, j));
            }
        }
    }
    out
}

/// All `z_ij`, row-major.
pub fn segre_variable_names(dim: usize) -> Vec<String> {
    (0..dim * dim).map(|k| index_name("z", dim, k / dim, k % dim)).collect()
}

/// The symbolic trace-zero matrix with `a_{dim,dim} = −Σ a_ii`, over
/// `extra_vars` additional trailing variables.
pub fn symbolic_sl_matrix(dim: usize, extra_vars: usize) -> PolyMatrix {
    let nvars = dim * dim - 1 + extra_vars;
    let mut m = PolyMatrix::zeros(dim, nvars);
    let mut k = 0;
    for i in 0..dim {
        for j in 0..dim {
            if i == dim - 1 && j == dim - 1 {
                continue;
            }
            m.set(i, j, Polynomial::var(nvars, k));
            k += 1;
        }
    }
    let mut last = Polynomial::zero(nvars);
    for i in 0..dim - 1 {
        last = &last - m.entry(i, i);
    }
    m.set(dim - 1, dim - 1, last);
    m
}

/// The orbit ideal: entries of `∏ (A − a·Id)` over the distinct eigenvalues
/// `a` of `H₀`, in the independent coordinates of `sl(n+1)`. Zero and
/// repeated entries are dropped.
pub fn orbit_ideal(spec: &OrbitSpec) -> Result<PolynomialIdeal> {
    let d = spec.dim();
    let vars = sl_variable_names(d);
    let nvars = vars.len();
    let a = symbolic_sl_matrix(d, 0);
    let mut eig = Vec::new();
    for z in spec.h0().mat().diag() {
        if !z.is_real() {
            return Err(Error::Invalid("H₀ must have rational eigenvalues".into()));
        }
        eig.push(z.re().clone());
    }
    eig.sort();
    eig.dedup();
    let mut prod = PolyMatrix::identity(d, nvars);
    for e in &eig {
        let shifted = a.sub(&PolyMatrix::identity(d, nvars).scale(e));
        prod = prod.mul(&shifted);
    }
    let mut gens: Vec<Polynomial> = Vec::new();
    for p in prod.entries() {
        if !p.is_zero() && !gens.contains(p) {
            gens.push(p.clone());
        }
    }
    PolynomialIdeal::new(vars, gens)
}

/// The 2×2 minors `z_ij z_kl − z_il z_kj` (`i < k`, `j < l`) of the generic
/// `(n+1)×(n+1)` matrix.
pub fn minors_ideal(n: usize) -> PolynomialIdeal {
    let d = n + 1;
    let vars = segre_variable_names(d);
    let nv = vars.len();
    let z = |i: usize, j: usize| Polynomial::var(nv, i * d + j);
    let mut gens = Vec::new();
    for i in 0..d {
        for k in i + 1..d {
            for j in 0..d {
                for l in j + 1..d {
                    gens.push(&(&z(i, j) * &z(k, l)) - &(&z(i, l) * &z(k, j)));
                }
            }
        }
    }
    PolynomialIdeal::new(vars, gens).expect("well-formed")
}

/// Pullback from the homogenization ambient `(a_ij, t)` to the Segre
/// ambient: `a_ij ↦ (n+1)z_ij − δ_ij Σ z_kk`, `t ↦ Σ z_kk`.
pub fn ambient_pullback(n: usize) -> LinearSubstitution {
    let d = n + 1;
    let mut source = sl_variable_names(d);
    source.push("t".into());
    let target = segre_variable_names(d);
    let nv = target.len();
    let mut trace = Polynomial::zero(nv);
    for k in 0..d {
        trace = &trace + &Polynomial::var(nv, k * d + k);
    }
    let mut map = LinearSubstitution::new(source, target);
    let mut idx = 0;
    for i in 0..d {
        for j in 0..d {
            if i == d - 1 && j == d - 1 {
                continue;
            }
            let mut img = Polynomial::var(nv, i * d + j).scale_i64(d as i64);
            if i == j {
                img = &img - &trace;
            }
            let name = map.source[idx].clone();
            map.images.insert(name, img);
            idx += 1;
        }
    }
    map.images.insert("t".into(), trace);
    map
}

/// The homogenized orbit ideal of the minimal orbit, pulled back to the
/// Segre ambient.
#[derive(Clone, Debug)]
pub struct SegrePullback {
    pub orbit: PolynomialIdeal,
    pub homogenized: PolynomialIdeal,
    pub pulled_back: PolynomialIdeal,
    /// Whether `homogenized` came from a Gröbner basis (true) or from the raw
    /// generators after the pair cap was hit (false).
    pub exact_homogenization: bool,
}

pub fn segre_pullback(n: usize, options: GroebnerOptions) -> Result<SegrePullback> {
    let spec = OrbitSpec::minimal_default(n);
    let orbit = orbit_ideal(&spec)?;
    let (homogenized, exact) = match orbit.homogenize("t", options) {
        Ok(h) => (h, true),
        Err(Error::ResourceCap(_)) => (orbit.homogenize_generators("t")?, false),
        Err(e) => return Err(e),
    };
    let pulled_back = substitute_linear(&homogenized, &ambient_pullback(n))?;
    Ok(SegrePullback {
        orbit,
        homogenized,
        pulled_back,
        exact_homogenization: exact,
    })
}

/// Ideal equality of the pulled-back homogenized orbit ideal and the 2×2
/// minors ideal.
pub fn segre_ideals_agree(n: usize, options: GroebnerOptions) -> Result<bool> {
    let pb = segre_pullback(n, options)?;
    if !pb.exact_homogenization {
        return Err(Error::ResourceCap(options.pair_cap));
    }
    ideal_equal(&pb.pulled_back, &minors_ideal(n), OrderKind::GradedRevLex, options)
}

/// On-disk ideal: variable names and generators in infix notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderKind>,
}

impl IdealFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_ideal(&self) -> Result<PolynomialIdeal> {
        let vars: Vec<&str> = self.variables.iter().map(String::as_str).collect();
        PolynomialIdeal::parse(&vars, &self.generators)
    }
}
