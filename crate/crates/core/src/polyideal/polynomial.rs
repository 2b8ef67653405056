use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::order::{compare, OrderKind};
use crate::error::{Error, Result};
use crate::exact::{format_rational, GaussianRational};

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

/// Sparse multivariate polynomial over ℚ in a fixed number of variables.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored.
/// Variable names live with the ideal or the order, not here.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn constant_i64(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant_i64(nvars, 1)
    }

    /// The variable with index `k`.
    pub fn var(nvars: usize, k: usize) -> Self {
        assert!(k < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn monomial(exps: Exponents, c: BigRational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, BigRational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&vec![0; self.nvars])
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Sum of the terms of the given total degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn leading_term(&self, kind: OrderKind) -> Option<(&Exponents, &BigRational)> {
        self.terms.iter().max_by(|a, b| compare(kind, a.0, b.0))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Divides by the leading coefficient under `kind`.
    pub fn make_monic(&self, kind: OrderKind) -> Self {
        match self.leading_term(kind) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a point of ℚ(i)^nvars.
    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.nvars, "point dimension mismatch");
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut t = GaussianRational::from_real(c.clone());
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = &t * &x.pow(k);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Composition `p(q_0, …, q_{m-1})`; every `q_k` must share one variable count.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let target = images.first().map_or(0, |q| q.nvars);
        if images.iter().any(|q| q.nvars != target) {
            return Err(Error::VariableMismatch("images over different rings".into()));
        }
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|q| vec![Self::one(target), q.clone()]).collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (k, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                while powers[k].len() <= p as usize {
                    let next = &powers[k][powers[k].len() - 1] * &images[k];
                    powers[k].push(next);
                }
                t = &t * &powers[k][p as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Partial derivative with respect to variable `k`.
    pub fn derivative(&self, k: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[k] -= 1;
            out.add_term(e2, c * BigRational::from_integer(BigInt::from(e[k])));
        }
        out
    }

    /// Appends `extra` new variables after the existing ones.
    pub fn extend_vars(&self, extra: usize) -> Self {
        Self {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.extend(std::iter::repeat_n(0, extra));
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Homogenization with a new last variable `t`:
    /// `t^{deg p} · p(x/t)`.
    pub fn homogenize(&self) -> Self {
        let deg = self.total_degree().unwrap_or(0);
        let mut out = Self::zero(self.nvars + 1);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.push(deg - e.iter().sum::<u32>());
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Sets variable `k` to one and removes it from the ring.
    pub fn dehomogenize(&self, k: usize) -> Self {
        let mut out = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.remove(k);
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Sets variable `k` to zero (keeps the ring).
    pub fn set_zero(&self, k: usize) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[k] == 0)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Infix rendering with the given variable names, terms in decreasing
    /// order for `kind`, e.g. `2*a11*a22 - t^2`.
    pub fn to_string_with(&self, names: &[String], kind: OrderKind) -> String {
        assert_eq!(names.len(), self.nvars, "name count mismatch");
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<(&Exponents, &BigRational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| compare(kind, b.0, a.0));
        let mut out = String::new();
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            let is_const = e.iter().all(|&k| k == 0);
            if !abs.is_one() || is_const {
                factors.push(format_rational(&abs));
            }
            for (name, &k) in names.iter().zip(e.iter()) {
                match k {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }

    /// Parses standard infix notation over the given variable names: integers,
    /// `+ - * / ^` and parentheses. Division is only by nonzero constants and
    /// floating literals are rejected.
    pub fn parse(text: &str, names: &[String]) -> Result<Self> {
        let tokens = tokenize(text)?;
        let mut parser = Parser {
            tokens,
            pos: 0,
            names,
        };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse(format!("trailing input in `{text}`")));
        }
        Ok(p)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial ring mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial ring mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial ring mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|k| format!("x{k}")).collect();
        f.write_str(&self.to_string_with(&names, OrderKind::GradedRevLex))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && (chars[i] == '.' || chars[i] == 'e' || chars[i] == 'E') {
                return Err(Error::Parse(format!(
                    "floating literal near `{}` is not exact",
                    chars[start..].iter().take(8).collect::<String>()
                )));
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Int(s.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else if c == '.' {
            return Err(Error::Parse("floating literal is not exact".into()));
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == '*' {
                acc = &acc * &rhs;
            } else {
                let is_const = rhs.terms.keys().all(|e| e.iter().all(|&k| k == 0));
                if rhs.is_zero() || !is_const {
                    return Err(Error::Parse("division only by nonzero constants".into()));
                }
                acc = acc.scale(&rhs.constant_term().recip());
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Int(k)) => {
                    let k: u32 = k
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    self.pos += 1;
                    return Ok(base.pow(k));
                }
                _ => return Err(Error::Parse("exponent must be a nonnegative integer".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let nvars = self.names.len();
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Int(v)) => {
                self.pos += 1;
                Ok(Polynomial::constant(nvars, BigRational::from_integer(v)))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let k = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                Ok(Polynomial::var(nvars, k))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_and_print() {
        let n = names(&["a11", "a22", "t"]);
        let p = Polynomial::parse("2*a11*a22 - t^2", &n).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string_with(&n, OrderKind::GradedRevLex), "2*a11*a22 - t^2");
        let q = Polynomial::parse("(a11 + 1/2)^2 - 3/4*t", &n).unwrap();
        assert_eq!(q.to_string_with(&n, OrderKind::GradedRevLex), "a11^2 + a11 - 3/4*t + 1/4");
        let back = Polynomial::parse(&q.to_string_with(&n, OrderKind::Lex), &n).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn parse_rejects_bad_input() {
        let n = names(&["x", "y"]);
        for bad in ["1.5*x", "x^y", "x/y", "x/0", "z", "(x", "x +", "2e3", "x $ y"] {
            assert!(Polynomial::parse(bad, &n).is_err(), "{bad}");
        }
    }

    #[test]
    fn homogenize_and_back() {
        let n = names(&["x", "y", "z"]);
        let p = Polynomial::parse("x^2 + y*z - 1", &n).unwrap();
        let h = p.homogenize();
        let nt = names(&["x", "y", "z", "t"]);
        assert_eq!(h, Polynomial::parse("x^2 + y*z - t^2", &nt).unwrap());
        assert!(h.is_homogeneous());
        assert_eq!(h.dehomogenize(3), p);
    }

    #[test]
    fn derivative_and_compose() {
        let n = names(&["x", "y"]);
        let p = Polynomial::parse("x^3*y + 2*y^2", &n).unwrap();
        assert_eq!(p.derivative(0), Polynomial::parse("3*x^2*y", &n).unwrap());
        assert_eq!(p.derivative(1), Polynomial::parse("x^3 + 4*y", &n).unwrap());
        // x -> x + y, y -> x - y
        let images = [
            Polynomial::parse("x + y", &n).unwrap(),
            Polynomial::parse("x - y", &n).unwrap(),
        ];
        let q = Polynomial::parse("x*y", &n).unwrap().compose(&images).unwrap();
        assert_eq!(q, Polynomial::parse("x^2 - y^2", &n).unwrap());
    }

    #[test]
    fn eval_at_gaussian_point() {
        let n = names(&["x", "y"]);
        let p = Polynomial::parse("x^2 + y^2", &n).unwrap();
        let v = p.eval(&[GaussianRational::i(), GaussianRational::from_i64(1)]);
        assert!(v.is_zero());
    }
}
