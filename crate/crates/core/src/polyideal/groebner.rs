//! Buchberger's algorithm on order-keyed working polynomials.
//!
//! A working polynomial maps order keys to coefficients, so its leading term
//! is the last map entry and monomial shifts are key additions.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Default cap on pair reductions in one Buchberger run.
pub const DEFAULT_PAIR_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerOptions {
    /// Maximum number of S-pair reductions before giving up.
    pub pair_cap: usize,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        Self {
            pair_cap: DEFAULT_PAIR_CAP,
        }
    }
}

type Key = Vec<i64>;
type Work = BTreeMap<Key, BigRational>;

struct Basis<'a> {
    order: &'a MonomialOrder,
    polys: Vec<Work>,
    leads: Vec<Vec<u32>>,
    active: Vec<bool>,
}

fn to_work(p: &Polynomial, order: &MonomialOrder) -> Work {
    p.terms().map(|(e, c)| (order.key(e), c.clone())).collect()
}

fn from_work(w: &Work, order: &MonomialOrder) -> Polynomial {
    Polynomial::from_terms(order.nvars(), w.iter().map(|(k, c)| (order.exps_of(k), c.clone())))
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn key_add(a: &[i64], b: &[i64]) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `f -= c · m · g` where `m` has key `shift`.
fn sub_shifted(f: &mut Work, g: &Work, shift: &[i64], c: &BigRational) {
    for (k, gc) in g {
        let key = key_add(k, shift);
        let delta = gc * c;
        match f.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(-delta);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() -= delta;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

fn make_monic(w: &mut Work) {
    if let Some((_, lc)) = w.iter().next_back() {
        if !lc.is_one() {
            let inv = lc.recip();
            for c in w.values_mut() {
                *c *= &inv;
            }
        }
    }
}

/// Full reduction of `f` by the active reducers; the result has no term
/// divisible by any active leading monomial.
fn reduce(mut f: Work, reducers: &[(&Work, &[u32])], order: &MonomialOrder) -> Work {
    let mut rem = Work::new();
    while let Some((key, c)) = f.pop_last() {
        let exps = order.exps_of(&key);
        let hit = reducers.iter().find(|(_, lead)| divides(lead, &exps));
        match hit {
            Some((g, lead)) => {
                let q: Vec<u32> = exps.iter().zip(lead.iter()).map(|(a, b)| a - b).collect();
                let shift = order.key(&q);
                let lc = g.iter().next_back().expect("nonzero reducer").1;
                let coef = &c / lc;
                // the leading term cancels exactly; skip it
                let mut rest = (*g).clone();
                rest.pop_last();
                sub_shifted(&mut f, &rest, &shift, &coef);
            }
            None => {
                rem.insert(key, c);
            }
        }
    }
    rem
}

impl Basis<'_> {
    fn reducers(&self) -> Vec<(&Work, &[u32])> {
        self.polys
            .iter()
            .zip(&self.leads)
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|((p, l), _)| (p, l.as_slice()))
            .collect()
    }

    fn push(&mut self, mut w: Work) -> usize {
        make_monic(&mut w);
        let lead = self.order.exps_of(w.keys().next_back().expect("nonzero"));
        self.polys.push(w);
        self.leads.push(lead);
        self.active.push(true);
        self.polys.len() - 1
    }

    fn s_poly(&self, i: usize, j: usize) -> Work {
        let l = lcm(&self.leads[i], &self.leads[j]);
        let qi: Vec<u32> = l.iter().zip(&self.leads[i]).map(|(a, b)| a - b).collect();
        let qj: Vec<u32> = l.iter().zip(&self.leads[j]).map(|(a, b)| a - b).collect();
        let ki = self.order.key(&qi);
        let kj = self.order.key(&qj);
        let mut out = Work::new();
        // both monic: S = qi·fi − qj·fj
        sub_shifted(&mut out, &self.polys[i], &ki, &-BigRational::one());
        sub_shifted(&mut out, &self.polys[j], &kj, &BigRational::one());
        out
    }
}

/// S-polynomial of two polynomials under `order`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let mut b = Basis {
        order,
        polys: Vec::new(),
        leads: Vec::new(),
        active: Vec::new(),
    };
    let i = b.push(to_work(f, order));
    let j = b.push(to_work(g, order));
    from_work(&b.s_poly(i, j), order)
}

/// Remainder of `f` under full multivariate division by `divisors`.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    check_ring(f, order)?;
    for g in divisors {
        check_ring(g, order)?;
    }
    let works: Vec<Work> = divisors.iter().filter(|g| !g.is_zero()).map(|g| to_work(g, order)).collect();
    let leads: Vec<Vec<u32>> = works
        .iter()
        .map(|w| order.exps_of(w.keys().next_back().expect("nonzero")))
        .collect();
    let reducers: Vec<(&Work, &[u32])> = works.iter().zip(&leads).map(|(w, l)| (w, l.as_slice())).collect();
    Ok(from_work(&reduce(to_work(f, order), &reducers, order), order))
}

fn check_ring(p: &Polynomial, order: &MonomialOrder) -> Result<()> {
    if p.nvars() != order.nvars() {
        return Err(Error::VariableMismatch(format!(
            "polynomial in {} variables, order over {}",
            p.nvars(),
            order.nvars()
        )));
    }
    Ok(())
}

/// Reduced Gröbner basis (monic, sorted by increasing leading monomial).
pub fn groebner_basis(
    generators: &[Polynomial],
    order: &MonomialOrder,
    options: GroebnerOptions,
) -> Result<Vec<Polynomial>> {
    for g in generators {
        check_ring(g, order)?;
    }
    let mut basis = Basis {
        order,
        polys: Vec::new(),
        leads: Vec::new(),
        active: Vec::new(),
    };
    // pending pairs ordered by the key of their lcm (normal strategy)
    let mut pairs: BTreeSet<(Key, usize, usize)> = BTreeSet::new();

    let add = |basis: &mut Basis, pairs: &mut BTreeSet<(Key, usize, usize)>, w: Work| {
        let new = basis.push(w);
        for old in 0..new {
            let l = lcm(&basis.leads[old], &basis.leads[new]);
            pairs.insert((order.key(&l), old, new));
            // redundant leads stop acting as reducers but keep their pairs
            if divides(&basis.leads[new], &basis.leads[old]) {
                basis.active[old] = false;
            }
        }
    };

    for g in generators {
        let reduced = reduce(to_work(g, order), &basis.reducers(), order);
        if !reduced.is_empty() {
            add(&mut basis, &mut pairs, reduced);
        }
    }

    let mut reductions = 0usize;
    while let Some((lkey, i, j)) = pairs.pop_first() {
        let li = &basis.leads[i];
        let lj = &basis.leads[j];
        // product criterion
        if li.iter().zip(lj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        // chain criterion
        let l = order.exps_of(&lkey);
        let chain = (0..basis.polys.len()).any(|k| {
            k != i
                && k != j
                && divides(&basis.leads[k], &l)
                && !pair_pending(&pairs, &basis, order, i, k)
                && !pair_pending(&pairs, &basis, order, j, k)
        });
        if chain {
            continue;
        }
        reductions += 1;
        if reductions > options.pair_cap {
            return Err(Error::ResourceCap(options.pair_cap));
        }
        let s = basis.s_poly(i, j);
        let r = reduce(s, &basis.reducers(), order);
        if !r.is_empty() {
            add(&mut basis, &mut pairs, r);
        }
    }

    // minimal basis: drop elements whose lead is divisible by another's
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.polys.len() {
        let redundant = (0..basis.polys.len()).any(|k| {
            k != i
                && divides(&basis.leads[k], &basis.leads[i])
                && (basis.leads[k] != basis.leads[i] || k < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    // interreduce
    let mut out: Vec<Work> = Vec::new();
    for &i in &keep {
        let others: Vec<(&Work, &[u32])> = keep
            .iter()
            .filter(|&&k| k != i)
            .map(|&k| (&basis.polys[k], basis.leads[k].as_slice()))
            .collect();
        let mut p = basis.polys[i].clone();
        let (lk, lc) = p.pop_last().expect("nonzero");
        let mut tail = reduce(p, &others, order);
        tail.insert(lk, lc);
        make_monic(&mut tail);
        out.push(tail);
    }
    out.sort_by(|a, b| a.keys().next_back().cmp(&b.keys().next_back()));
    Ok(out.iter().map(|w| from_work(w, order)).collect())
}

fn pair_pending(
    pairs: &BTreeSet<(Key, usize, usize)>,
    basis: &Basis,
    order: &MonomialOrder,
    a: usize,
    b: usize,
) -> bool {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let l = lcm(&basis.leads[a], &basis.leads[b]);
    pairs.contains(&(order.key(&l), a, b))
}

/// Exhaustive check that every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order);
            if !normal_form(&s, basis, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
