use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Monomial order kind. Variables are ranked by their position in the ring's
/// variable list, the first variable being the largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    Lex,
    GradedLex,
    #[default]
    GradedRevLex,
}

impl OrderKind {
    pub fn is_graded(self) -> bool {
        !matches!(self, OrderKind::Lex)
    }
}

/// A monomial order on a named variable list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    variables: Vec<String>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, variables: Vec<String>) -> Self {
        Self { kind, variables }
    }

    pub fn grevlex(variables: Vec<String>) -> Self {
        Self::new(OrderKind::GradedRevLex, variables)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        compare(self.kind, a, b)
    }

    /// A key whose lexicographic order is this monomial order. The map is
    /// linear in the exponent vector, so `key(a·b) = key(a) + key(b)`.
    pub(crate) fn key(&self, exps: &[u32]) -> Vec<i64> {
        order_key(self.kind, exps)
    }

    pub(crate) fn exps_of(&self, key: &[i64]) -> Vec<u32> {
        exps_from_key(self.kind, key, self.variables.len())
    }
}

pub(crate) fn compare(kind: OrderKind, a: &[u32], b: &[u32]) -> Ordering {
    order_key(kind, a).cmp(&order_key(kind, b))
}

pub(crate) fn order_key(kind: OrderKind, exps: &[u32]) -> Vec<i64> {
    let deg: i64 = exps.iter().map(|&e| e as i64).sum();
    match kind {
        OrderKind::Lex => exps.iter().map(|&e| e as i64).collect(),
        OrderKind::GradedLex => std::iter::once(deg)
            .chain(exps.iter().map(|&e| e as i64))
            .collect(),
        // equal degree: the smaller exponent in the last differing variable wins
        OrderKind::GradedRevLex => std::iter::once(deg)
            .chain(exps.iter().rev().map(|&e| -(e as i64)))
            .collect(),
    }
}

fn exps_from_key(kind: OrderKind, key: &[i64], nvars: usize) -> Vec<u32> {
    match kind {
        OrderKind::Lex => key.iter().map(|&e| e as u32).collect(),
        OrderKind::GradedLex => key[1..].iter().map(|&e| e as u32).collect(),
        OrderKind::GradedRevLex => {
            let mut v: Vec<u32> = key[1..].iter().map(|&e| (-e) as u32).collect();
            v.reverse();
            debug_assert_eq!(v.len(), nvars);
            v
        }
    }
}
