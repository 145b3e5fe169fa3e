use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tiebreak {
    Lex,
    Grevlex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Compare `⟨w, α⟩` first, then fall back to `tiebreak`.
    Weighted { weights: Vec<u64>, tiebreak: Tiebreak },
}

/// A monomial order together with a variable precedence:
/// `precedence[0]` is the largest variable, `precedence[n−1]` the smallest
/// (0-based variable indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, precedence: Vec<usize>) -> Result<Self> {
        let n = precedence.len();
        if n == 0 {
            return Err(Error::InvalidOrder("empty precedence".into()));
        }
        let mut seen = alloc::vec![false; n];
        for &v in &precedence {
            if v >= n || seen[v] {
                return Err(Error::InvalidOrder(format!("precedence {precedence:?} is not a permutation")));
            }
            seen[v] = true;
        }
        if let OrderKind::Weighted { weights, .. } = &kind {
            if weights.len() != n {
                return Err(Error::InvalidOrder(format!("{} weights for {n} variables", weights.len())));
            }
            if weights.contains(&0) {
                return Err(Error::InvalidOrder("weights must be positive".into()));
            }
        }
        Ok(MonomialOrder { kind, precedence })
    }

    /// `x_1 > x_2 > … > x_n`.
    pub fn natural(kind: OrderKind, n: usize) -> Result<Self> {
        MonomialOrder::new(kind, (0..n).collect())
    }

    pub fn lex(n: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, precedence: (0..n).collect() }
    }

    pub fn grevlex(n: usize) -> Self {
        MonomialOrder { kind: OrderKind::Grevlex, precedence: (0..n).collect() }
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn dim(&self) -> usize {
        self.precedence.len()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match &self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::Grevlex => self.grevlex_cmp(a, b),
            OrderKind::Weighted { weights, tiebreak } => {
                let w = |x: &[u32]| x.iter().zip(weights).map(|(&e, &w)| e as u128 * w as u128).sum::<u128>();
                w(a).cmp(&w(b)).then_with(|| match tiebreak {
                    Tiebreak::Lex => self.lex_cmp(a, b),
                    Tiebreak::Grevlex => self.grevlex_cmp(a, b),
                })
            }
        }
    }

    fn lex_cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.precedence
            .iter()
            .map(|&v| a[v].cmp(&b[v]))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    fn grevlex_cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let deg = |x: &[u32]| x.iter().map(|&e| e as u64).sum::<u64>();
        deg(a).cmp(&deg(b)).then_with(|| {
            self.precedence
                .iter()
                .rev()
                .map(|&v| b[v].cmp(&a[v]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}
