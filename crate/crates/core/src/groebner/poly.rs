use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::lattice::ExponentVector;
use crate::rational::{to_text, Rational};

/// A nonzero polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    /// Combines like terms and drops zero coefficients.
    pub fn new(n: usize, terms: impl IntoIterator<Item = (ExponentVector, Rational)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut map: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: e.dim() });
            }
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Polynomial { n, terms: map })
    }

    pub fn monomial(exponent: ExponentVector) -> Self {
        let n = exponent.dim();
        let mut terms = BTreeMap::new();
        terms.insert(exponent, Rational::one());
        Polynomial { n, terms }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Option<&Rational> {
        self.terms.get(e)
    }

    pub fn constant_term(&self) -> Option<&Rational> {
        self.terms.get(&ExponentVector::zero(self.n))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading exponent and coefficient under `order`.
    pub fn leading(&self, order: &MonomialOrder) -> (&ExponentVector, &Rational) {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .expect("polynomial is nonzero")
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(ExponentVector, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    /// Renders terms in the given order, e.g. `x1^2 - 2/3*x1*x2 + 5`.
    pub fn to_string_ordered(&self, order: &MonomialOrder) -> String {
        let mut out = String::new();
        for (i, (e, c)) in self.sorted_terms(order).iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.is_zero() {
                factors.push(to_text(&abs));
            }
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(alloc::format!("x{}", v + 1)),
                    k => factors.push(alloc::format!("x{}^{k}", v + 1)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_ordered(&MonomialOrder::grevlex(self.n)))
    }
}
