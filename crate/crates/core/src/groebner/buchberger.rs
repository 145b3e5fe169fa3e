//! Buchberger's algorithm over `Q`, producing reduced Gröbner bases.
//!
//! Pairs are processed by the normal strategy (smallest lcm degree first,
//! then smallest lcm in the monomial order, then by index), with the
//! coprime-leading-term criterion. All arithmetic is exact.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use super::order::MonomialOrder;
use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::lattice::ExponentVector;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Cap on elementary reduction steps across one run.
    pub max_reductions: u64,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_reductions: 100_000 }
    }
}

type Term = (Vec<u32>, Rational);

/// Terms sorted strictly decreasing in the order; never empty outside of
/// reduction results.
#[derive(Clone, Debug)]
struct Sorted(Vec<Term>);

struct Reducer<'a> {
    order: &'a MonomialOrder,
    steps: u64,
    cap: u64,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn sub_exp(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add_exp(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Sorted {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        Sorted(p.sorted_terms(order).into_iter().map(|(e, c)| (e.into_inner(), c)).collect())
    }

    fn to_poly(&self, n: usize) -> Polynomial {
        Polynomial::new(n, self.0.iter().map(|(e, c)| (ExponentVector::from(e.as_slice()), c.clone())))
            .expect("nonzero polynomial")
    }

    fn lead(&self) -> &Term {
        &self.0[0]
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn make_monic(&mut self) {
        let inv = self.0[0].1.recip();
        for (_, c) in &mut self.0 {
            *c *= &inv;
        }
    }

    /// `self − coeff · x^shift · other`, merging sorted term lists.
    fn sub_scaled(&self, coeff: &Rational, shift: &[u32], other: &Sorted, order: &MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut a = self.0.iter().peekable();
        let mut b = other.0.iter().map(|(e, c)| (add_exp(e, shift), -(c * coeff))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (e, c1) = a.next().unwrap().clone();
                        let (_, c2) = b.next().unwrap();
                        let c = c1 + c2;
                        if !c.is_zero() {
                            out.push((e, c));
                        }
                    }
                },
            }
        }
        Sorted(out)
    }
}

impl Reducer<'_> {
    fn step(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.cap {
            return Err(Error::Resource(alloc::format!("more than {} reduction steps", self.cap)));
        }
        Ok(())
    }

    /// Full reduction of `p` modulo `basis` (every term, not just the lead).
    fn reduce(&mut self, p: &Sorted, basis: &[&Sorted]) -> Result<Sorted> {
        let mut rest = p.clone();
        let mut done: Vec<Term> = Vec::new();
        while !rest.is_zero() {
            let (lead_e, lead_c) = rest.lead().clone();
            match basis.iter().find(|g| divides(&g.lead().0, &lead_e)) {
                Some(g) => {
                    self.step()?;
                    let shift = sub_exp(&lead_e, &g.lead().0);
                    let coeff = &lead_c / &g.lead().1;
                    rest = rest.sub_scaled(&coeff, &shift, g, self.order);
                }
                None => {
                    done.push((lead_e, lead_c));
                    rest.0.remove(0);
                }
            }
        }
        Ok(Sorted(done))
    }

    fn s_polynomial(&self, f: &Sorted, g: &Sorted) -> Sorted {
        let l = lcm(&f.lead().0, &g.lead().0);
        let sf = sub_exp(&l, &f.lead().0);
        let sg = sub_exp(&l, &g.lead().0);
        // (lcm/LT f)·f/lc(f) − (lcm/LT g)·g/lc(g)
        let zero = Sorted(Vec::new());
        let a = zero.sub_scaled(&-f.lead().1.recip(), &sf, f, self.order);
        a.sub_scaled(&g.lead().1.recip(), &sg, g, self.order)
    }
}

/// Reduced Gröbner basis of the ideal generated by `polys`, sorted by
/// decreasing leading monomial.
pub fn buchberger(polys: &[Polynomial], order: &MonomialOrder, config: &GroebnerConfig) -> Result<Vec<Polynomial>> {
    let n = check_inputs(polys, order)?;
    let mut red = Reducer { order, steps: 0, cap: config.max_reductions };
    let mut basis: Vec<Sorted> = Vec::new();
    for p in polys {
        let mut s = Sorted::from_poly(p, order);
        s.make_monic();
        basis.push(s);
    }
    let mut pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while !pairs.is_empty() {
        let pick = select_pair(&pairs, &basis, order);
        let (i, j) = pairs.swap_remove(pick);
        let (li, lj) = (&basis[i].lead().0, &basis[j].lead().0);
        if li.iter().zip(lj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let s = red.s_polynomial(&basis[i], &basis[j]);
        let refs: Vec<&Sorted> = basis.iter().collect();
        let mut r = red.reduce(&s, &refs)?;
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        let k = basis.len();
        basis.push(r);
        pairs.extend((0..k).map(|i| (i, k)));
    }
    let reduced = interreduce(basis, &mut red)?;
    Ok(reduced.iter().map(|s| s.to_poly(n)).collect())
}

fn check_inputs(polys: &[Polynomial], order: &MonomialOrder) -> Result<usize> {
    let first = polys.first().ok_or(Error::EmptyInput)?;
    let n = first.dim();
    if let Some(p) = polys.iter().find(|p| p.dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
    }
    if order.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: order.dim() });
    }
    Ok(n)
}

fn select_pair(pairs: &[(usize, usize)], basis: &[Sorted], order: &MonomialOrder) -> usize {
    let key = |&(i, j): &(usize, usize)| {
        let l = lcm(&basis[i].lead().0, &basis[j].lead().0);
        let d: u64 = l.iter().map(|&e| e as u64).sum();
        (d, l, i, j)
    };
    let mut best = 0;
    let mut best_key = key(&pairs[0]);
    for (idx, p) in pairs.iter().enumerate().skip(1) {
        let k = key(p);
        let better = k.0.cmp(&best_key.0).then_with(|| order.cmp(&k.1, &best_key.1)).then_with(|| (k.2, k.3).cmp(&(best_key.2, best_key.3)));
        if better == Ordering::Less {
            best = idx;
            best_key = k;
        }
    }
    best
}

/// Drops elements whose leading term is divisible by another's, then fully
/// reduces each survivor by the rest.
fn interreduce(mut basis: Vec<Sorted>, red: &mut Reducer<'_>) -> Result<Vec<Sorted>> {
    let order = red.order;
    basis.sort_by(|a, b| order.cmp(&a.lead().0, &b.lead().0));
    let mut minimal: Vec<Sorted> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| divides(&h.lead().0, &g.lead().0)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&Sorted> =
            minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g).collect();
        let mut r = red.reduce(&minimal[i], &others)?;
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(&b.lead().0, &a.lead().0));
    Ok(out)
}

/// Remainders of all pairwise S-polynomials modulo `basis`; all zero iff
/// `basis` is a Gröbner basis.
pub fn s_polynomial_residues(
    basis: &[Polynomial],
    order: &MonomialOrder,
    config: &GroebnerConfig,
) -> Result<Vec<Option<Polynomial>>> {
    let n = check_inputs(basis, order)?;
    let mut red = Reducer { order, steps: 0, cap: config.max_reductions };
    let sorted: Vec<Sorted> = basis.iter().map(|p| Sorted::from_poly(p, order)).collect();
    let refs: Vec<&Sorted> = sorted.iter().collect();
    let mut out = Vec::new();
    for j in 0..sorted.len() {
        for i in 0..j {
            let s = red.s_polynomial(&sorted[i], &sorted[j]);
            let r = red.reduce(&s, &refs)?;
            out.push(if r.is_zero() { None } else { Some(r.to_poly(n)) });
        }
    }
    Ok(out)
}

pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder, config: &GroebnerConfig) -> Result<bool> {
    Ok(s_polynomial_residues(basis, order, config)?.iter().all(Option::is_none))
}

/// Whether `basis` is reduced: monic leading coefficients and no term of
/// any element divisible by another element's leading monomial.
pub fn is_reduced(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let leads: Vec<(&ExponentVector, &Rational)> = basis.iter().map(|p| p.leading(order)).collect();
    leads.iter().all(|(_, c)| c.is_one())
        && basis.iter().enumerate().all(|(i, p)| {
            p.terms().all(|(e, _)| leads.iter().enumerate().all(|(j, (l, _))| j == i || !l.divides(e)))
        })
}
