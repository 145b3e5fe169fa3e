//! Monomial ideals as antichains of exponent vectors.
//!
//! An ideal `J ⊂ C[z_1, …, z_n]` generated by monomials is identified with
//! the inclusion-minimal set of exponents of its generators. Everything the
//! rest of the crate computes depends on `J` only through its Newton
//! polyhedron `P(J) = conv(generators) + R_+^n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lp::{LinearProgram, LpOutcome};
use crate::rational::{to_text, Rational};

/// Default cap on the total degree of any monomial produced by products
/// and powers.
pub const DEFAULT_DEGREE_CAP: u32 = 512;

/// Exponent `α` of the monomial `z^α = z_1^{α_1} ⋯ z_n^{α_n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(ExponentVector(entries))
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The `i`-th unit vector.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    /// Componentwise `self ≤ other`, i.e. `z^self` divides `z^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// The axis `i` when this is a pure power `z_i^k` with `k > 0`.
    pub fn pure_power_axis(&self) -> Option<usize> {
        let mut axis = None;
        for (i, &a) in self.0.iter().enumerate() {
            if a > 0 {
                if axis.is_some() {
                    return None;
                }
                axis = Some(i);
            }
        }
        axis
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl Deref for ExponentVector {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<&[u32]> for ExponentVector {
    fn from(v: &[u32]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// A point of `R_+^n` with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some(c) = coords.iter().find(|c| c.is_negative()) {
            return Err(Error::Negative(alloc::format!("coordinate {}", to_text(c))));
        }
        Ok(RationalPoint(coords))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// `⟨α, x⟩`.
    pub fn pairing(&self, alpha: &ExponentVector) -> Rational {
        let mut acc = Rational::zero();
        for (x, &a) in self.0.iter().zip(alpha.iter()) {
            if a != 0 {
                acc += x * Rational::from_integer(a.into());
            }
        }
        acc
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// A monomial ideal, stored as its minimal generators in lexicographic
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw`, discarding redundant
    /// generators.
    pub fn new(n: usize, raw: Vec<Vec<u32>>) -> Result<Self> {
        let raw = raw
            .into_iter()
            .map(ExponentVector::new)
            .collect::<Result<Vec<_>>>()?;
        normalize_generators(raw, n)
    }

    /// The maximal ideal `m = (z_1, …, z_n)`.
    pub fn maximal(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: (0..n).rev().map(|i| ExponentVector::unit(n, i)).collect(),
        }
    }

    /// The diagonal ideal `(z_1^{a_1}, …, z_n^{a_n})`.
    pub fn diagonal(a: &[u32]) -> Result<Self> {
        let n = a.len();
        let raw = a
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                let mut v = vec![0; n];
                v[i] = k;
                v
            })
            .collect();
        MonomialIdeal::new(n, raw)
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, generators: vec![ExponentVector::zero(n)] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    pub fn min_degree(&self) -> u64 {
        self.generators.iter().map(|g| g.degree()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> u64 {
        self.generators.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// For each axis `i`, the smallest `k` with `z_i^k ∈ J`, if any.
    pub fn pure_powers(&self) -> Vec<Option<u32>> {
        let mut out = vec![None; self.n];
        for g in &self.generators {
            if let Some(i) = g.pure_power_axis() {
                out[i] = Some(out[i].map_or(g[i], |k: u32| k.min(g[i])));
            }
        }
        out
    }

    /// The ideal generated by every generator multiplied by `k`.
    pub fn scale_exponents(&self, k: u32) -> Result<Self> {
        let raw = self
            .generators
            .iter()
            .map(|g| {
                g.iter()
                    .map(|&a| a.checked_mul(k))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::Resource("exponent overflow".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.n, raw)
    }

    /// `self ⊆ other`: every generator of `self` lies in `other`.
    pub fn is_contained_in(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n
            && self.generators.iter().all(|g| other.generators.iter().any(|h| h.divides(g)))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

/// Minimal generating set of the ideal spanned by `raw`, sorted
/// lexicographically.
pub fn normalize_generators(raw: Vec<ExponentVector>, n: usize) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(bad) = raw.iter().find(|v| v.dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: bad.dim() });
    }
    Ok(MonomialIdeal { n, generators: minimal_antichain(raw) })
}

/// Drops every vector that is componentwise `≥` another one.
pub(crate) fn minimal_antichain(mut raw: Vec<ExponentVector>) -> Vec<ExponentVector> {
    // A divisor never has larger degree, so scanning by degree means every
    // potential divisor of a candidate has already been kept or discarded.
    raw.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    raw.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for v in raw {
        if !kept.iter().any(|k| k.divides(&v)) {
            kept.push(v);
        }
    }
    kept.sort();
    kept
}

/// Whether `z^β ∈ J`.
pub fn contains_monomial(ideal: &MonomialIdeal, beta: &ExponentVector) -> Result<bool> {
    if beta.dim() != ideal.n {
        return Err(Error::DimensionMismatch { expected: ideal.n, found: beta.dim() });
    }
    Ok(ideal.generators.iter().any(|g| g.divides(beta)))
}

/// True iff `J` contains a pure power of every variable, i.e. `V(J) = {0}`
/// near the origin and the colength is finite.
pub fn is_isolated_zero(ideal: &MonomialIdeal) -> bool {
    ideal.pure_powers().iter().all(Option::is_some)
}

/// `dim C[[z]]/J`: the number of monomials outside `J`.
pub fn colength(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_unit() {
        return Ok(0);
    }
    if !is_isolated_zero(ideal) {
        return Err(Error::InfiniteColength);
    }
    let gens: Vec<Vec<u32>> = ideal.generators.iter().map(|g| g.to_vec()).collect();
    count_outside(gens)
}

/// Counts lattice points outside the monomial ideal spanned by `gens` by
/// slicing along the last coordinate: the slice `β_n = k` is the ideal in
/// one variable fewer generated by the projections of `{α : α_n ≤ k}`.
fn count_outside(mut gens: Vec<Vec<u32>>) -> Result<u64> {
    let n = gens[0].len();
    if n == 1 {
        return Ok(gens.iter().map(|g| g[0] as u64).min().unwrap_or(0));
    }
    gens.sort_by_key(|g| g[n - 1]);
    let overflow = || Error::Resource("colength overflow".into());
    let mut total: u64 = 0;
    let mut slice: Vec<Vec<u32>> = Vec::new();
    let mut i = 0;
    while i < gens.len() {
        let level = gens[i][n - 1];
        while i < gens.len() && gens[i][n - 1] == level {
            slice.push(gens[i][..n - 1].to_vec());
            i += 1;
        }
        slice = minimal_antichain(slice.into_iter().map(ExponentVector).collect())
            .into_iter()
            .map(ExponentVector::into_inner)
            .collect();
        let width = match gens.get(i) {
            Some(next) => (next[n - 1] - level) as u64,
            None => {
                debug_assert!(slice.len() == 1 && slice[0].iter().all(|&a| a == 0));
                0
            }
        };
        if width > 0 {
            let below = count_outside(slice.clone())?;
            total = below
                .checked_mul(width)
                .and_then(|w| total.checked_add(w))
                .ok_or_else(overflow)?;
        }
    }
    // Slices below the smallest last coordinate are unconstrained; the
    // caller has already ruled that out via the pure power of z_n.
    Ok(total)
}

/// `m^r · J^t`, generators normalized.
pub fn scale_and_multiply(ideal: &MonomialIdeal, t: u32, r: u32, degree_cap: u32) -> Result<MonomialIdeal> {
    let n = ideal.n;
    let mut acc = vec![ExponentVector::zero(n)];
    for _ in 0..t {
        acc = product(&acc, &ideal.generators, degree_cap)?;
    }
    let maximal = MonomialIdeal::maximal(n);
    for _ in 0..r {
        acc = product(&acc, &maximal.generators, degree_cap)?;
    }
    normalize_generators(acc, n)
}

fn product(a: &[ExponentVector], b: &[ExponentVector], degree_cap: u32) -> Result<Vec<ExponentVector>> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            let sum = x
                .checked_add(y)
                .filter(|s| s.degree() <= degree_cap as u64)
                .ok_or_else(|| {
                    Error::Resource(alloc::format!("monomial degree exceeds cap {degree_cap}"))
                })?;
            out.push(sum);
        }
    }
    Ok(minimal_antichain(out))
}

/// Whether `q ∈ P(J)`: some convex combination of generators is `≤ q`.
pub fn newton_membership(ideal: &MonomialIdeal, q: &RationalPoint) -> Result<bool> {
    if q.dim() != ideal.n {
        return Err(Error::DimensionMismatch { expected: ideal.n, found: q.dim() });
    }
    // Variables: λ_1..λ_K, then slacks w_1..w_n.
    //   Σ_k λ_k α_{k,i} + w_i = q_i,   Σ_k λ_k = 1.
    let k = ideal.generators.len();
    let n = ideal.n;
    let mut lp = LinearProgram::new(k + n);
    for i in 0..n {
        let mut row = vec![Rational::zero(); k + n];
        for (j, g) in ideal.generators.iter().enumerate() {
            row[j] = Rational::from_integer(g[i].into());
        }
        row[k + i] = Rational::from_integer(1.into());
        lp.add_equality(row, q.coords()[i].clone());
    }
    let mut row = vec![Rational::zero(); k + n];
    for x in row.iter_mut().take(k) {
        *x = Rational::from_integer(1.into());
    }
    lp.add_equality(row, Rational::from_integer(1.into()));
    Ok(matches!(lp.feasible_point(), LpOutcome::Optimal { .. }))
}
