//! Log canonical thresholds of monomial ideals.
//!
//! For `φ = ½ log Σ_α |z^α|²` the refined Lelong number in the direction
//! `x ∈ R_+^n` is `ν(x) = min_α ⟨α, x⟩`, and the threshold is
//! `c = 1 / max_{x ∈ Σ} ν(x)` over the standard simplex `Σ`. That max-min
//! problem is solved as an exact LP. The dual LP (the largest `c` with
//! `(1, …, 1) ∈ c·P(J)`) is solved independently as a cross-check.

mod probe;

pub use probe::{numeric_integrability_probe, ProbeConfig, ProbeReport, ProbeVerdict};

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{is_isolated_zero, MonomialIdeal, RationalPoint};
use crate::lp::{LinearProgram, LpOutcome};
use crate::rational::{require_positive, Rational};

/// Threshold `c`, a maximizer `x⁰` of `ν` on the simplex, and `ν(x⁰)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LctCertificate {
    pub c: Rational,
    pub x0: RationalPoint,
    pub nu: Rational,
    /// False when `J` has no isolated zero; `c` is still exact, but
    /// multiplicity data does not exist for such ideals.
    pub isolated: bool,
}

impl LctCertificate {
    /// Re-evaluates the certificate against `J`: `x⁰` lies on the simplex,
    /// `c·ν = 1`, and `ν = ν_J(x⁰)`.
    pub fn check(&self, ideal: &MonomialIdeal) -> bool {
        self.x0.sum().is_one()
            && (&self.c * &self.nu).is_one()
            && refined_lelong(ideal, &self.x0).is_ok_and(|nu| nu == self.nu)
    }
}

/// Positive weights `0 < a_1 ≤ … ≤ a_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalWeights(Vec<Rational>);

impl DiagonalWeights {
    /// Validates positivity and sorts ascending.
    pub fn new(mut a: Vec<Rational>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::ZeroDimension);
        }
        for w in &a {
            require_positive(w, "diagonal weight")?;
        }
        a.sort();
        Ok(DiagonalWeights(a))
    }

    pub fn from_integers(a: &[u32]) -> Result<Self> {
        DiagonalWeights::new(a.iter().map(|&k| Rational::from_integer(k.into())).collect())
    }

    pub fn weights(&self) -> &[Rational] {
        &self.0
    }
}

/// Diagonal weights of the worst diagonal minorant, with `permutation[k]`
/// the coordinate whose weight ended up at sorted position `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalMinorant {
    pub weights: DiagonalWeights,
    pub permutation: Vec<usize>,
}

/// `ν_J(x) = min_α ⟨α, x⟩`. The unit ideal gives 0 everywhere.
pub fn refined_lelong(ideal: &MonomialIdeal, x: &RationalPoint) -> Result<Rational> {
    if x.dim() != ideal.dim() {
        return Err(Error::DimensionMismatch { expected: ideal.dim(), found: x.dim() });
    }
    Ok(ideal
        .generators()
        .iter()
        .map(|g| x.pairing(g))
        .min()
        .expect("ideal has generators"))
}

/// Threshold via `max_{x ∈ Σ} min_α ⟨α, x⟩`, returning the lexicographically
/// smallest maximizer.
pub fn kiselman_lct(ideal: &MonomialIdeal) -> Result<LctCertificate> {
    ideal.require_proper()?;
    let n = ideal.dim();
    let k = ideal.generators().len();
    // Variables: x_1..x_n, s, then surplus w_1..w_K with ⟨α_k, x⟩ - s - w_k = 0.
    let vars = n + 1 + k;
    let mut lp = LinearProgram::new(vars);
    for (idx, g) in ideal.generators().iter().enumerate() {
        let mut row = vec![Rational::zero(); vars];
        for i in 0..n {
            row[i] = Rational::from_integer(g[i].into());
        }
        row[n] = -Rational::one();
        row[n + 1 + idx] = -Rational::one();
        lp.add_equality(row, Rational::zero());
    }
    let mut simplex = vec![Rational::zero(); vars];
    for x in simplex.iter_mut().take(n) {
        *x = Rational::one();
    }
    lp.add_equality(simplex, Rational::one());
    let mut objective = vec![Rational::zero(); vars];
    objective[n] = -Rational::one();
    lp.set_objective(objective);
    let lex: Vec<usize> = (0..n).collect();
    let (x, value) = match lp.lex_min_optimal(&lex) {
        LpOutcome::Optimal { x, value } => (x, value),
        // Σ is compact and nonempty and s ≤ max degree on it.
        other => unreachable!("threshold LP: {other:?}"),
    };
    let nu = -value;
    // At the barycenter ν = min|α|/n > 0 for a proper ideal, so s* > 0.
    debug_assert!(nu.is_positive());
    let x0 = RationalPoint::new(x[..n].to_vec())?;
    Ok(LctCertificate { c: nu.recip(), x0, nu, isolated: is_isolated_zero(ideal) })
}

/// Threshold via the dual: `1 / min_{λ ∈ Σ_K} max_i (Σ_k λ_k α_k)_i`.
pub fn howald_lct(ideal: &MonomialIdeal) -> Result<Rational> {
    ideal.require_proper()?;
    let n = ideal.dim();
    let k = ideal.generators().len();
    // Variables: λ_1..λ_K, u, slacks v_1..v_n with Σ_k λ_k α_{k,i} - u + v_i = 0.
    let vars = k + 1 + n;
    let mut lp = LinearProgram::new(vars);
    for i in 0..n {
        let mut row = vec![Rational::zero(); vars];
        for (idx, g) in ideal.generators().iter().enumerate() {
            row[idx] = Rational::from_integer(g[i].into());
        }
        row[k] = -Rational::one();
        row[k + 1 + i] = Rational::one();
        lp.add_equality(row, Rational::zero());
    }
    let mut simplex = vec![Rational::zero(); vars];
    for x in simplex.iter_mut().take(k) {
        *x = Rational::one();
    }
    lp.add_equality(simplex, Rational::one());
    let mut objective = vec![Rational::zero(); vars];
    objective[k] = Rational::one();
    lp.set_objective(objective);
    match lp.minimize() {
        LpOutcome::Optimal { value, .. } => Ok(value.recip()),
        other => unreachable!("dual threshold LP: {other:?}"),
    }
}

/// `Σ_j 1/a_j`, the threshold of `½ log Σ_j |z_j|^{2a_j}`.
pub fn diagonal_lct(a: &DiagonalWeights) -> Rational {
    a.0.iter().fold(Rational::zero(), |acc, w| acc + w.recip())
}

/// Diagonal weights `a_j = ν(x⁰)/x⁰_j` of the comparison function
/// `ψ = ν(x⁰) max_j log|z_j| / x⁰_j`, which satisfies `φ ≤ ψ` and
/// `c(ψ) = c(φ)`.
pub fn worst_diagonal_minorant(ideal: &MonomialIdeal) -> Result<DiagonalMinorant> {
    let cert = kiselman_lct(ideal)?;
    minorant_from_certificate(&cert)
}

pub fn minorant_from_certificate(cert: &LctCertificate) -> Result<DiagonalMinorant> {
    let coords = cert.x0.coords();
    if let Some(j) = coords.iter().position(Zero::is_zero) {
        return Err(Error::MinorantDegenerate(j));
    }
    let mut pairs: Vec<(Rational, usize)> =
        coords.iter().enumerate().map(|(j, x)| (&cert.nu / x, j)).collect();
    pairs.sort();
    let permutation = pairs.iter().map(|(_, j)| *j).collect();
    let weights = DiagonalWeights::new(pairs.into_iter().map(|(a, _)| a).collect())?;
    Ok(DiagonalMinorant { weights, permutation })
}
