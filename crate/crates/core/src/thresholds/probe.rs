//! Floating-point sanity check of integrability of `e^{-2cφ}` near 0.
//!
//! In logarithmic coordinates `|z_j| = e^{-x_j}` the integral becomes
//! `∫_{R_+^n} exp(2c·ν(x) − 2Σ_j x_j) dx` up to constants, with
//! `ν(x) = min_α ⟨α, x⟩`. We integrate over growing boxes `[0, R]^n` with
//! a tensor trapezoid rule and look at how the estimates grow. This is a
//! heuristic, never a certificate.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lattice::MonomialIdeal;
use crate::rational::{to_f64, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeConfig {
    /// Grid points per axis.
    pub grid: usize,
    /// Box sizes `R`, increasing.
    pub schedule: Vec<f64>,
    /// Ratio tolerance `θ ∈ (0, 1)`.
    pub tolerance: f64,
    /// Cap on integrand evaluations per box; exceeding it yields
    /// `Inconclusive`.
    pub max_evaluations: u64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            grid: 1 << 7,
            schedule: vec![4.0, 8.0, 16.0],
            tolerance: 0.05,
            max_evaluations: 1 << 28,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeVerdict {
    Converges,
    Diverges,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeReport {
    pub verdict: ProbeVerdict,
    /// `(R, I(c, R))` for every box that was integrated.
    pub trail: Vec<(f64, f64)>,
}

pub fn numeric_integrability_probe(
    ideal: &MonomialIdeal,
    c: &Rational,
    config: &ProbeConfig,
) -> Result<ProbeReport> {
    ideal.require_proper()?;
    if !c.is_positive() {
        return Err(Error::NonPositive("probe exponent c".into()));
    }
    let increasing = config.schedule.windows(2).all(|w| w[0] < w[1]);
    let bad_schedule = config.schedule.is_empty() || !increasing || !(config.schedule[0] > 0.0);
    if config.grid < 2 || bad_schedule || !(0.0 < config.tolerance && config.tolerance < 1.0) {
        return Err(Error::Unsupported("probe configuration".into()));
    }
    let n = ideal.dim();
    let evaluations = (config.grid as u64).checked_pow(n as u32);
    if evaluations.is_none_or(|e| e > config.max_evaluations) {
        return Ok(ProbeReport { verdict: ProbeVerdict::Inconclusive, trail: Vec::new() });
    }
    let c = to_f64(c);
    let gens: Vec<Vec<f64>> =
        ideal.generators().iter().map(|g| g.iter().map(|&a| a as f64).collect()).collect();
    let trail: Vec<(f64, f64)> =
        config.schedule.iter().map(|&r| (r, box_integral(&gens, n, c, r, config.grid))).collect();
    let verdict = classify(&trail, config.tolerance);
    Ok(ProbeReport { verdict, trail })
}

/// Decides from the growth of successive estimates.
///
/// Converging: the last ratio `I_{k+1}/I_k` is within `1 + θ`, or the mean
/// integrand density over the last shell `[R_k, R_{k+1}]` has dropped by at
/// least a factor `1 − θ` against the shell before it. Diverging: the last
/// ratio exceeds `1 + θ` and the shell density grew by at least `1 + θ`.
/// At the threshold itself the density tends to a constant along the
/// extremal ray, which is the neutral case.
fn classify(trail: &[(f64, f64)], tolerance: f64) -> ProbeVerdict {
    if trail.len() < 2 || trail.iter().any(|&(_, v)| !v.is_finite() || v <= 0.0) {
        return ProbeVerdict::Inconclusive;
    }
    let k = trail.len();
    let ratio = trail[k - 1].1 / trail[k - 2].1;
    if ratio <= 1.0 + tolerance {
        return ProbeVerdict::Converges;
    }
    if k < 3 {
        return ProbeVerdict::Inconclusive;
    }
    let density = |i: usize| (trail[i].1 - trail[i - 1].1) / (trail[i].0 - trail[i - 1].0);
    let (last, prev) = (density(k - 1), density(k - 2));
    if !(prev > 0.0) {
        return ProbeVerdict::Inconclusive;
    }
    let growth = last / prev;
    if growth <= 1.0 - tolerance {
        ProbeVerdict::Converges
    } else if growth >= 1.0 + tolerance {
        ProbeVerdict::Diverges
    } else {
        ProbeVerdict::Inconclusive
    }
}

/// Tensor trapezoid rule on `[0, r]^n` with `grid` points per axis, summed
/// in a fixed lexicographic order.
fn box_integral(gens: &[Vec<f64>], n: usize, c: f64, r: f64, grid: usize) -> f64 {
    let h = r / (grid - 1) as f64;
    let weight = |i: usize| if i == 0 || i == grid - 1 { h / 2.0 } else { h };
    let mut index = vec![0usize; n];
    let mut total = 0.0;
    loop {
        let mut w = 1.0;
        let mut sum = 0.0;
        for &i in &index {
            w *= weight(i);
            sum += i as f64 * h;
        }
        let nu = gens
            .iter()
            .map(|g| g.iter().zip(&index).map(|(a, &i)| a * i as f64 * h).sum::<f64>())
            .fold(f64::INFINITY, f64::min);
        total += w * libm::exp(2.0 * c * nu - 2.0 * sum);
        // Odometer increment, last axis fastest.
        let mut axis = n;
        loop {
            if axis == 0 {
                return total;
            }
            axis -= 1;
            index[axis] += 1;
            if index[axis] < grid {
                break;
            }
            index[axis] = 0;
        }
    }
}
