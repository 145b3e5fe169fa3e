use alloc::vec;
use alloc::vec::Vec;

use super::FitConfig;
use crate::error::{Error, Result};
use crate::lattice::{is_isolated_zero, MonomialIdeal};

/// `L(r, t) = colength(m^r J^t)` on a rectangle of `(r, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    pub n: usize,
    pub r_base: u32,
    pub t_base: u32,
    /// `values[r - r_base][t - t_base]`.
    pub values: Vec<Vec<u64>>,
}

impl HilbertTable {
    pub fn get(&self, r: u32, t: u32) -> Option<u64> {
        let (i, j) = (r.checked_sub(self.r_base)?, t.checked_sub(self.t_base)?);
        self.values.get(i as usize)?.get(j as usize).copied()
    }

    /// `(r, t, L)` triples in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.values.iter().enumerate().flat_map(move |(i, row)| {
            row.iter().enumerate().map(move |(j, &v)| (self.r_base + i as u32, self.t_base + j as u32, v))
        })
    }

    /// `[Δ_r^{n-j} Δ_t^j L](r, t)` for `j = 0..=n`, forward differences.
    ///
    /// Panics if the stencil `[r, r + n] × [t, t + n]` leaves the table.
    pub fn mixed_differences(&self, r: u32, t: u32) -> Vec<i128> {
        let n = self.n;
        (0..=n)
            .map(|j| {
                let mut acc: i128 = 0;
                for p in 0..=n - j {
                    for q in 0..=j {
                        let sign = if (n - j - p + j - q) % 2 == 0 { 1 } else { -1 };
                        let coeff = binomial(n - j, p) * binomial(j, q);
                        let value = self.get(r + p as u32, t + q as u32).expect("stencil inside table");
                        acc += sign * coeff * value as i128;
                    }
                }
                acc
            })
            .collect()
    }
}

fn binomial(a: usize, b: usize) -> i128 {
    (0..b).fold(1i128, |acc, i| acc * (a - i) as i128 / (i as i128 + 1))
}

/// Tabulates `L(r, t)` for `r, t ∈ [base, base + window]`.
pub fn hilbert_table(ideal: &MonomialIdeal, base: u32, window: u32, config: &FitConfig) -> Result<HilbertTable> {
    hilbert_block(ideal, (base, window), (base, window), config)
}

/// Tabulates `L(r, t)` for `r ∈ [r_base, r_base + r_window]` and
/// `t ∈ [t_base, t_base + t_window]` by lattice counting.
///
/// With `g_t(β) = min{|γ| : z^γ ∈ J^t, γ ≤ β}`, a monomial `z^β` lies in
/// `m^r J^t` iff `|β| − g_t(β) ≥ r`. The function `g_t` satisfies
/// `g_t(β) = min_α (|α| + g_{t−1}(β − α))` over generators `α ≤ β`, so one
/// sweep per `t` over a fixed box yields the whole row `L(·, t)` from a
/// histogram of `|β| − g_t(β)`. The box `Π [0, k_i T + R)` (with `z_i^{k_i}`
/// the pure powers in `J`) contains every monomial outside `m^R J^T`.
pub fn hilbert_block(
    ideal: &MonomialIdeal,
    (r_base, r_window): (u32, u32),
    (t_base, t_window): (u32, u32),
    config: &FitConfig,
) -> Result<HilbertTable> {
    ideal.require_proper()?;
    if !is_isolated_zero(ideal) {
        return Err(Error::InfiniteColength);
    }
    let n = ideal.dim();
    let overflow = || Error::Resource("table range overflow".into());
    let r_top = r_base.checked_add(r_window).ok_or_else(overflow)?;
    let t_top = t_base.checked_add(t_window).ok_or_else(overflow)?;
    let max_degree = r_top as u64 + t_top as u64 * ideal.max_degree();
    if max_degree > config.degree_cap as u64 {
        return Err(Error::Resource(alloc::format!(
            "monomials of degree {max_degree} exceed cap {}",
            config.degree_cap
        )));
    }
    let powers: Vec<u64> = ideal.pure_powers().into_iter().map(|k| k.unwrap() as u64).collect();
    let dims: Vec<usize> = powers.iter().map(|&k| (k * t_top as u64 + r_top as u64).max(1) as usize).collect();
    let cells = dims.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d as u64));
    let cells = match cells {
        Some(c) if c <= config.max_cells => c as usize,
        _ => return Err(Error::Resource(alloc::format!("lattice box exceeds {} cells", config.max_cells))),
    };
    let degree_sum: u64 = dims.iter().map(|&d| d as u64).sum();
    if degree_sum >= u16::MAX as u64 {
        return Err(Error::Resource("box degrees exceed 16 bits".into()));
    }
    const INF: u16 = u16::MAX;

    let mut strides = vec![1usize; n];
    for i in (0..n.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let gens: Vec<(Vec<usize>, usize, u16)> = ideal
        .generators()
        .iter()
        .map(|g| {
            let coords: Vec<usize> = g.iter().map(|&a| a as usize).collect();
            let offset = coords.iter().zip(&strides).map(|(a, s)| a * s).sum();
            (coords, offset, g.degree() as u16)
        })
        .collect();

    let mut values = vec![vec![0u64; (t_window + 1) as usize]; (r_window + 1) as usize];
    let mut prev = vec![0u16; cells];
    let mut next = vec![INF; cells];
    let mut hist = vec![0u64; r_top as usize + 1];
    for t in 0..=t_top {
        if t > 0 {
            let mut coords = vec![0usize; n];
            for (idx, slot) in next.iter_mut().enumerate() {
                let mut best = INF;
                for (alpha, offset, degree) in &gens {
                    if alpha.iter().zip(&coords).all(|(a, b)| a <= b) {
                        let p = prev[idx - offset];
                        if p != INF {
                            best = best.min(p + degree);
                        }
                    }
                }
                *slot = best;
                advance(&mut coords, &dims);
            }
            core::mem::swap(&mut prev, &mut next);
        }
        if t < t_base {
            continue;
        }
        // prev now holds g_t.
        hist.iter_mut().for_each(|h| *h = 0);
        let mut outside = 0u64;
        let mut coords = vec![0usize; n];
        for &g in prev.iter() {
            if g == INF {
                outside += 1;
            } else {
                let degree: usize = coords.iter().sum();
                let d = degree - g as usize;
                if d < hist.len() {
                    hist[d] += 1;
                }
            }
            advance(&mut coords, &dims);
        }
        // L(r, t) = outside + #{d < r}.
        let mut below = 0u64;
        for r in 0..=r_top {
            if r >= r_base {
                values[(r - r_base) as usize][(t - t_base) as usize] = outside + below;
            }
            below += hist[r as usize];
        }
    }
    Ok(HilbertTable { n, r_base, t_base, values })
}

fn advance(coords: &mut [usize], dims: &[usize]) {
    for axis in (0..coords.len()).rev() {
        coords[axis] += 1;
        if coords[axis] < dims[axis] {
            return;
        }
        coords[axis] = 0;
    }
}
