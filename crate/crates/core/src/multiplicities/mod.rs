//! Mixed multiplicities `e_0, …, e_n` of `(m, J)` for an isolated-zero
//! monomial ideal `J`.
//!
//! For large `r, t` the colength `L(r, t) = dim C[[z]]/(m^r J^t)` is a
//! polynomial of total degree `n` whose top form is
//! `Σ_j e_j r^{n-j} t^j / ((n-j)! j!)`. The mixed finite difference
//! `Δ_r^{n-j} Δ_t^j L` is therefore eventually the constant `e_j`; we
//! tabulate `L` exactly and read the differences off once they stabilize.

mod covolume;
mod hilbert;

pub use covolume::covolume_times_factorial;
pub use hilbert::{hilbert_block, hilbert_table, HilbertTable};

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{pow, Zero};

use crate::error::{Error, Result};
use crate::lattice::{is_isolated_zero, MonomialIdeal, DEFAULT_DEGREE_CAP};

/// `e_0 = 1, e_1, …, e_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicitySequence(Vec<u64>);

impl MultiplicitySequence {
    /// Accepts any nonnegative sequence with `e_0 = 1` and `n ≥ 1`; the
    /// inequalities a genuine sequence satisfies are checked separately by
    /// [`validate_sequence`].
    pub fn new(e: Vec<u64>) -> Result<Self> {
        if e.len() < 2 {
            return Err(Error::InvalidSequence("need at least e_0 and e_1".into()));
        }
        if e[0] != 1 {
            return Err(Error::InvalidSequence(format!("e_0 = {} (must be 1)", e[0])));
        }
        Ok(MultiplicitySequence(e))
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    /// The ambient dimension `n` (the sequence has `n + 1` entries).
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn e(&self, j: usize) -> u64 {
        self.0[j]
    }
}

/// `e_j = a_1 ⋯ a_j` for the diagonal ideal `(z_j^{a_j})`.
pub fn diagonal_mults(a: &[u64]) -> Result<MultiplicitySequence> {
    if a.is_empty() {
        return Err(Error::ZeroDimension);
    }
    if a.contains(&0) {
        return Err(Error::NonPositive("diagonal exponent".into()));
    }
    if a.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Unsorted);
    }
    let mut e = Vec::with_capacity(a.len() + 1);
    e.push(1u64);
    for &k in a {
        let next = e.last().unwrap().checked_mul(k).ok_or_else(|| Error::Resource("product overflow".into()))?;
        e.push(next);
    }
    MultiplicitySequence::new(e)
}

/// Search policy for the Hilbert fit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitConfig {
    /// First base point in `r`; `None` starts at `Σ (k_i − 1)` over the
    /// pure powers `z_i^{k_i}`.
    pub start_base: Option<u32>,
    /// Largest base point tried before giving up.
    pub max_base: u32,
    /// Number of consecutive base points whose differences must agree.
    pub agreement: u32,
    pub degree_cap: u32,
    /// Cap on the lattice box used to tabulate one Hilbert table.
    pub max_cells: u64,
}

impl Default for FitConfig {
    fn default() -> Self {
        FitConfig { start_base: None, max_base: 64, agreement: 3, degree_cap: DEFAULT_DEGREE_CAP, max_cells: 1 << 25 }
    }
}

/// Values of `t` at which the differences are compared.
const T_PROBES: u32 = 3;

/// Mixed multiplicities by stabilized finite differences of the colength
/// of `m^r J^t`.
///
/// `L(r, t)` is a polynomial once `r` passes a threshold that does not
/// depend on `t`, so only `r` needs to grow: the base `b` starts at
/// `Σ (k_i − 1)` over the pure powers `z_i^{k_i}` and doubles up to
/// `max_base`. At each base the differences at `(b + i, t)` for
/// `i < agreement` and `t < 3` must all coincide.
pub fn mixed_multiplicities(ideal: &MonomialIdeal, config: &FitConfig) -> Result<MultiplicitySequence> {
    fit_multiplicities(ideal, config).map(|(e, _)| e)
}

/// As [`mixed_multiplicities`], also returning the table the fit was read
/// from.
pub fn fit_multiplicities(ideal: &MonomialIdeal, config: &FitConfig) -> Result<(MultiplicitySequence, HilbertTable)> {
    ideal.require_proper()?;
    if !is_isolated_zero(ideal) {
        return Err(Error::InfiniteColength);
    }
    if config.agreement == 0 {
        return Err(Error::InvalidSequence("agreement must be positive".into()));
    }
    let n = ideal.dim() as u32;
    let r_window = n + config.agreement - 1;
    let t_window = n + T_PROBES - 1;
    let socle: u64 = ideal.pure_powers().into_iter().map(|k| k.unwrap() as u64 - 1).sum();
    let mut base = config.start_base.unwrap_or(socle.min(config.max_base as u64) as u32);
    loop {
        let table = hilbert_block(ideal, (base, r_window), (0, t_window), config)?;
        let mut diffs = (0..config.agreement)
            .flat_map(|i| (0..T_PROBES).map(move |t| (base + i, t)))
            .map(|(r, t)| table.mixed_differences(r, t));
        let first = diffs.next().expect("agreement > 0");
        if diffs.all(|d| d == first) {
            if first[0] != 1 || first.iter().any(|&v| v < 0) {
                return Err(Error::InvalidSequence(format!("fit produced {first:?}")));
            }
            let e = MultiplicitySequence::new(first.iter().map(|&v| v as u64).collect())?;
            return Ok((e, table));
        }
        if base >= config.max_base {
            return Err(Error::UnstableFit { reached: base, partial: alloc::boxed::Box::new(table) });
        }
        base = (base * 2).max(base + 1).min(config.max_base);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InequalityFamily {
    /// `e_j² ≤ e_{j-1} e_{j+1}`.
    LogConvexity,
    /// `e_1^j ≤ e_j`.
    PowerBound,
    /// `e_k^{l-j} ≤ e_j^{l-k} e_l^{k-j}` for `j < k < l`.
    Interpolation,
}

/// One exact check `lhs ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityCheck {
    pub family: InequalityFamily,
    pub indices: Vec<usize>,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SequenceReport {
    pub checks: Vec<InequalityCheck>,
}

impl SequenceReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn family_passes(&self, family: InequalityFamily) -> bool {
        self.checks.iter().filter(|c| c.family == family).all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &InequalityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Checks log-convexity, the power bounds and the interpolation
/// inequalities, all in exact integer arithmetic.
pub fn validate_sequence(e: &MultiplicitySequence) -> SequenceReport {
    let v: Vec<BigUint> = e.values().iter().map(|&x| BigUint::from(x)).collect();
    let n = e.dim();
    let mut checks = Vec::new();
    let mut push = |family, indices: Vec<usize>, lhs: BigUint, rhs: BigUint| {
        let holds = lhs <= rhs;
        checks.push(InequalityCheck { family, indices, lhs, rhs, holds });
    };
    for j in 1..n {
        push(InequalityFamily::LogConvexity, alloc::vec![j], &v[j] * &v[j], &v[j - 1] * &v[j + 1]);
    }
    for j in 1..=n {
        push(InequalityFamily::PowerBound, alloc::vec![j], pow(v[1].clone(), j), v[j].clone());
    }
    for j in 0..=n {
        for k in j + 1..=n {
            for l in k + 1..=n {
                let lhs = pow(v[k].clone(), l - j);
                let rhs = pow(v[j].clone(), l - k) * pow(v[l].clone(), k - j);
                push(InequalityFamily::Interpolation, alloc::vec![j, k, l], lhs, rhs);
            }
        }
    }
    debug_assert!(checks.iter().all(|c| !c.lhs.is_zero() || c.holds));
    SequenceReport { checks }
}
