//! Seeded random inputs and the bulk verification sweep.
//!
//! All randomness comes from `ChaCha8Rng` seeded with the run seed, and all
//! inputs are drawn up front on one thread, so a sweep is reproducible
//! across platforms and thread counts.

use lct_core::bounds::{d_membership, f_value};
use lct_core::multiplicities::FitConfig;
use lct_core::rational::to_text;
use lct_core::thresholds::{numeric_integrability_probe, ProbeConfig, ProbeVerdict};
use lct_core::{ExtRational, MonomialIdeal, Rational};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::is_resource;
use crate::format;
use crate::report::ideal_report;

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub dim: usize,
    pub max_degree: u32,
    pub count: usize,
    /// When set, each ideal is also probed at `0.9c` and `1.1c`.
    pub probe: Option<ProbeConfig>,
    pub fit: FitConfig,
}

impl RunConfig {
    pub fn new(seed: u64, dim: usize, max_degree: u32, count: usize) -> Self {
        RunConfig { seed, dim, max_degree, count, probe: None, fit: FitConfig::default() }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.dim == 0 || self.count == 0 || self.max_degree == 0 {
            return Err("dim, count and max_degree must be at least 1".into());
        }
        if let Some(p) = &self.probe {
            if !(0.0 < p.tolerance && p.tolerance < 1.0) {
                return Err("probe tolerance must lie in (0, 1)".into());
            }
        }
        Ok(())
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Pure powers `z_i^{a_i}` with `1 ≤ a_i ≤ max_degree`, plus up to `2·dim`
/// random monomials with coordinates in `[0, max_degree]`.
pub fn random_ideal<R: Rng>(rng: &mut R, dim: usize, max_degree: u32) -> MonomialIdeal {
    let mut gens: Vec<Vec<u32>> = (0..dim)
        .map(|i| {
            let mut g = vec![0; dim];
            g[i] = rng.random_range(1..=max_degree);
            g
        })
        .collect();
    let extra = rng.random_range(0..=2 * dim);
    for _ in 0..extra {
        let g: Vec<u32> = (0..dim).map(|_| rng.random_range(0..=max_degree)).collect();
        if g.iter().any(|&a| a > 0) {
            gens.push(g);
        }
    }
    MonomialIdeal::new(dim, gens).expect("generators have the right length and a nonzero entry")
}

fn random_positive<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.random_range(1i64..=30).into(), rng.random_range(1i64..=10).into())
}

fn partial_products(ratios: &[Rational]) -> Vec<Rational> {
    let mut acc = Rational::one();
    ratios
        .iter()
        .map(|r| {
            acc = &acc * r;
            acc.clone()
        })
        .collect()
}

/// A point in the interior of `D`: ratios `t_j / t_{j-1}` strictly
/// increasing, starting above `floor`.
fn interior_d<R: Rng>(rng: &mut R, n: usize, floor: &Rational) -> Vec<Rational> {
    let mut r = floor + random_positive(rng);
    let mut ratios = Vec::with_capacity(n);
    for _ in 0..n {
        ratios.push(r.clone());
        r += random_positive(rng);
    }
    partial_products(&ratios)
}

/// Random interior point of `D` in dimension `n`.
pub fn random_d_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    interior_d(rng, n, &Rational::zero())
}

/// `(a, b)` in the interior of `D` with `a ≥ b` coordinatewise: `a` is `b`
/// times a point of `D` whose coordinates are all above 1.
pub fn random_d_pair<R: Rng>(rng: &mut R, n: usize) -> (Vec<Rational>, Vec<Rational>) {
    let b = random_d_vector(rng, n);
    let s = interior_d(rng, n, &Rational::one());
    let a = b.iter().zip(&s).map(|(x, y)| x * y).collect();
    (a, b)
}

/// `f(a) ≤ f(b)` for the pair, with both in `D` and `a ≥ b`.
pub fn monotonicity_holds(a: &[Rational], b: &[Rational]) -> bool {
    let dominated = a.iter().zip(b).all(|(x, y)| x >= y);
    let in_d = d_membership(a).unwrap_or(false) && d_membership(b).unwrap_or(false);
    match (f_value(a), f_value(b)) {
        (Ok(fa), Ok(fb)) => dominated && in_d && fa <= fb,
        _ => false,
    }
}

/// Sign of every partial derivative of `f` at `t`:
/// `∂f/∂t_j = −t_{j−1}/t_j² + 1/t_{j+1} ≤ 0` (last term absent for `j = n`).
pub fn derivative_signs_hold(t: &[Rational]) -> bool {
    let one = Rational::one();
    (0..t.len()).all(|j| {
        let before = if j == 0 { &one } else { &t[j - 1] };
        let mut partial = -(before / (&t[j] * &t[j]));
        if let Some(next) = t.get(j + 1) {
            partial += next.recip();
        }
        partial <= Rational::zero()
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass { slack: Option<Rational>, sharp: bool },
    Fail { reasons: Vec<String> },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeAgreement {
    pub below: ProbeVerdict,
    pub above: ProbeVerdict,
}

impl ProbeAgreement {
    pub fn agrees(&self) -> bool {
        self.below == ProbeVerdict::Converges && self.above == ProbeVerdict::Diverges
    }
}

#[derive(Clone, Debug)]
pub struct ItemResult {
    pub index: usize,
    pub ideal: MonomialIdeal,
    pub c: Option<Rational>,
    pub main_bound: Option<ExtRational>,
    pub outcome: Outcome,
    pub probe: Option<ProbeAgreement>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug)]
pub struct SweepSummary {
    pub config: RunConfig,
    pub items: Vec<ItemResult>,
    pub monotonicity: Tally,
    pub derivative: Tally,
}

impl SweepSummary {
    fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.items.iter().filter(|i| pred(&i.outcome)).count()
    }

    pub fn passed(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Pass { .. }))
    }

    pub fn failed(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Fail { .. }))
    }

    pub fn skipped(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Skipped { .. }))
    }

    pub fn sharp(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Pass { sharp: true, .. }))
    }

    /// Smallest `c − main_bound` over passing items.
    pub fn min_slack(&self) -> Option<Rational> {
        self.items
            .iter()
            .filter_map(|i| match &i.outcome {
                Outcome::Pass { slack, .. } => slack.clone(),
                _ => None,
            })
            .min()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0 && self.monotonicity.failed == 0 && self.derivative.failed == 0
    }

    pub fn to_json(&self) -> Value {
        let items: Vec<Value> = self.items.iter().map(item_json).collect();
        let probe_agree = self.items.iter().filter(|i| i.probe.as_ref().is_some_and(ProbeAgreement::agrees)).count();
        let probed = self.items.iter().filter(|i| i.probe.is_some()).count();
        json!({
            "config": {
                "seed": self.config.seed,
                "dim": self.config.dim,
                "max_degree": self.config.max_degree,
                "count": self.config.count,
                "prng": "ChaCha8",
            },
            "ideals": {
                "passed": self.passed(),
                "failed": self.failed(),
                "skipped": self.skipped(),
                "sharp": self.sharp(),
                "min_slack": self.min_slack().as_ref().map(format::rational),
            },
            "monotonicity": { "passed": self.monotonicity.passed, "failed": self.monotonicity.failed },
            "derivative_sign": { "passed": self.derivative.passed, "failed": self.derivative.failed },
            "probe": if probed > 0 { json!({ "probed": probed, "agreeing": probe_agree }) } else { Value::Null },
            "all_pass": self.all_pass(),
            "items": items,
        })
    }

    /// One row per ideal.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["index", "n", "generators", "c", "main_bound", "slack", "outcome"])?;
        for item in &self.items {
            let gens: Vec<String> = item
                .ideal
                .generators()
                .iter()
                .map(|g| g.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            let (outcome, slack) = match &item.outcome {
                Outcome::Pass { slack, sharp } => {
                    (if *sharp { "sharp" } else { "pass" }.to_string(), slack.as_ref().map(to_text))
                }
                Outcome::Fail { reasons } => (format!("fail: {}", reasons.join("; ")), None),
                Outcome::Skipped { reason } => (format!("skipped: {reason}"), None),
            };
            w.write_record([
                item.index.to_string(),
                item.ideal.dim().to_string(),
                gens.join(";"),
                item.c.as_ref().map(to_text).unwrap_or_default(),
                item.main_bound.as_ref().map(ExtRational::to_text).unwrap_or_default(),
                slack.unwrap_or_default(),
                outcome,
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn item_json(item: &ItemResult) -> Value {
    let outcome = match &item.outcome {
        Outcome::Pass { slack, sharp } => {
            json!({ "status": "pass", "slack": slack.as_ref().map(format::rational), "sharp": sharp })
        }
        Outcome::Fail { reasons } => json!({ "status": "fail", "reasons": reasons }),
        Outcome::Skipped { reason } => json!({ "status": "skipped", "reason": reason }),
    };
    let probe = item.probe.as_ref().map(|p| {
        json!({
            "below": format::verdict_name(p.below),
            "above": format::verdict_name(p.above),
            "agrees": p.agrees(),
        })
    });
    json!({
        "index": item.index,
        "ideal": format::ideal(&item.ideal),
        "c": item.c.as_ref().map(format::rational),
        "main_bound": item.main_bound.as_ref().map(format::ext_rational),
        "outcome": outcome,
        "probe": probe,
    })
}

fn check_ideal(index: usize, ideal: MonomialIdeal, config: &RunConfig) -> ItemResult {
    let mut item = ItemResult { index, ideal, c: None, main_bound: None, outcome: Outcome::Pass { slack: None, sharp: false }, probe: None };
    let report = match ideal_report(&item.ideal, &config.fit) {
        Ok(r) => r,
        Err(e) if is_resource(&e) => {
            item.outcome = Outcome::Skipped { reason: e.to_string() };
            return item;
        }
        Err(e) => {
            item.outcome = Outcome::Fail { reasons: vec![e.to_string()] };
            return item;
        }
    };
    item.c = Some(report.certificate.c.clone());
    item.main_bound = report.bounds.as_ref().map(|b| b.main_bound.clone());
    item.outcome = if report.passes() {
        Outcome::Pass { slack: report.slack(), sharp: report.sharp() }
    } else {
        Outcome::Fail { reasons: report.failures().map(|v| format!("{}: {}", v.name, v.detail)).collect() }
    };
    if let Some(probe) = &config.probe {
        let c = &report.certificate.c;
        let run = |factor: Rational| {
            numeric_integrability_probe(&item.ideal, &(c * factor), probe)
                .map(|r| r.verdict)
                .unwrap_or(ProbeVerdict::Inconclusive)
        };
        item.probe = Some(ProbeAgreement {
            below: run(Rational::new(9.into(), 10.into())),
            above: run(Rational::new(11.into(), 10.into())),
        });
    }
    item
}

/// Generates `count` ideals and `count` pairs of `D`-vectors from the seed,
/// verifies them in parallel, and aggregates in input order.
pub fn verify_random(config: &RunConfig) -> SweepSummary {
    let mut rng = rng(config.seed);
    let ideals: Vec<MonomialIdeal> =
        (0..config.count).map(|_| random_ideal(&mut rng, config.dim, config.max_degree)).collect();
    let pairs: Vec<(Vec<Rational>, Vec<Rational>)> =
        (0..config.count).map(|_| random_d_pair(&mut rng, config.dim)).collect();
    let points: Vec<Vec<Rational>> = (0..config.count).map(|_| random_d_vector(&mut rng, config.dim)).collect();

    let items: Vec<ItemResult> =
        ideals.into_par_iter().enumerate().map(|(i, j)| check_ideal(i, j, config)).collect();
    let tally = |results: Vec<bool>| Tally {
        passed: results.iter().filter(|&&b| b).count(),
        failed: results.iter().filter(|&&b| !b).count(),
    };
    let monotonicity = tally(pairs.par_iter().map(|(a, b)| monotonicity_holds(a, b)).collect());
    let derivative = tally(points.par_iter().map(|t| derivative_signs_hold(t)).collect());
    SweepSummary { config: config.clone(), items, monotonicity, derivative }
}
