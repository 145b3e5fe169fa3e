//! JSON input files and JSON encodings of core results.
//!
//! Rationals are written as `"p/q"` strings, with float mirrors under
//! `"approx"`. Variable indices in files are 1-based.

use std::cmp::Ordering;
use std::fs;
use std::path::Path;

use lct_core::bounds::{BoundsReport, ChainReport, PowerComparison, RootComparison, SkodaInterval};
use lct_core::groebner::{parse_polynomial, LowerBoundCertificate, MonomialOrder, OrderKind, Polynomial, Tiebreak};
use lct_core::multiplicities::{HilbertTable, InequalityCheck, InequalityFamily, MultiplicitySequence, SequenceReport};
use lct_core::rational::{to_f64, to_text};
use lct_core::thresholds::{DiagonalMinorant, LctCertificate, ProbeReport, ProbeVerdict};
use lct_core::{ExtRational, MonomialIdeal, Rational};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::ToolError;

/// `{"n": 2, "generators": [[2, 0], [0, 3]]}`
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

impl IdealFile {
    pub fn into_ideal(self) -> Result<MonomialIdeal, ToolError> {
        Ok(MonomialIdeal::new(self.n, self.generators)?)
    }
}

/// `{"e": [1, 2, 6], "c": "5/6"}`; `c` is optional.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceFile {
    pub e: Vec<u64>,
    #[serde(default)]
    pub c: Option<String>,
}

/// `{"n": 2, "polynomials": ["x1^2 + x2^3"], "order": {...}}`
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialFile {
    pub n: usize,
    pub polynomials: Vec<String>,
    #[serde(default)]
    pub order: Option<OrderSpec>,
}

/// `{"kind": "weighted", "precedence": [2, 1], "weights": [3, 2], "tiebreak": "lex"}`
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderSpec {
    pub kind: String,
    #[serde(default)]
    pub precedence: Option<Vec<usize>>,
    #[serde(default)]
    pub weights: Option<Vec<u64>>,
    #[serde(default)]
    pub tiebreak: Option<String>,
}

impl OrderSpec {
    pub fn to_order(&self, n: usize) -> Result<MonomialOrder, ToolError> {
        let precedence = match &self.precedence {
            Some(p) => p
                .iter()
                .map(|&v| v.checked_sub(1).ok_or_else(|| ToolError::Format("precedence is 1-based".into())))
                .collect::<Result<Vec<_>, _>>()?,
            None => (0..n).collect(),
        };
        if precedence.len() != n {
            return Err(ToolError::Format(format!("precedence has {} entries for n = {n}", precedence.len())));
        }
        let tiebreak = match self.tiebreak.as_deref() {
            None | Some("grevlex") => Tiebreak::Grevlex,
            Some("lex") => Tiebreak::Lex,
            Some(other) => return Err(ToolError::Format(format!("unknown tiebreak {other:?}"))),
        };
        let kind = match self.kind.as_str() {
            "lex" => OrderKind::Lex,
            "grevlex" => OrderKind::Grevlex,
            "weighted" => {
                let weights =
                    self.weights.clone().ok_or_else(|| ToolError::Format("weighted order needs weights".into()))?;
                OrderKind::Weighted { weights, tiebreak }
            }
            other => return Err(ToolError::Format(format!("unknown order kind {other:?}"))),
        };
        if !matches!(kind, OrderKind::Weighted { .. }) && (self.weights.is_some() || self.tiebreak.is_some()) {
            return Err(ToolError::Format("weights and tiebreak apply to weighted orders only".into()));
        }
        Ok(MonomialOrder::new(kind, precedence)?)
    }
}

impl PolynomialFile {
    pub fn polynomials(&self) -> Result<Vec<Polynomial>, ToolError> {
        if self.polynomials.is_empty() {
            return Err(ToolError::Format("no polynomials".into()));
        }
        Ok(self.polynomials.iter().map(|p| parse_polynomial(p, self.n)).collect::<Result<_, _>>()?)
    }

    /// The file's order, grevlex with `x1 > … > xn` when absent.
    pub fn order(&self) -> Result<MonomialOrder, ToolError> {
        match &self.order {
            Some(spec) => spec.to_order(self.n),
            None => Ok(MonomialOrder::grevlex(self.n)),
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, ToolError> {
    let text = fs::read_to_string(path).map_err(|source| ToolError::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|e| ToolError::Format(format!("{}: {e}", path.display())))
}

pub fn rational(r: &Rational) -> Value {
    Value::String(to_text(r))
}

pub fn ext_rational(r: &ExtRational) -> Value {
    Value::String(r.to_text())
}

pub fn ordering(o: Ordering) -> Value {
    Value::String(
        match o {
            Ordering::Less => "LT",
            Ordering::Equal => "EQ",
            Ordering::Greater => "GT",
        }
        .into(),
    )
}

pub fn ideal(j: &MonomialIdeal) -> Value {
    let gens: Vec<Vec<u32>> = j.generators().iter().map(|g| g.to_vec()).collect();
    json!({ "n": j.dim(), "generators": gens })
}

pub fn certificate(cert: &LctCertificate) -> Value {
    let x0: Vec<Value> = cert.x0.coords().iter().map(rational).collect();
    let x0_approx: Vec<f64> = cert.x0.coords().iter().map(to_f64).collect();
    json!({
        "c": rational(&cert.c),
        "x0": x0,
        "nu": rational(&cert.nu),
        "isolated": cert.isolated,
        "approx": { "c": to_f64(&cert.c), "x0": x0_approx, "nu": to_f64(&cert.nu) },
    })
}

pub fn sequence(e: &MultiplicitySequence) -> Value {
    json!({ "e": e.values() })
}

/// Permutation entries are 1-based variable indices.
pub fn minorant(m: &DiagonalMinorant) -> Value {
    let weights: Vec<Value> = m.weights.weights().iter().map(rational).collect();
    let permutation: Vec<usize> = m.permutation.iter().map(|j| j + 1).collect();
    json!({ "weights": weights, "permutation": permutation })
}

fn family_name(f: InequalityFamily) -> &'static str {
    match f {
        InequalityFamily::LogConvexity => "log_convexity",
        InequalityFamily::PowerBound => "power_bound",
        InequalityFamily::Interpolation => "interpolation",
    }
}

fn inequality(c: &InequalityCheck) -> Value {
    json!({
        "family": family_name(c.family),
        "indices": c.indices,
        "lhs": c.lhs.to_string(),
        "rhs": c.rhs.to_string(),
        "holds": c.holds,
    })
}

pub fn validation(report: &SequenceReport) -> Value {
    let checks: Vec<Value> = report.checks.iter().map(inequality).collect();
    json!({ "all_pass": report.all_pass(), "checks": checks })
}

fn power_comparison(p: &PowerComparison) -> Value {
    json!({ "ordering": ordering(p.ordering), "lhs": p.lhs.to_string(), "rhs": p.rhs.to_string() })
}

fn root_comparison(r: &RootComparison) -> Value {
    json!({
        "ordering": ordering(r.ordering),
        "precision_bits": r.precision_bits,
        "lhs_interval": [rational(&r.lhs_interval.0), rational(&r.lhs_interval.1)],
        "rhs_interval": [rational(&r.rhs_interval.0), rational(&r.rhs_interval.1)],
    })
}

fn chain(c: &ChainReport) -> Value {
    json!({
        "main_vs_mixed": power_comparison(&c.main_vs_mixed),
        "mixed_vs_volume": root_comparison(&c.mixed_vs_volume),
        "holds": c.holds(),
    })
}

pub fn bounds(b: &BoundsReport) -> Value {
    let skoda = match &b.skoda {
        SkodaInterval::Finite { low, high } => json!({ "low": rational(low), "high": rational(high) }),
        SkodaInterval::Infinite => Value::String("inf".into()),
    };
    json!({
        "main_bound": ext_rational(&b.main_bound),
        "skoda": skoda,
        "volume_bound": b.volume_cmp.as_ref().map(power_comparison),
        "mixed_bound": b.mixed_cmp.as_ref().map(power_comparison),
        "chain": b.chain.as_ref().map(chain),
        "chain_ok": b.chain_ok(),
        "details": b.details,
        "approx": { "main_bound": b.main_bound.to_f64() },
    })
}

/// Order with 1-based precedence, matching the input file format.
pub fn order(o: &MonomialOrder) -> Value {
    let precedence: Vec<usize> = o.precedence().iter().map(|v| v + 1).collect();
    let tiebreak_name = |t: &Tiebreak| match t {
        Tiebreak::Lex => "lex",
        Tiebreak::Grevlex => "grevlex",
    };
    match o.kind() {
        OrderKind::Lex => json!({ "kind": "lex", "precedence": precedence }),
        OrderKind::Grevlex => json!({ "kind": "grevlex", "precedence": precedence }),
        OrderKind::Weighted { weights, tiebreak } => json!({
            "kind": "weighted",
            "precedence": precedence,
            "weights": weights,
            "tiebreak": tiebreak_name(tiebreak),
        }),
    }
}

pub fn lower_bound(cert: &LowerBoundCertificate) -> Value {
    let basis: Vec<String> = cert.basis.iter().map(|p| p.to_string_ordered(&cert.order)).collect();
    json!({
        "order": order(&cert.order),
        "basis": basis,
        "initial_ideal": ideal(&cert.initial_ideal),
        "c_initial": rational(&cert.c_initial),
        "initial_multiplicities": cert.initial_multiplicities.as_ref().map(sequence),
        "initial_main_bound": cert.initial_main_bound.as_ref().map(ext_rational),
        "guarantee": cert.guarantee(),
        "approx": { "c_initial": to_f64(&cert.c_initial) },
    })
}

pub fn verdict_name(v: ProbeVerdict) -> &'static str {
    match v {
        ProbeVerdict::Converges => "converges",
        ProbeVerdict::Diverges => "diverges",
        ProbeVerdict::Inconclusive => "inconclusive",
    }
}

pub fn probe(report: &ProbeReport) -> Value {
    let trail: Vec<Value> = report.trail.iter().map(|&(r, v)| json!({ "R": r, "integral": v })).collect();
    json!({ "verdict": verdict_name(report.verdict), "trail": trail })
}

/// `r,t,colength` rows with a header line.
pub fn hilbert_csv<W: std::io::Write>(table: &HilbertTable, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["r", "t", "colength"])?;
    for (r, t, v) in table.entries() {
        w.write_record([r.to_string(), t.to_string(), v.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
