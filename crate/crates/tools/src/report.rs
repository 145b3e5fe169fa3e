//! Per-ideal reports: every computed quantity plus a verdict for each
//! invariant that ties them together.

use lct_core::bounds::{bounds_report, d_membership, f_value, skoda_interval, BoundsReport, SkodaInterval};
use lct_core::lattice::is_isolated_zero;
use lct_core::multiplicities::{
    covolume_times_factorial, fit_multiplicities, validate_sequence, FitConfig, HilbertTable, InequalityFamily,
    MultiplicitySequence, SequenceReport,
};
use lct_core::rational::to_text;
use lct_core::thresholds::{
    diagonal_lct, howald_lct, kiselman_lct, minorant_from_certificate, DiagonalMinorant, LctCertificate,
};
use lct_core::{Error, ExtRational, MonomialIdeal, Rational};
use num_traits::One;
use serde_json::{json, Value};

use crate::format;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

impl Verdict {
    fn new(name: &'static str, holds: bool, detail: impl Into<String>) -> Self {
        Verdict { name, holds, detail: detail.into() }
    }
}

#[derive(Clone, Debug)]
pub struct IdealReport {
    pub ideal: MonomialIdeal,
    pub certificate: LctCertificate,
    pub howald: Rational,
    pub multiplicities: Option<MultiplicitySequence>,
    pub table: Option<HilbertTable>,
    pub validation: Option<SequenceReport>,
    pub bounds: Option<BoundsReport>,
    pub covolume: Option<u64>,
    pub minorant: Option<DiagonalMinorant>,
    pub verdicts: Vec<Verdict>,
}

impl IdealReport {
    pub fn passes(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }

    /// `c − main_bound`, when the main bound was computed and is finite.
    pub fn slack(&self) -> Option<Rational> {
        match &self.bounds.as_ref()?.main_bound {
            ExtRational::Finite(m) => Some(&self.certificate.c - m),
            ExtRational::PosInfinity => None,
        }
    }

    /// The main bound equals the threshold.
    pub fn sharp(&self) -> bool {
        self.slack().is_some_and(|s| s == Rational::from_integer(0.into()))
    }

    pub fn to_json(&self) -> Value {
        let verdicts: Vec<Value> =
            self.verdicts.iter().map(|v| json!({ "name": v.name, "holds": v.holds, "detail": v.detail })).collect();
        json!({
            "ideal": format::ideal(&self.ideal),
            "certificate": format::certificate(&self.certificate),
            "howald": format::rational(&self.howald),
            "duality": self.certificate.c == self.howald,
            "multiplicities": self.multiplicities.as_ref().map(format::sequence),
            "validation": self.validation.as_ref().map(format::validation),
            "bounds": self.bounds.as_ref().map(format::bounds),
            "covolume_times_factorial": self.covolume,
            "minorant": self.minorant.as_ref().map(format::minorant),
            "sharp": self.sharp(),
            "slack": self.slack().as_ref().map(format::rational),
            "verdicts": verdicts,
            "passes": self.passes(),
        })
    }
}

/// Both threshold computations and the checks that need no multiplicities.
pub fn threshold_report(ideal: &MonomialIdeal) -> Result<IdealReport, Error> {
    let certificate = kiselman_lct(ideal)?;
    let howald = howald_lct(ideal)?;
    let c = certificate.c.clone();
    let mut verdicts = vec![
        Verdict::new(
            "duality",
            certificate.c == howald,
            format!("primal {} vs dual {}", to_text(&certificate.c), to_text(&howald)),
        ),
        Verdict::new("certificate", certificate.check(ideal), "x0 on the simplex with c * nu = 1"),
    ];
    let order = ideal.min_degree();
    let skoda = skoda_interval(order, ideal.dim());
    let interval = match &skoda {
        SkodaInterval::Finite { low, high } => format!("{} <= c <= {}", to_text(low), to_text(high)),
        SkodaInterval::Infinite => "c = inf".into(),
    };
    verdicts.push(Verdict::new("skoda", skoda.contains(&ExtRational::Finite(c)), interval));
    Ok(IdealReport {
        ideal: ideal.clone(),
        certificate,
        howald,
        multiplicities: None,
        table: None,
        validation: None,
        bounds: None,
        covolume: None,
        minorant: None,
        verdicts,
    })
}

/// Full report for an ideal with an isolated zero.
pub fn ideal_report(ideal: &MonomialIdeal, fit: &FitConfig) -> Result<IdealReport, Error> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !is_isolated_zero(ideal) {
        return Err(Error::InfiniteColength);
    }
    let mut report = threshold_report(ideal)?;
    let (e, table) = fit_multiplicities(ideal, fit)?;
    let n = ideal.dim();
    let c = report.certificate.c.clone();
    let v = &mut report.verdicts;

    v.push(Verdict::new(
        "first_multiplicity",
        e.e(1) == ideal.min_degree(),
        format!("e_1 = {} vs order {}", e.e(1), ideal.min_degree()),
    ));
    let validation = validate_sequence(&e);
    for (name, family) in [
        ("log_convexity", InequalityFamily::LogConvexity),
        ("power_bounds", InequalityFamily::PowerBound),
        ("interpolation", InequalityFamily::Interpolation),
    ] {
        let failed: Vec<String> =
            validation.failures().filter(|c| c.family == family).map(|c| format!("{:?}", c.indices)).collect();
        v.push(Verdict::new(name, failed.is_empty(), failed.join(" ")));
    }
    let t: Vec<Rational> = e.values()[1..].iter().map(|&x| Rational::from_integer(x.into())).collect();
    v.push(Verdict::new("d_membership", d_membership(&t)?, ""));

    let bounds = bounds_report(&e, Some(&c))?;
    let main_ok = bounds.main_bound <= ExtRational::Finite(c.clone());
    v.push(Verdict::new("main_bound", main_ok, format!("{} <= {}", bounds.main_bound, to_text(&c))));
    v.push(Verdict::new("chain", bounds.chain_ok(), bounds.details.join("; ")));
    if let Some(p) = &bounds.volume_cmp {
        v.push(Verdict::new("volume_bound", p.holds(), format!("{} vs {}", p.lhs, p.rhs)));
    }
    if let Some(p) = &bounds.mixed_cmp {
        v.push(Verdict::new("mixed_bound", p.holds(), format!("{} vs {}", p.lhs, p.rhs)));
    }

    let covolume = match covolume_times_factorial(ideal) {
        Ok(k) => {
            v.push(Verdict::new("covolume", k == e.e(n), format!("e_n = {} vs n! covolume {k}", e.e(n))));
            Some(k)
        }
        Err(Error::Unsupported(_)) => None,
        Err(err) => return Err(err),
    };

    let minorant = match minorant_from_certificate(&report.certificate) {
        Ok(m) => {
            let mut acc = Rational::one();
            let t_psi: Vec<Rational> = m
                .weights
                .weights()
                .iter()
                .map(|a| {
                    acc = &acc * a;
                    acc.clone()
                })
                .collect();
            let f_psi = f_value(&t_psi)?;
            let holds = ExtRational::Finite(f_psi.clone()) >= bounds.main_bound
                && f_psi == diagonal_lct(&m.weights)
                && f_psi == c;
            v.push(Verdict::new(
                "minorant_chain",
                holds,
                format!("f(e(J)) = {} <= f(e(psi)) = {} = c", bounds.main_bound, to_text(&f_psi)),
            ));
            Some(m)
        }
        Err(Error::MinorantDegenerate(_)) => None,
        Err(err) => return Err(err),
    };

    report.multiplicities = Some(e);
    report.table = Some(table);
    report.validation = Some(validation);
    report.bounds = Some(bounds);
    report.covolume = covolume;
    report.minorant = minorant;
    Ok(report)
}
