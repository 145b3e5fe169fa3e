//! Polynomial ideals: Gröbner bases, initial ideals, and certified lower
//! bounds on the threshold.
//!
//! The initial ideal `J_0 = in(J)` is the special fiber of a flat
//! degeneration of `J`, and the threshold can only drop under such a
//! degeneration, so `c(J) ≥ c(J_0)`. Since `J_0` is monomial, `c(J_0)` is
//! computed exactly by the toric machinery.

mod buchberger;
mod order;
mod parse;
mod poly;

pub use buchberger::{buchberger, is_groebner_basis, is_reduced, s_polynomial_residues, GroebnerConfig};
pub use order::{MonomialOrder, OrderKind, Tiebreak};
pub use parse::parse_polynomial;
pub use poly::Polynomial;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::main_bound;
use crate::error::{Error, Result};
use crate::lattice::{is_isolated_zero, normalize_generators, MonomialIdeal};
use crate::multiplicities::{mixed_multiplicities, FitConfig, MultiplicitySequence};
use crate::rational::{to_text, ExtRational, Rational};
use crate::thresholds::kiselman_lct;

/// The ideal of leading monomials of a Gröbner basis.
pub fn initial_ideal(basis: &[Polynomial], order: &MonomialOrder) -> Result<MonomialIdeal> {
    let first = basis.first().ok_or(Error::EmptyInput)?;
    let leads = basis.iter().map(|p| p.leading(order).0.clone()).collect();
    normalize_generators(leads, first.dim())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrontendConfig {
    pub groebner: GroebnerConfig,
    pub fit: FitConfig,
}

/// `c(J) ≥ c_initial`, with the supporting data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundCertificate {
    pub order: MonomialOrder,
    pub basis: Vec<Polynomial>,
    pub initial_ideal: MonomialIdeal,
    /// Exact threshold of the initial ideal.
    pub c_initial: Rational,
    /// Multiplicities of the initial ideal (not of `J`), when it has an
    /// isolated zero.
    pub initial_multiplicities: Option<MultiplicitySequence>,
    /// Main bound evaluated on `initial_multiplicities`.
    pub initial_main_bound: Option<ExtRational>,
}

impl LowerBoundCertificate {
    pub fn guarantee(&self) -> String {
        format!("c(J) >= {}", to_text(&self.c_initial))
    }
}

/// Computes `J_0` for `order` and certifies `c(J) ≥ c(J_0)`.
///
/// Generators must vanish at the origin: a nonzero constant term is a unit
/// in the local ring and is rejected.
pub fn certified_lct_lower_bound(
    polys: &[Polynomial],
    order: &MonomialOrder,
    config: &FrontendConfig,
) -> Result<LowerBoundCertificate> {
    if polys.is_empty() {
        return Err(Error::EmptyInput);
    }
    if polys.iter().any(|p| p.constant_term().is_some()) {
        return Err(Error::NonzeroConstantTerm);
    }
    let basis = buchberger(polys, order, &config.groebner)?;
    if basis.iter().any(Polynomial::is_constant) {
        return Err(Error::UnitIdeal);
    }
    let initial = initial_ideal(&basis, order)?;
    let cert = kiselman_lct(&initial)?;
    let (mults, bound) = if is_isolated_zero(&initial) {
        let e = mixed_multiplicities(&initial, &config.fit)?;
        let b = main_bound(&e)?;
        (Some(e), Some(b))
    } else {
        (None, None)
    };
    Ok(LowerBoundCertificate {
        order: order.clone(),
        basis,
        initial_ideal: initial,
        c_initial: cert.c,
        initial_multiplicities: mults,
        initial_main_bound: bound,
    })
}

/// Picks the certificate with the largest `c_initial`, earliest on ties.
/// Fails only if every entry failed, with the first error.
pub fn select_best(results: Vec<Result<LowerBoundCertificate>>) -> Result<LowerBoundCertificate> {
    let mut best: Option<LowerBoundCertificate> = None;
    let mut first_err = None;
    for r in results {
        match r {
            Ok(cert) => {
                if best.as_ref().is_none_or(|b| cert.c_initial > b.c_initial) {
                    best = Some(cert);
                }
            }
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    best.ok_or_else(|| first_err.unwrap_or(Error::EmptyInput))
}

/// Runs [`certified_lct_lower_bound`] for every order and keeps the best.
pub fn order_sweep(
    polys: &[Polynomial],
    orders: &[MonomialOrder],
    config: &FrontendConfig,
) -> Result<LowerBoundCertificate> {
    if orders.is_empty() {
        return Err(Error::EmptyInput);
    }
    select_best(orders.iter().map(|o| certified_lct_lower_bound(polys, o, config)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use alloc::vec;

    fn polys(texts: &[&str], n: usize) -> Vec<Polynomial> {
        texts.iter().map(|t| parse_polynomial(t, n).unwrap()).collect()
    }

    fn lex_rev() -> MonomialOrder {
        MonomialOrder::new(OrderKind::Lex, vec![1, 0]).unwrap()
    }

    #[test]
    fn initial_ideal_examples() {
        let gb = polys(&["x1^2 + x2^3"], 2);
        let j0 = initial_ideal(&gb, &MonomialOrder::lex(2)).unwrap();
        assert_eq!(j0, MonomialIdeal::new(2, vec![vec![2, 0]]).unwrap());
        let j0 = initial_ideal(&gb, &lex_rev()).unwrap();
        assert_eq!(j0, MonomialIdeal::new(2, vec![vec![0, 3]]).unwrap());
        let j0 = initial_ideal(&polys(&["x1", "x2"], 2), &MonomialOrder::grevlex(2)).unwrap();
        assert_eq!(j0, MonomialIdeal::maximal(2));
    }

    #[test]
    fn cusp_certificate() {
        let cfg = FrontendConfig::default();
        let cert = certified_lct_lower_bound(&polys(&["x1^2 + x2^3"], 2), &MonomialOrder::lex(2), &cfg).unwrap();
        assert_eq!(cert.c_initial, rat(1, 2));
        assert_eq!(cert.guarantee(), "c(J) >= 1/2");
        assert!(cert.initial_multiplicities.is_none());
        assert!(cert.c_initial <= rat(5, 6));
    }

    #[test]
    fn maximal_ideal_is_exact() {
        let cfg = FrontendConfig::default();
        let cert = certified_lct_lower_bound(&polys(&["x1", "x2"], 2), &MonomialOrder::grevlex(2), &cfg).unwrap();
        assert_eq!(cert.c_initial, int(2));
        assert_eq!(cert.initial_main_bound, Some(ExtRational::Finite(int(2))));
    }

    #[test]
    fn isolated_initial_ideal_has_bound_below_threshold() {
        let cfg = FrontendConfig::default();
        let input = polys(&["x1^2 - x2^3", "x2^4"], 2);
        let cert = certified_lct_lower_bound(&input, &MonomialOrder::grevlex(2), &cfg).unwrap();
        assert!(cert.initial_ideal.generators().len() >= 2);
        let bound = cert.initial_main_bound.clone().unwrap();
        assert!(bound <= ExtRational::Finite(cert.c_initial.clone()));
    }

    #[test]
    fn rejects_constants_and_empty() {
        let cfg = FrontendConfig::default();
        assert!(matches!(
            certified_lct_lower_bound(&polys(&["x1 + 1"], 1), &MonomialOrder::lex(1), &cfg),
            Err(Error::NonzeroConstantTerm)
        ));
        assert!(matches!(certified_lct_lower_bound(&[], &MonomialOrder::lex(1), &cfg), Err(Error::EmptyInput)));
        assert!(matches!(order_sweep(&polys(&["x1"], 1), &[], &cfg), Err(Error::EmptyInput)));
    }

    #[test]
    fn sweep_picks_best_order() {
        let cfg = FrontendConfig::default();
        let input = polys(&["x1^2 + x2^3"], 2);
        let best = order_sweep(&input, &[MonomialOrder::lex(2), lex_rev()], &cfg).unwrap();
        assert_eq!(best.c_initial, rat(1, 2));
        assert_eq!(best.order, MonomialOrder::lex(2));
        let best = order_sweep(&input, &[lex_rev(), MonomialOrder::lex(2)], &cfg).unwrap();
        assert_eq!(best.c_initial, rat(1, 2));
        let single = order_sweep(&input, &[lex_rev()], &cfg).unwrap();
        assert_eq!(single, certified_lct_lower_bound(&input, &lex_rev(), &cfg).unwrap());
    }

    #[test]
    fn select_best_reports_first_error() {
        let r = select_best(vec![Err(Error::UnitIdeal), Err(Error::EmptyInput)]);
        assert!(matches!(r, Err(Error::UnitIdeal)));
    }
}
