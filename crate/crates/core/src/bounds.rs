//! Lower bounds for the threshold in terms of a multiplicity sequence, and
//! exact comparisons between them.
//!
//! The functional `f(t) = 1/t_1 + t_1/t_2 + … + t_{n-1}/t_n` evaluated at
//! `t = (e_1, …, e_n)` is the main bound `Σ_j e_j/e_{j+1}`. The two weaker
//! bounds involve `n`-th and `(n−1)`-th roots; every comparison with them
//! is carried out on integer powers so verdicts never touch irrational
//! numbers.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{pow, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::multiplicities::MultiplicitySequence;
use crate::rational::{require_positive, to_text, ExtRational, Rational};

/// A point of the cone `D`: positive entries with `t_1² ≤ t_2` and
/// `t_j² ≤ t_{j−1} t_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DVector(Vec<Rational>);

impl DVector {
    pub fn new(t: Vec<Rational>) -> Result<Self> {
        if !d_membership(&t)? {
            return Err(Error::InvalidSequence("vector is not in D".into()));
        }
        Ok(DVector(t))
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }
}

/// Exact test of the inequalities cutting out `D` (with `t_0 = 1`).
pub fn d_membership(t: &[Rational]) -> Result<bool> {
    if t.is_empty() {
        return Err(Error::ZeroDimension);
    }
    for x in t {
        require_positive(x, "D coordinate")?;
    }
    let one = Rational::one();
    Ok((0..t.len() - 1).all(|j| {
        let before = if j == 0 { &one } else { &t[j - 1] };
        &t[j] * &t[j] <= before * &t[j + 1]
    }))
}

/// `f(t) = 1/t_1 + Σ_{j≥1} t_j/t_{j+1}`.
pub fn f_value(t: &[Rational]) -> Result<Rational> {
    if t.is_empty() {
        return Err(Error::ZeroDimension);
    }
    for x in t {
        require_positive(x, "f argument")?;
    }
    let mut acc = t[0].recip();
    for w in t.windows(2) {
        acc += &w[0] / &w[1];
    }
    Ok(acc)
}

/// `Σ_{j=0}^{n−1} e_j/e_{j+1}`, or `+∞` when `e_1 = 0`.
pub fn main_bound(e: &MultiplicitySequence) -> Result<ExtRational> {
    if e.e(1) == 0 {
        return Ok(ExtRational::PosInfinity);
    }
    let t: Vec<Rational> = e.values()[1..].iter().map(|&x| Rational::from_integer(x.into())).collect();
    if t.iter().any(Zero::is_zero) {
        return Err(Error::InvalidSequence("zero entry after a positive e_1".into()));
    }
    f_value(&t).map(ExtRational::Finite)
}

/// The interval `[1/e_1, n/e_1]`, or the unbounded interval when `e_1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkodaInterval {
    Finite { low: Rational, high: Rational },
    Infinite,
}

impl SkodaInterval {
    pub fn contains(&self, c: &ExtRational) -> bool {
        match (self, c) {
            (SkodaInterval::Finite { low, high }, ExtRational::Finite(c)) => low <= c && c <= high,
            (SkodaInterval::Infinite, ExtRational::PosInfinity) => true,
            _ => false,
        }
    }
}

pub fn skoda_interval(e1: u64, n: usize) -> SkodaInterval {
    if e1 == 0 {
        return SkodaInterval::Infinite;
    }
    let e1 = Rational::from_integer(e1.into());
    SkodaInterval::Finite { low: e1.recip(), high: Rational::from_integer(n.into()) / e1 }
}

/// Verdict of an exact comparison `lhs ? rhs` between two integers that
/// encode `c ? bound` after clearing roots and denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerComparison {
    /// `c` compared with the bound.
    pub ordering: Ordering,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl PowerComparison {
    fn from_sides(lhs: BigInt, rhs: BigInt) -> Self {
        PowerComparison { ordering: lhs.cmp(&rhs), lhs, rhs }
    }

    /// `c ≥ bound`.
    pub fn holds(&self) -> bool {
        self.ordering != Ordering::Less
    }
}

/// Compares `c` with `n / e_n^{1/n}` via `p^n e_n` vs `n^n q^n` for
/// `c = p/q`.
pub fn compare_volume_bound(c: &Rational, e_n: u64, n: usize) -> Result<PowerComparison> {
    require_positive(c, "threshold")?;
    if e_n == 0 || n == 0 {
        return Err(Error::NonPositive("e_n and n".into()));
    }
    let lhs = pow(c.numer().clone(), n) * BigInt::from(e_n);
    let rhs = pow(BigInt::from(n), n) * pow(c.denom().clone(), n);
    Ok(PowerComparison::from_sides(lhs, rhs))
}

/// Compares `c` with `1/e_1 + (n−1)(e_1/e_n)^{1/(n−1)}`.
///
/// With `u = c − 1/e_1 = p/q > 0` this is `p^{n−1} e_n` vs
/// `(n−1)^{n−1} e_1 q^{n−1}`; when `u ≤ 0` the bound exceeds `c`
/// outright. For `n = 1` the bound is just `1/e_1`.
pub fn compare_mixed_bound(c: &Rational, e1: u64, e_n: u64, n: usize) -> Result<PowerComparison> {
    if e1 == 0 || e_n == 0 || n == 0 {
        return Err(Error::NonPositive("e_1, e_n and n".into()));
    }
    let u = c - Rational::from_integer(e1.into()).recip();
    if n == 1 {
        return Ok(PowerComparison::from_sides(u.numer().clone(), BigInt::zero()));
    }
    if !u.is_positive() {
        // Witness: u itself against zero (sign-only verdict).
        return Ok(PowerComparison { ordering: Ordering::Less, lhs: u.numer().clone(), rhs: BigInt::zero() });
    }
    let k = n - 1;
    let lhs = pow(u.numer().clone(), k) * BigInt::from(e_n);
    let rhs = pow(BigInt::from(k), k) * BigInt::from(e1) * pow(u.denom().clone(), k);
    Ok(PowerComparison::from_sides(lhs, rhs))
}

/// Exact value of `1/e_1 + (n−1)(e_1/e_n)^{1/(n−1)}` compared with
/// `n e_n^{−1/n}`, decided by the equality test `e_n = e_1^n` and, when
/// unequal, by shrinking rational enclosures of both sides until they
/// separate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootComparison {
    pub ordering: Ordering,
    /// Binary digits used by the enclosures (0 when decided by the
    /// equality test).
    pub precision_bits: u64,
    pub lhs_interval: (Rational, Rational),
    pub rhs_interval: (Rational, Rational),
}

fn mixed_vs_volume(e1: u64, e_n: u64, n: usize) -> RootComparison {
    let e1_big = BigUint::from(e1);
    if n == 1 || pow(e1_big, n) == BigUint::from(e_n) {
        let v = Rational::from_integer(n.into()) / Rational::from_integer(e1.into());
        return RootComparison {
            ordering: Ordering::Equal,
            precision_bits: 0,
            lhs_interval: (v.clone(), v.clone()),
            rhs_interval: (v.clone(), v),
        };
    }
    let inv_e1 = Rational::from_integer(e1.into()).recip();
    let k = Rational::from_integer((n - 1).into());
    let nn = Rational::from_integer(n.into());
    let mut bits = 32u64;
    loop {
        let (a_lo, a_hi) = root_enclosure(&BigUint::from(e1), &BigUint::from(e_n), n - 1, bits);
        let lhs = (&inv_e1 + &k * &a_lo, &inv_e1 + &k * &a_hi);
        let (b_lo, b_hi) = root_enclosure(&BigUint::one(), &BigUint::from(e_n), n, bits);
        let rhs = (&nn * &b_lo, &nn * &b_hi);
        let ordering = if lhs.0 > rhs.1 {
            Some(Ordering::Greater)
        } else if lhs.1 < rhs.0 {
            Some(Ordering::Less)
        } else {
            None
        };
        if let Some(ordering) = ordering {
            return RootComparison { ordering, precision_bits: bits, lhs_interval: lhs, rhs_interval: rhs };
        }
        bits *= 2;
    }
}

/// `lo ≤ (p/q)^{1/k} ≤ hi` with `hi − lo ≤ 2^{−bits}/q`.
fn root_enclosure(p: &BigUint, q: &BigUint, k: usize, bits: u64) -> (Rational, Rational) {
    // (p/q)^{1/k} = (p q^{k−1})^{1/k} / q.
    let scaled = p * pow(q.clone(), k - 1) << (bits as usize * k);
    let r = scaled.nth_root(k as u32);
    let den = BigInt::from_biguint(Sign::Plus, q << bits as usize);
    let lo = Rational::new(BigInt::from_biguint(Sign::Plus, r.clone()), den.clone());
    let exact = pow(r.clone(), k) == scaled;
    let hi = if exact { lo.clone() } else { Rational::new(BigInt::from_biguint(Sign::Plus, r + 1u32), den) };
    (lo, hi)
}

/// Verdicts for `main ≥ mixed bound ≥ volume bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    /// `main_bound` against the `(n−1)`-th root bound.
    pub main_vs_mixed: PowerComparison,
    /// The `(n−1)`-th root bound against the `n`-th root bound.
    pub mixed_vs_volume: RootComparison,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.main_vs_mixed.holds() && self.mixed_vs_volume.ordering != Ordering::Less
    }
}

pub fn chain_check(e: &MultiplicitySequence) -> Result<ChainReport> {
    let n = e.dim();
    let (e1, en) = (e.e(1), e.e(n));
    if e1 == 0 {
        return Err(Error::NonPositive("e_1".into()));
    }
    let main = match main_bound(e)? {
        ExtRational::Finite(m) => m,
        ExtRational::PosInfinity => unreachable!("e_1 > 0"),
    };
    let main_vs_mixed = compare_mixed_bound(&main, e1, en, n)?;
    let mixed_vs_volume = mixed_vs_volume(e1, en, n);
    Ok(ChainReport { main_vs_mixed, mixed_vs_volume })
}

/// Everything known about one threshold / multiplicity pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub main_bound: ExtRational,
    pub skoda: SkodaInterval,
    /// `c` against `n/e_n^{1/n}`, when `c` was supplied.
    pub volume_cmp: Option<PowerComparison>,
    /// `c` against `1/e_1 + (n−1)(e_1/e_n)^{1/(n−1)}`, when `c` was supplied.
    pub mixed_cmp: Option<PowerComparison>,
    pub chain: Option<ChainReport>,
    pub details: Vec<String>,
}

impl BoundsReport {
    pub fn chain_ok(&self) -> bool {
        self.chain.as_ref().is_none_or(ChainReport::holds)
    }
}

pub fn bounds_report(e: &MultiplicitySequence, c: Option<&Rational>) -> Result<BoundsReport> {
    let n = e.dim();
    let (e1, en) = (e.e(1), e.e(n));
    let main = main_bound(e)?;
    let skoda = skoda_interval(e1, n);
    let mut details = Vec::new();
    let chain = if e1 > 0 { Some(chain_check(e)?) } else { None };
    let (mut volume, mut mixed) = (None, None);
    if let Some(c) = c {
        if e1 > 0 && en > 0 {
            volume = Some(compare_volume_bound(c, en, n)?);
            mixed = Some(compare_mixed_bound(c, e1, en, n)?);
        }
        let cmp = ExtRational::Finite(c.clone()).cmp(&main);
        details.push(format!("c = {} vs main bound {}: {:?}", to_text(c), main, cmp));
    }
    if let Some(chain) = &chain {
        details.push(format!(
            "main vs mixed bound: {} ? {} -> {:?}",
            chain.main_vs_mixed.lhs, chain.main_vs_mixed.rhs, chain.main_vs_mixed.ordering
        ));
    }
    Ok(BoundsReport { main_bound: main, skoda, volume_cmp: volume, mixed_cmp: mixed, chain, details })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn seq(e: &[u64]) -> MultiplicitySequence {
        MultiplicitySequence::new(e.to_vec()).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn d_membership_examples() {
        assert!(d_membership(&ints(&[2, 6])).unwrap());
        assert!(d_membership(&ints(&[1, 1, 1])).unwrap());
        assert!(!d_membership(&ints(&[3, 4])).unwrap());
        assert!(d_membership(&ints(&[0, 1])).is_err());
        assert!(DVector::new(ints(&[3, 4])).is_err());
    }

    #[test]
    fn f_value_examples() {
        assert_eq!(f_value(&ints(&[1, 1, 1, 1])).unwrap(), int(4));
        assert_eq!(f_value(&ints(&[2, 6])).unwrap(), rat(5, 6));
        assert_eq!(f_value(&ints(&[1, 2])).unwrap(), rat(3, 2));
        assert!(f_value(&ints(&[1, 0])).is_err());
    }

    #[test]
    fn main_bound_examples() {
        assert_eq!(main_bound(&seq(&[1, 2, 6])).unwrap(), ExtRational::Finite(rat(5, 6)));
        assert_eq!(main_bound(&seq(&[1, 1, 1, 1])).unwrap(), ExtRational::Finite(int(3)));
        assert_eq!(main_bound(&seq(&[1, 0, 0])).unwrap(), ExtRational::PosInfinity);
        assert!(main_bound(&seq(&[1, 2, 0])).is_err());
    }

    #[test]
    fn skoda_examples() {
        let f = |lo: Rational, hi: Rational| SkodaInterval::Finite { low: lo, high: hi };
        assert_eq!(skoda_interval(2, 2), f(rat(1, 2), int(1)));
        assert_eq!(skoda_interval(1, 3), f(int(1), int(3)));
        assert_eq!(skoda_interval(5, 4), f(rat(1, 5), rat(4, 5)));
        assert_eq!(skoda_interval(0, 4), SkodaInterval::Infinite);
        assert!(skoda_interval(2, 2).contains(&ExtRational::Finite(rat(5, 6))));
        assert!(!skoda_interval(2, 2).contains(&ExtRational::Finite(rat(1, 3))));
    }

    #[test]
    fn bound18_examples() {
        let c = compare_volume_bound(&rat(5, 6), 6, 2).unwrap();
        assert_eq!(c.ordering, Ordering::Greater);
        assert_eq!((c.lhs, c.rhs), (BigInt::from(150), BigInt::from(144)));
        for n in 1..=5 {
            assert_eq!(compare_volume_bound(&int(n as i64), 1, n).unwrap().ordering, Ordering::Equal);
        }
        assert_eq!(compare_volume_bound(&int(1), 6, 2).unwrap().ordering, Ordering::Greater);
    }

    #[test]
    fn bound19_examples() {
        assert_eq!(compare_mixed_bound(&rat(5, 6), 2, 6, 2).unwrap().ordering, Ordering::Equal);
        for n in 1..=5 {
            assert_eq!(compare_mixed_bound(&int(n as i64), 1, 1, n).unwrap().ordering, Ordering::Equal);
        }
        let c = compare_mixed_bound(&int(1), 2, 6, 2).unwrap();
        assert_eq!(c.ordering, Ordering::Greater);
        assert_eq!((c.lhs, c.rhs), (BigInt::from(6), BigInt::from(4)));
        assert_eq!(compare_mixed_bound(&rat(1, 3), 2, 6, 2).unwrap().ordering, Ordering::Less);
    }

    #[test]
    fn chain_examples() {
        let r = chain_check(&seq(&[1, 2, 6])).unwrap();
        assert_eq!(r.main_vs_mixed.ordering, Ordering::Equal);
        assert_eq!(r.mixed_vs_volume.ordering, Ordering::Greater);
        assert!(r.holds());

        let r = chain_check(&seq(&[1, 1, 1, 1])).unwrap();
        assert_eq!(r.main_vs_mixed.ordering, Ordering::Equal);
        assert_eq!(r.mixed_vs_volume.ordering, Ordering::Equal);

        let r = chain_check(&seq(&[1, 2, 5, 15])).unwrap();
        assert_eq!(r.main_vs_mixed.ordering, Ordering::Greater);
        assert_eq!(r.mixed_vs_volume.ordering, Ordering::Greater);
    }

    #[test]
    fn root_enclosures_bracket() {
        let (lo, hi) = root_enclosure(&BigUint::from(2u8), &BigUint::one(), 2, 20);
        assert!(&lo * &lo <= int(2) && &hi * &hi >= int(2));
        assert!(&hi - &lo <= rat(1, 1 << 20));
        let (lo, hi) = root_enclosure(&BigUint::from(27u8), &BigUint::from(8u8), 3, 10);
        assert_eq!((lo.clone(), hi), (rat(3, 2), rat(3, 2)));
    }

    #[test]
    fn report_assembles() {
        let r = bounds_report(&seq(&[1, 2, 6]), Some(&rat(5, 6))).unwrap();
        assert_eq!(r.main_bound, ExtRational::Finite(rat(5, 6)));
        assert!(r.chain_ok());
        assert!(r.volume_cmp.unwrap().holds());
        assert_eq!(r.mixed_cmp.unwrap().ordering, Ordering::Equal);
        let r = bounds_report(&seq(&[1, 0, 0]), None).unwrap();
        assert!(r.main_bound.is_infinite() && r.chain.is_none());
    }
}
