use std::cmp::Ordering;

use lct_core::bounds::{d_membership, f_value, main_bound, skoda_interval};
use lct_core::groebner::{
    buchberger, certified_lct_lower_bound, initial_ideal, is_reduced, s_polynomial_residues, FrontendConfig,
    GroebnerConfig, MonomialOrder, OrderKind, Polynomial,
};
use lct_core::lattice::{contains_monomial, newton_membership, normalize_generators};
use lct_core::multiplicities::{covolume_times_factorial, mixed_multiplicities, validate_sequence, FitConfig};
use lct_core::rational::{int, rat};
use lct_core::thresholds::{
    diagonal_lct, howald_lct, kiselman_lct, minorant_from_certificate, refined_lelong, DiagonalWeights,
};
use lct_core::{ExponentVector, ExtRational, MonomialIdeal, Rational, RationalPoint};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Pure powers on every axis plus a few interior generators.
fn isolated_ideal(max_n: usize, max_deg: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        let powers = proptest::collection::vec(1..=max_deg, n);
        let extra = proptest::collection::vec(proptest::collection::vec(0..=max_deg, n), 0..=2 * n);
        (powers, extra).prop_map(move |(powers, extra)| {
            let mut gens: Vec<Vec<u32>> = (0..n)
                .map(|i| {
                    let mut g = vec![0; n];
                    g[i] = powers[i];
                    g
                })
                .collect();
            gens.extend(extra.into_iter().filter(|g| g.iter().any(|&a| a > 0)));
            MonomialIdeal::new(n, gens).unwrap()
        })
    })
}

/// Arbitrary proper ideals, isolated or not.
fn any_ideal(max_n: usize, max_deg: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::collection::vec(0..=max_deg, n), 1..=2 * n + 1).prop_filter_map(
            "needs a nonzero generator",
            move |gens| {
                let gens: Vec<Vec<u32>> = gens.into_iter().filter(|g| g.iter().any(|&a| a > 0)).collect();
                if gens.is_empty() {
                    None
                } else {
                    Some(MonomialIdeal::new(n, gens).unwrap())
                }
            },
        )
    })
}

/// A point of `D` from ascending ratios `r_1 ≤ … ≤ r_n`, `t_j = r_1⋯r_j`.
fn d_vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((1i64..=40, 1i64..=12), n).prop_map(|pairs| {
        let mut ratios: Vec<Rational> = pairs.into_iter().map(|(p, q)| rat(p, q)).collect();
        ratios.sort();
        let mut acc = Rational::one();
        ratios
            .into_iter()
            .map(|r| {
                acc = &acc * r;
                acc.clone()
            })
            .collect()
    })
}

fn uniform(n: usize) -> RationalPoint {
    RationalPoint::new(vec![rat(1, n as i64); n]).unwrap()
}

fn fit() -> FitConfig {
    FitConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn normalization_is_idempotent_and_order_free(j in any_ideal(4, 6)) {
        let raw: Vec<ExponentVector> = j.generators().to_vec();
        let mut reversed = raw.clone();
        reversed.reverse();
        prop_assert_eq!(normalize_generators(raw, j.dim()).unwrap(), j.clone());
        prop_assert_eq!(normalize_generators(reversed, j.dim()).unwrap(), j.clone());
        for (a, b) in j.generators().iter().zip(j.generators().iter().skip(1)) {
            prop_assert!(a < b);
        }
        for a in j.generators() {
            for b in j.generators() {
                prop_assert!(a == b || !a.divides(b));
            }
        }
    }

    #[test]
    fn membership_is_upward_closed(j in any_ideal(3, 5), beta in proptest::collection::vec(0u32..8, 3), axis in 0usize..3) {
        let n = j.dim();
        let beta = ExponentVector::new(beta[..n].to_vec()).unwrap();
        let bumped = beta.checked_add(&ExponentVector::unit(n, axis % n)).unwrap();
        if contains_monomial(&j, &beta).unwrap() {
            prop_assert!(contains_monomial(&j, &bumped).unwrap());
        }
        for g in j.generators() {
            prop_assert!(contains_monomial(&j, g).unwrap());
        }
    }

    #[test]
    fn newton_membership_is_upward_closed(j in any_ideal(3, 5), q in proptest::collection::vec((0i64..20, 1i64..5), 3)) {
        let n = j.dim();
        let q: Vec<Rational> = q[..n].iter().map(|&(p, d)| rat(p, d)).collect();
        let bigger: Vec<Rational> = q.iter().map(|x| x + int(1)).collect();
        let inside = newton_membership(&j, &RationalPoint::new(q).unwrap()).unwrap();
        if inside {
            prop_assert!(newton_membership(&j, &RationalPoint::new(bigger).unwrap()).unwrap());
        }
    }

    #[test]
    fn primal_and_dual_thresholds_agree(j in any_ideal(4, 7)) {
        let cert = kiselman_lct(&j).unwrap();
        prop_assert_eq!(&cert.c, &howald_lct(&j).unwrap());
        prop_assert!(cert.check(&j));
        // Every point on the boundary of c·P(J) along the diagonal is in P(J) scaled back.
        let n = j.dim();
        let corner = RationalPoint::new(vec![cert.c.recip(); n]).unwrap();
        prop_assert!(newton_membership(&j, &corner).unwrap());
    }

    #[test]
    fn scaling_divides_threshold(j in any_ideal(3, 5), k in 1u32..5) {
        let cert = kiselman_lct(&j).unwrap();
        let scaled = kiselman_lct(&j.scale_exponents(k).unwrap()).unwrap();
        let k = int(k.into());
        prop_assert_eq!(scaled.c, &cert.c / &k);
        prop_assert_eq!(scaled.nu, &cert.nu * &k);
        prop_assert_eq!(scaled.x0, cert.x0);
    }

    #[test]
    fn diagonal_ideals_match_closed_form(a in proptest::collection::vec(1u32..12, 1..=5)) {
        let j = MonomialIdeal::diagonal(&a).unwrap();
        let w = DiagonalWeights::from_integers(&a).unwrap();
        prop_assert_eq!(kiselman_lct(&j).unwrap().c, diagonal_lct(&w));
    }

    #[test]
    fn skoda_sandwich_and_homogeneity(j in any_ideal(4, 7)) {
        let n = j.dim();
        let c = kiselman_lct(&j).unwrap().c;
        let e1 = j.min_degree();
        prop_assert!(skoda_interval(e1, n).contains(&ExtRational::Finite(c)));
        let nu = refined_lelong(&j, &uniform(n)).unwrap();
        prop_assert_eq!(nu * int(n as i64), int(e1 as i64));
    }

    #[test]
    fn d_is_closed_under_products(n in 1usize..=6, seed in any::<u64>()) {
        let runner_vectors = |s: u64| -> Vec<Rational> {
            (0..n).map(|j| rat(((s >> (j * 5)) % 23 + 1) as i64, ((s >> (j * 3 + 1)) % 7 + 1) as i64)).collect()
        };
        let mut a = runner_vectors(seed);
        let mut b = runner_vectors(seed.rotate_left(17));
        a.sort();
        b.sort();
        let to_t = |r: &[Rational]| -> Vec<Rational> {
            let mut acc = Rational::one();
            r.iter().map(|x| { acc = &acc * x; acc.clone() }).collect()
        };
        let (ta, tb) = (to_t(&a), to_t(&b));
        prop_assert!(d_membership(&ta).unwrap());
        prop_assert!(d_membership(&tb).unwrap());
        let prod: Vec<Rational> = ta.iter().zip(&tb).map(|(x, y)| x * y).collect();
        prop_assert!(d_membership(&prod).unwrap());
    }

    #[test]
    fn f_is_nonincreasing_on_d(t in (1usize..=6).prop_flat_map(|n| (d_vector(n), d_vector(n)))) {
        let (a, b) = t;
        // a·b dominates a coordinatewise when every b_j ≥ 1, which ascending
        // ratios ≥ 1 guarantee; force that by clamping the ratios.
        let b: Vec<Rational> = b.into_iter().map(|x| if x < Rational::one() { Rational::one() } else { x }).collect();
        let b = if d_membership(&b).unwrap() { b } else { vec![Rational::one(); a.len()] };
        let big: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
        prop_assert!(d_membership(&big).unwrap());
        prop_assert!(f_value(&big).unwrap() <= f_value(&a).unwrap());
    }

    #[test]
    fn derivative_sign_certificate(t in (2usize..=6).prop_flat_map(d_vector)) {
        let one = Rational::one();
        for j in 0..t.len() - 1 {
            let before = if j == 0 { &one } else { &t[j - 1] };
            let partial = -(before / (&t[j] * &t[j])) + t[j + 1].recip();
            prop_assert!(partial <= Rational::zero());
        }
    }

    #[test]
    fn substitution_identity(a in proptest::collection::vec((1i64..30, 1i64..8), 1..=6)) {
        let a: Vec<Rational> = a.into_iter().map(|(p, q)| rat(p, q)).collect();
        let mut acc = Rational::one();
        let t: Vec<Rational> = a.iter().map(|x| { acc = &acc * x; acc.clone() }).collect();
        let expected = a.iter().fold(Rational::zero(), |s, x| s + x.recip());
        prop_assert_eq!(f_value(&t).unwrap(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn fitted_multiplicities_are_consistent(j in isolated_ideal(3, 5)) {
        let n = j.dim();
        let e = mixed_multiplicities(&j, &fit()).unwrap();
        prop_assert_eq!(e.e(1), j.min_degree());
        prop_assert_eq!(e.e(n), covolume_times_factorial(&j).unwrap());
        prop_assert!(validate_sequence(&e).all_pass());
        let t: Vec<Rational> = e.values()[1..].iter().map(|&x| int(x as i64)).collect();
        prop_assert!(d_membership(&t).unwrap());
    }

    #[test]
    fn minorant_chain(j in isolated_ideal(3, 5)) {
        let cert = kiselman_lct(&j).unwrap();
        let e = mixed_multiplicities(&j, &fit()).unwrap();
        let main = main_bound(&e).unwrap();
        prop_assert!(main <= ExtRational::Finite(cert.c.clone()));
        if let Ok(psi) = minorant_from_certificate(&cert) {
            let w = psi.weights.weights();
            let mut acc = Rational::one();
            let t: Vec<Rational> = w.iter().map(|x| { acc = &acc * x; acc.clone() }).collect();
            prop_assert!(d_membership(&t).unwrap());
            let f_psi = f_value(&t).unwrap();
            prop_assert_eq!(&f_psi, &diagonal_lct(&psi.weights));
            prop_assert_eq!(&f_psi, &cert.c);
            prop_assert!(main <= ExtRational::Finite(f_psi));
        }
    }

    #[test]
    fn inclusion_is_monotone(j in isolated_ideal(3, 4), extra in proptest::collection::vec(0u32..4, 3)) {
        let n = j.dim();
        let extra: Vec<u32> = extra[..n].to_vec();
        prop_assume!(extra.iter().any(|&a| a > 0));
        let mut gens: Vec<Vec<u32>> = j.generators().iter().map(|g| g.to_vec()).collect();
        gens.push(extra);
        let bigger = MonomialIdeal::new(n, gens).unwrap();
        prop_assert!(j.is_contained_in(&bigger));
        let (small_c, big_c) = (kiselman_lct(&j).unwrap().c, kiselman_lct(&bigger).unwrap().c);
        prop_assert!(small_c <= big_c);
        let (e_small, e_big) = (mixed_multiplicities(&j, &fit()).unwrap(), mixed_multiplicities(&bigger, &fit()).unwrap());
        prop_assert!(e_big.e(n) <= e_small.e(n));
    }

    #[test]
    fn monomial_inputs_are_exact_through_groebner(j in isolated_ideal(3, 4)) {
        let n = j.dim();
        let polys: Vec<Polynomial> = j.generators().iter().cloned().map(Polynomial::monomial).collect();
        let cfg = FrontendConfig::default();
        for order in [MonomialOrder::lex(n), MonomialOrder::grevlex(n)] {
            let cert = certified_lct_lower_bound(&polys, &order, &cfg).unwrap();
            prop_assert_eq!(&cert.initial_ideal, &j);
            prop_assert_eq!(&cert.c_initial, &kiselman_lct(&j).unwrap().c);
            let bound = cert.initial_main_bound.clone().unwrap();
            prop_assert!(bound <= ExtRational::Finite(cert.c_initial.clone()));
        }
    }
}

#[test]
fn newton_polyhedron_determines_threshold_and_volume() {
    // (1,1) lies on the segment from (2,0) to (0,2), so it changes neither P(J)
    // nor the covolume, although it changes J.
    let j = MonomialIdeal::new(2, vec![vec![2, 0], vec![0, 2]]).unwrap();
    let k = MonomialIdeal::new(2, vec![vec![2, 0], vec![1, 1], vec![0, 2]]).unwrap();
    assert_ne!(j, k);
    assert_eq!(kiselman_lct(&j).unwrap().c, kiselman_lct(&k).unwrap().c);
    assert_eq!(mixed_multiplicities(&j, &fit()).unwrap(), mixed_multiplicities(&k, &fit()).unwrap());
    assert_eq!(covolume_times_factorial(&j).unwrap(), 4);
    assert_eq!(covolume_times_factorial(&k).unwrap(), 4);
}

#[test]
fn pure_power_ideals_are_sharp() {
    for a in [vec![2u32, 3], vec![1, 1, 1], vec![2, 3, 4], vec![3, 3], vec![1, 5, 7]] {
        let j = MonomialIdeal::diagonal(&a).unwrap();
        let e = mixed_multiplicities(&j, &fit()).unwrap();
        assert_eq!(main_bound(&e).unwrap(), ExtRational::Finite(kiselman_lct(&j).unwrap().c), "{a:?}");
        let polys: Vec<Polynomial> = j.generators().iter().cloned().map(Polynomial::monomial).collect();
        let cert = certified_lct_lower_bound(&polys, &MonomialOrder::grevlex(a.len()), &FrontendConfig::default())
            .unwrap();
        assert_eq!(cert.initial_main_bound, Some(ExtRational::Finite(cert.c_initial.clone())));
    }
}

fn parse_all(texts: &[&str], n: usize) -> Vec<Polynomial> {
    texts.iter().map(|t| lct_core::groebner::parse_polynomial(t, n).unwrap()).collect()
}

#[test]
fn groebner_bases_have_zero_residues() {
    let cases: &[(&[&str], usize)] = &[
        (&["x1^2 - x2^3", "x1*x2 - x3^2"], 3),
        (&["x1^3 + x2^2", "x1*x2^2 + x2^3"], 2),
        (&["x1^2 + x2^2 + x3^2", "x1*x2*x3", "x1^3 - x2^3"], 3),
        (&["x1 - x2^2", "x2^4 - x2"], 2),
    ];
    let cfg = GroebnerConfig::default();
    let orders = |n: usize| {
        vec![
            MonomialOrder::lex(n),
            MonomialOrder::grevlex(n),
            MonomialOrder::new(OrderKind::Lex, (0..n).rev().collect()).unwrap(),
            MonomialOrder::natural(
                OrderKind::Weighted { weights: (1..=n as u64).collect(), tiebreak: lct_core::groebner::Tiebreak::Grevlex },
                n,
            )
            .unwrap(),
        ]
    };
    for (texts, n) in cases {
        let input = parse_all(texts, *n);
        for order in orders(*n) {
            let gb = buchberger(&input, &order, &cfg).unwrap();
            assert!(s_polynomial_residues(&gb, &order, &cfg).unwrap().iter().all(Option::is_none));
            assert!(is_reduced(&gb, &order));
            // Reducing the basis again is a fixed point.
            assert_eq!(buchberger(&gb, &order, &cfg).unwrap(), gb);
        }
    }
}

#[test]
fn initial_ideal_follows_variable_relabeling() {
    let input = parse_all(&["x1^2 - x2^3", "x1*x2 - x3^2"], 3);
    let swapped = parse_all(&["x2^2 - x1^3", "x2*x1 - x3^2"], 3);
    let cfg = GroebnerConfig::default();
    let order = MonomialOrder::lex(3);
    let swapped_order = MonomialOrder::new(OrderKind::Lex, vec![1, 0, 2]).unwrap();
    let j0 = initial_ideal(&buchberger(&input, &order, &cfg).unwrap(), &order).unwrap();
    let k0 = initial_ideal(&buchberger(&swapped, &swapped_order, &cfg).unwrap(), &swapped_order).unwrap();
    let relabeled: Vec<Vec<u32>> = k0.generators().iter().map(|g| vec![g[1], g[0], g[2]]).collect();
    assert_eq!(MonomialIdeal::new(3, relabeled).unwrap(), j0);
}

#[test]
fn initial_bound_never_exceeds_known_diagonal_threshold() {
    // x1^a + x2^b has threshold 1/a + 1/b (capped at 1); the certificate must not exceed it.
    for (a, b) in [(2u32, 3u32), (3, 4), (2, 5), (4, 4), (3, 5)] {
        let text = format!("x1^{a} + x2^{b}");
        let input = parse_all(&[&text], 2);
        let known = (rat(1, a as i64) + rat(1, b as i64)).min(int(1));
        for order in [MonomialOrder::lex(2), MonomialOrder::grevlex(2)] {
            let cert = certified_lct_lower_bound(&input, &order, &FrontendConfig::default()).unwrap();
            assert_ne!(cert.c_initial.cmp(&known), Ordering::Greater, "{text}");
        }
    }
}
