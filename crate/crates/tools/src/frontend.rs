//! Parallel order sweep for the Gröbner lower bound.

use lct_core::groebner::{
    certified_lct_lower_bound, select_best, FrontendConfig, LowerBoundCertificate, MonomialOrder, OrderKind,
    Polynomial,
};
use lct_core::Result;
use rayon::prelude::*;

/// Largest `n` for which every precedence permutation is tried.
pub const FULL_SWEEP_MAX_DIM: usize = 4;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permute(&mut current, 0, &mut out);
    out.sort();
    out
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

/// `first`, then lex and grevlex under every variable precedence (or only
/// the natural and reversed ones when `n > FULL_SWEEP_MAX_DIM`), without
/// repeats.
pub fn sweep_orders(first: &MonomialOrder) -> Vec<MonomialOrder> {
    let n = first.dim();
    let precedences = if n <= FULL_SWEEP_MAX_DIM {
        permutations(n)
    } else {
        vec![(0..n).collect(), (0..n).rev().collect()]
    };
    let mut orders = vec![first.clone()];
    for kind in [OrderKind::Lex, OrderKind::Grevlex] {
        for p in &precedences {
            let o = MonomialOrder::new(kind.clone(), p.clone()).expect("permutation");
            if !orders.contains(&o) {
                orders.push(o);
            }
        }
    }
    orders
}

/// Runs every order on its own worker; the winner is chosen in list order,
/// so the result does not depend on scheduling.
pub fn parallel_order_sweep(
    polys: &[Polynomial],
    orders: &[MonomialOrder],
    config: &FrontendConfig,
) -> Result<LowerBoundCertificate> {
    let results: Vec<Result<LowerBoundCertificate>> =
        orders.par_iter().map(|o| certified_lct_lower_bound(polys, o, config)).collect();
    select_best(results)
}
