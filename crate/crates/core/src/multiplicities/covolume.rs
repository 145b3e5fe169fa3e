//! `n! · vol(R_+^n \ P(J))` for `n ≤ 3`.
//!
//! The bounded complement of the Newton polyhedron is the union of the
//! pyramids with apex 0 over the compact facets of `P(J)`. Fanning each
//! facet into simplices with the origin gives `n!·vol` as a sum of absolute
//! determinants, so the whole computation stays in integers.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{is_isolated_zero, MonomialIdeal};

pub fn covolume_times_factorial(ideal: &MonomialIdeal) -> Result<u64> {
    ideal.require_proper()?;
    if !is_isolated_zero(ideal) {
        return Err(Error::InfiniteColength);
    }
    let pts: Vec<Vec<i64>> =
        ideal.generators().iter().map(|g| g.iter().map(|&a| a as i64).collect()).collect();
    let total = match ideal.dim() {
        1 => pts.iter().map(|p| p[0] as i128).min().unwrap(),
        2 => {
            let pts: Vec<[i64; 2]> = pts.iter().map(|p| [p[0], p[1]]).collect();
            let hull = lower_hull(pts);
            hull.windows(2).map(|w| det2(w[0], w[1]).abs()).sum()
        }
        3 => compact_facets(&pts).iter().map(|f| fan_volume(f)).sum(),
        n => return Err(Error::Unsupported(alloc::format!("covolume for n = {n} > 3"))),
    };
    u64::try_from(total).map_err(|_| Error::Resource("covolume overflow".into()))
}

fn det2(a: [i64; 2], b: [i64; 2]) -> i128 {
    a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128
}

fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i128 {
    det2([a[0] - o[0], a[1] - o[1]], [b[0] - o[0], b[1] - o[1]])
}

/// Lower convex hull (Andrew's monotone chain), left to right, collinear
/// points dropped.
fn lower_hull(mut pts: Vec<[i64; 2]>) -> Vec<[i64; 2]> {
    pts.sort();
    pts.dedup();
    let mut hull: Vec<[i64; 2]> = Vec::new();
    for p in pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull
}

/// Full 2D convex hull in counterclockwise order.
fn convex_hull(mut pts: Vec<[i64; 2]>) -> Vec<[i64; 2]> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower = lower_hull(pts.clone());
    pts.reverse();
    let mut upper: Vec<[i64; 2]> = Vec::new();
    for p in pts {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn sub3(a: &[i64], b: &[i64]) -> [i128; 3] {
    [(a[0] - b[0]) as i128, (a[1] - b[1]) as i128, (a[2] - b[2]) as i128]
}

fn cross3(u: [i128; 3], v: [i128; 3]) -> [i128; 3] {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

fn dot3(u: [i128; 3], p: &[i64]) -> i128 {
    u[0] * p[0] as i128 + u[1] * p[1] as i128 + u[2] * p[2] as i128
}

/// Vertex lists of the compact facets of `conv(pts) + R_+^3`, each in
/// cyclic order.
///
/// A compact facet has a strictly positive inner normal `u` and is the
/// convex hull of the generators minimizing `⟨u, ·⟩`; candidate normals
/// come from all affinely independent triples.
fn compact_facets(pts: &[Vec<i64>]) -> Vec<Vec<Vec<i64>>> {
    let mut seen = BTreeSet::new();
    let mut facets = Vec::new();
    let k = pts.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let mut u = cross3(sub3(&pts[b], &pts[a]), sub3(&pts[c], &pts[a]));
                if u.iter().all(|&x| x < 0) {
                    u = [-u[0], -u[1], -u[2]];
                }
                if !u.iter().all(|&x| x > 0) {
                    continue;
                }
                let g = u[0].gcd(&u[1]).gcd(&u[2]);
                let u = [u[0] / g, u[1] / g, u[2] / g];
                let h = dot3(u, &pts[a]);
                if pts.iter().any(|p| dot3(u, p) < h) || !seen.insert(u) {
                    continue;
                }
                let on_plane: Vec<[i64; 2]> =
                    pts.iter().filter(|p| dot3(u, p) == h).map(|p| [p[0], p[1]]).collect();
                // u_3 > 0, so dropping z is injective on the plane.
                let polygon = convex_hull(on_plane)
                    .into_iter()
                    .map(|[x, y]| {
                        let z = (h - u[0] * x as i128 - u[1] * y as i128) / u[2];
                        alloc::vec![x, y, z as i64]
                    })
                    .collect();
                facets.push(polygon);
            }
        }
    }
    facets
}

/// `3! · vol(conv(0, F))` for a convex polygon `F`.
fn fan_volume(polygon: &[Vec<i64>]) -> i128 {
    let p0 = &polygon[0];
    polygon
        .windows(2)
        .skip(1)
        .map(|w| {
            let u = [p0[0] as i128, p0[1] as i128, p0[2] as i128];
            let v = [w[0][0] as i128, w[0][1] as i128, w[0][2] as i128];
            let c = cross3(v, [w[1][0] as i128, w[1][1] as i128, w[1][2] as i128]);
            (u[0] * c[0] + u[1] * c[1] + u[2] * c[2]).abs()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(covolume_times_factorial(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap(), 6);
        assert_eq!(covolume_times_factorial(&MonomialIdeal::maximal(2)).unwrap(), 1);
        assert_eq!(covolume_times_factorial(&ideal(2, &[&[3, 0], &[1, 1], &[0, 3]])).unwrap(), 6);
        assert_eq!(covolume_times_factorial(&ideal(1, &[&[7]])).unwrap(), 7);
    }

    #[test]
    fn three_dimensional() {
        assert_eq!(covolume_times_factorial(&MonomialIdeal::maximal(3)).unwrap(), 1);
        assert_eq!(covolume_times_factorial(&MonomialIdeal::diagonal(&[2, 3, 4]).unwrap()).unwrap(), 24);
        let j = ideal(3, &[&[4, 0, 0], &[0, 5, 0], &[0, 0, 3], &[1, 1, 1]]);
        assert_eq!(covolume_times_factorial(&j).unwrap(), 47);
    }

    #[test]
    fn interior_points_do_not_matter() {
        // (2,2) sits above the segment from (4,0) to (0,4).
        let j = ideal(2, &[&[4, 0], &[2, 2], &[0, 4]]);
        assert_eq!(covolume_times_factorial(&j).unwrap(), 16);
        let j = ideal(2, &[&[4, 0], &[3, 2], &[0, 4]]);
        assert_eq!(covolume_times_factorial(&j).unwrap(), 16);
    }

    #[test]
    fn rejects_unsupported() {
        assert!(covolume_times_factorial(&MonomialIdeal::maximal(4)).is_err());
        assert!(covolume_times_factorial(&ideal(2, &[&[1, 1]])).is_err());
    }
}
