//! Double description method for pointed polyhedral cones.
//!
//! Given integer rows `a_i`, computes the extreme rays of `{x : a_i . x >= 0}`.
//! Rows are processed in order starting from a simplicial cone spanned by the
//! first linearly independent rows; adjacency uses the combinatorial test on
//! tight-constraint sets. All arithmetic is exact.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::linalg;
use super::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct NotPointed;

fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides out the gcd so that rays stay small.
pub(crate) fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Scales a rational vector by a positive factor to a primitive integer vector.
pub(crate) fn integer_direction(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::from(1), |l, x| l.lcm(x.denom()));
    primitive(v.iter().map(|x| x.numer() * (&l / x.denom())).collect())
}

struct Ray {
    v: Vec<BigInt>,
    tight: FixedBitSet,
}

/// Extreme rays of `{x in R^n : row . x >= 0 for every row}`.
///
/// Fails with [`NotPointed`] when the rows do not have rank `n`.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], n: usize) -> Result<Vec<Vec<BigInt>>, NotPointed> {
    let rows: Vec<&Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    let m = rows.len();

    // Greedy choice of n independent rows.
    let mut basis: Vec<usize> = Vec::with_capacity(n);
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if basis.len() == n {
            break;
        }
        let mut cand = echelon.clone();
        cand.push(row.iter().map(|x| Rational::from_bigint(x.clone())).collect());
        if linalg::rank(&cand, n) == cand.len() {
            echelon = cand;
            basis.push(i);
        }
    }
    if basis.len() < n {
        return Err(NotPointed);
    }
    let inv = linalg::inverse(&echelon).expect("independent rows");

    // Column j of the inverse is tight on every basis row except j.
    let mut rays: Vec<Ray> = (0..n)
        .map(|j| {
            let col: Vec<Rational> = (0..n).map(|i| inv[i][j].clone()).collect();
            let mut tight = FixedBitSet::with_capacity(m);
            for (k, &b) in basis.iter().enumerate() {
                if k != j {
                    tight.insert(b);
                }
            }
            Ray { v: integer_direction(&col), tight }
        })
        .collect();

    let mut in_basis = vec![false; m];
    for &b in &basis {
        in_basis[b] = true;
    }

    for (i, row) in rows.iter().enumerate() {
        if in_basis[i] {
            continue;
        }
        if rays.is_empty() {
            break;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| idot(row, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();

        let mut fresh: Vec<Ray> = Vec::new();
        if !neg.is_empty() {
            for &p in &pos {
                for &qn in &neg {
                    let mut common = rays[p].tight.clone();
                    common.intersect_with(&rays[qn].tight);
                    if common.count_ones(..) + 2 < n {
                        continue;
                    }
                    let adjacent = rays
                        .iter()
                        .enumerate()
                        .all(|(k, r)| k == p || k == qn || !r.tight.is_superset(&common));
                    if !adjacent {
                        continue;
                    }
                    let sp = &vals[p];
                    let sq = &vals[qn];
                    let v: Vec<BigInt> = rays[qn]
                        .v
                        .iter()
                        .zip(&rays[p].v)
                        .map(|(a, b)| sp * a - sq * b)
                        .collect();
                    let mut tight = common;
                    tight.insert(i);
                    fresh.push(Ray { v: primitive(v), tight });
                }
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            if vals[k].is_negative() {
                continue;
            }
            if vals[k].is_zero() {
                r.tight.insert(i);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }

    Ok(rays.into_iter().map(|r| r.v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(r: &[&[i64]]) -> Vec<Vec<BigInt>> {
        r.iter().map(|x| x.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    fn sorted(mut v: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
        v.sort();
        v
    }

    #[test]
    fn orthant_rays() {
        let r = rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let rays = sorted(extreme_rays(&r, 3).unwrap());
        assert_eq!(rays, sorted(rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])));
    }

    #[test]
    fn square_pyramid_cone() {
        // Homogenized unit square: s >= 0, x >= 0, y >= 0, s - x >= 0, s - y >= 0.
        let r = rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 0, -1]]);
        let rays = sorted(extreme_rays(&r, 3).unwrap());
        assert_eq!(rays, sorted(rows(&[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 1, 1]])));
    }

    #[test]
    fn infeasible_collapses_to_origin() {
        // s >= 0, x >= s, -x >= s  forces s = x = 0.
        let r = rows(&[&[1, 0], &[-1, 1], &[-1, -1]]);
        assert!(extreme_rays(&r, 2).unwrap().is_empty());
    }

    #[test]
    fn rank_deficient_is_rejected() {
        let r = rows(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(extreme_rays(&r, 3), Err(NotPointed));
    }
}
