//! Brute-force geometry oracles that share no code with the library kernel.

#![allow(dead_code)]

use std::collections::BTreeSet;

use okounkov::geom::{Halfspace, Rational};
use okounkov::Point;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Coordinates `k/den` in `[lo, hi]` with `den` drawn from `1..=4`.
pub fn random_point(rng: &mut ChaCha8Rng, d: usize, lo: i64, hi: i64) -> Point {
    Point(
        (0..d)
            .map(|_| {
                let den = rng.gen_range(1..=4i64);
                r(rng.gen_range(lo * den..=hi * den), den)
            })
            .collect(),
    )
}

pub fn random_cloud(rng: &mut ChaCha8Rng, d: usize, lo: i64, hi: i64) -> Vec<Point> {
    let n = rng.gen_range(d + 2..=d + 9);
    (0..n).map(|_| random_point(rng, d, lo, hi)).collect()
}

fn cross2(o: &Point, a: &Point, b: &Point) -> Rational {
    (&a.0[0] - &o.0[0]) * (&b.0[1] - &o.0[1]) - (&a.0[1] - &o.0[1]) * (&b.0[0] - &o.0[0])
}

fn dist2(a: &Point, b: &Point) -> Rational {
    a.0.iter().zip(&b.0).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Extreme points of a planar cloud by gift wrapping. Collinear boundary
/// points are skipped by always wrapping to the farthest candidate.
pub fn jarvis_march(points: &[Point]) -> BTreeSet<Point> {
    let pts: Vec<Point> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    if pts.len() <= 2 {
        return pts.into_iter().collect();
    }
    let start = pts.iter().min().unwrap().clone();
    let mut hull = BTreeSet::new();
    let mut current = start.clone();
    loop {
        hull.insert(current.clone());
        let mut next = if pts[0] == current { pts[1].clone() } else { pts[0].clone() };
        for p in &pts {
            if *p == current {
                continue;
            }
            let c = cross2(&current, &next, p);
            if c.is_negative() || (c.is_zero() && dist2(&current, p) > dist2(&current, &next)) {
                next = p.clone();
            }
        }
        if next == start {
            break;
        }
        current = next;
        if hull.contains(&current) {
            break;
        }
    }
    hull
}

fn cross3(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Scales `(normal, offset)` so the first nonzero normal entry is `±1`.
pub fn normalize(normal: &[Rational], offset: &Rational) -> (Vec<Rational>, Rational) {
    let k = normal.iter().find(|x| !x.is_zero()).expect("nonzero normal").abs();
    (normal.iter().map(|x| x.clone() / &k).collect(), offset.clone() / &k)
}

/// Facet planes of a full-dimensional 3D cloud: every plane through three
/// affinely independent points with the whole cloud on one side.
pub fn brute_force_facets(points: &[Point]) -> BTreeSet<(Vec<Rational>, Rational)> {
    let mut out = BTreeSet::new();
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (&points[i].0, &points[j].0, &points[k].0);
                let u: Vec<Rational> = b.iter().zip(a).map(|(x, y)| x - y).collect();
                let v: Vec<Rational> = c.iter().zip(a).map(|(x, y)| x - y).collect();
                let normal = cross3(&u, &v);
                if normal.iter().all(Rational::is_zero) {
                    continue;
                }
                let offset = dot(&normal, a);
                let side: Vec<Rational> = points.iter().map(|p| dot(&normal, &p.0) - &offset).collect();
                if side.iter().all(|s| !s.is_positive()) {
                    out.insert(normalize(&normal, &offset));
                } else if side.iter().all(|s| !s.is_negative()) {
                    let neg: Vec<Rational> = normal.iter().map(|x| -x.clone()).collect();
                    out.insert(normalize(&neg, &-offset));
                }
            }
        }
    }
    out
}

/// Points of the cloud tight on `d` facets with linearly independent normals.
pub fn vertices_from_facets(points: &[Point], facets: &BTreeSet<(Vec<Rational>, Rational)>, d: usize) -> BTreeSet<Point> {
    points
        .iter()
        .filter(|p| {
            let tight: Vec<Vec<Rational>> =
                facets.iter().filter(|(n, b)| dot(n, &p.0) == *b).map(|(n, _)| n.clone()).collect();
            rank(tight) == d
        })
        .cloned()
        .collect()
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / &rows[rank][c];
                let pivot = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x = x.clone() - &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves a square system by Gaussian elimination; `None` if singular.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        b.swap(c, p);
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone() / &a[c][c];
                let row = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(&row) {
                    *x = x.clone() - &f * y;
                }
                b[i] = b[i].clone() - &f * &b[c];
            }
        }
    }
    Some((0..n).map(|i| b[i].clone() / &a[i][i]).collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Whether `x` is a convex combination of `d + 1` of the given points
/// (Carathéodory), tested on every affinely independent subset.
pub fn in_hull_caratheodory(vertices: &[Point], x: &Point) -> bool {
    let d = x.dim();
    if vertices.contains(x) {
        return true;
    }
    for k in 1..=vertices.len().min(d + 1) {
        for s in subsets(vertices.len(), k) {
            // x = v0 + Σ_{j>0} w_j (v_j − v0) with w_j >= 0 and Σ w_j <= 1,
            // solved by least squares on the Gram matrix of the edge vectors.
            let v0 = &vertices[s[0]].0;
            let edges: Vec<Vec<Rational>> =
                s[1..].iter().map(|&j| vertices[j].0.iter().zip(v0).map(|(a, b)| a - b).collect()).collect();
            let rhs: Vec<Rational> = x.0.iter().zip(v0).map(|(a, b)| a - b).collect();
            if edges.is_empty() {
                continue;
            }
            let gram: Vec<Vec<Rational>> = edges.iter().map(|e| edges.iter().map(|f| dot(e, f)).collect()).collect();
            let g: Vec<Rational> = edges.iter().map(|e| dot(e, &rhs)).collect();
            let Some(w) = solve(gram, g) else { continue };
            let mut y = v0.clone();
            for (wj, e) in w.iter().zip(&edges) {
                for (yi, ei) in y.iter_mut().zip(e) {
                    *yi = yi.clone() + wj * ei;
                }
            }
            let sum: Rational = w.iter().sum();
            if y == x.0 && w.iter().all(|wj| !wj.is_negative()) && sum <= Rational::one() {
                return true;
            }
        }
    }
    false
}

/// Floating halfspace test used by the Monte-Carlo volume oracle.
pub fn inside_f64(facets: &[(Vec<f64>, f64)], x: &[f64]) -> bool {
    facets.iter().all(|(n, b)| n.iter().zip(x).map(|(a, y)| a * y).sum::<f64>() <= *b + 1e-12)
}

pub fn facets_f64(h: &[Halfspace]) -> Vec<(Vec<f64>, f64)> {
    h.iter().map(|h| (h.normal.iter().map(Rational::to_f64).collect(), h.offset.to_f64())).collect()
}

/// Monte-Carlo volume of a body given by float halfspaces inside a box,
/// with its standard error.
pub fn monte_carlo_volume(
    rng: &mut ChaCha8Rng,
    facets: &[(Vec<f64>, f64)],
    lo: &[f64],
    hi: &[f64],
    samples: usize,
) -> (f64, f64) {
    let box_vol: f64 = lo.iter().zip(hi).map(|(a, b)| b - a).product();
    let mut hits = 0usize;
    let mut x = vec![0.0; lo.len()];
    for _ in 0..samples {
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = rng.gen_range(lo[i]..=hi[i]);
        }
        if inside_f64(facets, &x) {
            hits += 1;
        }
    }
    let p = hits as f64 / samples as f64;
    (p * box_vol, box_vol * (p * (1.0 - p) / samples as f64).sqrt())
}
