use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::cone::{self, integer_direction};
use super::linalg;
use super::rational::Rational;
use super::Point;
use crate::error::{Error, Result};

/// Largest ambient dimension accepted by the exact hull routines.
pub const MAX_DIM: usize = 4;

/// Closed halfspace `normal . x <= offset` (or the hyperplane `normal . x = offset`
/// when stored as an equality).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Halfspace {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Self {
        Halfspace { normal, offset }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        linalg::dot(&self.normal, x)
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        self.eval(x) <= self.offset
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.eval(x) == self.offset
    }

    /// Rescales by a positive factor so the normal is a primitive integer vector.
    fn canonical(self) -> Self {
        if self.normal.iter().all(Rational::is_zero) {
            return self;
        }
        let dir = integer_direction(&self.normal);
        // dir = normal * s for some s > 0; recover s from any nonzero entry.
        let k = self.normal.iter().position(|x| !x.is_zero()).unwrap();
        let s = Rational::from_bigint(dir[k].clone()) / &self.normal[k];
        Halfspace {
            normal: dir.into_iter().map(Rational::from_bigint).collect(),
            offset: self.offset * s,
        }
    }

    fn negated(&self) -> Self {
        Halfspace {
            normal: self.normal.iter().map(|x| -x).collect(),
            offset: -&self.offset,
        }
    }
}

/// Convex polytope with both a vertex and a halfspace description.
///
/// Vertices are exactly the extreme points, sorted lexicographically.
/// `facets` are facet-defining inequalities relative to the affine hull and
/// `equalities` cut out the affine hull itself; both are canonical and
/// sorted. An empty polytope has no vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolytopeRepr", into = "PolytopeRepr")]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Point>,
    facets: Vec<Halfspace>,
    equalities: Vec<Halfspace>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    vertices: Vec<Point>,
}

impl TryFrom<PolytopeRepr> for Polytope {
    type Error = Error;
    fn try_from(r: PolytopeRepr) -> Result<Self> {
        if r.vertices.is_empty() {
            return match r.dim {
                Some(d) => Ok(Polytope::empty(d)),
                None => Err(Error::EmptyInput),
            };
        }
        let p = convex_hull(&r.vertices)?;
        if let Some(d) = r.dim {
            if d != p.dim {
                return Err(Error::DimensionMismatch { expected: d, found: p.dim });
            }
        }
        Ok(p)
    }
}

impl From<Polytope> for PolytopeRepr {
    fn from(p: Polytope) -> Self {
        PolytopeRepr { dim: Some(p.dim), vertices: p.vertices }
    }
}

fn check_dim(d: usize) -> Result<()> {
    if d == 0 || d > MAX_DIM {
        Err(Error::UnsupportedDimension(d))
    } else {
        Ok(())
    }
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn affine_rank(points: &[&Point]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0].0;
    let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| sub(&p.0, base)).collect();
    linalg::rank(&diffs, base.len())
}

/// Smallest convex set containing `points`.
pub fn convex_hull(points: &[Point]) -> Result<Polytope> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let d = first.dim();
    for p in points {
        if p.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: p.dim() });
        }
    }
    check_dim(d)?;

    let pts: Vec<Point> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let x0 = pts[0].0.clone();
    let diffs: Vec<Vec<Rational>> = pts[1..].iter().map(|p| sub(&p.0, &x0)).collect();
    let (red, pivots) = linalg::rref(&diffs, d);
    let k = pivots.len();

    let equalities: Vec<Halfspace> = linalg::null_space(&red, &pivots, d)
        .into_iter()
        .map(|c| {
            let off = linalg::dot(&c, &x0);
            Halfspace::new(c, off).canonical()
        })
        .collect();

    let ys: Vec<Vec<Rational>> = pts.iter().map(|p| pivots.iter().map(|&j| p.0[j].clone()).collect()).collect();
    let (yfacets, is_vertex) = full_dim_hull(&ys, k);

    let mut facets: Vec<Halfspace> = yfacets
        .into_iter()
        .map(|h| {
            let mut normal = vec![Rational::zero(); d];
            for (a, &j) in h.normal.into_iter().zip(&pivots) {
                normal[j] = a;
            }
            Halfspace::new(normal, h.offset).canonical()
        })
        .collect();
    facets.sort();
    facets.dedup();
    let mut equalities = equalities;
    equalities.sort();

    let vertices: Vec<Point> = pts.into_iter().zip(is_vertex).filter(|(_, v)| *v).map(|(p, _)| p).collect();
    Ok(Polytope { dim: d, vertices, facets, equalities })
}

/// Hull of distinct points that affinely span `R^k`. Returns facet
/// inequalities and a per-point extremality flag.
fn full_dim_hull(ys: &[Vec<Rational>], k: usize) -> (Vec<Halfspace>, Vec<bool>) {
    match k {
        0 => (Vec::new(), vec![true; ys.len()]),
        1 => {
            let lo = ys.iter().map(|y| &y[0]).min().unwrap().clone();
            let hi = ys.iter().map(|y| &y[0]).max().unwrap().clone();
            let flags = ys.iter().map(|y| y[0] == lo || y[0] == hi).collect();
            let facets = vec![
                Halfspace::new(vec![Rational::one()], hi),
                Halfspace::new(vec![-Rational::one()], -lo),
            ];
            (facets, flags)
        }
        2 => hull_2d(ys),
        _ => hull_dd(ys, k),
    }
}

fn cross(o: &[Rational], a: &[Rational], b: &[Rational]) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Andrew's monotone chain; collinear boundary points are not vertices.
fn hull_2d(ys: &[Vec<Rational>]) -> (Vec<Halfspace>, Vec<bool>) {
    let mut idx: Vec<usize> = (0..ys.len()).collect();
    idx.sort_by(|&a, &b| ys[a].cmp(&ys[b]));
    let mut chain: Vec<usize> = Vec::with_capacity(2 * ys.len());
    for pass in 0..2 {
        let start = chain.len();
        let order: Box<dyn Iterator<Item = &usize>> =
            if pass == 0 { Box::new(idx.iter()) } else { Box::new(idx.iter().rev()) };
        for &i in order {
            while chain.len() >= start + 2
                && !cross(&ys[chain[chain.len() - 2]], &ys[chain[chain.len() - 1]], &ys[i]).is_positive()
            {
                chain.pop();
            }
            chain.push(i);
        }
        chain.pop();
    }
    let mut flags = vec![false; ys.len()];
    for &i in &chain {
        flags[i] = true;
    }
    let n = chain.len();
    let facets = (0..n)
        .map(|e| {
            let a = &ys[chain[e]];
            let b = &ys[chain[(e + 1) % n]];
            // Counter-clockwise order: the outward normal of a->b is (dy, -dx).
            let normal = vec![&b[1] - &a[1], &a[0] - &b[0]];
            let offset = linalg::dot(&normal, a);
            Halfspace::new(normal, offset)
        })
        .collect();
    (facets, flags)
}

fn hull_dd(ys: &[Vec<Rational>], k: usize) -> (Vec<Halfspace>, Vec<bool>) {
    // Dual cone {(b, a) : b + a.y >= 0 for all points}; its extreme rays are
    // the facets a.y + b >= 0.
    let rows: Vec<Vec<BigInt>> = ys
        .iter()
        .map(|y| {
            let mut r = vec![Rational::one()];
            r.extend(y.iter().cloned());
            integer_direction(&r)
        })
        .collect();
    let rays = cone::extreme_rays(&rows, k + 1).expect("points span the space");
    let facets: Vec<Halfspace> = rays
        .into_iter()
        .map(|r| {
            let b = Rational::from_bigint(r[0].clone());
            let normal = r[1..].iter().map(|x| -Rational::from_bigint(x.clone())).collect();
            Halfspace::new(normal, b)
        })
        .collect();
    let flags = ys
        .iter()
        .map(|y| {
            let tight: Vec<Vec<Rational>> =
                facets.iter().filter(|h| h.is_tight(y)).map(|h| h.normal.clone()).collect();
            linalg::rank(&tight, k) == k
        })
        .collect();
    (facets, flags)
}

impl Polytope {
    pub fn empty(dim: usize) -> Self {
        Polytope { dim, vertices: Vec::new(), facets: Vec::new(), equalities: Vec::new() }
    }

    /// The bounded set `{x : h.normal . x <= h.offset for all h}`.
    pub fn from_halfspaces(dim: usize, halfspaces: &[Halfspace]) -> Result<Polytope> {
        check_dim(dim)?;
        for h in halfspaces {
            if h.normal.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: h.normal.len() });
            }
        }
        if dim == 1 {
            return interval_from_halfspaces(halfspaces);
        }
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(halfspaces.len() + 1);
        let mut s_row = vec![Rational::zero(); dim + 1];
        s_row[0] = Rational::one();
        rows.push(integer_direction(&s_row));
        for h in halfspaces {
            if h.normal.iter().all(Rational::is_zero) {
                if h.offset.is_negative() {
                    return Ok(Polytope::empty(dim));
                }
                continue;
            }
            let mut r = vec![h.offset.clone()];
            r.extend(h.normal.iter().map(|x| -x));
            rows.push(integer_direction(&r));
        }
        let rays = cone::extreme_rays(&rows, dim + 1).map_err(|_| Error::Unbounded)?;
        let mut verts = Vec::with_capacity(rays.len());
        for r in rays {
            if r[0].is_zero() {
                return Err(Error::Unbounded);
            }
            let s = Rational::from_bigint(r[0].clone());
            verts.push(Point(r[1..].iter().map(|x| Rational::from_bigint(x.clone()) / &s).collect()));
        }
        if verts.is_empty() {
            Ok(Polytope::empty(dim))
        } else {
            convex_hull(&verts)
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn equalities(&self) -> &[Halfspace] {
        &self.equalities
    }

    /// Full inequality description: facets plus both sides of every equality.
    pub fn halfspaces(&self) -> Vec<Halfspace> {
        if self.is_empty() {
            let mut normal = vec![Rational::zero(); self.dim];
            normal[0] = Rational::one();
            // x_0 <= -1 and -x_0 <= -1 have no common point.
            return vec![
                Halfspace::new(normal.clone(), -Rational::one()),
                Halfspace::new(normal.iter().map(|x| -x).collect(), -Rational::one()),
            ];
        }
        let mut out = self.facets.clone();
        for e in &self.equalities {
            out.push(e.clone());
            out.push(e.negated());
        }
        out.sort();
        out
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension of the affine hull; `None` for the empty polytope.
    pub fn affine_dim(&self) -> Option<usize> {
        (!self.is_empty()).then(|| self.dim - self.equalities.len())
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim() == Some(self.dim)
    }

    fn check_same_dim(&self, d: usize) -> Result<()> {
        if d != self.dim {
            Err(Error::DimensionMismatch { expected: self.dim, found: d })
        } else {
            Ok(())
        }
    }

    pub fn contains_point(&self, x: &Point) -> Result<bool> {
        self.check_same_dim(x.dim())?;
        if self.is_empty() {
            return Ok(false);
        }
        Ok(self.equalities.iter().all(|e| e.is_tight(&x.0)) && self.facets.iter().all(|h| h.satisfied_by(&x.0)))
    }

    /// `other ⊆ self`, decided vertex by vertex.
    pub fn contains(&self, other: &Polytope) -> Result<bool> {
        self.check_same_dim(other.dim)?;
        for v in &other.vertices {
            if !self.contains_point(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn intersect(&self, other: &Polytope) -> Result<Polytope> {
        self.check_same_dim(other.dim)?;
        if self.is_empty() || other.is_empty() {
            return Ok(Polytope::empty(self.dim));
        }
        let mut hs = self.halfspaces();
        hs.extend(other.halfspaces());
        Polytope::from_halfspaces(self.dim, &hs)
    }

    /// Intersection with one extra halfspace.
    pub fn clip(&self, h: &Halfspace) -> Result<Polytope> {
        self.check_same_dim(h.normal.len())?;
        if self.is_empty() {
            return Ok(self.clone());
        }
        if self.vertices.iter().all(|v| h.satisfied_by(&v.0)) {
            return Ok(self.clone());
        }
        let mut hs = self.halfspaces();
        hs.push(h.clone());
        Polytope::from_halfspaces(self.dim, &hs)
    }

    /// Vertex index sets of the facets (relative to the affine hull).
    fn facet_incidence(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .map(|h| (0..self.vertices.len()).filter(|&i| h.is_tight(&self.vertices[i].0)).collect())
            .collect()
    }

    /// Triangulation into full-dimensional simplices (vertex index lists),
    /// empty unless the polytope is full-dimensional.
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        if !self.is_full_dimensional() {
            return Vec::new();
        }
        let inc = self.facet_incidence();
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let mut out = Vec::new();
        self.triangulate_face(&all, self.dim, &inc, &mut out);
        out
    }

    fn triangulate_face(&self, face: &[usize], k: usize, inc: &[Vec<usize>], out: &mut Vec<Vec<usize>>) {
        if face.len() == k + 1 {
            out.push(face.to_vec());
            return;
        }
        let apex = face[0];
        let mut subfaces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in inc {
            let s: Vec<usize> = face.iter().copied().filter(|i| f.binary_search(i).is_ok()).collect();
            if s.len() < k || s.len() == face.len() || s.contains(&apex) {
                continue;
            }
            let pts: Vec<&Point> = s.iter().map(|&i| &self.vertices[i]).collect();
            if affine_rank(&pts) == k - 1 {
                subfaces.insert(s);
            }
        }
        for s in subfaces {
            let mut sub = Vec::new();
            self.triangulate_face(&s, k - 1, inc, &mut sub);
            for mut simplex in sub {
                simplex.insert(0, apex);
                out.push(simplex);
            }
        }
    }

    fn simplex_volume(&self, simplex: &[usize]) -> Rational {
        let base = &self.vertices[simplex[0]].0;
        let m: Vec<Vec<Rational>> = simplex[1..].iter().map(|&i| sub(&self.vertices[i].0, base)).collect();
        linalg::det(m).abs() / Rational::factorial(self.dim)
    }

    /// Lebesgue measure in the ambient dimension (zero when degenerate).
    pub fn volume(&self) -> Rational {
        self.triangulation().iter().map(|s| self.simplex_volume(s)).sum()
    }

    /// Exact integral of `grad . x + offset` over the polytope.
    pub fn integrate_affine(&self, grad: &[Rational], offset: &Rational) -> Rational {
        let values: Vec<Rational> = self.vertices.iter().map(|v| linalg::dot(grad, &v.0) + offset).collect();
        let k = Rational::from_integer(self.dim as i64 + 1);
        self.triangulation()
            .iter()
            .map(|s| {
                let mean: Rational = s.iter().map(|&i| &values[i]).sum::<Rational>() / &k;
                self.simplex_volume(s) * mean
            })
            .sum()
    }

    /// All nonempty faces as sorted vertex index sets, including the polytope.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        faces.insert((0..self.vertices.len()).collect());
        let inc = self.facet_incidence();
        let mut frontier: Vec<Vec<usize>> = inc.iter().filter(|f| !f.is_empty()).cloned().collect();
        while let Some(f) = frontier.pop() {
            if !faces.insert(f.clone()) {
                continue;
            }
            for g in &inc {
                let s: Vec<usize> = f.iter().copied().filter(|i| g.binary_search(i).is_ok()).collect();
                if !s.is_empty() && !faces.contains(&s) {
                    frontier.push(s);
                }
            }
        }
        faces.into_iter().collect()
    }

    /// Exact squared Euclidean distance from `x` to the polytope.
    pub fn squared_distance(&self, x: &Point) -> Result<Option<Rational>> {
        self.check_same_dim(x.dim())?;
        if self.is_empty() {
            return Ok(None);
        }
        if self.contains_point(x)? {
            return Ok(Some(Rational::zero()));
        }
        let mut best: Option<Rational> = None;
        for face in self.faces() {
            let base = &self.vertices[face[0]].0;
            let diffs: Vec<Vec<Rational>> = face[1..].iter().map(|&i| sub(&self.vertices[i].0, base)).collect();
            let (basis, _) = linalg::rref(&diffs, self.dim);
            let rel = sub(&x.0, base);
            let proj = if basis.is_empty() {
                base.clone()
            } else {
                let gram: Vec<Vec<Rational>> =
                    basis.iter().map(|a| basis.iter().map(|b| linalg::dot(a, b)).collect()).collect();
                let rhs: Vec<Rational> = basis.iter().map(|a| linalg::dot(a, &rel)).collect();
                let c = linalg::solve(&gram, &rhs).expect("independent basis");
                let mut p = base.clone();
                for (ci, b) in c.iter().zip(&basis) {
                    for (pj, bj) in p.iter_mut().zip(b) {
                        *pj += ci * bj;
                    }
                }
                p
            };
            let p = Point(proj);
            if !self.contains_point(&p)? {
                continue;
            }
            let delta = sub(&x.0, &p.0);
            let d2 = linalg::dot(&delta, &delta);
            if best.as_ref().is_none_or(|b| d2 < *b) {
                best = Some(d2);
            }
        }
        Ok(best)
    }

    /// Hausdorff distance; `None` if either side is empty.
    pub fn hausdorff_distance(&self, other: &Polytope) -> Result<Option<f64>> {
        self.check_same_dim(other.dim)?;
        if self.is_empty() || other.is_empty() {
            return Ok(None);
        }
        let mut worst = Rational::zero();
        for v in &self.vertices {
            worst = worst.max(other.squared_distance(v)?.expect("nonempty"));
        }
        for v in &other.vertices {
            worst = worst.max(self.squared_distance(v)?.expect("nonempty"));
        }
        Ok(Some(worst.to_f64().sqrt()))
    }

    /// `self × {t}` in one dimension higher.
    pub fn at_height(&self, t: &Rational) -> Result<Polytope> {
        if self.is_empty() {
            return Ok(Polytope::empty(self.dim + 1));
        }
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| {
                let mut c = v.0.clone();
                c.push(t.clone());
                Point(c)
            })
            .collect();
        convex_hull(&pts)
    }

    /// Coordinate projection onto the first `k` coordinates.
    pub fn project(&self, k: usize) -> Result<Polytope> {
        if self.is_empty() {
            return Ok(Polytope::empty(k));
        }
        let pts: Vec<Point> = self.vertices.iter().map(|v| Point(v.0[..k].to_vec())).collect();
        convex_hull(&pts)
    }

    pub fn translate(&self, by: &Point) -> Result<Polytope> {
        self.check_same_dim(by.dim())?;
        if self.is_empty() {
            return Ok(self.clone());
        }
        let pts: Vec<Point> = self.vertices.iter().map(|v| v.add(by)).collect();
        convex_hull(&pts)
    }

    /// `s·P` for `s >= 0`.
    pub fn dilate(&self, s: &Rational) -> Result<Polytope> {
        if s.is_negative() {
            return Err(Error::NegativeSize(s.to_string()));
        }
        if self.is_empty() {
            return Ok(self.clone());
        }
        let pts: Vec<Point> = self.vertices.iter().map(|v| v.scale(s)).collect();
        convex_hull(&pts)
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        self.check_same_dim(other.dim)?;
        if self.is_empty() || other.is_empty() {
            return Ok(Polytope::empty(self.dim));
        }
        let pts: Vec<Point> = self.vertices.iter().flat_map(|a| other.vertices.iter().map(move |b| a.add(b))).collect();
        convex_hull(&pts)
    }

    /// Componentwise min and max corners; `None` when empty.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        let first = self.vertices.first()?;
        let mut lo = first.0.clone();
        let mut hi = first.0.clone();
        for v in &self.vertices[1..] {
            for j in 0..self.dim {
                if v.0[j] < lo[j] {
                    lo[j] = v.0[j].clone();
                }
                if v.0[j] > hi[j] {
                    hi[j] = v.0[j].clone();
                }
            }
        }
        Some((Point(lo), Point(hi)))
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(|v| v.0.iter().all(Rational::is_integer))
    }

    /// Integer points of the polytope in lexicographic order.
    pub fn lattice_points(&self) -> Vec<Point> {
        let Some((lo, hi)) = self.bounding_box() else {
            return Vec::new();
        };
        let lo: Vec<BigInt> = lo.0.iter().map(Rational::ceil).collect();
        let hi: Vec<BigInt> = hi.0.iter().map(Rational::floor).collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        'outer: loop {
            let p = Point(cur.iter().cloned().map(Rational::from_bigint).collect());
            if self.contains_point(&p).unwrap_or(false) {
                out.push(p);
            }
            for j in (0..self.dim).rev() {
                if cur[j] < hi[j] {
                    cur[j] += 1;
                    cur[j + 1..].clone_from_slice(&lo[j + 1..]);
                    continue 'outer;
                }
            }
            break;
        }
        out
    }
}

fn interval_from_halfspaces(hs: &[Halfspace]) -> Result<Polytope> {
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for h in hs {
        let a = &h.normal[0];
        if a.is_zero() {
            if h.offset.is_negative() {
                return Ok(Polytope::empty(1));
            }
            continue;
        }
        let bound = &h.offset / a;
        if a.is_positive() {
            hi = Some(match hi {
                Some(x) => x.min(bound),
                None => bound,
            });
        } else {
            lo = Some(match lo {
                Some(x) => x.max(bound),
                None => bound,
            });
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Err(Error::Unbounded);
    };
    if lo > hi {
        return Ok(Polytope::empty(1));
    }
    convex_hull(&[Point(vec![lo]), Point(vec![hi])])
}

/// `{α ∈ R^d_+ : Σ α_i <= λ}`.
pub fn standard_simplex(d: usize, lambda: &Rational) -> Result<Polytope> {
    check_dim(d)?;
    if lambda.is_negative() {
        return Err(Error::NegativeSize(lambda.to_string()));
    }
    let mut pts = vec![Point::origin(d)];
    for i in 0..d {
        let mut c = vec![Rational::zero(); d];
        c[i] = lambda.clone();
        pts.push(Point(c));
    }
    convex_hull(&pts)
}

/// `{α ∈ R^d_+ : α_1 <= λ, α_2 + ... + α_d <= α_1}`.
pub fn inverted_simplex(d: usize, lambda: &Rational) -> Result<Polytope> {
    check_dim(d)?;
    if lambda.is_negative() {
        return Err(Error::NegativeSize(lambda.to_string()));
    }
    let mut pts = vec![Point::origin(d)];
    let mut tip = vec![Rational::zero(); d];
    tip[0] = lambda.clone();
    pts.push(Point(tip.clone()));
    for j in 1..d {
        let mut c = tip.clone();
        c[j] = lambda.clone();
        pts.push(Point(c));
    }
    convex_hull(&pts)
}
