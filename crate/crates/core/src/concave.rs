//! Concave piecewise-affine functions on polytopes and their hypographs.
//!
//! A [`ConcaveRoof`] is always evaluated as the minimum of finitely many
//! exact affine pieces. Roofs built from floating samples keep the samples
//! that lie on their concave envelope and report results in the float
//! regime; the pieces are then the exact binary values of those samples.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{convex_hull, linalg, Halfspace, Point, Polytope, Rational};
use crate::value::{Regime, Value};

/// Roofs live in dimension at most this, so hypographs fit the hull kernel.
pub const MAX_ROOF_DIM: usize = 3;

/// `α ↦ grad · α + offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffinePiece {
    pub grad: Vec<Rational>,
    pub offset: Rational,
}

impl AffinePiece {
    pub fn new(grad: Vec<Rational>, offset: Rational) -> Self {
        AffinePiece { grad, offset }
    }

    pub fn constant(d: usize, c: Rational) -> Self {
        AffinePiece { grad: vec![Rational::zero(); d], offset: c }
    }

    pub fn eval(&self, alpha: &[Rational]) -> Rational {
        linalg::dot(&self.grad, alpha) + &self.offset
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub point: Point,
    pub value: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RoofMode {
    Affine,
    Sampled,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Extrema {
    pub min: Value,
    pub argmin: Point,
    pub max: Value,
    pub argmax: Point,
}

/// Integral together with an a-priori bound on its discretisation error.
/// The bound is `Some(0.0)` for exact roofs and `None` when unavailable.
#[derive(Clone, Debug, PartialEq)]
pub struct Integral {
    pub value: Value,
    pub error_bound: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RoofRepr", into = "RoofRepr")]
pub struct ConcaveRoof {
    domain: Polytope,
    mode: RoofMode,
    pieces: Vec<AffinePiece>,
    samples: Vec<Sample>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RoofRepr {
    domain: Polytope,
    mode: RoofMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pieces: Option<Vec<AffinePiece>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    samples: Option<Vec<(Point, Value)>>,
}

impl TryFrom<RoofRepr> for ConcaveRoof {
    type Error = Error;
    fn try_from(r: RoofRepr) -> Result<Self> {
        match (r.mode, r.pieces, r.samples) {
            (RoofMode::Affine, Some(p), None) => ConcaveRoof::from_pieces(r.domain, p),
            (RoofMode::Sampled, None, Some(s)) => concavify(&s, &r.domain),
            (RoofMode::Affine, _, _) => Err(Error::Invalid("affine roof needs \"pieces\" and no \"samples\"".into())),
            (RoofMode::Sampled, _, _) => Err(Error::Invalid("sampled roof needs \"samples\" and no \"pieces\"".into())),
        }
    }
}

impl From<ConcaveRoof> for RoofRepr {
    fn from(g: ConcaveRoof) -> Self {
        match g.mode {
            RoofMode::Affine => RoofRepr { domain: g.domain, mode: g.mode, pieces: Some(g.pieces), samples: None },
            RoofMode::Sampled => RoofRepr {
                domain: g.domain,
                mode: g.mode,
                pieces: None,
                samples: Some(g.samples.into_iter().map(|s| (s.point, s.value)).collect()),
            },
        }
    }
}

fn check_domain(domain: &Polytope) -> Result<()> {
    if domain.is_empty() {
        return Err(Error::EmptyInput);
    }
    if domain.dim() > MAX_ROOF_DIM {
        return Err(Error::UnsupportedDimension(domain.dim()));
    }
    Ok(())
}

fn extend(v: &[Rational], last: Rational) -> Vec<Rational> {
    let mut out = v.to_vec();
    out.push(last);
    out
}

impl ConcaveRoof {
    /// `α ↦ min_i piece_i(α)` on `domain`, exact.
    pub fn from_pieces(domain: Polytope, mut pieces: Vec<AffinePiece>) -> Result<Self> {
        check_domain(&domain)?;
        if pieces.is_empty() {
            return Err(Error::EmptyInput);
        }
        for p in &pieces {
            if p.grad.len() != domain.dim() {
                return Err(Error::DimensionMismatch { expected: domain.dim(), found: p.grad.len() });
            }
        }
        pieces.sort();
        pieces.dedup();
        Ok(ConcaveRoof { domain, mode: RoofMode::Affine, pieces, samples: Vec::new() })
    }

    pub fn constant(domain: Polytope, c: Value) -> Result<Self> {
        match c {
            Value::Exact(r) => {
                let d = domain.dim();
                ConcaveRoof::from_pieces(domain, vec![AffinePiece::constant(d, r)])
            }
            Value::Approx(_) => {
                let samples: Vec<(Point, Value)> = domain.vertices().iter().map(|v| (v.clone(), c.clone())).collect();
                concavify(&samples, &domain)
            }
        }
    }

    pub fn domain(&self) -> &Polytope {
        &self.domain
    }

    pub fn dim(&self) -> usize {
        self.domain.dim()
    }

    pub fn mode(&self) -> RoofMode {
        self.mode
    }

    pub fn regime(&self) -> Regime {
        match self.mode {
            RoofMode::Affine => Regime::Exact,
            RoofMode::Sampled => Regime::Float,
        }
    }

    pub fn pieces(&self) -> &[AffinePiece] {
        &self.pieces
    }

    /// Envelope samples (empty in affine mode).
    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    /// Exact minimum of the pieces, with no domain check.
    pub fn eval_exact(&self, alpha: &[Rational]) -> Rational {
        self.pieces.iter().map(|p| p.eval(alpha)).min().expect("at least one piece")
    }

    fn tag(&self, alpha: &Point, r: Rational) -> Value {
        match self.mode {
            RoofMode::Affine => Value::Exact(r),
            RoofMode::Sampled => match self.samples.binary_search_by(|s| s.point.cmp(alpha)) {
                Ok(i) if self.samples[i].value.is_exact() => Value::Exact(r),
                _ => Value::Approx(r.to_f64()),
            },
        }
    }

    pub fn evaluate(&self, alpha: &Point) -> Result<Value> {
        if !self.domain.contains_point(alpha)? {
            return Err(Error::OutOfDomain(alpha.to_string()));
        }
        Ok(self.tag(alpha, self.eval_exact(&alpha.0)))
    }

    pub fn extrema(&self) -> Result<Extrema> {
        // Concave: the minimum sits at a vertex of the domain.
        let mut argmin = &self.domain.vertices()[0];
        let mut min = self.eval_exact(&argmin.0);
        for v in &self.domain.vertices()[1..] {
            let g = self.eval_exact(&v.0);
            if g < min {
                min = g;
                argmin = v;
            }
        }
        let argmin = argmin.clone();

        // Maximum: vertex enumeration of {α ∈ Δ, min <= z <= piece_i(α)}.
        let d = self.dim();
        let mut hs: Vec<Halfspace> =
            self.domain.halfspaces().into_iter().map(|h| Halfspace::new(extend(&h.normal, Rational::zero()), h.offset)).collect();
        for p in &self.pieces {
            let normal = extend(&p.grad.iter().map(|x| -x).collect::<Vec<_>>(), Rational::one());
            hs.push(Halfspace::new(normal, p.offset.clone()));
        }
        let mut floor = vec![Rational::zero(); d + 1];
        floor[d] = -Rational::one();
        hs.push(Halfspace::new(floor, -&min));
        let lp = Polytope::from_halfspaces(d + 1, &hs)?;
        let mut best: Option<(&Point, &Rational)> = None;
        for v in lp.vertices() {
            let z = &v.0[d];
            if best.is_none_or(|(_, bz)| z > bz) {
                best = Some((v, z));
            }
        }
        let (top, max) = best.expect("the lifted domain is nonempty");
        let argmax = Point(top.0[..d].to_vec());
        let max = max.clone();

        Ok(Extrema {
            min: self.tag(&argmin, min),
            max: self.tag(&argmax, max),
            argmin,
            argmax,
        })
    }

    /// Regions `{α ∈ Δ : piece_i(α) <= piece_j(α) for all j}` that are nonempty.
    pub fn cells(&self) -> Result<Vec<(usize, Polytope)>> {
        let base = self.domain.halfspaces();
        let mut out = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            let mut hs = base.clone();
            for (j, other) in self.pieces.iter().enumerate() {
                if i == j {
                    continue;
                }
                let normal: Vec<Rational> = p.grad.iter().zip(&other.grad).map(|(a, b)| a - b).collect();
                hs.push(Halfspace::new(normal, &other.offset - &p.offset));
            }
            let cell = Polytope::from_halfspaces(self.dim(), &hs)?;
            if !cell.is_empty() {
                out.push((i, cell));
            }
        }
        Ok(out)
    }

    fn integrate_max_exact(&self, t: &Rational) -> Result<Rational> {
        if !self.domain.is_full_dimensional() {
            return Ok(Rational::zero());
        }
        let mut acc = Rational::zero();
        for (i, cell) in self.cells()? {
            if !cell.is_full_dimensional() {
                continue;
            }
            let p = &self.pieces[i];
            let above: Vec<bool> = cell.vertices().iter().map(|v| p.eval(&v.0) >= *t).collect();
            if above.iter().all(|&a| a) {
                acc += cell.integrate_affine(&p.grad, &p.offset);
            } else if cell.vertices().iter().all(|v| p.eval(&v.0) <= *t) {
                acc += t * cell.volume();
            } else {
                let neg: Vec<Rational> = p.grad.iter().map(|x| -x).collect();
                let upper = cell.clip(&Halfspace::new(neg, &p.offset - t))?;
                let lower = cell.clip(&Halfspace::new(p.grad.clone(), t - &p.offset))?;
                acc += upper.integrate_affine(&p.grad, &p.offset);
                acc += t * lower.volume();
            }
        }
        Ok(acc)
    }

    /// `∫_Δ max{t, G(α)} dα` over the domain (Lebesgue measure in `R^d`).
    pub fn integrate_max(&self, t: &Value) -> Result<Integral> {
        let tr = t.to_rational()?;
        let exact = self.integrate_max_exact(&tr)?;
        match self.mode {
            RoofMode::Affine => Ok(Integral { value: Value::from_rational(exact, t.is_exact()), error_bound: Some(0.0) }),
            RoofMode::Sampled => Ok(Integral { value: Value::Approx(exact.to_f64()), error_bound: self.sandwich_bound() }),
        }
    }

    /// `∫_Δ G dα`.
    pub fn integral(&self) -> Result<Integral> {
        let min = self.extrema()?.min;
        self.integrate_max(&min)
    }

    /// Average of `G` over the domain.
    pub fn mean(&self) -> Result<Value> {
        let vol = self.domain.volume();
        if vol.is_zero() {
            return Err(Error::DegenerateDegree);
        }
        let total = self.integral()?.value;
        Ok(match total {
            Value::Exact(r) => Value::Exact(r / vol),
            Value::Approx(x) => Value::Approx(x / vol.to_f64()),
        })
    }

    /// Bound on `|∫ f − ∫ G|` for a concave `f` interpolated by the samples of
    /// a one-dimensional roof: on each interval `f` lies between the chord
    /// and the extensions of the neighbouring chords.
    fn sandwich_bound(&self) -> Option<f64> {
        if self.dim() != 1 || self.samples.len() < 3 {
            return None;
        }
        let xs: Vec<f64> = self.samples.iter().map(|s| s.point.0[0].to_f64()).collect();
        let ys: Vec<f64> = self.samples.iter().map(|s| s.value.to_f64()).collect();
        let n = xs.len();
        let line = |i: usize, j: usize| {
            let slope = (ys[j] - ys[i]) / (xs[j] - xs[i]);
            let (x0, y0) = (xs[i], ys[i]);
            move |x: f64| y0 + slope * (x - x0)
        };
        let mut bound = 0.0;
        for i in 0..n - 1 {
            let (a, b) = (xs[i], xs[i + 1]);
            let chord = line(i, i + 1);
            let left = (i >= 1).then(|| line(i - 1, i));
            let right = (i + 2 < n).then(|| line(i + 1, i + 2));
            let upper = |x: f64| match (&left, &right) {
                (Some(l), Some(r)) => l(x).min(r(x)),
                (Some(l), None) => l(x),
                (None, Some(r)) => r(x),
                (None, None) => unreachable!(),
            };
            // Gap is concave and piecewise linear; sample its possible kink.
            let mut knots = vec![a, b];
            if let (Some(l), Some(r)) = (&left, &right) {
                let (la, lb) = (l(a), l(b));
                let (ra, rb) = (r(a), r(b));
                let denom = (la - ra) - (lb - rb);
                if denom != 0.0 {
                    let s = (la - ra) / denom;
                    if s > 0.0 && s < 1.0 {
                        knots.insert(1, a + s * (b - a));
                    }
                }
            }
            for w in knots.windows(2) {
                let g0 = (upper(w[0]) - chord(w[0])).max(0.0);
                let g1 = (upper(w[1]) - chord(w[1])).max(0.0);
                bound += 0.5 * (g0 + g1) * (w[1] - w[0]);
            }
        }
        let width = xs[n - 1] - xs[0];
        let scale = ys.iter().fold(1.0f64, |m, y| m.max(y.abs()));
        Some(bound + 4.0 * f64::EPSILON * n as f64 * scale * width)
    }

    /// `G − t`. Sampled roofs are rebuilt from their shifted samples so the
    /// result stays faithful to its serialized form.
    pub fn shift(&self, t: &Value) -> Result<ConcaveRoof> {
        match self.mode {
            RoofMode::Affine => {
                let tr = t.to_rational()?;
                let pieces = self.pieces.iter().map(|p| AffinePiece::new(p.grad.clone(), &p.offset - &tr)).collect();
                Ok(ConcaveRoof { domain: self.domain.clone(), mode: self.mode, pieces, samples: Vec::new() })
            }
            RoofMode::Sampled => {
                let samples: Vec<(Point, Value)> =
                    self.samples.iter().map(|s| (s.point.clone(), s.value.sub(t))).collect();
                concavify(&samples, &self.domain)
            }
        }
    }

    fn lifted(&self, floor: &Rational) -> Result<Polytope> {
        let d = self.dim();
        let mut hs: Vec<Halfspace> =
            self.domain.halfspaces().into_iter().map(|h| Halfspace::new(extend(&h.normal, Rational::zero()), h.offset)).collect();
        let mut down = vec![Rational::zero(); d + 1];
        down[d] = -Rational::one();
        hs.push(Halfspace::new(down, -floor));
        for p in &self.pieces {
            let normal = extend(&p.grad.iter().map(|x| -x).collect::<Vec<_>>(), Rational::one());
            hs.push(Halfspace::new(normal, p.offset.clone()));
        }
        Polytope::from_halfspaces(d + 1, &hs)
    }

    /// Vertices `(α, G(α))` of the graph of `G`, sorted by `α`.
    pub fn graph_vertices(&self) -> Result<Vec<(Point, Rational)>> {
        let min = self.extrema()?.min.to_rational()?;
        let floor = min - Rational::one();
        let d = self.dim();
        let lifted = self.lifted(&floor)?;
        Ok(lifted
            .vertices()
            .iter()
            .filter(|v| v.0[d] > floor)
            .map(|v| (Point(v.0[..d].to_vec()), v.0[d].clone()))
            .collect())
    }

    /// `{(α, t) : α ∈ Δ, 0 <= t <= G(α)}`. For sampled roofs this is the
    /// hypograph of the sample envelope, an inner approximation.
    pub fn hypograph(&self) -> Result<ArithOkounkovBody> {
        Ok(ArithOkounkovBody {
            body: self.lifted(&Rational::zero())?,
            base_dim: self.dim(),
            domain: self.domain.clone(),
            regime: self.regime(),
        })
    }

    /// Grid `lo + (hi − lo)·i/n` per axis over the domain's bounding box,
    /// restricted to the domain, in lexicographic order.
    pub fn grid(&self, n: u32) -> Result<Vec<Point>> {
        if n == 0 {
            return Err(Error::Invalid("grid size must be positive".into()));
        }
        let (lo, hi) = self.domain.bounding_box().expect("nonempty domain");
        let d = self.dim();
        let axis: Vec<Vec<Rational>> = (0..d)
            .map(|j| {
                if lo.0[j] == hi.0[j] {
                    return vec![lo.0[j].clone()];
                }
                let step = (&hi.0[j] - &lo.0[j]) / Rational::from_integer(n as i64);
                (0..=n).map(|i| &lo.0[j] + &step * Rational::from_integer(i as i64)).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; d];
        loop {
            let p = Point(idx.iter().enumerate().map(|(j, &i)| axis[j][i].clone()).collect());
            if self.domain.contains_point(&p)? {
                out.push(p);
            }
            let mut j = d;
            loop {
                if j == 0 {
                    return Ok(out);
                }
                j -= 1;
                idx[j] += 1;
                if idx[j] < axis[j].len() {
                    break;
                }
                idx[j] = 0;
            }
        }
    }
}

/// Concave upper envelope of the samples over `domain`.
///
/// The convex hull of the sample points must equal `domain`. Repeated points
/// keep their largest value. Samples strictly below the envelope are dropped;
/// if every value is exact the result is an exact affine roof.
pub fn concavify(samples: &[(Point, Value)], domain: &Polytope) -> Result<ConcaveRoof> {
    check_domain(domain)?;
    if samples.is_empty() {
        return Err(Error::EmptyInput);
    }
    let d = domain.dim();
    let mut best: BTreeMap<Point, (Rational, Value)> = BTreeMap::new();
    for (p, v) in samples {
        if !domain.contains_point(p)? {
            return Err(Error::OutOfDomain(p.to_string()));
        }
        let r = v.to_rational()?;
        match best.get(p) {
            Some((old, oldv)) if *old > r || (*old == r && (oldv.is_exact() || !v.is_exact())) => {}
            _ => {
                best.insert(p.clone(), (r, v.clone()));
            }
        }
    }
    let points: Vec<Point> = best.keys().cloned().collect();
    let hull = convex_hull(&points)?;
    if !(hull.contains(domain)? && domain.contains(&hull)?) {
        return Err(Error::SamplesDoNotCoverDomain);
    }

    let min = best.values().map(|(r, _)| r).min().unwrap().clone();
    let floor = &min - Rational::one();
    let mut lifted_pts: Vec<Point> = Vec::with_capacity(2 * best.len());
    for (p, (r, _)) in &best {
        lifted_pts.push(Point(extend(&p.0, r.clone())));
        lifted_pts.push(Point(extend(&p.0, floor.clone())));
    }
    let lifted = convex_hull(&lifted_pts)?;
    let pieces: Vec<AffinePiece> = lifted
        .facets()
        .iter()
        .filter(|h| h.normal[d].is_positive())
        .map(|h| {
            let nt = &h.normal[d];
            AffinePiece::new(h.normal[..d].iter().map(|x| -(x / nt)).collect(), &h.offset / nt)
        })
        .collect();
    let mut roof = ConcaveRoof::from_pieces(domain.clone(), pieces)?;
    if best.values().all(|(_, v)| v.is_exact()) {
        return Ok(roof);
    }
    roof.mode = RoofMode::Sampled;
    roof.samples = best
        .into_iter()
        .filter(|(p, (r, _))| roof.eval_exact(&p.0) == *r)
        .map(|(point, (_, value))| Sample { point, value })
        .collect();
    Ok(roof)
}

/// Hypograph of a concave transform over the floor `t = 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArithOkounkovBody {
    pub body: Polytope,
    pub base_dim: usize,
    pub domain: Polytope,
    pub regime: Regime,
}

impl ArithOkounkovBody {
    pub fn is_empty(&self) -> bool {
        self.body.is_empty()
    }

    /// `(d+1)!` times the Lebesgue measure of the body.
    pub fn normalized_volume(&self) -> Rational {
        Rational::factorial(self.base_dim + 1) * self.body.volume()
    }

    /// Whether `base × {height}` lies in the body.
    pub fn contains_slab(&self, base: &Polytope, height: &Rational) -> Result<bool> {
        self.body.contains(&base.at_height(height)?)
    }

    /// The slice at `t = 0`, i.e. `{α : G(α) >= 0}`.
    pub fn floor_slice(&self) -> Result<Polytope> {
        let d = self.base_dim;
        let mut hs = self.body.halfspaces();
        let mut up = vec![Rational::zero(); d + 1];
        up[d] = Rational::one();
        hs.push(Halfspace::new(up, Rational::zero()));
        let slab = Polytope::from_halfspaces(d + 1, &hs)?;
        slab.project(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{q, standard_simplex};

    fn unit() -> Polytope {
        standard_simplex(1, &q(1, 1)).unwrap()
    }

    fn p1(x: Rational) -> Point {
        Point(vec![x])
    }

    fn roof(pieces: &[((i64, i64), (i64, i64))]) -> ConcaveRoof {
        ConcaveRoof::from_pieces(
            unit(),
            pieces.iter().map(|&((gn, gd), (on, od))| AffinePiece::new(vec![q(gn, gd)], q(on, od))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let g = roof(&[((-1, 1), (1, 1)), ((0, 1), (1, 1))]);
        assert_eq!(g.evaluate(&p1(q(0, 1))).unwrap(), Value::Exact(q(1, 1)));
        let tent = roof(&[((-1, 1), (1, 1)), ((1, 1), (1, 1))]);
        assert_eq!(tent.evaluate(&p1(q(1, 2))).unwrap(), Value::Exact(q(1, 2)));
        assert!(matches!(tent.evaluate(&p1(q(3, 2))), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn extrema_examples() {
        let c = ConcaveRoof::constant(unit(), Value::Exact(q(3, 2))).unwrap();
        let e = c.extrema().unwrap();
        assert_eq!((e.min, e.max), (Value::Exact(q(3, 2)), Value::Exact(q(3, 2))));

        let lin = roof(&[((-2, 1), (1, 1))]);
        let e = lin.extrema().unwrap();
        assert_eq!(e.min, Value::Exact(q(-1, 1)));
        assert_eq!(e.argmin, p1(q(1, 1)));
        assert_eq!(e.max, Value::Exact(q(1, 1)));
        assert_eq!(e.argmax, p1(q(0, 1)));

        let tent = roof(&[((1, 1), (1, 4)), ((-1, 2), (3, 4))]);
        let e = tent.extrema().unwrap();
        assert_eq!(e.max, Value::Exact(q(7, 12)));
        assert_eq!(e.argmax, p1(q(1, 3)));
    }

    #[test]
    fn integrate_examples() {
        let c = ConcaveRoof::constant(unit(), Value::Exact(q(1, 2))).unwrap();
        assert_eq!(c.integrate_max(&Value::zero()).unwrap().value, Value::Exact(q(1, 2)));
        let lin = roof(&[((-2, 1), (1, 1))]);
        assert_eq!(lin.integrate_max(&Value::zero()).unwrap().value, Value::Exact(q(1, 4)));
        assert_eq!(lin.integral().unwrap().value, Value::Exact(q(0, 1)));
        // Above the maximum the integrand is t itself.
        assert_eq!(lin.integrate_max(&Value::Exact(q(2, 1))).unwrap().value, Value::Exact(q(2, 1)));
    }

    #[test]
    fn shift_examples() {
        let zero = ConcaveRoof::constant(unit(), Value::zero()).unwrap();
        let down = zero.shift(&Value::Exact(q(1, 1))).unwrap();
        assert_eq!(down.extrema().unwrap().max, Value::Exact(q(-1, 1)));
        let back = down.shift(&Value::Exact(q(-1, 1))).unwrap();
        assert_eq!(back, zero);
    }

    #[test]
    fn hypograph_examples() {
        let one = ConcaveRoof::constant(unit(), Value::Exact(q(1, 1))).unwrap();
        let h = one.hypograph().unwrap();
        assert_eq!(h.body.volume(), q(1, 1));
        assert_eq!(h.normalized_volume(), q(2, 1));

        let neg = ConcaveRoof::constant(unit(), Value::Exact(q(-1, 1))).unwrap();
        assert!(neg.hypograph().unwrap().is_empty());

        let lin = roof(&[((-2, 1), (1, 1))]);
        let h = lin.hypograph().unwrap();
        let expected =
            convex_hull(&[Point(vec![q(0, 1), q(0, 1)]), Point(vec![q(1, 2), q(0, 1)]), Point(vec![q(0, 1), q(1, 1)])])
                .unwrap();
        assert_eq!(h.body, expected);
        assert_eq!(h.normalized_volume(), q(1, 2));
        assert_eq!(h.floor_slice().unwrap(), convex_hull(&[p1(q(0, 1)), p1(q(1, 2))]).unwrap());
    }

    #[test]
    fn concavify_examples() {
        let single = concavify(&[(p1(q(1, 2)), Value::Exact(q(3, 1)))], &convex_hull(&[p1(q(1, 2))]).unwrap()).unwrap();
        assert_eq!(single.evaluate(&p1(q(1, 2))).unwrap(), Value::Exact(q(3, 1)));

        let samples = vec![
            (p1(q(0, 1)), Value::Exact(q(0, 1))),
            (p1(q(1, 2)), Value::Exact(q(1, 1))),
            (p1(q(1, 1)), Value::Exact(q(0, 1))),
            (p1(q(1, 2)), Value::Exact(q(1, 2))),
        ];
        let tent = concavify(&samples, &unit()).unwrap();
        assert_eq!(tent.pieces().len(), 2);
        assert_eq!(tent.evaluate(&p1(q(1, 4))).unwrap(), Value::Exact(q(1, 2)));
        assert_eq!(tent.evaluate(&p1(q(1, 2))).unwrap(), Value::Exact(q(1, 1)));

        assert_eq!(concavify(&[], &unit()), Err(Error::EmptyInput));
        assert_eq!(
            concavify(&[(p1(q(0, 1)), Value::zero())], &unit()),
            Err(Error::SamplesDoNotCoverDomain)
        );
    }

    #[test]
    fn float_samples_keep_envelope_points() {
        let samples: Vec<(Point, Value)> = (0..=4)
            .map(|k| {
                let a = k as f64 / 4.0;
                let v = if k == 0 || k == 4 { Value::zero() } else { Value::Approx(a * (1.0 - a)) };
                (p1(q(k, 4)), v)
            })
            .collect();
        let g = concavify(&samples, &unit()).unwrap();
        assert_eq!(g.mode(), RoofMode::Sampled);
        assert_eq!(g.samples().len(), 5);
        let e = g.extrema().unwrap();
        assert_eq!(e.min, Value::Exact(q(0, 1)));
        assert_eq!(e.max, Value::Approx(0.25));
        assert!(g.integrate_max(&Value::zero()).unwrap().error_bound.is_some());
        let again = concavify(
            &g.samples().iter().map(|s| (s.point.clone(), s.value.clone())).collect::<Vec<_>>(),
            &unit(),
        )
        .unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn grid_includes_endpoints() {
        let g = ConcaveRoof::constant(unit(), Value::zero()).unwrap();
        let pts = g.grid(4).unwrap();
        assert_eq!(pts, (0..=4).map(|k| p1(q(k, 4))).collect::<Vec<_>>());
        let tri = ConcaveRoof::constant(standard_simplex(2, &q(1, 1)).unwrap(), Value::zero()).unwrap();
        assert_eq!(tri.grid(2).unwrap().len(), 6);
    }

    #[test]
    fn json_round_trip() {
        let tent = roof(&[((1, 1), (1, 4)), ((-1, 2), (3, 4))]);
        let s = serde_json::to_string(&tent).unwrap();
        let back: ConcaveRoof = serde_json::from_str(&s).unwrap();
        assert_eq!(back, tent);
        let bad = r#"{"domain":{"vertices":[["0"],["1"]]},"mode":"affine","samples":[]}"#;
        assert!(serde_json::from_str::<ConcaveRoof>(bad).is_err());
    }
}
