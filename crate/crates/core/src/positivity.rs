//! Minima, volumes, heights and positivity verdicts read off a concave roof.
//!
//! Every quantity is a functional of `G` on `Δ`: the absolute and essential
//! minima are `min G` and `max G`, the arithmetic volume is
//! `(d+1)!∫max{0,G}`, the height of `X` is `(d+1)!∫G` and the normalized
//! height is the mean of `G`. Verdicts are tri-state: in the float regime a
//! quantity within [`FLOAT_MARGIN`] of a threshold is undecided.

use std::cmp::Ordering;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::concave::{ArithOkounkovBody, ConcaveRoof, Integral};
use crate::error::{Error, Result};
use crate::geom::{inverted_simplex, standard_simplex, Point, Polytope, Rational};
use crate::value::{as_string, Regime, Value, FLOAT_MARGIN};

/// Certificate search works on the grid `k / 2^CERT_DENOM_BITS`.
pub const CERT_DENOM_BITS: u32 = 20;
/// Maximum number of bisection steps in a certificate search.
pub const CERT_MAX_STEPS: u32 = 40;
/// Relative tolerance for `vol = h` in the float regime.
pub const HS_FLOAT_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Undecided,
}

impl Verdict {
    fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

/// Geometric facts the convex data cannot decide, supplied by the caller.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Assertions {
    #[serde(default)]
    pub geometric_ample: bool,
    #[serde(default)]
    pub semi_positive: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub big: Option<bool>,
}

pub fn absolute_minimum(g: &ConcaveRoof) -> Result<(Value, Point)> {
    let e = g.extrema()?;
    Ok((e.min, e.argmin))
}

pub fn essential_minimum(g: &ConcaveRoof) -> Result<(Value, Point)> {
    let e = g.extrema()?;
    Ok((e.max, e.argmax))
}

/// `d!·μ(Δ)`.
pub fn degree(g: &ConcaveRoof) -> Rational {
    Rational::factorial(g.dim()) * g.domain().volume()
}

fn scale(i: Integral, k: &Rational) -> Integral {
    Integral {
        value: i.value.mul(&Value::Exact(k.clone())),
        error_bound: i.error_bound.map(|b| b * k.to_f64()),
    }
}

/// `(d+1)!·∫ max{0, G}`.
pub fn arithmetic_volume(g: &ConcaveRoof) -> Result<Integral> {
    let zero = Value::from_rational(Rational::zero(), true);
    Ok(scale(g.integrate_max(&zero)?, &Rational::factorial(g.dim() + 1)))
}

/// `(d+1)!·∫ G`, the height of `X` for semi-positive data.
pub fn height(g: &ConcaveRoof) -> Result<Integral> {
    Ok(scale(g.integral()?, &Rational::factorial(g.dim() + 1)))
}

/// Height of `X` and its normalization by `(d+1)·deg`, which is the mean of `G`.
pub fn height_of_x(g: &ConcaveRoof) -> Result<(Value, Value)> {
    Ok((height(g)?.value, g.mean()?))
}

pub fn nef_check(g: &ConcaveRoof, semi_positive: bool) -> Result<Verdict> {
    let (min, _) = absolute_minimum(g)?;
    Ok(match min.sign() {
        Some(Ordering::Less) => Verdict::No,
        None => Verdict::Undecided,
        Some(_) => Verdict::from_bool(semi_positive),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AmpleCheck {
    pub verdict: Verdict,
    #[serde(with = "as_string")]
    pub min: Value,
    pub witness: Point,
}

pub fn ample_check(g: &ConcaveRoof, geometric_ample: bool, semi_positive: bool) -> Result<AmpleCheck> {
    let (min, witness) = absolute_minimum(g)?;
    let verdict = match min.sign() {
        Some(Ordering::Greater) => Verdict::from_bool(geometric_ample && semi_positive),
        None if geometric_ample && semi_positive => Verdict::Undecided,
        _ => Verdict::No,
    };
    Ok(AmpleCheck { verdict, min, witness })
}

/// Pseudo-effective iff the hypograph over `t = 0` is nonempty, i.e. `max G >= 0`.
pub fn pseudoeffective_check(g: &ConcaveRoof) -> Result<Verdict> {
    let (max, _) = essential_minimum(g)?;
    Ok(match max.sign() {
        Some(Ordering::Less) => Verdict::No,
        Some(_) => Verdict::Yes,
        None => Verdict::Undecided,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HsCheck {
    #[serde(with = "as_string")]
    pub volume: Value,
    #[serde(with = "as_string")]
    pub height: Value,
    pub equal: bool,
    pub nef: Verdict,
    /// The equivalence `vol = h ⟺ nef` only applies to big, semi-positive data.
    pub applicable: bool,
    pub consistent: bool,
}

pub fn hs_check(g: &ConcaveRoof, semi_positive: bool, big: bool) -> Result<HsCheck> {
    let volume = arithmetic_volume(g)?.value;
    let height = height(g)?.value;
    let equal = volume.approx_eq(&height, HS_FLOAT_TOL * volume.to_f64().abs().max(1.0));
    let nef = nef_check(g, semi_positive)?;
    let applicable = semi_positive && big;
    let consistent = !applicable
        || match nef {
            Verdict::Yes => equal,
            Verdict::No => !equal,
            Verdict::Undecided => true,
        };
    Ok(HsCheck { volume, height, equal, nef, applicable, consistent })
}

fn same(a: &Value, b: &Value) -> bool {
    a.approx_eq(b, FLOAT_MARGIN)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericNets {
    pub abs_eq: bool,
    pub ess_eq: bool,
    pub constant: bool,
    pub equivalent: bool,
}

pub fn generic_nets_check(g: &ConcaveRoof) -> Result<GenericNets> {
    let e = g.extrema()?;
    let mean = g.mean()?;
    let abs_eq = same(&e.min, &mean);
    let ess_eq = same(&e.max, &mean);
    let constant = same(&e.max, &e.min);
    Ok(GenericNets { abs_eq, ess_eq, constant, equivalent: abs_eq == ess_eq && ess_eq == constant })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Zhang {
    #[serde(with = "as_string")]
    pub essential: Value,
    #[serde(with = "as_string")]
    pub normalized_height: Value,
    #[serde(with = "as_string")]
    pub absolute: Value,
    pub pass: bool,
}

/// `ζ_ess >= ĥ(X) >= ζ_abs`, exact or up to the float margin.
pub fn zhang_inequalities(g: &ConcaveRoof) -> Result<Zhang> {
    let e = g.extrema()?;
    let mean = g.mean()?;
    let ge = |a: &Value, b: &Value| a.compare(b) != Some(Ordering::Less);
    let pass = ge(&e.max, &mean) && ge(&mean, &e.min);
    Ok(Zhang { essential: e.max, normalized_height: mean, absolute: e.min, pass })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleCertificate {
    pub lambda: Rational,
    pub xi: Rational,
    pub anchor: Point,
}

/// `{t : (α, t) ∈ P}` for `P ⊂ R^{d+1}`, as a closed interval.
fn vertical_extent(body: &Polytope, alpha: &Point) -> Option<(Rational, Rational)> {
    if body.is_empty() {
        return None;
    }
    let d = alpha.dim();
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for h in body.halfspaces() {
        let rest = &h.offset - crate::geom::linalg::dot(&h.normal[..d], &alpha.0);
        let a = &h.normal[d];
        if a.is_zero() {
            if rest.is_negative() {
                return None;
            }
        } else if a.is_positive() {
            let b = rest / a;
            hi = Some(hi.map_or(b.clone(), |x| x.min(b)));
        } else {
            let b = rest / a;
            lo = Some(lo.map_or(b.clone(), |x| x.max(b)));
        }
    }
    let (lo, hi) = (lo?, hi?);
    (lo <= hi).then_some((lo, hi))
}

/// Largest `k` in `[1, hi)` with `pred(k)`, by bisection, assuming `pred` is
/// monotone decreasing and `pred(0)` holds.
fn bisect(hi: u64, mut pred: impl FnMut(u64) -> Result<bool>) -> Result<Option<u64>> {
    let (mut lo, mut hi) = (0u64, hi);
    let mut steps = 0;
    while hi - lo > 1 && steps < CERT_MAX_STEPS {
        let mid = lo + (hi - lo) / 2;
        if pred(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
        steps += 1;
    }
    Ok((lo > 0).then_some(lo))
}

fn grid_value(k: u64) -> Rational {
    Rational::from_parts((k as i64).into(), (1i64 << CERT_DENOM_BITS).into())
}

/// Search bound: every candidate simplex beyond it leaves the body.
fn search_limit(body: &Polytope) -> u64 {
    let (lo, hi) = body.bounding_box().expect("nonempty body");
    let span: Rational = lo.0.iter().zip(&hi.0).map(|(a, b)| b.abs() + a.abs()).sum();
    let whole = span.ceil().to_u64().unwrap_or(u64::MAX >> (CERT_DENOM_BITS + 1)) + 1;
    whole << CERT_DENOM_BITS
}

/// Point the admissible simplex is attached to: the origin when it lies in
/// `Δ`, else the vertex of `Δ` nearest to it.
pub fn certificate_anchor(domain: &Polytope) -> Result<Point> {
    let origin = Point::origin(domain.dim());
    if domain.contains_point(&origin)? {
        return Ok(origin);
    }
    let norm = |p: &Point| crate::geom::linalg::dot(&p.0, &p.0);
    Ok(domain.vertices().iter().min_by(|a, b| norm(a).cmp(&norm(b))).ok_or(Error::EmptyInput)?.clone())
}

/// Checks `(anchor + Δ_λ) × {ξ} ⊆ Δ̂` exactly.
pub fn verify_admissible(body: &ArithOkounkovBody, cert: &AdmissibleCertificate) -> Result<bool> {
    if !cert.lambda.is_positive() || !cert.xi.is_positive() {
        return Ok(false);
    }
    let simplex = standard_simplex(body.base_dim, &cert.lambda)?.translate(&cert.anchor)?;
    body.contains_slab(&simplex, &cert.xi)
}

/// `λ` is half the largest size `k/2^20` for which `anchor + Δ_λ` fits
/// in `Δ` with `G > 0` at its vertices, and `ξ` is half the minimum of `G`
/// over that simplex. Halving keeps the witness away from the boundary of
/// the body. `None` means no certificate was found within the search budget.
pub fn admissible_certificate(body: &ArithOkounkovBody) -> Result<Option<AdmissibleCertificate>> {
    if body.is_empty() {
        return Ok(None);
    }
    let d = body.base_dim;
    let anchor = certificate_anchor(&body.domain)?;
    let tops = |lambda: &Rational| -> Result<Option<Rational>> {
        let simplex = standard_simplex(d, lambda)?.translate(&anchor)?;
        if !body.domain.contains(&simplex)? {
            return Ok(None);
        }
        let mut min: Option<Rational> = None;
        for v in simplex.vertices() {
            match vertical_extent(&body.body, v) {
                Some((_, top)) if top.is_positive() => min = Some(min.map_or(top.clone(), |m| m.min(top))),
                _ => return Ok(None),
            }
        }
        Ok(min)
    };
    let Some(k) = bisect(search_limit(&body.body), |k| Ok(tops(&grid_value(k))?.is_some()))? else {
        return Ok(None);
    };
    let lambda = grid_value((k / 2).max(1));
    let xi = tops(&lambda)?.expect("bisection keeps a feasible lower end") / Rational::from_integer(2);
    let cert = AdmissibleCertificate { lambda, xi, anchor };
    Ok(verify_admissible(body, &cert)?.then_some(cert))
}

/// Checks `Δ^{-1}_λ × {λ} ⊆ Δ̂` exactly.
pub fn verify_infinitesimal(body: &ArithOkounkovBody, lambda: &Rational) -> Result<bool> {
    if !lambda.is_positive() {
        return Ok(false);
    }
    body.contains_slab(&inverted_simplex(body.base_dim, lambda)?, lambda)
}

/// Largest `λ = k/2^20` with `Δ^{-1}_λ × {λ} ⊆ Δ̂`. The arithmetic meaning
/// of the result presumes the body comes from an infinitesimal flag.
pub fn infinitesimal_certificate(body: &ArithOkounkovBody) -> Result<Option<Rational>> {
    if body.is_empty() {
        return Ok(None);
    }
    let k = bisect(search_limit(&body.body), |k| verify_infinitesimal(body, &grid_value(k)))?;
    Ok(k.map(grid_value))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BodyIntersection {
    pub body: ArithOkounkovBody,
    /// Each body contains the next one.
    pub nested: bool,
    /// Hausdorff distance from the intersection to `limit`, when given.
    pub distance_to_limit: Option<f64>,
}

pub fn body_intersection(bodies: &[ArithOkounkovBody], limit: Option<&ArithOkounkovBody>) -> Result<BodyIntersection> {
    let first = bodies.first().ok_or(Error::EmptyInput)?;
    let mut acc = first.clone();
    let mut nested = true;
    for (prev, next) in bodies.iter().zip(&bodies[1..]) {
        if next.base_dim != first.base_dim {
            return Err(Error::DimensionMismatch { expected: first.base_dim, found: next.base_dim });
        }
        nested &= prev.body.contains(&next.body)?;
        acc = ArithOkounkovBody {
            body: acc.body.intersect(&next.body)?,
            base_dim: acc.base_dim,
            domain: acc.domain.intersect(&next.domain)?,
            regime: acc.regime.join(next.regime),
        };
    }
    let distance_to_limit = match limit {
        Some(l) => acc.body.hausdorff_distance(&l.body)?,
        None => None,
    };
    Ok(BodyIntersection { body: acc, nested, distance_to_limit })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdicts {
    pub pseudo_effective: Verdict,
    pub nef: Verdict,
    pub ample: Verdict,
    pub hs_equality: bool,
    pub generic_small_points: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InfinitesimalCertificate {
    pub lambda: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificates {
    pub admissible: Option<AdmissibleCertificate>,
    pub infinitesimal: Option<InfinitesimalCertificate>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PositivityReport {
    pub regime: Regime,
    #[serde(with = "as_string")]
    pub zeta_abs: Value,
    pub zeta_abs_witness: Point,
    #[serde(with = "as_string")]
    pub zeta_ess: Value,
    pub zeta_ess_witness: Point,
    pub degree: Rational,
    #[serde(with = "as_string")]
    pub arithmetic_volume: Value,
    #[serde(with = "as_string")]
    pub height_x: Value,
    #[serde(with = "as_string::option")]
    pub normalized_height: Option<Value>,
    /// Bound on the discretisation error of the two integrals (zero when exact).
    pub integration_error_bound: Option<f64>,
    pub verdicts: Verdicts,
    pub certificates: Certificates,
    pub notes: Vec<String>,
}

pub fn report(g: &ConcaveRoof, a: &Assertions) -> Result<PositivityReport> {
    let e = g.extrema()?;
    let deg = degree(g);
    let big = !deg.is_zero();
    let mut notes = Vec::new();
    match a.big {
        Some(true) if !big => notes.push("big asserted, but the body has zero volume".to_string()),
        Some(false) if big => notes.push("big denied, but the body has positive volume".to_string()),
        _ => {}
    }
    let vol = arithmetic_volume(g)?;
    let h = height(g)?;
    let normalized = if big {
        Some(g.mean()?)
    } else {
        notes.push("degree is zero: normalized height undefined".to_string());
        None
    };
    let hs = hs_check(g, a.semi_positive, big)?;
    let nef = hs.nef;
    if nef == Verdict::Yes && a.big == Some(true) && !big {
        notes.push("nef and big asserted, but the degree is zero".to_string());
    }
    let ample = ample_check(g, a.geometric_ample, a.semi_positive)?.verdict;
    let generic_small_points = if big { generic_nets_check(g)?.constant } else { same(&e.max, &e.min) };

    let body = g.hypograph()?;
    let admissible = admissible_certificate(&body)?;
    if admissible.is_none() && ample != Verdict::No {
        notes.push("admissible certificate: not found within search budget".to_string());
    }
    if let Some(c) = &admissible {
        if c.anchor != Point::origin(g.dim()) {
            notes.push(format!("admissible simplex anchored at {}", c.anchor));
        }
    }
    let infinitesimal = infinitesimal_certificate(&body)?.map(|lambda| InfinitesimalCertificate { lambda });
    if infinitesimal.is_some() {
        notes.push("infinitesimal certificate presumes the body comes from an infinitesimal flag".to_string());
    }
    if g.regime() == Regime::Float {
        notes.push(format!("float regime: strict inequalities decided with margin {FLOAT_MARGIN:e}"));
    }

    Ok(PositivityReport {
        regime: g.regime(),
        zeta_abs: e.min,
        zeta_abs_witness: e.argmin,
        zeta_ess: e.max,
        zeta_ess_witness: e.argmax,
        degree: deg,
        arithmetic_volume: vol.value,
        height_x: h.value,
        normalized_height: normalized,
        integration_error_bound: match (vol.error_bound, h.error_bound) {
            (Some(x), Some(y)) => Some(x.max(y)),
            _ => None,
        },
        verdicts: Verdicts {
            pseudo_effective: pseudoeffective_check(g)?,
            nef,
            ample,
            hs_equality: hs.equal,
            generic_small_points,
        },
        certificates: Certificates { admissible, infinitesimal },
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concave::AffinePiece;
    use crate::geom::{convex_hull, q};

    fn unit() -> Polytope {
        standard_simplex(1, &q(1, 1)).unwrap()
    }

    fn constant(c: Rational) -> ConcaveRoof {
        ConcaveRoof::constant(unit(), Value::Exact(c)).unwrap()
    }

    fn linear(slope: Rational, offset: Rational) -> ConcaveRoof {
        ConcaveRoof::from_pieces(unit(), vec![AffinePiece::new(vec![slope], offset)]).unwrap()
    }

    fn tent() -> ConcaveRoof {
        ConcaveRoof::from_pieces(
            unit(),
            vec![AffinePiece::new(vec![q(1, 1)], q(1, 4)), AffinePiece::new(vec![q(-1, 2)], q(3, 4))],
        )
        .unwrap()
    }

    fn ex(n: i64, d: i64) -> Value {
        Value::Exact(q(n, d))
    }

    #[test]
    fn minima() {
        assert_eq!(absolute_minimum(&constant(q(2, 3))).unwrap().0, ex(2, 3));
        assert_eq!(absolute_minimum(&linear(q(-2, 1), q(1, 1))).unwrap().0, ex(-1, 1));
        assert_eq!(essential_minimum(&linear(q(-2, 1), q(1, 1))).unwrap().0, ex(1, 1));
    }

    #[test]
    fn volumes_and_heights() {
        assert_eq!(arithmetic_volume(&constant(q(1, 2))).unwrap().value, ex(1, 1));
        assert_eq!(arithmetic_volume(&constant(q(-1, 1))).unwrap().value, ex(0, 1));
        assert_eq!(height_of_x(&constant(q(3, 1))).unwrap(), (ex(6, 1), ex(3, 1)));
        assert_eq!(height_of_x(&linear(q(-2, 1), q(1, 1))).unwrap(), (ex(0, 1), ex(0, 1)));
        let point = ConcaveRoof::constant(convex_hull(&[Point(vec![q(0, 1)])]).unwrap(), ex(1, 1)).unwrap();
        assert_eq!(height_of_x(&point), Err(Error::DegenerateDegree));
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(nef_check(&constant(q(0, 1)), true).unwrap(), Verdict::Yes);
        assert_eq!(nef_check(&constant(q(-1, 1)), true).unwrap(), Verdict::No);
        assert_eq!(nef_check(&constant(q(1, 1)), false).unwrap(), Verdict::No);

        assert_eq!(ample_check(&constant(q(1, 4)), true, true).unwrap().verdict, Verdict::Yes);
        let weil = ample_check(&constant(q(0, 1)), true, true).unwrap();
        assert_eq!((weil.verdict, weil.min), (Verdict::No, ex(0, 1)));

        assert_eq!(pseudoeffective_check(&constant(q(-1, 1))).unwrap(), Verdict::No);
        assert_eq!(pseudoeffective_check(&tent()).unwrap(), Verdict::Yes);
    }

    #[test]
    fn float_knife_edge_is_undecided() {
        let g = ConcaveRoof::constant(unit(), Value::Approx(1e-12)).unwrap();
        assert_eq!(nef_check(&g, true).unwrap(), Verdict::Undecided);
        assert_eq!(ample_check(&g, true, true).unwrap().verdict, Verdict::Undecided);
    }

    #[test]
    fn hs_examples() {
        let weil = hs_check(&constant(q(0, 1)), true, true).unwrap();
        assert!(weil.equal && weil.consistent && weil.nef == Verdict::Yes);

        let neg = hs_check(&constant(q(-1, 1)), true, true).unwrap();
        assert_eq!((neg.volume.clone(), neg.height.clone()), (ex(0, 1), ex(-2, 1)));
        assert!(!neg.equal && neg.consistent && neg.nef == Verdict::No);

        let lin = hs_check(&linear(q(-2, 1), q(1, 1)), true, true).unwrap();
        assert_eq!((lin.volume.clone(), lin.height.clone()), (ex(1, 2), ex(0, 1)));
        assert!(!lin.equal && lin.consistent);
    }

    #[test]
    fn generic_nets_and_zhang() {
        let c = generic_nets_check(&constant(q(5, 7))).unwrap();
        assert!(c.abs_eq && c.ess_eq && c.constant && c.equivalent);
        let t = generic_nets_check(&tent()).unwrap();
        assert!(!t.abs_eq && !t.ess_eq && !t.constant && t.equivalent);

        let z = zhang_inequalities(&linear(q(-2, 1), q(1, 1))).unwrap();
        assert_eq!((z.essential.clone(), z.normalized_height.clone(), z.absolute.clone()), (ex(1, 1), ex(0, 1), ex(-1, 1)));
        assert!(z.pass);
    }

    #[test]
    fn admissible_examples() {
        let body = constant(q(1, 2)).hypograph().unwrap();
        let cert = admissible_certificate(&body).unwrap().unwrap();
        assert_eq!((cert.lambda.clone(), cert.xi.clone()), (q(1, 2), q(1, 4)));
        assert!(verify_admissible(&body, &cert).unwrap());
        let full = AdmissibleCertificate { lambda: q(1, 1), xi: q(1, 2), anchor: Point::origin(1) };
        assert!(verify_admissible(&body, &full).unwrap());
        let too_high = AdmissibleCertificate { lambda: q(1, 1), xi: q(3, 4), anchor: Point::origin(1) };
        assert!(!verify_admissible(&body, &too_high).unwrap());

        assert_eq!(admissible_certificate(&constant(q(0, 1)).hypograph().unwrap()).unwrap(), None);
        assert_eq!(admissible_certificate(&constant(q(-1, 1)).hypograph().unwrap()).unwrap(), None);
    }

    #[test]
    fn admissible_on_sloped_roof() {
        // G = 1 − 2α is positive on [0, 1/2).
        let body = linear(q(-2, 1), q(1, 1)).hypograph().unwrap();
        let cert = admissible_certificate(&body).unwrap().unwrap();
        assert!(cert.lambda < q(1, 4));
        assert!(cert.lambda >= q(1, 4) - q(1, 1 << 20));
        assert_eq!(cert.xi, (q(1, 1) - q(2, 1) * &cert.lambda) / q(2, 1));
        assert!(verify_admissible(&body, &cert).unwrap());
    }

    #[test]
    fn admissible_anchor_off_origin() {
        let dom = convex_hull(&[Point(vec![q(1, 1)]), Point(vec![q(2, 1)])]).unwrap();
        let g = ConcaveRoof::constant(dom, ex(1, 1)).unwrap();
        let cert = admissible_certificate(&g.hypograph().unwrap()).unwrap().unwrap();
        assert_eq!(cert.anchor, Point(vec![q(1, 1)]));
        assert_eq!(cert.lambda, q(1, 2));
    }

    #[test]
    fn infinitesimal_examples() {
        assert_eq!(infinitesimal_certificate(&constant(q(1, 1)).hypograph().unwrap()).unwrap(), Some(q(1, 1)));
        assert_eq!(infinitesimal_certificate(&constant(q(-1, 1)).hypograph().unwrap()).unwrap(), None);
        assert_eq!(infinitesimal_certificate(&linear(q(-1, 1), q(1, 1)).hypograph().unwrap()).unwrap(), Some(q(1, 2)));
    }

    #[test]
    fn nested_boxes() {
        let bodies: Vec<_> = [q(3, 1), q(2, 1), q(1, 1)].iter().map(|c| constant(c.clone()).hypograph().unwrap()).collect();
        let r = body_intersection(&bodies, Some(&bodies[2])).unwrap();
        assert!(r.nested);
        assert_eq!(r.body.body, bodies[2].body);
        assert_eq!(r.distance_to_limit, Some(0.0));

        let left = ConcaveRoof::constant(standard_simplex(1, &q(1, 2)).unwrap(), ex(1, 1)).unwrap();
        let right =
            ConcaveRoof::constant(convex_hull(&[Point(vec![q(3, 4)]), Point(vec![q(1, 1)])]).unwrap(), ex(1, 1)).unwrap();
        let r = body_intersection(&[left.hypograph().unwrap(), right.hypograph().unwrap()], None).unwrap();
        assert!(r.body.is_empty() && !r.nested);
    }

    #[test]
    fn report_for_twisted_weil() {
        let r = report(&constant(q(1, 4)), &Assertions { geometric_ample: true, semi_positive: true, big: Some(true) })
            .unwrap();
        assert_eq!(r.zeta_abs, ex(1, 4));
        assert_eq!(r.verdicts.nef, Verdict::Yes);
        assert_eq!(r.verdicts.ample, Verdict::Yes);
        assert!(r.certificates.admissible.is_some());
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""zeta_abs":"1/4""#));
        let back: PositivityReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
