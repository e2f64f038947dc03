//! Toric input channel: a polytope with a concave roof function.
//!
//! The roof plays the role of the concave transform directly, and monomial
//! section tables generated from it feed the graded-section machinery.

use serde::{Deserialize, Serialize};

use crate::concave::{concavify, ConcaveRoof, RoofMode};
use crate::error::{Error, Result};
use crate::geom::{convex_hull, Point, Polytope, Rational};
use crate::sections::SectionTable;
use crate::value::Value;

/// The geometric flags are caller assertions; nothing here verifies them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ToricRepr", into = "ToricRepr")]
pub struct ToricAdelicDivisor {
    polytope: Polytope,
    roof: ConcaveRoof,
    pub geometric_ample: bool,
    pub semi_positive: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ToricRepr {
    polytope: Polytope,
    roof: ConcaveRoof,
    geometric_ample: bool,
    semi_positive: bool,
}

impl TryFrom<ToricRepr> for ToricAdelicDivisor {
    type Error = Error;
    fn try_from(r: ToricRepr) -> Result<Self> {
        ToricAdelicDivisor::new(r.polytope, r.roof, r.geometric_ample, r.semi_positive)
    }
}

impl From<ToricAdelicDivisor> for ToricRepr {
    fn from(t: ToricAdelicDivisor) -> Self {
        ToricRepr { polytope: t.polytope, roof: t.roof, geometric_ample: t.geometric_ample, semi_positive: t.semi_positive }
    }
}

impl ToricAdelicDivisor {
    pub fn new(polytope: Polytope, roof: ConcaveRoof, geometric_ample: bool, semi_positive: bool) -> Result<Self> {
        if *roof.domain() != polytope {
            return Err(Error::Invalid("roof domain differs from the polytope".into()));
        }
        Ok(ToricAdelicDivisor { polytope, roof, geometric_ample, semi_positive })
    }

    /// Polytope with a constant roof, both flags set.
    pub fn constant(polytope: Polytope, c: Value) -> Result<Self> {
        let roof = ConcaveRoof::constant(polytope.clone(), c)?;
        ToricAdelicDivisor::new(polytope, roof, true, true)
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn roof(&self) -> &ConcaveRoof {
        &self.roof
    }

    /// The pair `(Δ, θ)`, which is the concave model itself.
    pub fn to_concave_model(&self) -> (Polytope, ConcaveRoof) {
        (self.polytope.clone(), self.roof.clone())
    }

    /// One section per lattice point `m ∈ nΔ`, with valuation `m` and height
    /// `−n·θ(m/n)`, for `1 <= n <= n_max`.
    pub fn monomial_sections(&self, n_max: u32) -> Result<SectionTable> {
        if n_max == 0 {
            return Err(Error::Invalid("n_max must be at least 1".into()));
        }
        if let Some(v) = self.polytope.vertices().iter().find(|v| !v.0.iter().all(Rational::is_integer)) {
            return Err(Error::NonLatticePolytope(v.to_string()));
        }
        let exact = self.roof.mode() == RoofMode::Affine;
        let mut table = SectionTable::new(self.polytope.dim(), exact)?;
        for n in 1..=n_max {
            let nr = Rational::from_integer(n as i64);
            let dilated = convex_hull(&self.polytope.vertices().iter().map(|v| v.scale(&nr)).collect::<Vec<_>>())?;
            for m in dilated.lattice_points() {
                let alpha = m.scale(&nr.recip());
                let theta = self.roof.evaluate(&alpha)?;
                let height = Value::Exact(nr.clone()).mul(&theta).neg();
                let valuation = m.0.iter().map(|x| x.numer().try_into().expect("lattice coordinate fits i64")).collect();
                table.push(n, valuation, height)?;
            }
        }
        Ok(table)
    }

    /// `(Δ_D + εΔ_A, θ_D □ εθ_A)`: Minkowski sum of the polytopes with the
    /// sup-convolution of the roofs, realised as the Minkowski sum of the
    /// graph vertices followed by concavification.
    ///
    /// This is a lawful monotone toric test family; it is not claimed to be
    /// the roof of the arithmetic sum in general. The result keeps the
    /// geometric ampleness flag of `self` and is semi-positive when both
    /// inputs are.
    pub fn perturb(&self, a: &ToricAdelicDivisor, eps: &Rational) -> Result<ToricAdelicDivisor> {
        if !eps.is_positive() {
            return Err(Error::NonPositiveEpsilon(eps.to_string()));
        }
        if !a.geometric_ample {
            return Err(Error::PerturbationNotAmple);
        }
        if a.polytope.dim() != self.polytope.dim() {
            return Err(Error::DimensionMismatch { expected: self.polytope.dim(), found: a.polytope.dim() });
        }
        let exact = self.roof.mode() == RoofMode::Affine && a.roof.mode() == RoofMode::Affine;
        let top_d = self.roof.graph_vertices()?;
        let top_a = a.roof.graph_vertices()?;
        let mut samples: Vec<(Point, Value)> = Vec::with_capacity(top_d.len() * top_a.len());
        for (p, g) in &top_d {
            for (q, h) in &top_a {
                let point = p.add(&q.scale(eps));
                samples.push((point, Value::from_rational(g + eps * h, exact)));
            }
        }
        let polytope = self.polytope.minkowski_sum(&a.polytope.dilate(eps)?)?;
        let roof = concavify(&samples, &polytope)?;
        ToricAdelicDivisor::new(polytope, roof, self.geometric_ample, self.semi_positive && a.semi_positive)
    }
}
