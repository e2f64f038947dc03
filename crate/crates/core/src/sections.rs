//! Finite graded section data: valuation vectors and heights per degree.
//!
//! A section `s` of degree `n` contributes the point `ν(s)/n` to the
//! Okounkov body and the value `−h(s)/n` to the concave transform. The level
//! `t` piece of the filtration keeps the sections with `h(s) <= −n·t`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::concave::{concavify, ConcaveRoof};
use crate::error::{Error, Result};
use crate::geom::{convex_hull, Point, Polytope, Rational};
use crate::value::{Regime, Value};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionDatum {
    #[serde(skip)]
    pub degree: u32,
    #[serde(rename = "nu")]
    pub valuation: Vec<i64>,
    #[serde(rename = "h")]
    pub height: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TableRepr", into = "TableRepr")]
pub struct SectionTable {
    d: usize,
    exact: bool,
    degrees: BTreeMap<u32, Vec<SectionDatum>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableRepr {
    d: usize,
    #[serde(default)]
    exact: bool,
    degrees: BTreeMap<u32, Vec<SectionDatum>>,
}

impl TryFrom<TableRepr> for SectionTable {
    type Error = Error;
    fn try_from(r: TableRepr) -> Result<Self> {
        let mut t = SectionTable::new(r.d, r.exact)?;
        for (n, data) in r.degrees {
            for s in data {
                t.push(n, s.valuation, s.height)?;
            }
        }
        Ok(t)
    }
}

impl From<SectionTable> for TableRepr {
    fn from(t: SectionTable) -> Self {
        TableRepr { d: t.d, exact: t.exact, degrees: t.degrees }
    }
}

/// One row of a convergence report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub n: u32,
    pub hausdorff: f64,
    pub sup_gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub rows: Vec<ConvergenceRow>,
    /// False when a distance grows with `N`, which signals inconsistent data.
    pub monotone: bool,
}

impl SectionTable {
    /// Empty table for valuations in `Z^d`. Exact tables only accept exact heights.
    pub fn new(d: usize, exact: bool) -> Result<Self> {
        if d == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        Ok(SectionTable { d, exact, degrees: BTreeMap::new() })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn regime(&self) -> Regime {
        if self.exact {
            Regime::Exact
        } else {
            Regime::Float
        }
    }

    pub fn push(&mut self, degree: u32, valuation: Vec<i64>, height: Value) -> Result<()> {
        if degree == 0 {
            return Err(Error::Invalid("section degrees start at 1".into()));
        }
        if valuation.len() != self.d {
            return Err(Error::DimensionMismatch { expected: self.d, found: valuation.len() });
        }
        if self.exact && !height.is_exact() {
            return Err(Error::RegimeConflict(format!("section height {height} in an exact table")));
        }
        if let Value::Approx(x) = height {
            if !x.is_finite() {
                return Err(Error::InvalidValue(x.to_string()));
            }
        }
        self.degrees.entry(degree).or_default().push(SectionDatum { degree, valuation, height });
        Ok(())
    }

    pub fn degrees(&self) -> impl Iterator<Item = (u32, &[SectionDatum])> {
        self.degrees.iter().map(|(&n, v)| (n, v.as_slice()))
    }

    pub fn data(&self, degree: u32) -> &[SectionDatum] {
        self.degrees.get(&degree).map_or(&[], |v| v.as_slice())
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.degrees.keys().next_back().copied()
    }

    fn up_to(&self, n_max: u32) -> impl Iterator<Item = &SectionDatum> {
        self.degrees.range(..=n_max).flat_map(|(_, v)| v.iter())
    }

    fn normalized(s: &SectionDatum) -> Point {
        let n = Rational::from_integer(s.degree as i64);
        Point(s.valuation.iter().map(|&v| Rational::from_integer(v) / &n).collect())
    }

    /// Hull of `ν(s)/n` over sections of degree at most `n_max`.
    pub fn okounkov_stage(&self, n_max: u32) -> Result<Polytope> {
        let pts: Vec<Point> = self.up_to(n_max).map(Self::normalized).collect();
        if pts.is_empty() {
            return Err(Error::EmptyStage(n_max));
        }
        convex_hull(&pts)
    }

    /// Hull of `ν(s)/n` over sections with `h(s) <= −n·t`; possibly empty.
    pub fn filtered_stage(&self, t: &Value, n_max: u32) -> Result<Polytope> {
        if self.up_to(n_max).next().is_none() {
            return Err(Error::EmptyStage(n_max));
        }
        let t = t.to_rational()?;
        let mut pts = Vec::new();
        for s in self.up_to(n_max) {
            let bound = -(Rational::from_integer(s.degree as i64) * &t);
            if s.height.to_rational()? <= bound {
                pts.push(Self::normalized(s));
            }
        }
        if pts.is_empty() {
            Ok(Polytope::empty(self.d))
        } else {
            convex_hull(&pts)
        }
    }

    /// Concave envelope of `(ν(s)/n, −h(s)/n)` over the stage body.
    pub fn concave_transform_stage(&self, n_max: u32) -> Result<ConcaveRoof> {
        let domain = self.okounkov_stage(n_max)?;
        let samples: Vec<(Point, Value)> = self
            .up_to(n_max)
            .map(|s| {
                let n = Rational::from_integer(s.degree as i64);
                let v = match &s.height {
                    Value::Exact(h) => Value::Exact(-(h / &n)),
                    Value::Approx(h) => Value::Approx(-h / s.degree as f64),
                };
                (Self::normalized(s), v)
            })
            .collect();
        concavify(&samples, &domain)
    }

    /// Distance of each stage to the last one: Hausdorff distance of the
    /// bodies and the sup-norm gap of the transforms over the smaller body.
    pub fn convergence_report(&self, stages: &[u32]) -> Result<ConvergenceReport> {
        let last = *stages.last().ok_or(Error::EmptyInput)?;
        if stages.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid("stages must be strictly increasing".into()));
        }
        let final_body = self.okounkov_stage(last)?;
        let final_roof = self.concave_transform_stage(last)?;
        let mut rows = Vec::with_capacity(stages.len());
        for &n in stages {
            let body = self.okounkov_stage(n)?;
            let roof = self.concave_transform_stage(n)?;
            let hausdorff = body.hausdorff_distance(&final_body)?.unwrap_or(f64::INFINITY);
            let sup_gap = sup_gap(&roof, &final_roof)?;
            rows.push(ConvergenceRow { n, hausdorff, sup_gap });
        }
        let slack = 1e-12;
        let monotone = rows
            .windows(2)
            .all(|w| w[1].hausdorff <= w[0].hausdorff + slack && w[1].sup_gap <= w[0].sup_gap + slack);
        Ok(ConvergenceReport { rows, monotone })
    }
}

/// `sup |G(α) − H(α)|` over `dom G ∩ dom H`, attained at a vertex of the
/// common refinement of their cells.
pub fn sup_gap(g: &ConcaveRoof, h: &ConcaveRoof) -> Result<f64> {
    let common = g.domain().intersect(h.domain())?;
    if common.is_empty() {
        return Ok(0.0);
    }
    let mut candidates: Vec<Point> = Vec::new();
    if common.dim() == 1 {
        candidates.extend(common.vertices().iter().cloned());
        for roof in [g, h] {
            for (_, cell) in roof.cells()? {
                candidates.extend(cell.vertices().iter().filter(|v| common.contains_point(v).unwrap_or(false)).cloned());
            }
        }
    } else {
        let gc = g.cells()?;
        let hc = h.cells()?;
        for (_, a) in &gc {
            let a = a.intersect(&common)?;
            if a.is_empty() {
                continue;
            }
            for (_, b) in &hc {
                candidates.extend(a.intersect(b)?.vertices().iter().cloned());
            }
        }
    }
    Ok(candidates
        .iter()
        .map(|p| (g.eval_exact(&p.0) - h.eval_exact(&p.0)).abs().to_f64())
        .fold(0.0, f64::max))
}
