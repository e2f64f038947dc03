//! Heights on the projective line over `Q` for `D = m·[∞]`.
//!
//! Finite places carry the standard model metric; the archimedean metric is
//! a convex potential `φ(u)` of `u = ln|t|` with asymptotic slopes `0` and
//! `m`. The concave transform for the flag at `t = 0` is the negative
//! Legendre conjugate `G(α) = −sup_u (α·u − φ(u))` on `[0, m]`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::concave::{concavify, ConcaveRoof};
use crate::error::{Error, Result};
use crate::geom::{convex_hull, Point, Rational};
use crate::sections::SectionTable;
use crate::value::{Regime, Value, FLOAT_MARGIN};

/// Affine piece `u ↦ slope·u + offset` of a custom potential.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialPiece {
    pub slope: Rational,
    pub offset: Rational,
}

/// Archimedean potential `φ`.
#[derive(Clone, Debug, PartialEq)]
pub enum Arch {
    /// `max(0, m·u)`.
    Weil,
    /// `(m/2)·ln(1 + e^{2u})`.
    FubiniStudy,
    /// `max(0, m·u) + c`.
    WeilPlusC(Value),
    /// `max_i (slope_i·u + offset_i)`.
    Custom(Vec<PotentialPiece>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MetricRepr", into = "MetricRepr")]
pub struct P1Metric {
    m: u32,
    arch: Arch,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MetricRepr {
    m: u32,
    arch: ArchRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum ArchRepr {
    Weil,
    Fs,
    WeilPlusC { c: Value },
    Custom { pieces: Vec<PotentialPiece> },
}

impl TryFrom<MetricRepr> for P1Metric {
    type Error = Error;
    fn try_from(r: MetricRepr) -> Result<Self> {
        let arch = match r.arch {
            ArchRepr::Weil => Arch::Weil,
            ArchRepr::Fs => Arch::FubiniStudy,
            ArchRepr::WeilPlusC { c } => Arch::WeilPlusC(c),
            ArchRepr::Custom { pieces } => Arch::Custom(pieces),
        };
        P1Metric::new(r.m, arch)
    }
}

impl From<P1Metric> for MetricRepr {
    fn from(p: P1Metric) -> Self {
        let arch = match p.arch {
            Arch::Weil => ArchRepr::Weil,
            Arch::FubiniStudy => ArchRepr::Fs,
            Arch::WeilPlusC(c) => ArchRepr::WeilPlusC { c },
            Arch::Custom(pieces) => ArchRepr::Custom { pieces },
        };
        MetricRepr { m: p.m, arch }
    }
}

/// `−(x ln x + (1 − x) ln(1 − x))` on `[0, 1]`.
fn entropy(x: f64) -> f64 {
    let xlnx = |y: f64| if y <= 0.0 { 0.0 } else { y * y.ln() };
    -(xlnx(x) + xlnx(1.0 - x))
}

impl P1Metric {
    pub fn new(m: u32, arch: Arch) -> Result<Self> {
        if m == 0 {
            return Err(Error::Invalid("m must be a positive integer".into()));
        }
        if let Arch::Custom(pieces) = &arch {
            if pieces.is_empty() {
                return Err(Error::EmptyInput);
            }
            let lo = pieces.iter().map(|p| &p.slope).min().unwrap();
            let hi = pieces.iter().map(|p| &p.slope).max().unwrap();
            if !lo.is_zero() || *hi != Rational::from_integer(m as i64) {
                return Err(Error::SlopeViolation(format!(
                    "asymptotic slopes must be 0 and {m}, found {lo} and {hi}"
                )));
            }
        }
        let mut arch = arch;
        if let Arch::Custom(pieces) = &mut arch {
            pieces.sort();
            pieces.dedup();
        }
        Ok(P1Metric { m, arch })
    }

    pub fn weil(m: u32) -> Self {
        P1Metric { m, arch: Arch::Weil }
    }

    pub fn fubini_study(m: u32) -> Self {
        P1Metric { m, arch: Arch::FubiniStudy }
    }

    pub fn weil_plus_c(m: u32, c: Value) -> Self {
        P1Metric { m, arch: Arch::WeilPlusC(c) }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn arch(&self) -> &Arch {
        &self.arch
    }

    pub fn regime(&self) -> Regime {
        match &self.arch {
            Arch::Weil | Arch::Custom(_) => Regime::Exact,
            Arch::FubiniStudy => Regime::Float,
            Arch::WeilPlusC(c) => c.regime(),
        }
    }

    fn mr(&self) -> Rational {
        Rational::from_integer(self.m as i64)
    }

    /// The same metric read in the coordinate `1/t`: `φ̃(u) = φ(−u) + m·u`.
    pub fn swapped(&self) -> P1Metric {
        let arch = match &self.arch {
            Arch::Custom(pieces) => Arch::Custom(
                pieces.iter().map(|p| PotentialPiece { slope: self.mr() - &p.slope, offset: p.offset.clone() }).collect(),
            ),
            other => other.clone(),
        };
        P1Metric::new(self.m, arch).expect("swapping preserves the slope range")
    }

    /// `φ(u)` at a finite `u`.
    pub fn potential(&self, u: f64) -> f64 {
        let m = self.m as f64;
        match &self.arch {
            Arch::Weil => (m * u).max(0.0),
            Arch::FubiniStudy => {
                // (m/2)·ln(1 + e^{2u}) = m·max(u, 0) + (m/2)·ln(1 + e^{−2|u|})
                m * u.max(0.0) + 0.5 * m * (-2.0 * u.abs()).exp().ln_1p()
            }
            Arch::WeilPlusC(c) => (m * u).max(0.0) + c.to_f64(),
            Arch::Custom(pieces) => {
                pieces.iter().map(|p| p.slope.to_f64() * u + p.offset.to_f64()).fold(f64::NEG_INFINITY, f64::max)
            }
        }
    }

    /// `lim_{u→−∞} φ(u)`.
    fn potential_at_minus_infinity(&self) -> Value {
        match &self.arch {
            Arch::Weil | Arch::FubiniStudy => Value::zero(),
            Arch::WeilPlusC(c) => c.clone(),
            Arch::Custom(pieces) => Value::Exact(
                pieces.iter().filter(|p| p.slope.is_zero()).map(|p| p.offset.clone()).max().expect("slope 0 piece"),
            ),
        }
    }

    /// `φ(0)`.
    fn potential_at_zero(&self) -> Value {
        match &self.arch {
            Arch::Weil => Value::zero(),
            Arch::FubiniStudy => Value::Approx(0.5 * self.m as f64 * std::f64::consts::LN_2),
            Arch::WeilPlusC(c) => c.clone(),
            Arch::Custom(pieces) => Value::Exact(pieces.iter().map(|p| p.offset.clone()).max().unwrap()),
        }
    }

    fn custom_roof(&self, pieces: &[PotentialPiece]) -> Result<ConcaveRoof> {
        // The conjugate of a maximum of affine functions is the upper
        // concave envelope of the points (slope_i, offset_i).
        let samples: Vec<(Point, Value)> =
            pieces.iter().map(|p| (Point(vec![p.slope.clone()]), Value::Exact(p.offset.clone()))).collect();
        concavify(&samples, &self.domain())
    }

    pub fn domain(&self) -> crate::geom::Polytope {
        convex_hull(&[Point(vec![Rational::zero()]), Point(vec![self.mr()])]).expect("segment")
    }

    /// `G(α) = −sup_u (α·u − φ(u))` for `α ∈ [0, m]`.
    pub fn legendre_value(&self, alpha: &Rational) -> Result<Value> {
        if alpha.is_negative() || *alpha > self.mr() {
            return Err(Error::OutOfDomain(alpha.to_string()));
        }
        Ok(match &self.arch {
            Arch::Weil => Value::zero(),
            Arch::WeilPlusC(c) => c.clone(),
            Arch::FubiniStudy => {
                if alpha.is_zero() || *alpha == self.mr() {
                    Value::zero()
                } else {
                    let m = self.m as f64;
                    Value::Approx(0.5 * m * entropy((alpha / &self.mr()).to_f64()))
                }
            }
            Arch::Custom(pieces) => Value::Exact(self.custom_roof(pieces)?.eval_exact(std::slice::from_ref(alpha))),
        })
    }

    /// Concave transform on `[0, m]`. Analytic potentials are sampled at
    /// `α = m·k/grid`; piecewise-affine ones give the exact roof.
    pub fn legendre_roof(&self, grid: u32) -> Result<ConcaveRoof> {
        if grid == 0 {
            return Err(Error::Invalid("grid size must be positive".into()));
        }
        let alphas: Vec<Rational> = (0..=grid).map(|k| self.mr() * Rational::new(k as i64, grid as i64)).collect();
        self.legendre_roof_at(&alphas)
    }

    /// As [`P1Metric::legendre_roof`], sampling at the given points of
    /// `[0, m]` (which must include both endpoints).
    pub fn legendre_roof_at(&self, alphas: &[Rational]) -> Result<ConcaveRoof> {
        match &self.arch {
            Arch::Custom(pieces) => self.custom_roof(pieces),
            Arch::Weil => ConcaveRoof::constant(self.domain(), Value::zero()),
            Arch::WeilPlusC(c) => ConcaveRoof::constant(self.domain(), c.clone()),
            Arch::FubiniStudy => {
                let samples: Vec<(Point, Value)> = alphas
                    .iter()
                    .map(|a| Ok((Point(vec![a.clone()]), self.legendre_value(a)?)))
                    .collect::<Result<_>>()?;
                concavify(&samples, &self.domain())
            }
        }
    }

    /// Monomials `t^k` of `n·m·[∞]` with height `sup_u (k·u − n·φ(u)) = −n·G(k/n)`.
    pub fn monomial_table(&self, n_max: u32) -> Result<SectionTable> {
        if n_max == 0 {
            return Err(Error::Invalid("n_max must be at least 1".into()));
        }
        let mut table = SectionTable::new(1, self.regime() == Regime::Exact)?;
        for n in 1..=n_max {
            let nv = Value::Exact(Rational::from_integer(n as i64));
            for k in 0..=(n * self.m) {
                let g = self.legendre_value(&Rational::new(k as i64, n as i64))?;
                table.push(n, vec![k as i64], nv.mul(&g).neg())?;
            }
        }
        Ok(table)
    }

    /// `ĥ(x) = m·Σ_p ln max(1, |x|_p) + φ(ln|x|)`, with `ĥ(0) = φ(−∞)`.
    /// The point at infinity is handled in the coordinate `1/t`.
    pub fn point_height(&self, x: &RationalPoint) -> Value {
        let (p, q) = match *x {
            RationalPoint::Infinity => return self.swapped().point_height(&RationalPoint::Finite { p: 0, q: 1 }),
            RationalPoint::Finite { p, q } => (p, q),
        };
        let finite = if q == 1 {
            Value::zero()
        } else {
            let s: f64 = factorize(q).into_iter().map(|(l, v)| v as f64 * (l as f64).ln()).sum();
            Value::Approx(self.m as f64 * s)
        };
        let arch = if p == 0 {
            self.potential_at_minus_infinity()
        } else if p.unsigned_abs() == q {
            self.potential_at_zero()
        } else {
            let u = (p.unsigned_abs() as f64).ln() - (q as f64).ln();
            Value::Approx(self.potential(u))
        };
        finite.add(&arch)
    }

    /// Samples `ĥ(x) >= min G` and `ĥ(0) >= G(0)`, each up to [`FLOAT_MARGIN`].
    pub fn check_thmkey(&self, sample: &[RationalPoint]) -> Result<ThmKeyReport> {
        let first = sample.first().ok_or(Error::EmptyInput)?;
        let roof = self.legendre_roof(64)?;
        let min_g = roof.extrema()?.min;
        let g_at_zero = self.legendre_value(&Rational::zero())?;
        let height_at_zero = self.point_height(&RationalPoint::Finite { p: 0, q: 1 });
        let mut argmin = *first;
        let mut min_height = f64::INFINITY;
        let mut violations = Vec::new();
        for x in sample {
            let h = self.point_height(x).to_f64();
            if h < min_height || (h == min_height && *x < argmin) {
                min_height = h;
                argmin = *x;
            }
            if h < min_g.to_f64() - FLOAT_MARGIN {
                violations.push(*x);
            }
        }
        let zero_ok = height_at_zero.to_f64() >= g_at_zero.to_f64() - FLOAT_MARGIN;
        Ok(ThmKeyReport {
            count: sample.len(),
            min_g: min_g.clone(),
            g_at_zero,
            height_at_zero,
            min_height,
            argmin,
            gap: min_height - min_g.to_f64(),
            tolerance: FLOAT_MARGIN,
            pass: violations.is_empty() && zero_ok,
            violations,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThmKeyReport {
    pub count: usize,
    #[serde(with = "crate::value::as_string")]
    pub min_g: Value,
    #[serde(with = "crate::value::as_string")]
    pub g_at_zero: Value,
    #[serde(with = "crate::value::as_string")]
    pub height_at_zero: Value,
    pub min_height: f64,
    pub argmin: RationalPoint,
    /// `min ĥ − min G` over the sample.
    pub gap: f64,
    pub tolerance: f64,
    pub violations: Vec<RationalPoint>,
    pub pass: bool,
}

/// Prime factorization by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut v = 0;
            while n.is_multiple_of(p) {
                n /= p;
                v += 1;
            }
            out.push((p, v));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// A point of the projective line over `Q`: `p/q` in lowest terms with
/// `q > 0`, or infinity. Ordered by `(p, q)` with infinity last.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RationalPoint {
    Finite { p: i64, q: u64 },
    Infinity,
}

impl RationalPoint {
    /// `p/q` reduced; `q = 0` gives infinity.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return if p == 0 { Err(Error::InvalidPoint("0/0".into())) } else { Ok(RationalPoint::Infinity) };
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok(RationalPoint::Finite { p, q: q as u64 })
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalPoint::Finite { p, q } => write!(f, "{p}/{q}"),
            RationalPoint::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for RationalPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(RationalPoint::Infinity);
        }
        let bad = || Error::InvalidPoint(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim().parse::<i64>().map_err(|_| bad())?, q.trim().parse::<i64>().map_err(|_| bad())?),
            None => (s.parse::<i64>().map_err(|_| bad())?, 1),
        };
        if q == 0 {
            return Err(bad());
        }
        RationalPoint::new(p, q)
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RationalPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Which rational points to test.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SampleSpec {
    /// Every `p/q` with `|p| <= bound`, `1 <= q <= bound`, plus infinity.
    Farey { bound: u32 },
    /// `count` seeded draws with `|p| <= bound`, `1 <= q <= bound`.
    Random { count: usize, bound: u32, seed: u64 },
    Explicit { points: Vec<RationalPoint> },
}

impl SampleSpec {
    pub fn points(&self) -> Result<Vec<RationalPoint>> {
        match self {
            SampleSpec::Farey { bound } => {
                let b = *bound as i64;
                if b == 0 {
                    return Err(Error::Invalid("farey bound must be positive".into()));
                }
                let mut out = Vec::new();
                for p in -b..=b {
                    for q in 1..=b {
                        if p.gcd(&q) == 1 || p == 0 && q == 1 {
                            out.push(RationalPoint::Finite { p, q: q as u64 });
                        }
                    }
                }
                out.push(RationalPoint::Infinity);
                Ok(out)
            }
            SampleSpec::Random { count, bound, seed } => {
                let b = *bound as i64;
                if b == 0 {
                    return Err(Error::Invalid("random bound must be positive".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*count).map(|_| RationalPoint::new(rng.gen_range(-b..=b), rng.gen_range(1..=b))).collect()
            }
            SampleSpec::Explicit { points } => Ok(points.clone()),
        }
    }
}

/// Sorted union of the Farey fractions of order `n` in `[0, 1]` and the
/// uniform grid `k/grid`.
pub fn farey_and_uniform(n: u32, grid: u32) -> Vec<Rational> {
    let mut out: Vec<Rational> = (1..=n as i64).flat_map(|d| (0..=d).map(move |k| Rational::new(k, d))).collect();
    out.extend((0..=grid as i64).map(|k| Rational::new(k, grid as i64)));
    out.sort();
    out.dedup();
    out
}
