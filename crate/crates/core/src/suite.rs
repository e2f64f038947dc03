//! Seeded random concave roofs and the invariant checks run over them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::concave::{AffinePiece, ConcaveRoof};
use crate::error::Result;
use crate::geom::{convex_hull, Point, Polytope, Rational};
use crate::positivity;
use crate::value::Value;

/// One generated roof with the facts the generator knows about it.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub index: usize,
    pub roof: ConcaveRoof,
    /// `Δ` contains `0` and `λ₀·e_i` for every `i`.
    pub flag_centered: bool,
    /// Built as a single constant piece.
    pub constant: bool,
}

fn small_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    let den = rng.gen_range(1..=4i64);
    Rational::new(rng.gen_range(lo * den..=hi * den), den)
}

fn random_point(rng: &mut ChaCha8Rng, d: usize, lo: i64, hi: i64) -> Point {
    Point((0..d).map(|_| small_rational(rng, lo, hi)).collect())
}

fn random_domain(rng: &mut ChaCha8Rng, d: usize, flag_centered: bool) -> Result<Polytope> {
    loop {
        let mut pts = Vec::new();
        if flag_centered {
            let l0 = if rng.gen_bool(0.5) { Rational::new(1, 2) } else { Rational::one() };
            pts.push(Point::origin(d));
            for i in 0..d {
                let mut e = vec![Rational::zero(); d];
                e[i] = l0.clone();
                pts.push(Point(e));
            }
            for _ in 0..rng.gen_range(0..=3) {
                pts.push(random_point(rng, d, 0, 2));
            }
        } else {
            for _ in 0..rng.gen_range(d + 1..=d + 4) {
                pts.push(random_point(rng, d, 1, 3));
            }
        }
        let p = convex_hull(&pts)?;
        if p.is_full_dimensional() {
            return Ok(p);
        }
    }
}

/// `count` roofs from `seed`. Dimensions cycle through 1, 2, 3. Most domains
/// contain a standard simplex at the origin; the rest avoid the origin. Some
/// roofs are constant and some are shifted so that their minimum is `>= 0`.
pub fn random_roofs(seed: u64, count: usize) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for index in 0..count {
        let d = 1 + index % 3;
        let flag_centered = rng.gen_bool(0.75);
        let domain = random_domain(&mut rng, d, flag_centered)?;
        let constant = rng.gen_bool(0.15);
        let mut roof = if constant {
            ConcaveRoof::constant(domain, Value::Exact(small_rational(&mut rng, -2, 2)))?
        } else {
            let pieces = (0..rng.gen_range(1..=4))
                .map(|_| AffinePiece::new(random_point(&mut rng, d, -2, 2).0, small_rational(&mut rng, -2, 2)))
                .collect();
            ConcaveRoof::from_pieces(domain, pieces)?
        };
        if rng.gen_bool(0.4) {
            let min = roof.extrema()?.min;
            let lift = if rng.gen_bool(0.5) { Rational::zero() } else { small_rational(&mut rng, 0, 1) };
            roof = roof.shift(&min.sub(&Value::Exact(lift)))?;
        }
        out.push(Instance { index, roof, flag_centered, constant });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub instances: usize,
    /// Number of instances each check applied to.
    pub checked: std::collections::BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, index: usize, check: &str, ok: bool, detail: impl FnOnce() -> String) {
        *self.checked.entry(check.to_string()).or_default() += 1;
        if !ok {
            self.violations.push(Violation { index, check: check.to_string(), detail: detail() });
        }
    }
}

/// Runs every invariant on one instance and records the outcome.
pub fn check_instance(inst: &Instance, shift: &Rational, report: &mut SuiteReport) -> Result<()> {
    let g = &inst.roof;
    let i = inst.index;
    let e = g.extrema()?;
    let exact = |v: &Value| v.as_exact().cloned().expect("suite roofs are exact");
    let (min, max) = (exact(&e.min), exact(&e.max));

    let hyp = g.hypograph()?.normalized_volume();
    let vol = exact(&positivity::arithmetic_volume(g)?.value);
    report.record(i, "volume_identity", hyp == vol, || format!("hypograph {hyp} vs volume {vol}"));

    let mu = g.domain().volume();
    if mu.is_positive() {
        let z = positivity::zhang_inequalities(g)?;
        let mean = exact(&z.normalized_height);
        report.record(i, "zhang", z.pass && min <= mean && mean <= max, || format!("{min} <= {mean} <= {max}"));

        let n = positivity::generic_nets_check(g)?;
        let is_const = g.graph_vertices()?.iter().all(|(_, t)| *t == min);
        let ok = n.equivalent && n.constant == is_const && (!inst.constant || n.constant);
        report.record(i, "generic_nets", ok, || format!("{n:?}, constant by vertex scan: {is_const}"));

        let hs = positivity::hs_check(g, true, true)?;
        let strict = if min.is_negative() { exact(&hs.volume) > exact(&hs.height) } else { hs.equal };
        report.record(i, "hilbert_samuel", hs.consistent && strict, || format!("{hs:?}"));
    }

    let body = g.hypograph()?;
    let cert = positivity::admissible_certificate(&body)?;
    let origin = Point::origin(g.dim());
    if g.domain().contains_point(&origin)? && min.is_positive() {
        let ok = match &cert {
            Some(c) => positivity::verify_admissible(&body, c)?,
            None => false,
        };
        report.record(i, "certificate_found", ok, || format!("min {min}, certificate {cert:?}"));
    }
    if positivity::certificate_anchor(g.domain())? == origin && !g.eval_exact(&origin.0).is_positive() {
        report.record(i, "certificate_absent", cert.is_none(), || format!("G(0) <= 0 but found {cert:?}"));
    }
    if let Some(c) = &cert {
        report.record(i, "certificate_sound", positivity::verify_admissible(&body, c)?, || format!("{c:?}"));
    }

    let t = Value::Exact(shift.clone());
    let s = g.shift(&t)?;
    let es = s.extrema()?;
    let ok = es.min == e.min.sub(&t) && es.max == e.max.sub(&t) && (!mu.is_positive() || s.mean()? == g.mean()?.sub(&t));
    report.record(i, "shift_covariance", ok, || format!("shift by {shift}: {es:?} vs {e:?}"));
    Ok(())
}

/// Generates `count` roofs from `seed` and checks every invariant on them.
pub fn run(seed: u64, count: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport { seed, instances: count, ..Default::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for inst in random_roofs(seed, count)? {
        let shift = small_rational(&mut rng, -2, 2);
        check_instance(&inst, &shift, &mut report)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_deterministic_and_mixed() {
        let a = random_roofs(3, 30).unwrap();
        let b = random_roofs(3, 30).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().any(|i| i.flag_centered) && a.iter().any(|i| !i.flag_centered));
        assert!(a.iter().any(|i| i.roof.dim() == 3));
        for inst in &a {
            assert!(inst.roof.domain().is_full_dimensional());
            if inst.flag_centered {
                assert!(inst.roof.domain().contains_point(&Point::origin(inst.roof.dim())).unwrap());
            }
        }
    }

    #[test]
    fn small_suite_passes() {
        let r = run(11, 24).unwrap();
        assert!(r.pass(), "{:?}", r.violations);
        assert!(r.checked.get("certificate_found").copied().unwrap_or(0) > 0);
    }
}
