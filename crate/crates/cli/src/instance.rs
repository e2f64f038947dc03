//! Instance files: a tagged payload plus caller assertions.

use std::fmt;

use okounkov::p1::SampleSpec;
use okounkov::positivity::Assertions;
use okounkov::{ConcaveRoof, Error, P1Metric, Regime, SectionTable, ToricAdelicDivisor};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

/// Failure classes with their exit codes.
#[derive(Debug)]
pub enum Failure {
    /// An invariant or inequality check failed (exit 1).
    Violation(String),
    /// Unreadable or invalid input (exit 2).
    Schema(String),
    /// Exact arithmetic requested for floating data (exit 3).
    Regime(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Violation(_) => 1,
            Failure::Schema(_) => 2,
            Failure::Regime(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Violation(m) => write!(f, "check failed: {m}"),
            Failure::Schema(m) => write!(f, "invalid input: {m}"),
            Failure::Regime(m) => write!(f, "regime conflict: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RegimeConflict(_) => Failure::Regime(e.to_string()),
            _ => Failure::Schema(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Toric,
    Roof,
    Sections,
    P1,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    kind: Kind,
    payload: serde_json::Value,
    #[serde(default)]
    assertions: Option<Assertions>,
    #[serde(default)]
    regime: Option<Regime>,
}

/// Payload of a `p1` instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct P1Payload {
    pub metric: P1Metric,
    #[serde(default)]
    pub sample: Option<SampleSpec>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Toric(ToricAdelicDivisor),
    Roof(ConcaveRoof),
    Sections(SectionTable),
    P1(P1Payload),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub payload: Payload,
    pub assertions: Assertions,
    pub regime: Option<Regime>,
}

fn parse<T: DeserializeOwned>(value: serde_json::Value, prefix: &str) -> Result<T, Failure> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        let at = if path == "." { prefix.to_string() } else { format!("{prefix}.{path}") };
        Failure::Schema(format!("at {at}: {}", e.inner()))
    })
}

impl Instance {
    pub fn from_json(text: &str) -> Result<Instance, Failure> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Failure::Schema(format!("not valid JSON: {e}")))?;
        let raw: RawInstance = serde_path_to_error::deserialize(value).map_err(|e| {
            let path = e.path().to_string();
            Failure::Schema(format!("at {path}: {}", e.inner()))
        })?;
        let payload = match raw.kind {
            Kind::Toric => Payload::Toric(parse(raw.payload, "payload")?),
            Kind::Roof => Payload::Roof(parse(raw.payload, "payload")?),
            Kind::Sections => {
                float_heights_in_exact_table(&raw.payload)?;
                Payload::Sections(parse(raw.payload, "payload")?)
            }
            Kind::P1 => Payload::P1(parse(raw.payload, "payload")?),
        };
        let assertions = match (&payload, raw.assertions) {
            (_, Some(a)) => a,
            (Payload::Toric(t), None) => {
                Assertions { geometric_ample: t.geometric_ample, semi_positive: t.semi_positive, big: None }
            }
            // The sandbox metrics on the projective line are ample and semi-positive.
            (Payload::P1(_), None) => Assertions { geometric_ample: true, semi_positive: true, big: Some(true) },
            (_, None) => Assertions::default(),
        };
        let inst = Instance { payload, assertions, regime: raw.regime };
        if inst.regime == Some(Regime::Exact) && inst.data_regime() == Regime::Float {
            return Err(Failure::Regime(format!("exact regime requested for {} input with floating data", inst.kind_name())));
        }
        Ok(inst)
    }

    pub fn kind_name(&self) -> &'static str {
        match self.payload {
            Payload::Toric(_) => "toric",
            Payload::Roof(_) => "roof",
            Payload::Sections(_) => "sections",
            Payload::P1(_) => "p1",
        }
    }

    /// Regime of the data as given.
    pub fn data_regime(&self) -> Regime {
        match &self.payload {
            Payload::Toric(t) => t.roof().regime(),
            Payload::Roof(g) => g.regime(),
            Payload::Sections(s) => s.regime(),
            Payload::P1(p) => p.metric.regime(),
        }
    }

    /// The concave model: a roof on the Okounkov body. Section tables use
    /// the stage of degree `min(max_degree, top degree)`; metrics on the
    /// projective line are sampled on `grid` intervals.
    pub fn roof(&self, grid: u32, max_degree: u32) -> Result<ConcaveRoof, Failure> {
        Ok(match &self.payload {
            Payload::Toric(t) => t.roof().clone(),
            Payload::Roof(g) => g.clone(),
            Payload::Sections(s) => s.concave_transform_stage(stage_degree(s, max_degree)?)?,
            Payload::P1(p) => p.metric.legendre_roof(grid)?,
        })
    }
}

/// An exact section table with a floating height is a regime conflict, not
/// a schema error.
fn float_heights_in_exact_table(payload: &serde_json::Value) -> Result<(), Failure> {
    if payload.get("exact") != Some(&serde_json::Value::Bool(true)) {
        return Ok(());
    }
    let Some(degrees) = payload.get("degrees").and_then(|d| d.as_object()) else { return Ok(()) };
    for (n, rows) in degrees {
        for (i, row) in rows.as_array().into_iter().flatten().enumerate() {
            if row.get("h").is_some_and(|h| h.is_number()) {
                return Err(Failure::Regime(format!(
                    "floating height at payload.degrees.{n}[{i}].h in an exact section table"
                )));
            }
        }
    }
    Ok(())
}

pub fn stage_degree(s: &SectionTable, max_degree: u32) -> Result<u32, Failure> {
    let top = s.max_degree().ok_or_else(|| Failure::Schema("section table has no data".into()))?;
    Ok(top.min(max_degree))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_errors_point_at_the_field() {
        let bad = r#"{"kind":"roof","payload":{"domain":{"vertices":[["0"],["1"]]},"mode":"affine","pieces":[{"grad":["x"],"offset":"0"}]}}"#;
        let Err(Failure::Schema(msg)) = Instance::from_json(bad) else { panic!() };
        assert!(msg.contains("payload.pieces[0].grad[0]"), "{msg}");

        let unknown = r#"{"kind":"p1","payload":{"metric":{"m":1,"arch":{"kind":"weil"}}},"extra":1}"#;
        let Err(Failure::Schema(msg)) = Instance::from_json(unknown) else { panic!() };
        assert!(msg.contains("extra"), "{msg}");
    }

    #[test]
    fn exact_regime_on_fubini_study_is_a_conflict() {
        let fs = r#"{"kind":"p1","payload":{"metric":{"m":1,"arch":{"kind":"fs"}}},"regime":"exact"}"#;
        assert!(matches!(Instance::from_json(fs), Err(Failure::Regime(_))));
        let weil = r#"{"kind":"p1","payload":{"metric":{"m":1,"arch":{"kind":"weil"}}},"regime":"exact"}"#;
        assert!(Instance::from_json(weil).is_ok());
    }
}
