//! Numbers that are either exact rationals or tagged double-precision values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geom::Rational;

/// Margin used to decide strict inequalities on floating values.
pub const FLOAT_MARGIN: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Exact,
    Float,
}

impl Regime {
    pub fn join(self, other: Regime) -> Regime {
        if self == Regime::Exact && other == Regime::Exact {
            Regime::Exact
        } else {
            Regime::Float
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Exact => "exact",
            Regime::Float => "float",
        })
    }
}

#[derive(Clone, PartialEq)]
pub enum Value {
    Exact(Rational),
    Approx(f64),
}

impl Value {
    pub fn zero() -> Self {
        Value::Exact(Rational::zero())
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn regime(&self) -> Regime {
        if self.is_exact() {
            Regime::Exact
        } else {
            Regime::Float
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => r.to_f64(),
            Value::Approx(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Approx(_) => None,
        }
    }

    /// Exact rational equal to the stored number (the binary value for floats).
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            Value::Exact(r) => Ok(r.clone()),
            Value::Approx(x) => Rational::from_f64(*x).ok_or_else(|| Error::InvalidValue(x.to_string())),
        }
    }

    /// Keeps exactness only when `exact` holds; otherwise rounds to a double.
    pub fn from_rational(r: Rational, exact: bool) -> Self {
        if exact {
            Value::Exact(r)
        } else {
            Value::Approx(r.to_f64())
        }
    }

    pub fn neg(&self) -> Value {
        match self {
            Value::Exact(r) => Value::Exact(-r),
            Value::Approx(x) => Value::Approx(-x),
        }
    }

    pub fn add(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a + b),
            _ => Value::Approx(self.to_f64() + other.to_f64()),
        }
    }

    pub fn sub(&self, other: &Value) -> Value {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a * b),
            _ => Value::Approx(self.to_f64() * other.to_f64()),
        }
    }

    /// Sign relative to zero. Floats within [`FLOAT_MARGIN`] of zero are
    /// undecided and give `None`.
    pub fn sign(&self) -> Option<Ordering> {
        match self {
            Value::Exact(r) => Some(r.cmp(&Rational::zero())),
            Value::Approx(x) if *x > FLOAT_MARGIN => Some(Ordering::Greater),
            Value::Approx(x) if *x < -FLOAT_MARGIN => Some(Ordering::Less),
            Value::Approx(_) => None,
        }
    }

    /// Comparison with the same margin rule as [`Value::sign`].
    pub fn compare(&self, other: &Value) -> Option<Ordering> {
        self.sub(other).sign()
    }

    /// Equality: exact when both sides are exact, within `tol` otherwise.
    pub fn approx_eq(&self, other: &Value, tol: f64) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a == b,
            _ => (self.to_f64() - other.to_f64()).abs() <= tol,
        }
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Exact(r)
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Approx(x)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Approx(x) => write!(f, "{x:?}"),
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "Exact({r})"),
            Value::Approx(x) => write!(f, "Approx({x:?})"),
        }
    }
}

impl FromStr for Value {
    type Err = Error;

    /// `"a/b"` or an integer literal is exact; a decimal literal is a float.
    fn from_str(s: &str) -> Result<Self> {
        if let Ok(r) = s.parse::<Rational>() {
            return Ok(Value::Exact(r));
        }
        match s.trim().parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(Value::Approx(x)),
            _ => Err(Error::InvalidValue(s.to_string())),
        }
    }
}

/// Exact values serialize as `"a/b"` strings, floats as JSON numbers.
impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Exact(r) => serializer.collect_str(r),
            Value::Approx(x) => serializer.serialize_f64(*x),
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(x) if x.is_finite() => Ok(Value::Approx(x)),
            Raw::Num(x) => Err(serde::de::Error::custom(format!("non-finite value {x}"))),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Serde adapter writing every value as a string (`"a/b"` or a decimal).
pub mod as_string {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Value, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Value, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<Value>, s: S) -> std::result::Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.collect_str(v),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Value>, D::Error> {
            let s = Option::<String>::deserialize(d)?;
            s.map(|s| s.parse().map_err(serde::de::Error::custom)).transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::q;

    #[test]
    fn parse_distinguishes_regimes() {
        assert_eq!("1/4".parse::<Value>().unwrap(), Value::Exact(q(1, 4)));
        assert_eq!("-3".parse::<Value>().unwrap(), Value::Exact(q(-3, 1)));
        assert_eq!("0.25".parse::<Value>().unwrap(), Value::Approx(0.25));
        assert!("abc".parse::<Value>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for v in [Value::Exact(q(-2, 3)), Value::Approx(0.1), Value::Approx(3.0), Value::Approx(1e-12)] {
            assert_eq!(v.to_string().parse::<Value>().unwrap(), v);
        }
    }

    #[test]
    fn margin_rule() {
        assert_eq!(Value::Approx(1e-12).sign(), None);
        assert_eq!(Value::Approx(-1e-6).sign(), Some(Ordering::Less));
        assert_eq!(Value::Exact(q(1, 1_000_000_000_000)).sign(), Some(Ordering::Greater));
    }

    #[test]
    fn mixed_arithmetic_degrades_to_float() {
        let v = Value::Exact(q(1, 2)).add(&Value::Approx(0.25));
        assert_eq!(v, Value::Approx(0.75));
        assert_eq!(Value::Exact(q(1, 2)).mul(&Value::Exact(q(2, 3))), Value::Exact(q(1, 3)));
    }

    #[test]
    fn json_forms() {
        let v: Vec<Value> = serde_json::from_str(r#"["1/2", 0.5, "7"]"#).unwrap();
        assert_eq!(v, vec![Value::Exact(q(1, 2)), Value::Approx(0.5), Value::Exact(q(7, 1))]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["1/2",0.5,"7/1"]"#);
    }
}
