//! JSON form of exact values.
//!
//! A `LaurentPoly` is an array of `[exponent, "p/q"]` pairs in ascending
//! exponent order; a `RatQ` is `{"num": [...], "den": [...]}`.

use std::str::FromStr;

use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use super::{LaurentPoly, RatQ};
use crate::error::{Error, Result};

fn rational_string(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, rational_string(c)])).collect())
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly> {
    let arr = v.as_array().ok_or_else(|| Error::Json("expected an array of terms".into()))?;
    let mut terms = Vec::with_capacity(arr.len());
    let mut last = None;
    for t in arr {
        let pair = t
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Error::Json("term must be [exponent, \"p/q\"]".into()))?;
        let e = pair[0].as_i64().ok_or_else(|| Error::Json("exponent must be an integer".into()))?;
        if last.is_some_and(|l| l >= e) {
            return Err(Error::Json("exponents must be strictly ascending".into()));
        }
        last = Some(e);
        let s = pair[1].as_str().ok_or_else(|| Error::Json("coefficient must be a string".into()))?;
        let c = BigRational::from_str(s).map_err(|err| Error::Json(format!("bad coefficient {s:?}: {err}")))?;
        terms.push((e, c));
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn ratq_to_json(x: &RatQ) -> Value {
    json!({ "num": laurent_to_json(x.num()), "den": laurent_to_json(x.den()) })
}

pub fn ratq_from_json(v: &Value) -> Result<RatQ> {
    let num = v.get("num").ok_or_else(|| Error::Json("missing \"num\"".into()))?;
    let den = v.get("den").ok_or_else(|| Error::Json("missing \"den\"".into()))?;
    RatQ::new(laurent_from_json(num)?, laurent_from_json(den)?)
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        laurent_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        laurent_from_json(&Value::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for RatQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ratq_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        ratq_from_json(&Value::deserialize(d)?).map_err(D::Error::custom)
    }
}
