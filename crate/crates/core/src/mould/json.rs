//! JSON form of moulds:
//!
//! ```text
//! {"alphabet":"U","weight":3,"bound":null,
//!  "depths":{"1":{"num":[["1",[2]]],"den":[["1",[0]]]}}}
//! ```
//!
//! Coefficients are exact rational strings; each polynomial is a list of
//! `[coefficient, exponent vector]` pairs in graded-lex order. Depths are
//! written in increasing numeric order.

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use serde_json::Value;

use super::{Alphabet, Mould, MouldError};
use crate::exact::rational::{fmt_rational, parse_rational};
use crate::exact::{Monomial, MultiPoly, RatFrac};

struct PolyJson<'a>(&'a MultiPoly);

impl Serialize for PolyJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<(String, &[u16])> = self.0.terms().map(|(m, c)| (fmt_rational(c), m.exps())).collect();
        terms.serialize(s)
    }
}

struct FracJson<'a>(&'a RatFrac);

impl Serialize for FracJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RatFrac", 2)?;
        st.serialize_field("num", &PolyJson(self.0.num()))?;
        st.serialize_field("den", &PolyJson(&self.0.den()))?;
        st.end()
    }
}

struct DepthsJson<'a>(&'a Mould);

impl Serialize for DepthsJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (r, v) in self.0.values() {
            map.serialize_entry(&r.to_string(), &FracJson(v))?;
        }
        map.end()
    }
}

impl Serialize for Mould {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Mould", 4)?;
        st.serialize_field("alphabet", &self.alphabet())?;
        st.serialize_field("weight", &self.weight())?;
        st.serialize_field("bound", &self.bound())?;
        st.serialize_field("depths", &DepthsJson(self))?;
        st.end()
    }
}

pub fn to_json(m: &Mould) -> String {
    serde_json::to_string(m).expect("mould serialization cannot fail")
}

pub fn to_json_pretty(m: &Mould) -> String {
    serde_json::to_string_pretty(m).expect("mould serialization cannot fail")
}

fn malformed(msg: impl Into<String>) -> MouldError {
    MouldError::Malformed(msg.into())
}

fn parse_poly(v: &Value, arity: usize) -> Result<MultiPoly, MouldError> {
    let terms = v.as_array().ok_or_else(|| malformed("polynomial must be an array of terms"))?;
    let mut p = MultiPoly::zero(arity);
    for t in terms {
        let pair =
            t.as_array().filter(|a| a.len() == 2).ok_or_else(|| malformed("term must be [coefficient, exponents]"))?;
        let c = match &pair[0] {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => n.as_i64().map(crate::exact::rational::int),
            _ => None,
        }
        .ok_or_else(|| malformed(format!("bad coefficient {}", pair[0])))?;
        let exps = pair[1].as_array().ok_or_else(|| malformed("exponents must be an array"))?;
        if exps.len() != arity {
            return Err(malformed(format!("exponent vector of length {} in depth {arity}", exps.len())));
        }
        let exps: Option<Vec<u16>> = exps.iter().map(|e| e.as_u64().and_then(|e| u16::try_from(e).ok())).collect();
        let exps = exps.ok_or_else(|| malformed("exponents must be small non-negative integers"))?;
        p.add_term(Monomial::new(exps), c);
    }
    Ok(p)
}

pub fn from_json(text: &str) -> Result<Mould, MouldError> {
    let v: Value = serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    from_value(&v)
}

pub fn from_value(v: &Value) -> Result<Mould, MouldError> {
    let alphabet = match v.get("alphabet").and_then(Value::as_str) {
        Some("U") => Alphabet::U,
        Some("V") => Alphabet::V,
        _ => return Err(malformed("alphabet must be \"U\" or \"V\"")),
    };
    let opt_usize = |key: &str| -> Result<Option<usize>, MouldError> {
        match v.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(x) => {
                x.as_u64().map(|n| Some(n as usize)).ok_or_else(|| malformed(format!("{key} must be an integer")))
            }
        }
    };
    let weight = opt_usize("weight")?;
    let bound = opt_usize("bound")?;
    let depths = v.get("depths").and_then(Value::as_object).ok_or_else(|| malformed("missing depths object"))?;
    let mut m = Mould::empty_with_bound(alphabet, bound).with_weight(weight);
    for (key, val) in depths {
        let r: usize = key.parse().map_err(|_| malformed(format!("bad depth key {key:?}")))?;
        if bound.is_some_and(|b| r > b) {
            return Err(malformed(format!("depth {r} beyond bound")));
        }
        let num = parse_poly(val.get("num").ok_or_else(|| malformed("missing num"))?, r)?;
        let value = match val.get("den") {
            None => RatFrac::from_poly(num),
            Some(d) => {
                let den = parse_poly(d, r)?;
                RatFrac::new(num, &den).map_err(|_| malformed(format!("zero denominator in depth {r}")))?
            }
        };
        m.set(r, value);
    }
    Ok(m)
}
