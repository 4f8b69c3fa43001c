//! JSON form: `{"backend": "exact"|"approx", "W": [re, im], "X": .., "Y": .., "Z": ..}`.
//!
//! Exact components are strings `"p/q"`; approx components are numbers.

use serde_json::{json, Map, Value};

use super::Biquaternion;
use crate::error::{Error, Result};
use crate::numeric::{Backend, Complex, Scalar};

const KEYS: [&str; 4] = ["W", "X", "Y", "Z"];

pub fn to_json<S: Scalar>(q: &Biquaternion<S>) -> Value {
    let mut map = Map::new();
    map.insert("backend".into(), json!(S::BACKEND.as_str()));
    for (key, c) in KEYS.iter().zip(q.components()) {
        map.insert((*key).into(), json!([c.re.to_json(), c.im.to_json()]));
    }
    Value::Object(map)
}

/// Reads the `backend` field without decoding the components.
pub fn json_backend(value: &Value) -> Result<Backend> {
    let name = value
        .get("backend")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Json("missing string field `backend`".into()))?;
    Ok(name.parse()?)
}

pub fn from_json<S: Scalar>(value: &Value) -> Result<Biquaternion<S>> {
    if !value.is_object() {
        return Err(Error::Json("expected an object".into()));
    }
    if json_backend(value)? != S::BACKEND {
        return Err(Error::BackendMismatch);
    }
    let component = |key: &str| -> Result<Complex<S>> {
        let pair = value
            .get(key)
            .and_then(Value::as_array)
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Json(format!("field `{key}` must be a [re, im] pair")))?;
        Ok(Complex::new(S::from_json(&pair[0])?, S::from_json(&pair[1])?))
    };
    Ok(Biquaternion::new(
        component("W")?,
        component("X")?,
        component("Y")?,
        component("Z")?,
    ))
}

pub fn from_json_str<S: Scalar>(text: &str) -> Result<Biquaternion<S>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    from_json(&value)
}
