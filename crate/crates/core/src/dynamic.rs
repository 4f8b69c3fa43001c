//! Backend chosen at run time, for front ends that read text or JSON.

use std::fmt;

use serde_json::Value;

use crate::algebra::{json, parse, Biquaternion, Quaternion};
use crate::error::{Error, Result};
use crate::numeric::{Approx, Backend, Complex, Exact, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum AnyBiquaternion {
    Exact(Biquaternion<Exact>),
    Approx(Biquaternion<Approx>),
}

/// Runs a backend-generic expression on either variant.
#[macro_export]
macro_rules! with_backend {
    ($value:expr, $q:ident => $body:expr) => {
        match $value {
            $crate::dynamic::AnyBiquaternion::Exact($q) => $body,
            $crate::dynamic::AnyBiquaternion::Approx($q) => $body,
        }
    };
}

impl AnyBiquaternion {
    pub fn backend(&self) -> Backend {
        match self {
            AnyBiquaternion::Exact(_) => Backend::Exact,
            AnyBiquaternion::Approx(_) => Backend::Approx,
        }
    }

    /// Parses text; with no explicit backend, decimals select approx.
    pub fn parse(text: &str, backend: Option<Backend>) -> Result<Self> {
        match backend.unwrap_or_else(|| parse::literal_backend(text)) {
            Backend::Exact => Ok(AnyBiquaternion::Exact(parse::parse(text)?)),
            Backend::Approx => Ok(AnyBiquaternion::Approx(parse::parse(text)?)),
        }
    }

    /// Decodes the JSON form; the document's `backend` field decides, and an
    /// exact document may be read into the approx backend.
    pub fn from_json(value: &Value, backend: Option<Backend>) -> Result<Self> {
        let declared = json::json_backend(value)?;
        let parsed = match declared {
            Backend::Exact => AnyBiquaternion::Exact(json::from_json(value)?),
            Backend::Approx => AnyBiquaternion::Approx(json::from_json(value)?),
        };
        match backend {
            Some(target) => parsed.into_backend(target),
            None => Ok(parsed),
        }
    }

    /// Text or JSON (leading `{`).
    pub fn read(input: &str, backend: Option<Backend>) -> Result<Self> {
        let trimmed = input.trim();
        if trimmed.starts_with('{') {
            let value: Value =
                serde_json::from_str(trimmed).map_err(|e| Error::Json(e.to_string()))?;
            Self::from_json(&value, backend)
        } else {
            Self::parse(trimmed, backend)
        }
    }

    pub fn to_json(&self) -> Value {
        with_backend!(self, q => json::to_json(q))
    }

    /// Converts to another backend; approx to exact is refused.
    pub fn into_backend(self, target: Backend) -> Result<Self> {
        match (self, target) {
            (q @ AnyBiquaternion::Exact(_), Backend::Exact) => Ok(q),
            (q @ AnyBiquaternion::Approx(_), Backend::Approx) => Ok(q),
            (AnyBiquaternion::Exact(q), Backend::Approx) => Ok(AnyBiquaternion::Approx(to_approx(&q)?)),
            (AnyBiquaternion::Approx(_), Backend::Exact) => Err(Error::BackendMismatch),
        }
    }
}

impl fmt::Display for AnyBiquaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        with_backend!(self, q => q.fmt(f))
    }
}

impl From<Biquaternion<Exact>> for AnyBiquaternion {
    fn from(q: Biquaternion<Exact>) -> Self {
        AnyBiquaternion::Exact(q)
    }
}

impl From<Biquaternion<Approx>> for AnyBiquaternion {
    fn from(q: Biquaternion<Approx>) -> Self {
        AnyBiquaternion::Approx(q)
    }
}

pub fn exact_to_approx(v: &Exact) -> Result<Approx> {
    Ok(Approx::new(v.to_f64())?)
}

fn complex_to_approx(c: &Complex<Exact>) -> Result<Complex<Approx>> {
    Ok(Complex::new(exact_to_approx(&c.re)?, exact_to_approx(&c.im)?))
}

/// Nearest-float image of an exact biquaternion.
pub fn to_approx(q: &Biquaternion<Exact>) -> Result<Biquaternion<Approx>> {
    Ok(Biquaternion::new(
        complex_to_approx(&q.w)?,
        complex_to_approx(&q.x)?,
        complex_to_approx(&q.y)?,
        complex_to_approx(&q.z)?,
    ))
}

pub fn quaternion_to_approx(q: &Quaternion<Exact>) -> Result<Quaternion<Approx>> {
    Ok(Quaternion::new(
        exact_to_approx(&q.w)?,
        exact_to_approx(&q.x)?,
        exact_to_approx(&q.y)?,
        exact_to_approx(&q.z)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_detects_backend() {
        assert_eq!(AnyBiquaternion::parse("1 + Ii", None).unwrap().backend(), Backend::Exact);
        assert_eq!(AnyBiquaternion::parse("1.5 + Ii", None).unwrap().backend(), Backend::Approx);
        assert_eq!(
            AnyBiquaternion::parse("1 + Ii", Some(Backend::Approx)).unwrap().backend(),
            Backend::Approx
        );
        assert!(AnyBiquaternion::parse("1.5", Some(Backend::Exact)).is_err());
    }

    #[test]
    fn reads_json_and_text() {
        let q = AnyBiquaternion::read("i + Ij", None).unwrap();
        let text = q.to_json().to_string();
        assert_eq!(AnyBiquaternion::read(&text, None).unwrap(), q);
        let approx = AnyBiquaternion::read(&text, Some(Backend::Approx)).unwrap();
        assert_eq!(approx.to_string(), "(0.0+0.0I) + (1.0+0.0I)i + (0.0+1.0I)j + (0.0+0.0I)k");
        assert_eq!(approx.clone().into_backend(Backend::Exact), Err(Error::BackendMismatch));
    }
}
