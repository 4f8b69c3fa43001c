use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Backend, Scalar, Tolerance};
use crate::error::NumericError;

/// A finite `f64`.
///
/// Arithmetic operators are the plain IEEE operations; non-finite results are
/// caught at the boundaries that can produce them (division, roots, parsing,
/// JSON) and by [`Scalar::check_finite`].
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Default)]
pub struct Approx(f64);

impl Approx {
    pub fn new(value: f64) -> Result<Self, NumericError> {
        if value.is_finite() {
            Ok(Self(value))
        } else {
            Err(NumericError::NonFinite)
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Debug formatting is the shortest round-tripping form and always
        // carries a decimal point or exponent.
        write!(f, "{:?}", self.0)
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait for Approx {
            type Output = Approx;
            #[inline]
            fn $method(self, rhs: Approx) -> Approx {
                Approx(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Approx {
    type Output = Approx;
    #[inline]
    fn neg(self) -> Approx {
        Approx(-self.0)
    }
}

/// Principal square root of `re + I im` in floating point.
pub(crate) fn principal_sqrt(re: f64, im: f64) -> (f64, f64) {
    if re == 0.0 && im == 0.0 {
        return (0.0, 0.0);
    }
    let modulus = re.hypot(im);
    if re >= 0.0 {
        let t = ((modulus + re) / 2.0).sqrt();
        (t, im / (2.0 * t))
    } else {
        let t = ((modulus - re) / 2.0).sqrt();
        // `-0.0 >= 0.0` holds, so a signed-zero imaginary part stays on the +I side.
        let y = if im >= 0.0 { t } else { -t };
        (im.abs() / (2.0 * t), y)
    }
}

impl Scalar for Approx {
    const BACKEND: Backend = Backend::Approx;

    fn zero() -> Self {
        Self(0.0)
    }

    fn one() -> Self {
        Self(1.0)
    }

    fn from_i64(value: i64) -> Self {
        Self(value as f64)
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self(numer as f64 / denom as f64)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0.0
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, NumericError> {
        if rhs.0 == 0.0 {
            return Err(NumericError::DivisionByZero);
        }
        Self::new(self.0 / rhs.0)
    }

    fn magnitude(&self) -> f64 {
        self.0.abs()
    }

    fn to_f64(&self) -> f64 {
        self.0
    }

    fn is_negligible(&self, tol: Tolerance, scale: f64) -> bool {
        self.0.abs() <= tol.epsilon() * scale
    }

    fn sqrt(&self) -> Result<Self, NumericError> {
        if self.0 < 0.0 {
            return Err(NumericError::NegativeSqrt);
        }
        Self::new(self.0.sqrt())
    }

    fn complex_sqrt(re: &Self, im: &Self) -> Result<(Self, Self), NumericError> {
        let (x, y) = principal_sqrt(re.0, im.0);
        Ok((Self::new(x)?, Self::new(y)?))
    }

    fn parse_literal(text: &str) -> Result<Self, NumericError> {
        let bad = || NumericError::BadLiteral {
            literal: text.to_string(),
            backend: Backend::Approx,
        };
        let value = match text.split_once('/') {
            Some((n, d)) => {
                let n: f64 = n.parse().map_err(|_| bad())?;
                let d: f64 = d.parse().map_err(|_| bad())?;
                if d == 0.0 {
                    return Err(NumericError::DivisionByZero);
                }
                n / d
            }
            None => text.parse().map_err(|_| bad())?,
        };
        Self::new(value)
    }

    fn check_finite(&self) -> Result<(), NumericError> {
        if self.0.is_finite() {
            Ok(())
        } else {
            Err(NumericError::NonFinite)
        }
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Number::from_f64(self.0)
            .map(serde_json::Value::Number)
            .unwrap_or(serde_json::Value::Null)
    }

    fn from_json(value: &serde_json::Value) -> Result<Self, NumericError> {
        match value {
            serde_json::Value::Number(n) => n
                .as_f64()
                .ok_or_else(|| NumericError::BadJson(format!("{n} is not representable")))
                .and_then(Self::new),
            other => Err(NumericError::BadJson(format!(
                "expected number, found {other}"
            ))),
        }
    }

    fn is_negative(&self) -> bool {
        self.0 < 0.0
    }
}
