//! Scalar backends.
//!
//! Everything above this module is generic over [`Scalar`]. Two backends are
//! provided: [`Exact`] (reduced arbitrary-precision rationals, no radicals) and
//! [`Approx`] (finite `f64`). Complex numbers over either backend live in
//! [`Complex`].

mod approx;
mod complex;
mod exact;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

pub use approx::Approx;
pub use complex::Complex;
pub use exact::Exact;

use crate::error::NumericError;

/// Which arithmetic a value is computed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Exact,
    Approx,
}

impl Backend {
    pub fn as_str(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Approx => "approx",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Backend {
    type Err = NumericError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Backend::Exact),
            "approx" => Ok(Backend::Approx),
            other => Err(NumericError::UnknownBackend(other.to_string())),
        }
    }
}

/// Zero-test threshold.
///
/// Under the approx backend a quantity `v` counts as zero when
/// `|v| <= epsilon * scale`. The exact backend ignores `epsilon` and always
/// tests for exact zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    epsilon: f64,
}

impl Tolerance {
    pub const DEFAULT_APPROX_EPSILON: f64 = 1e-9;

    pub fn new(epsilon: f64) -> Result<Self, NumericError> {
        if !epsilon.is_finite() || epsilon < 0.0 {
            return Err(NumericError::InvalidTolerance(epsilon));
        }
        Ok(Self { epsilon })
    }

    pub const fn exact() -> Self {
        Self { epsilon: 0.0 }
    }

    pub const fn approx() -> Self {
        Self {
            epsilon: Self::DEFAULT_APPROX_EPSILON,
        }
    }

    /// Default tolerance for a backend: `0` for exact, `1e-9` for approx.
    pub const fn for_backend(backend: Backend) -> Self {
        match backend {
            Backend::Exact => Self::exact(),
            Backend::Approx => Self::approx(),
        }
    }

    /// Validates an explicit epsilon against a backend. A nonzero epsilon is
    /// meaningless for the exact backend and is rejected.
    pub fn checked_for(backend: Backend, epsilon: f64) -> Result<Self, NumericError> {
        let tol = Self::new(epsilon)?;
        if backend == Backend::Exact && epsilon != 0.0 {
            return Err(NumericError::InvalidTolerance(epsilon));
        }
        Ok(tol)
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

/// A real scalar field used as the coefficient type of complex numbers,
/// quaternions and biquaternions.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(value: i64) -> Self;

    /// `numer / denom`; `denom` must be nonzero.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    /// Exact comparison with zero, regardless of tolerance.
    fn is_zero(&self) -> bool;

    fn checked_div(&self, rhs: &Self) -> Result<Self, NumericError>;

    /// `|self|` as a float, used only to build tolerance scales.
    fn magnitude(&self) -> f64;

    fn to_f64(&self) -> f64;

    /// Zero test under a tolerance and a scale (`scale >= 1`).
    fn is_negligible(&self, tol: Tolerance, scale: f64) -> bool;

    /// Nonnegative square root. The exact backend only succeeds on perfect
    /// rational squares.
    fn sqrt(&self) -> Result<Self, NumericError>;

    /// Principal square root of `re + I im`: real part positive, or zero with
    /// a nonnegative imaginary part.
    fn complex_sqrt(re: &Self, im: &Self) -> Result<(Self, Self), NumericError>;

    /// Parses a single unsigned numeric literal as produced by the lexer.
    fn parse_literal(text: &str) -> Result<Self, NumericError>;

    fn check_finite(&self) -> Result<(), NumericError>;

    fn to_json(&self) -> serde_json::Value;
    fn from_json(value: &serde_json::Value) -> Result<Self, NumericError>;

    fn half() -> Self {
        Self::from_ratio(1, 2)
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn is_negative(&self) -> bool;
}
