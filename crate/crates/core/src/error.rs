use thiserror::Error;

use crate::numeric::Backend;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("result is not finite")]
    NonFinite,
    #[error("square root is not rational")]
    Irrational,
    #[error("square root of a negative real")]
    NegativeSqrt,
    #[error("`{literal}` is not a valid {backend} literal")]
    BadLiteral { literal: String, backend: Backend },
    #[error("invalid tolerance {0}")]
    InvalidTolerance(f64),
    #[error("unknown backend `{0}` (expected `exact` or `approx`)")]
    UnknownBackend(String),
    #[error("bad JSON scalar: {0}")]
    BadJson(String),
}

/// Text-grammar failure with the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("parse error at position {position}: expected {expected}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, expected: impl Into<String>) -> Self {
        Self {
            position,
            expected: expected.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid JSON biquaternion: {0}")]
    Json(String),
    #[error("semi-norm vanishes; the biquaternion is a divisor of zero and has no inverse")]
    ZeroDivisor,
    #[error("vector part squares to zero; the axis of a nilpotent direction is undefined")]
    AxisUndefined,
    #[error("vector part is zero; no axis")]
    ZeroVectorPart,
    #[error("square root needed here is not rational; use the approx backend")]
    IrrationalAxis,
    #[error("input must be non-zero")]
    ZeroInput,
    #[error("input is not a divisor of zero")]
    NotZeroDivisor,
    #[error("input is pure (zero scalar part)")]
    PureInput,
    #[error("input is not nilpotent")]
    NotNilpotent,
    #[error("frame must be two pure, perpendicular quaternions of equal nonzero norm")]
    BadFrame,
    #[error("scale factor must be non-zero")]
    ZeroScale,
    #[error("not a root of -1: {0}")]
    InvalidRoot(&'static str),
    #[error("trivial root of -1 (+I or -I) rejected without allow_trivial")]
    TrivialRoot,
    #[error("mixed scalar backends")]
    BackendMismatch,
    #[error("internal check failed: {0}")]
    CheckFailed(&'static str),
}

impl Error {
    /// Stable machine-readable name, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Numeric(_) => "NumericError",
            Error::Parse(_) => "ParseError",
            Error::Json(_) => "JsonError",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::AxisUndefined => "AxisUndefined",
            Error::ZeroVectorPart => "ZeroVectorPart",
            Error::IrrationalAxis => "IrrationalAxis",
            Error::ZeroInput => "ZeroInput",
            Error::NotZeroDivisor => "NotZeroDivisor",
            Error::PureInput => "PureInput",
            Error::NotNilpotent => "NotNilpotent",
            Error::BadFrame => "BadFrame",
            Error::ZeroScale => "ZeroScale",
            Error::InvalidRoot(_) => "InvalidRoot",
            Error::TrivialRoot => "TrivialRoot",
            Error::BackendMismatch => "BackendMismatch",
            Error::CheckFailed(_) => "CheckFailed",
        }
    }

    /// Input-side failures (bad text, bad JSON) as opposed to domain errors.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Json(_)
                | Error::BackendMismatch
                | Error::Numeric(NumericError::BadLiteral { .. })
                | Error::Numeric(NumericError::BadJson(_))
                | Error::Numeric(NumericError::UnknownBackend(_))
                | Error::Numeric(NumericError::InvalidTolerance(_))
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
