//! Biquaternion algebra with exact divisor-of-zero theory.
//!
//! Biquaternions `W + X i + Y j + Z k` with complex `W, X, Y, Z` over an
//! exact rational or an `f64` backend, together with the classification of
//! their divisors of zero into scaled idempotents and nilpotents.
//!
//! ```
//! use bqalg::prelude::*;
//!
//! let q: Biquaternion<Exact> = parse("i + Ij").unwrap();
//! assert!(q.square().is_zero());
//! assert_eq!(classify(&q, Tolerance::exact()), Classification::Nilpotent);
//! ```

pub mod algebra;
pub mod dynamic;
pub mod error;
pub mod numeric;
pub mod structure;
pub mod verify;

pub use error::{Error, NumericError, ParseError, Result};

pub mod prelude {
    pub use crate::algebra::json::{from_json, to_json};
    pub use crate::algebra::parse::{format, parse};
    pub use crate::algebra::{
        Biquaternion, Quaternion, QuaternionPairView, RootOfMinusOne, ScalarAxisForm, Sign,
    };
    pub use crate::dynamic::AnyBiquaternion;
    pub use crate::error::{Error, Result};
    pub use crate::numeric::{Approx, Backend, Complex, Exact, Scalar, Tolerance};
    pub use crate::structure::*;
    pub use crate::verify::{run_verification, TheoremId, VerifyReport};
}
