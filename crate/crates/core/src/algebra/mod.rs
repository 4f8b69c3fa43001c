//! Quaternions, biquaternions and their representations.

mod biquaternion;
pub mod json;
pub mod parse;
mod quaternion;
mod root;

pub use biquaternion::{Biquaternion, QuaternionPairView, ScalarAxisForm};
pub use quaternion::Quaternion;
pub use root::{RootOfMinusOne, Sign};

pub(crate) use root::structural_root_check;
