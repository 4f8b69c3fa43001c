use std::fmt;

use crate::algebra::{structural_root_check, Biquaternion};
use crate::error::{Error, Result};
use crate::numeric::{Backend, Scalar, Tolerance};

// Approx-backend tolerance: linear quantities (components, W) are compared
// at `scale`, quadratic ones (semi-norm, squares, inner products) at
// `scale^2`, where `scale` is `Biquaternion::scale_measure`.

fn quadratic_scale<S: Scalar>(q: &Biquaternion<S>) -> f64 {
    let s = q.scale_measure();
    s * s
}

fn ensure_nonzero<S: Scalar>(q: &Biquaternion<S>, tol: Tolerance) -> Result<()> {
    if q.is_zero_within(tol, q.scale_measure()) {
        Err(Error::ZeroInput)
    } else {
        Ok(())
    }
}

/// `W = 0`.
pub fn is_pure<S: Scalar>(q: &Biquaternion<S>, tol: Tolerance) -> bool {
    q.w.is_zero_within(tol, q.scale_measure())
}

/// Divisor-of-zero test by the vanishing semi-norm `W^2 + X^2 + Y^2 + Z^2`.
pub fn is_zero_divisor<S: Scalar>(q: &Biquaternion<S>, tol: Tolerance) -> Result<bool> {
    ensure_nonzero(q, tol)?;
    Ok(q.semi_norm().is_zero_within(tol, quadratic_scale(q)))
}

/// Divisor-of-zero test on the pair `q_r + I q_i`: equal norms and
/// perpendicular parts.
pub fn is_zero_divisor_hamilton<S: Scalar>(q: &Biquaternion<S>, tol: Tolerance) -> Result<bool> {
    ensure_nonzero(q, tol)?;
    let scale = quadratic_scale(q);
    let view = q.pair_view();
    let equal_norms = (view.real_part.norm() - view.imag_part.norm()).is_negligible(tol, scale);
    let perpendicular = view.real_part.inner(&view.imag_part).is_negligible(tol, scale);
    Ok(equal_norms && perpendicular)
}

/// `q^2 = q`. Includes the trivial idempotents `0` and `1`.
pub fn is_idempotent<S: Scalar>(q: &Biquaternion<S>, tol: Tolerance) -> bool {
    (q.square() - q.clone()).is_zero_within(tol, quadratic_scale(q))
}

/// `W = 0` and `X^2 + Y^2 + Z^2 = 0`. Includes `0`.
pub fn is_nilpotent<S: Scalar>(q: &Biquaternion<S>, tol: Tolerance) -> bool {
    let by_components = is_pure(q, tol) && q.vector_square_sum().is_zero_within(tol, quadratic_scale(q));
    if S::BACKEND == Backend::Exact {
        debug_assert_eq!(by_components, q.square().is_zero(), "nilpotency criteria disagree on {q}");
    }
    by_components
}

fn is_trivial_root<S: Scalar>(q: &Biquaternion<S>) -> bool {
    q.vector_part().is_zero() && q.w.re.is_zero() && q.w.im.square() == S::one()
}

/// `q^2 = -1`, cross-checked on the exact backend against the structural
/// conditions (pure, perpendicular parts, norm difference 1). The trivial
/// roots `+I` and `-I` square to -1 without being pure.
pub fn is_root_of_minus_one<S: Scalar>(q: &Biquaternion<S>, tol: Tolerance) -> bool {
    let by_square = (q.square() + Biquaternion::one()).is_zero_within(tol, quadratic_scale(q));
    if S::BACKEND == Backend::Exact {
        let structural = structural_root_check(q, tol).is_ok();
        debug_assert!(
            by_square == structural || (by_square && is_trivial_root(q)),
            "root-of-minus-one criteria disagree on {q}"
        );
    }
    by_square
}

/// Finest class of a biquaternion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Zero,
    /// `q = 1`; `0` is tagged [`Classification::Zero`].
    TrivialIdempotent,
    Idempotent,
    Nilpotent,
    NonPureZeroDivisor,
    Invertible,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Zero => "Zero",
            Classification::TrivialIdempotent => "TrivialIdempotent",
            Classification::Idempotent => "Idempotent",
            Classification::Nilpotent => "Nilpotent",
            Classification::NonPureZeroDivisor => "NonPureZeroDivisor",
            Classification::Invertible => "Invertible",
        }
    }

    pub fn is_zero_divisor(self) -> bool {
        matches!(
            self,
            Classification::Idempotent | Classification::Nilpotent | Classification::NonPureZeroDivisor
        )
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Most-specific-first: zero, one, nilpotent, idempotent, other divisor of
/// zero, invertible.
pub fn classify<S: Scalar>(q: &Biquaternion<S>, tol: Tolerance) -> Classification {
    let scale = q.scale_measure();
    if q.is_zero_within(tol, scale) {
        return Classification::Zero;
    }
    if (q.clone() - Biquaternion::one()).is_zero_within(tol, scale) {
        return Classification::TrivialIdempotent;
    }
    let null_norm = q.semi_norm().is_zero_within(tol, scale * scale);
    if null_norm && is_pure(q, tol) {
        return Classification::Nilpotent;
    }
    if is_idempotent(q, tol) {
        return Classification::Idempotent;
    }
    if null_norm {
        return Classification::NonPureZeroDivisor;
    }
    Classification::Invertible
}
