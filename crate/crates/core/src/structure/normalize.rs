use crate::algebra::{Biquaternion, Quaternion};
use crate::error::{Error, NumericError, Result};
use crate::numeric::{Complex, Scalar, Tolerance};

use super::predicates::{is_nilpotent, is_pure};

fn require_zero_divisor<S: Scalar>(p: &Biquaternion<S>, tol: Tolerance) -> Result<()> {
    let scale = p.scale_measure();
    if p.is_zero_within(tol, scale) {
        return Err(Error::ZeroInput);
    }
    if !p.semi_norm().is_zero_within(tol, scale * scale) {
        return Err(Error::NotZeroDivisor);
    }
    Ok(())
}

fn require_non_pure_zero_divisor<S: Scalar>(p: &Biquaternion<S>, tol: Tolerance) -> Result<()> {
    require_zero_divisor(p, tol)?;
    if is_pure(p, tol) {
        return Err(Error::PureInput);
    }
    Ok(())
}

/// Splits a non-pure divisor of zero `p` into `alpha * q` with `alpha = 2W`
/// and `q` idempotent.
pub fn normalize_to_idempotent<S: Scalar>(
    p: &Biquaternion<S>,
    tol: Tolerance,
) -> Result<(Complex<S>, Biquaternion<S>)> {
    require_non_pure_zero_divisor(p, tol)?;
    let alpha = p.w.clone() + p.w.clone();
    let q = p.checked_div_complex(&alpha)?;
    Ok((alpha, q))
}

/// Returns `alpha = 2W` for a non-pure divisor of zero after checking
/// `p^2 = alpha * p`.
pub fn square_scaling_check<S: Scalar>(p: &Biquaternion<S>, tol: Tolerance) -> Result<Complex<S>> {
    require_non_pure_zero_divisor(p, tol)?;
    let alpha = p.w.clone() + p.w.clone();
    let scale = p.scale_measure();
    let residual = p.square() - p.scale(&alpha);
    if !residual.is_zero_within(tol, scale * scale) {
        return Err(Error::CheckFailed("p^2 differs from 2W p"));
    }
    Ok(alpha)
}

/// A nilpotent written as `modulus * (mu + I nu)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NilpotentNormalForm<S> {
    /// Unit pure quaternion along the real part.
    pub mu: Quaternion<S>,
    /// Unit pure quaternion along the imaginary part, perpendicular to `mu`.
    pub nu: Quaternion<S>,
    /// Common sum-of-squares norm of the real and imaginary parts.
    pub common_norm: S,
    /// `sqrt(common_norm)`.
    pub modulus: S,
}

impl<S: Scalar> NilpotentNormalForm<S> {
    /// `mu + I nu`.
    pub fn unit(&self) -> Biquaternion<S> {
        Biquaternion::from_pair(&self.mu, &self.nu)
    }

    pub fn recompose(&self) -> Biquaternion<S> {
        self.unit().scale(&Complex::real(self.modulus.clone()))
    }
}

/// Normalizes a nonzero nilpotent to `mu + I nu`. The exact backend needs
/// `common_norm` to be a rational square.
pub fn normalize_nilpotent<S: Scalar>(
    p: &Biquaternion<S>,
    tol: Tolerance,
) -> Result<NilpotentNormalForm<S>> {
    if p.is_zero_within(tol, p.scale_measure()) {
        return Err(Error::ZeroInput);
    }
    if !is_nilpotent(p, tol) {
        return Err(Error::NotNilpotent);
    }
    let view = p.pair_view();
    let (real, imag) = (view.real_part.vector(), view.imag_part.vector());
    let common_norm = real.norm();
    let modulus = common_norm.sqrt().map_err(|e| match e {
        NumericError::Irrational => Error::IrrationalAxis,
        other => Error::Numeric(other),
    })?;
    Ok(NilpotentNormalForm {
        mu: real.checked_div_scalar(&modulus)?,
        nu: imag.checked_div_scalar(&modulus)?,
        common_norm,
        modulus,
    })
}

/// Which part of the zero-divisor set a divisor of zero belongs to.
#[derive(Clone, Debug, PartialEq)]
pub enum ZeroDivisorDecomposition<S> {
    /// `scale * idempotent` with `scale = 2W != 0`.
    NonPure {
        scale: Complex<S>,
        idempotent: Biquaternion<S>,
    },
    /// A pure divisor of zero, which squares to zero.
    Pure { nilpotent: Biquaternion<S> },
}

impl<S: Scalar> ZeroDivisorDecomposition<S> {
    pub fn recompose(&self) -> Biquaternion<S> {
        match self {
            Self::NonPure { scale, idempotent } => idempotent.scale(scale),
            Self::Pure { nilpotent } => nilpotent.clone(),
        }
    }

    pub fn is_pure(&self) -> bool {
        matches!(self, Self::Pure { .. })
    }
}

pub fn decompose_zero_divisor<S: Scalar>(
    p: &Biquaternion<S>,
    tol: Tolerance,
) -> Result<ZeroDivisorDecomposition<S>> {
    require_zero_divisor(p, tol)?;
    if is_pure(p, tol) {
        let scale = p.scale_measure();
        if !p.square().is_zero_within(tol, scale * scale) {
            return Err(Error::CheckFailed("pure divisor of zero does not square to zero"));
        }
        return Ok(ZeroDivisorDecomposition::Pure { nilpotent: p.clone() });
    }
    let (scale, idempotent) = normalize_to_idempotent(p, tol)?;
    Ok(ZeroDivisorDecomposition::NonPure { scale, idempotent })
}
