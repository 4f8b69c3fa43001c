use crate::algebra::{Biquaternion, Quaternion, RootOfMinusOne, Sign};
use crate::error::{Error, Result};
use crate::numeric::{Complex, Scalar, Tolerance};

/// `1/2 + sign * (1/2) * xi * I`.
///
/// The trivial roots `+I`/`-I` give the trivial idempotents `0`/`1` and are
/// rejected unless `allow_trivial` is set.
pub fn make_idempotent<S: Scalar>(
    xi: &RootOfMinusOne<S>,
    sign: Sign,
    allow_trivial: bool,
) -> Result<Biquaternion<S>> {
    if xi.is_trivial() && !allow_trivial {
        return Err(Error::TrivialRoot);
    }
    let half = Complex::real(S::half());
    let coefficient = sign.apply(half.clone() * Complex::i());
    Ok(Biquaternion::from_complex(half) + xi.value().scale(&coefficient))
}

/// `scale * (mu + I nu)` for pure, perpendicular `mu`, `nu` of equal nonzero
/// norm. Squares to zero.
pub fn make_nilpotent<S: Scalar>(
    mu: &Quaternion<S>,
    nu: &Quaternion<S>,
    scale: &Complex<S>,
    tol: Tolerance,
) -> Result<Biquaternion<S>> {
    let s = (mu.magnitude() + nu.magnitude()).max(1.0);
    let quad = s * s;
    let pure = mu.w.is_negligible(tol, s) && nu.w.is_negligible(tol, s);
    let mu_norm = mu.norm();
    let equal = (mu_norm.clone() - nu.norm()).is_negligible(tol, quad);
    let nonzero = !mu_norm.is_negligible(tol, quad);
    let perpendicular = mu.inner(nu).is_negligible(tol, quad);
    if !(pure && equal && nonzero && perpendicular) {
        return Err(Error::BadFrame);
    }
    if scale.is_zero_within(tol, 1.0) {
        return Err(Error::ZeroScale);
    }
    Ok(Biquaternion::from_pair(mu, nu).scale(scale))
}

/// `alpha * make_idempotent(xi, sign)`, a non-pure divisor of zero.
pub fn make_zero_divisor<S: Scalar>(
    alpha: &Complex<S>,
    xi: &RootOfMinusOne<S>,
    sign: Sign,
) -> Result<Biquaternion<S>> {
    if alpha.is_zero() {
        return Err(Error::ZeroScale);
    }
    Ok(make_idempotent(xi, sign, false)?.scale(alpha))
}
