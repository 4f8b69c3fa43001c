use super::{Biquaternion, Quaternion};
use crate::error::{Error, Result};
use crate::numeric::{Complex, Scalar, Tolerance};

/// `+1` or `-1`, for the two idempotents attached to each root of -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply<S: Scalar>(self, c: Complex<S>) -> Complex<S> {
        match self {
            Sign::Plus => c,
            Sign::Minus => -c,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Checks the structural conditions for a root of -1: pure, real and
/// imaginary vector parts perpendicular, and `norm(re) - norm(im) = 1`.
pub(crate) fn structural_root_check<S: Scalar>(
    q: &Biquaternion<S>,
    tol: Tolerance,
) -> std::result::Result<(), &'static str> {
    let scale = q.scale_measure();
    if !q.w.is_zero_within(tol, scale) {
        return Err("scalar part is not zero");
    }
    let view = q.pair_view();
    let (alpha, beta) = (view.real_part.vector(), view.imag_part.vector());
    if !alpha.inner(&beta).is_negligible(tol, scale * scale) {
        return Err("real and imaginary parts are not perpendicular");
    }
    let gap = alpha.norm() - beta.norm() - S::one();
    if !gap.is_negligible(tol, scale * scale) {
        return Err("norm difference of real and imaginary parts is not 1");
    }
    Ok(())
}

/// A biquaternion root of -1.
///
/// Non-trivial roots are pure with `alpha_vec = Re(value)` perpendicular to
/// `beta_vec = Im(value)` and `norm(alpha_vec) - norm(beta_vec) = 1`. The two
/// trivial roots `+I` and `-I` are only available through [`Self::trivial`].
#[derive(Clone, Debug, PartialEq)]
pub struct RootOfMinusOne<S> {
    value: Biquaternion<S>,
    alpha_vec: Quaternion<S>,
    beta_vec: Quaternion<S>,
    trivial: bool,
}

impl<S: Scalar> RootOfMinusOne<S> {
    pub fn new(value: Biquaternion<S>, tol: Tolerance) -> Result<Self> {
        structural_root_check(&value, tol).map_err(Error::InvalidRoot)?;
        let scale = value.scale_measure();
        let residual = value.square() + Biquaternion::one();
        if !residual.is_zero_within(tol, scale * scale) {
            return Err(Error::CheckFailed("structural root does not square to -1"));
        }
        let view = value.pair_view();
        Ok(Self {
            alpha_vec: view.real_part.vector(),
            beta_vec: view.imag_part.vector(),
            value,
            trivial: false,
        })
    }

    /// `+I` or `-I`.
    pub fn trivial(sign: Sign) -> Self {
        let value = Biquaternion::from_complex(sign.apply(Complex::i()));
        let view = value.pair_view();
        Self {
            alpha_vec: view.real_part,
            beta_vec: view.imag_part,
            value,
            trivial: true,
        }
    }

    pub fn value(&self) -> &Biquaternion<S> {
        &self.value
    }

    pub fn alpha_vec(&self) -> &Quaternion<S> {
        &self.alpha_vec
    }

    pub fn beta_vec(&self) -> &Quaternion<S> {
        &self.beta_vec
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn into_value(self) -> Biquaternion<S> {
        self.value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Exact;

    #[test]
    fn accepts_real_unit() {
        let r = RootOfMinusOne::new(Biquaternion::<Exact>::unit_i(), Tolerance::exact()).unwrap();
        assert_eq!(r.alpha_vec(), &Quaternion::unit_i());
        assert!(r.beta_vec().is_zero());
        assert!(!r.is_trivial());
    }

    #[test]
    fn accepts_hyperbola_point() {
        // (5/4) i + (3/4) I j
        let q = Biquaternion::new(
            Complex::zero(),
            Complex::real(Exact::from_ratio(5, 4)),
            Complex::new(Exact::zero(), Exact::from_ratio(3, 4)),
            Complex::zero(),
        );
        assert_eq!(q.square(), -Biquaternion::one());
        assert!(RootOfMinusOne::new(q, Tolerance::exact()).is_ok());
    }

    #[test]
    fn rejects_non_roots() {
        let tol = Tolerance::exact();
        let nil = Biquaternion::<Exact>::unit_i()
            + Biquaternion::unit_j().scale(&Complex::i());
        assert!(matches!(RootOfMinusOne::new(nil, tol), Err(Error::InvalidRoot(_))));
        assert!(matches!(
            RootOfMinusOne::new(Biquaternion::<Exact>::imaginary_unit(), tol),
            Err(Error::InvalidRoot(_))
        ));
        let two_i = Biquaternion::<Exact>::unit_i().scale(&Complex::from_i64(2, 0));
        assert!(RootOfMinusOne::new(two_i, tol).is_err());
    }

    #[test]
    fn trivial_roots_square_to_minus_one() {
        for sign in [Sign::Plus, Sign::Minus] {
            let r = RootOfMinusOne::<Exact>::trivial(sign);
            assert!(r.is_trivial());
            assert_eq!(r.value().square(), -Biquaternion::one());
        }
    }
}
