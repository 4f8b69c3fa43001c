use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Scalar, Tolerance};
use crate::error::NumericError;

/// `re + I im` over a scalar backend. `I` is the commuting imaginary unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Complex<S> {
    pub re: S,
    pub im: S,
}

impl<S: Scalar> Complex<S> {
    pub fn new(re: S, im: S) -> Self {
        Self { re, im }
    }

    pub fn real(re: S) -> Self {
        Self { re, im: S::zero() }
    }

    pub fn zero() -> Self {
        Self::real(S::zero())
    }

    pub fn one() -> Self {
        Self::real(S::one())
    }

    /// The imaginary unit `I`.
    pub fn i() -> Self {
        Self::new(S::zero(), S::one())
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        Self::new(S::from_i64(re), S::from_i64(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Zero test under tolerance: exact backend tests exact zero, approx
    /// backend requires both parts within `epsilon * scale`.
    pub fn is_zero_within(&self, tol: Tolerance, scale: f64) -> bool {
        self.re.is_negligible(tol, scale) && self.im.is_negligible(tol, scale)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    /// `re^2 + im^2`.
    pub fn modulus_squared(&self) -> S {
        self.re.square() + self.im.square()
    }

    /// `|re| + |im|`, the per-component contribution to tolerance scales.
    pub fn magnitude(&self) -> f64 {
        self.re.magnitude() + self.im.magnitude()
    }

    pub fn scale_real(&self, k: &S) -> Self {
        Self::new(self.re.clone() * k.clone(), self.im.clone() * k.clone())
    }

    pub fn checked_inv(&self) -> Result<Self, NumericError> {
        let d = self.modulus_squared();
        if d.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Self::new(self.re.checked_div(&d)?, (-self.im.clone()).checked_div(&d)?))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, NumericError> {
        Ok(self.clone() * rhs.checked_inv()?)
    }

    /// Principal square root; see [`Scalar::complex_sqrt`].
    pub fn sqrt_principal(&self) -> Result<Self, NumericError> {
        S::complex_sqrt(&self.re, &self.im).map(|(re, im)| Self::new(re, im))
    }

    pub fn check_finite(&self) -> Result<(), NumericError> {
        self.re.check_finite()?;
        self.im.check_finite()
    }
}

impl<S: Scalar> Add for Complex<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<S: Scalar> Sub for Complex<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<S: Scalar> Mul for Complex<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        Self::new(re, im)
    }
}

impl<S: Scalar> Neg for Complex<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl<S: Scalar> fmt::Display for Complex<S> {
    /// `(a+bI)` with the sign of `b` pulled out.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let negative_zero = self.im.is_zero() && self.im.to_f64().is_sign_negative();
        let (sign, im) = if self.im.is_negative() || negative_zero {
            ('-', -self.im.clone())
        } else {
            ('+', self.im.clone())
        };
        write!(f, "({}{}{}I)", self.re, sign, im)
    }
}
