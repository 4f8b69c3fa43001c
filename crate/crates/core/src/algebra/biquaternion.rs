use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::quaternion::{hamilton, Quaternion};
use crate::error::{Error, NumericError, Result};
use crate::numeric::{Complex, Scalar, Tolerance};

/// A biquaternion `W + X i + Y j + Z k` with complex coefficients.
///
/// The complex unit `I` commutes with `i, j, k`, so scaling by a complex
/// number is central.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Biquaternion<S> {
    pub w: Complex<S>,
    pub x: Complex<S>,
    pub y: Complex<S>,
    pub z: Complex<S>,
}

/// `q = q_r + I q_i`: a biquaternion as a pair of real quaternions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionPairView<S> {
    pub real_part: Quaternion<S>,
    pub imag_part: Quaternion<S>,
}

impl<S: Scalar> QuaternionPairView<S> {
    pub fn assemble(&self) -> Biquaternion<S> {
        Biquaternion::from_pair(&self.real_part, &self.imag_part)
    }
}

/// `q = A + axis * B` with `A, B` complex and `axis` a pure root of -1.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarAxisForm<S> {
    /// `A`, the complex scalar part, equal to `W`.
    pub scalar: Complex<S>,
    /// `B`, the principal square root of `X^2 + Y^2 + Z^2`.
    pub modulus: Complex<S>,
    pub axis: Biquaternion<S>,
}

impl<S: Scalar> ScalarAxisForm<S> {
    pub fn recompose(&self) -> Biquaternion<S> {
        Biquaternion::from_complex(self.scalar.clone()) + self.axis.scale(&self.modulus)
    }
}

impl<S: Scalar> Biquaternion<S> {
    pub fn new(w: Complex<S>, x: Complex<S>, y: Complex<S>, z: Complex<S>) -> Self {
        Self { w, x, y, z }
    }

    pub fn zero() -> Self {
        Self::from_complex(Complex::zero())
    }

    pub fn one() -> Self {
        Self::from_complex(Complex::one())
    }

    pub fn from_complex(w: Complex<S>) -> Self {
        Self::new(w, Complex::zero(), Complex::zero(), Complex::zero())
    }

    /// The commuting imaginary unit `I` as a biquaternion.
    pub fn imaginary_unit() -> Self {
        Self::from_complex(Complex::i())
    }

    pub fn unit_i() -> Self {
        Self::from_real(&Quaternion::unit_i())
    }

    pub fn unit_j() -> Self {
        Self::from_real(&Quaternion::unit_j())
    }

    pub fn unit_k() -> Self {
        Self::from_real(&Quaternion::unit_k())
    }

    pub fn from_real(q: &Quaternion<S>) -> Self {
        Self::from_pair(q, &Quaternion::zero())
    }

    /// `q_r + I q_i`.
    pub fn from_pair(real: &Quaternion<S>, imag: &Quaternion<S>) -> Self {
        let c = |re: &S, im: &S| Complex::new(re.clone(), im.clone());
        Self::new(
            c(&real.w, &imag.w),
            c(&real.x, &imag.x),
            c(&real.y, &imag.y),
            c(&real.z, &imag.z),
        )
    }

    pub fn components(&self) -> [&Complex<S>; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    fn from_array([w, x, y, z]: [Complex<S>; 4]) -> Self {
        Self::new(w, x, y, z)
    }

    fn map(&self, f: impl Fn(&Complex<S>) -> Complex<S>) -> Self {
        Self::new(f(&self.w), f(&self.x), f(&self.y), f(&self.z))
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    /// The complex scalar part `W`.
    pub fn scalar_part(&self) -> &Complex<S> {
        &self.w
    }

    /// `X i + Y j + Z k`.
    pub fn vector_part(&self) -> Self {
        Self::new(Complex::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    /// `X^2 + Y^2 + Z^2`.
    pub fn vector_square_sum(&self) -> Complex<S> {
        self.x.square() + self.y.square() + self.z.square()
    }

    /// Multiplication by a complex scalar (central, so side does not matter).
    pub fn scale(&self, c: &Complex<S>) -> Self {
        self.map(|v| c.clone() * v.clone())
    }

    pub fn checked_div_complex(&self, c: &Complex<S>) -> Result<Self> {
        let inv = c.checked_inv()?;
        let out = self.scale(&inv);
        out.check_finite()?;
        Ok(out)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Quaternion conjugate `W - X i - Y j - Z k`.
    pub fn conjugate(&self) -> Self {
        Self::new(
            self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    /// Complex conjugate of every component (`I -> -I`).
    pub fn complex_conjugate(&self) -> Self {
        self.map(Complex::conj)
    }

    /// `W^2 + X^2 + Y^2 + Z^2`, which equals `q * conjugate(q)`.
    pub fn semi_norm(&self) -> Complex<S> {
        self.w.square() + self.vector_square_sum()
    }

    pub fn pair_view(&self) -> QuaternionPairView<S> {
        let re = |c: &Complex<S>| c.re.clone();
        let im = |c: &Complex<S>| c.im.clone();
        QuaternionPairView {
            real_part: Quaternion::new(re(&self.w), re(&self.x), re(&self.y), re(&self.z)),
            imag_part: Quaternion::new(im(&self.w), im(&self.x), im(&self.y), im(&self.z)),
        }
    }

    /// `max(1, sum of |re| + |im| over the four components)`.
    pub fn scale_measure(&self) -> f64 {
        let total: f64 = self.components().iter().map(|c| c.magnitude()).sum();
        total.max(1.0)
    }

    /// Zero test of every component at the given scale.
    pub fn is_zero_within(&self, tol: Tolerance, scale: f64) -> bool {
        self.components().iter().all(|c| c.is_zero_within(tol, scale))
    }

    pub fn check_finite(&self) -> Result<(), NumericError> {
        for c in self.components() {
            c.check_finite()?;
        }
        Ok(())
    }

    /// `conjugate(q) / semi_norm(q)`.
    pub fn inverse(&self, tol: Tolerance) -> Result<Self> {
        let scale = self.scale_measure();
        let norm = self.semi_norm();
        if norm.is_zero_within(tol, scale * scale) {
            return Err(Error::ZeroDivisor);
        }
        self.conjugate().checked_div_complex(&norm)
    }

    /// Splits `q` into `A + axis * B`.
    ///
    /// `B` is the principal square root of `X^2 + Y^2 + Z^2`. The exact
    /// backend only succeeds when that root is a rational complex number.
    pub fn scalar_axis_form(&self, tol: Tolerance) -> Result<ScalarAxisForm<S>> {
        let scale = self.scale_measure();
        let vector = self.vector_part();
        if vector.is_zero_within(tol, scale) {
            return Err(Error::ZeroVectorPart);
        }
        let squares = self.vector_square_sum();
        if squares.is_zero_within(tol, scale * scale) {
            return Err(Error::AxisUndefined);
        }
        let modulus = squares.sqrt_principal().map_err(|e| match e {
            NumericError::Irrational => Error::IrrationalAxis,
            other => Error::Numeric(other),
        })?;
        let axis = vector.checked_div_complex(&modulus)?;
        Ok(ScalarAxisForm {
            scalar: self.w.clone(),
            modulus,
            axis,
        })
    }

    /// `(A, B)` without the axis. `B` is reported as zero whenever
    /// `X^2 + Y^2 + Z^2` vanishes, which covers both a zero vector part and
    /// the nilpotent direction.
    pub fn scalar_and_modulus(&self, tol: Tolerance) -> Result<(Complex<S>, Complex<S>)> {
        let scale = self.scale_measure();
        let squares = self.vector_square_sum();
        if squares.is_zero_within(tol, scale * scale) {
            return Ok((self.w.clone(), Complex::zero()));
        }
        let modulus = squares.sqrt_principal().map_err(|e| match e {
            NumericError::Irrational => Error::IrrationalAxis,
            other => Error::Numeric(other),
        })?;
        Ok((self.w.clone(), modulus))
    }
}

impl<S: Scalar> Add for Biquaternion<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<S: Scalar> Sub for Biquaternion<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl<S: Scalar> Neg for Biquaternion<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<S: Scalar> Mul for &Biquaternion<S> {
    type Output = Biquaternion<S>;
    fn mul(self, rhs: Self) -> Biquaternion<S> {
        Biquaternion::from_array(hamilton(self.components(), rhs.components()))
    }
}

impl<S: Scalar> Mul for Biquaternion<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<S: Scalar> From<Quaternion<S>> for Biquaternion<S> {
    fn from(q: Quaternion<S>) -> Self {
        Self::from_real(&q)
    }
}

impl<S: Scalar> From<Complex<S>> for Biquaternion<S> {
    fn from(c: Complex<S>) -> Self {
        Self::from_complex(c)
    }
}

impl<S: Scalar> fmt::Display for Biquaternion<S> {
    /// Canonical text form `(a+bI) + (c+dI)i + (e+fI)j + (g+hI)k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}
