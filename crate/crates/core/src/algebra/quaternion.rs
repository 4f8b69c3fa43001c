use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::NumericError;
use crate::numeric::{Scalar, Tolerance};

/// Hamilton product of two 4-tuples over any ring-like coefficient type.
/// Shared by real quaternions and biquaternions; the coefficients are assumed
/// to commute with the units `i, j, k`.
pub(crate) fn hamilton<T>(a: [&T; 4], b: [&T; 4]) -> [T; 4]
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let m = |p: &T, q: &T| p.clone() * q.clone();
    let [a0, a1, a2, a3] = a;
    let [b0, b1, b2, b3] = b;
    [
        m(a0, b0) - m(a1, b1) - m(a2, b2) - m(a3, b3),
        m(a0, b1) + m(a1, b0) + m(a2, b3) - m(a3, b2),
        m(a0, b2) - m(a1, b3) + m(a2, b0) + m(a3, b1),
        m(a0, b3) + m(a1, b2) - m(a2, b1) + m(a3, b0),
    ]
}

/// A real quaternion `w + x i + y j + z k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quaternion<S> {
    pub w: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Quaternion<S> {
    pub fn new(w: S, x: S, y: S, z: S) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_i64(w: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(S::from_i64(w), S::from_i64(x), S::from_i64(y), S::from_i64(z))
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn one() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::zero())
    }

    pub fn unit_i() -> Self {
        Self::new(S::zero(), S::one(), S::zero(), S::zero())
    }

    pub fn unit_j() -> Self {
        Self::new(S::zero(), S::zero(), S::one(), S::zero())
    }

    pub fn unit_k() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::one())
    }

    pub fn components(&self) -> [&S; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    fn from_array([w, x, y, z]: [S; 4]) -> Self {
        Self::new(w, x, y, z)
    }

    fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self::new(f(&self.w), f(&self.x), f(&self.y), f(&self.z))
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn is_pure(&self) -> bool {
        self.w.is_zero()
    }

    /// The vector part `x i + y j + z k`.
    pub fn vector(&self) -> Self {
        Self::new(S::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// Sum of squares `w^2 + x^2 + y^2 + z^2` (no square root).
    pub fn norm(&self) -> S {
        self.inner(self)
    }

    /// 4-space dot product.
    pub fn inner(&self, other: &Self) -> S {
        self.w.clone() * other.w.clone()
            + self.x.clone() * other.x.clone()
            + self.y.clone() * other.y.clone()
            + self.z.clone() * other.z.clone()
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map(|c| c.clone() * k.clone())
    }

    pub fn checked_div_scalar(&self, k: &S) -> Result<Self, NumericError> {
        Ok(Self::new(
            self.w.checked_div(k)?,
            self.x.checked_div(k)?,
            self.y.checked_div(k)?,
            self.z.checked_div(k)?,
        ))
    }

    pub fn checked_inverse(&self) -> Result<Self, NumericError> {
        self.conjugate().checked_div_scalar(&self.norm())
    }

    pub fn magnitude(&self) -> f64 {
        self.components().iter().map(|c| c.magnitude()).sum()
    }

    pub fn is_zero_within(&self, tol: Tolerance, scale: f64) -> bool {
        self.components().iter().all(|c| c.is_negligible(tol, scale))
    }
}

impl<S: Scalar> Add for Quaternion<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<S: Scalar> Sub for Quaternion<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl<S: Scalar> Neg for Quaternion<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<S: Scalar> Mul for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, rhs: Self) -> Quaternion<S> {
        Quaternion::from_array(hamilton(self.components(), rhs.components()))
    }
}

impl<S: Scalar> Mul for Quaternion<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<S: Scalar> fmt::Display for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}
