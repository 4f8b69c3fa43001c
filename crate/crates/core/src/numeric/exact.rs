use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Backend, Scalar, Tolerance};
use crate::error::NumericError;

/// Reduced arbitrary-precision rational.
///
/// Values whose numerator and denominator fit in `i64` live inline and use
/// 128-bit intermediates; anything larger is promoted to a `BigRational`.
/// The representation is canonical (small whenever it fits, lowest terms,
/// positive denominator), so structural equality is numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exact(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Small { n: i64, d: i64 },
    Big(BigRational),
}

impl Exact {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, NumericError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Self::from_rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_rational(value: BigRational) -> Self {
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(n), Some(d)) => Self(Repr::Small { n, d }),
            _ => Self(Repr::Big(value)),
        }
    }

    pub fn to_rational(&self) -> BigRational {
        match &self.0 {
            Repr::Small { n, d } => BigRational::new_raw((*n).into(), (*d).into()),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { n, .. } => (*n).into(),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { d, .. } => (*d).into(),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    /// `n / d` with `d != 0`, reduced.
    fn from_wide(n: i128, d: i128) -> Self {
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            // |d| >= 1 and d came from a product of i64s, so negation is safe.
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Self(Repr::Small { n, d }),
            _ => Self(Repr::Big(BigRational::new_raw(n.into(), d.into()))),
        }
    }

    fn big(&self, other: &Self, op: impl FnOnce(BigRational, BigRational) -> BigRational) -> Self {
        Self::from_rational(op(self.to_rational(), other.to_rational()))
    }
}

impl From<i64> for Exact {
    fn from(value: i64) -> Self {
        Self(Repr::Small { n: value, d: 1 })
    }
}

impl PartialOrd for Exact {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exact {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { n: a, d: b }, Repr::Small { n: c, d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_rational().cmp(&other.to_rational()),
        }
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { n, d: 1 } => write!(f, "{n}"),
            Repr::Small { n, d } => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

fn add_small(a: i64, b: i64, c: i64, d: i64, negate: bool) -> Option<Exact> {
    let (a, b, c, d) = (a as i128, b as i128, c as i128, d as i128);
    let c = if negate { -c } else { c };
    if b == d {
        // Common denominator, including the integer case.
        return Some(Exact::from_wide(a.checked_add(c)?, b));
    }
    Some(Exact::from_wide((a * d).checked_add(c * b)?, b * d))
}

impl Add for Exact {
    type Output = Exact;
    #[inline]
    fn add(self, rhs: Exact) -> Exact {
        if let (Repr::Small { n: a, d: b }, Repr::Small { n: c, d }) = (&self.0, &rhs.0) {
            if let Some(v) = add_small(*a, *b, *c, *d, false) {
                return v;
            }
        }
        self.big(&rhs, |x, y| x + y)
    }
}

impl Sub for Exact {
    type Output = Exact;
    #[inline]
    fn sub(self, rhs: Exact) -> Exact {
        if let (Repr::Small { n: a, d: b }, Repr::Small { n: c, d }) = (&self.0, &rhs.0) {
            if let Some(v) = add_small(*a, *b, *c, *d, true) {
                return v;
            }
        }
        self.big(&rhs, |x, y| x - y)
    }
}

impl Mul for Exact {
    type Output = Exact;
    #[inline]
    fn mul(self, rhs: Exact) -> Exact {
        if let (Repr::Small { n: a, d: b }, Repr::Small { n: c, d }) = (&self.0, &rhs.0) {
            // |i64 * i64| < 2^126: no overflow in i128.
            return Exact::from_wide(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        self.big(&rhs, |x, y| x * y)
    }
}

impl Neg for Exact {
    type Output = Exact;
    #[inline]
    fn neg(self) -> Exact {
        match self.0 {
            Repr::Small { n, d } => match n.checked_neg() {
                Some(n) => Exact(Repr::Small { n, d }),
                None => Exact::from_wide(-(n as i128), d as i128),
            },
            Repr::Big(r) => Exact::from_rational(-r),
        }
    }
}

fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

fn rational_sqrt(value: &BigRational) -> Option<BigRational> {
    // Reduced form: p/q is a rational square iff p and q are integer squares.
    let numer = integer_sqrt(value.numer())?;
    let denom = integer_sqrt(value.denom())?;
    Some(BigRational::new(numer, denom))
}

impl Scalar for Exact {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        Self(Repr::Small { n: 0, d: 1 })
    }

    fn one() -> Self {
        Self(Repr::Small { n: 1, d: 1 })
    }

    fn from_i64(value: i64) -> Self {
        value.into()
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self::from_wide(numer.into(), denom.into())
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { n: 0, .. })
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, NumericError> {
        if rhs.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        if let (Repr::Small { n: a, d: b }, Repr::Small { n: c, d }) = (&self.0, &rhs.0) {
            return Ok(Self::from_wide(*a as i128 * *d as i128, *b as i128 * *c as i128));
        }
        Ok(self.big(rhs, |x, y| x / y))
    }

    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }

    fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small { n, d } => *n as f64 / *d as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    fn is_negligible(&self, _tol: Tolerance, _scale: f64) -> bool {
        self.is_zero()
    }

    fn sqrt(&self) -> Result<Self, NumericError> {
        if self.is_negative() {
            return Err(NumericError::NegativeSqrt);
        }
        rational_sqrt(&self.to_rational())
            .map(Self::from_rational)
            .ok_or(NumericError::Irrational)
    }

    fn complex_sqrt(re: &Self, im: &Self) -> Result<(Self, Self), NumericError> {
        let (a, b) = (&re.to_rational(), &im.to_rational());
        if b.is_zero() {
            if !a.is_negative() {
                let r = rational_sqrt(a).ok_or(NumericError::Irrational)?;
                return Ok((Self::from_rational(r), Self::zero()));
            }
            let r = rational_sqrt(&-a).ok_or(NumericError::Irrational)?;
            return Ok((Self::zero(), Self::from_rational(r)));
        }
        // x^2 - y^2 = a, 2xy = b  =>  x^2 = (|z| + a) / 2 with |z| = sqrt(a^2 + b^2).
        let modulus = rational_sqrt(&(a * a + b * b)).ok_or(NumericError::Irrational)?;
        let two = BigRational::from_integer(2.into());
        let x = rational_sqrt(&((&modulus + a) / &two)).ok_or(NumericError::Irrational)?;
        // b != 0 forces |z| > |a|, so x > 0.
        let y = b / (&two * &x);
        Ok((Self::from_rational(x), Self::from_rational(y)))
    }

    fn parse_literal(text: &str) -> Result<Self, NumericError> {
        let bad = || NumericError::BadLiteral {
            literal: text.to_string(),
            backend: Backend::Exact,
        };
        let (numer, denom) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !digits(numer) || !denom.is_none_or(digits) {
            return Err(bad());
        }
        let numer: BigInt = numer.parse().map_err(|_| bad())?;
        let denom: BigInt = match denom {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        Exact::new(numer, denom)
    }

    fn check_finite(&self) -> Result<(), NumericError> {
        Ok(())
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }

    fn from_json(value: &serde_json::Value) -> Result<Self, NumericError> {
        match value {
            serde_json::Value::String(s) => {
                let (negative, body) = match s.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, s.as_str()),
                };
                let v = Self::parse_literal(body)?;
                Ok(if negative { -v } else { v })
            }
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(Self::from)
                .ok_or_else(|| NumericError::BadJson(format!("{n} is not an exact rational"))),
            other => Err(NumericError::BadJson(format!(
                "expected rational string, found {other}"
            ))),
        }
    }

    fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { n, .. } => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Exact {
        Exact::from_ratio(n, d)
    }

    #[test]
    fn stored_reduced_with_positive_denominator() {
        let v = Exact::new(6, -4).unwrap();
        assert_eq!(v.numer(), BigInt::from(-3));
        assert_eq!(v.denom(), BigInt::from(2));
        assert_eq!(v.to_string(), "-3/2");
        assert_eq!(q(4, 2).to_string(), "2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Exact::new(1, 0), Err(NumericError::DivisionByZero));
        assert_eq!(q(1, 2).checked_div(&Exact::zero()), Err(NumericError::DivisionByZero));
    }

    #[test]
    fn literal_forms() {
        assert_eq!(Exact::parse_literal("7").unwrap(), q(7, 1));
        assert_eq!(Exact::parse_literal("10/4").unwrap(), q(5, 2));
        assert!(Exact::parse_literal("0.5").is_err());
        assert!(Exact::parse_literal("1/").is_err());
        assert!(Exact::parse_literal("1/0").is_err());
    }

    #[test]
    fn perfect_square_roots_only() {
        assert_eq!(q(9, 4).sqrt().unwrap(), q(3, 2));
        assert_eq!(q(2, 1).sqrt(), Err(NumericError::Irrational));
        assert_eq!(q(-1, 1).sqrt(), Err(NumericError::NegativeSqrt));
    }

    #[test]
    fn complex_sqrt_principal_branch() {
        // -1 -> I
        assert_eq!(Exact::complex_sqrt(&q(-1, 1), &q(0, 1)).unwrap(), (q(0, 1), q(1, 1)));
        // 4 -> 2
        assert_eq!(Exact::complex_sqrt(&q(4, 1), &q(0, 1)).unwrap(), (q(2, 1), q(0, 1)));
        // 2I -> 1 + I
        assert_eq!(Exact::complex_sqrt(&q(0, 1), &q(2, 1)).unwrap(), (q(1, 1), q(1, 1)));
        // -2I -> 1 - I
        assert_eq!(Exact::complex_sqrt(&q(0, 1), &q(-2, 1)).unwrap(), (q(1, 1), q(-1, 1)));
        // 3 + 4I -> 2 + I
        assert_eq!(Exact::complex_sqrt(&q(3, 1), &q(4, 1)).unwrap(), (q(2, 1), q(1, 1)));
        assert_eq!(Exact::complex_sqrt(&q(1, 1), &q(1, 1)), Err(NumericError::Irrational));
    }

    #[test]
    fn promotes_and_demotes_across_i64() {
        let big = Exact::from(i64::MAX) + Exact::one();
        assert_eq!(big.to_string(), "9223372036854775808");
        assert!(matches!(big.0, Repr::Big(_)));
        let back = big.clone() - Exact::one();
        assert_eq!(back, Exact::from(i64::MAX));
        assert!(matches!(back.0, Repr::Small { .. }));
        assert_eq!(-Exact::from(i64::MIN), big);
        let huge = big.clone() * big.clone();
        assert_eq!(huge.checked_div(&big).unwrap(), big);
        assert!(Exact::from(i64::MIN) < Exact::from(i64::MAX));
        assert!(huge > big);
        let tiny = Exact::one().checked_div(&huge).unwrap();
        assert!(tiny > Exact::zero() && tiny < Exact::from_ratio(1, i64::MAX));
    }

    #[test]
    fn json_strings() {
        let v = q(-5, 3);
        assert_eq!(v.to_json(), serde_json::json!("-5/3"));
        assert_eq!(Exact::from_json(&v.to_json()).unwrap(), v);
        assert_eq!(Exact::from_json(&serde_json::json!(4)).unwrap(), q(4, 1));
        assert!(Exact::from_json(&serde_json::json!(0.5)).is_err());
    }
}
