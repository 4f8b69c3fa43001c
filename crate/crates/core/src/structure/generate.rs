//! Seeded generators of exact test cases.
//!
//! Every generated value stays inside the rationals: roots of -1 come from
//! the hyperbola `s^2 - t^2 = 1` parameterized by `s = (u + 1/u)/2`,
//! `t = (u - 1/u)/2`, moved around by conjugation with a random invertible
//! real quaternion.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::construct::make_idempotent;
use crate::algebra::{Biquaternion, Quaternion, RootOfMinusOne, Sign};
use crate::error::{Error, Result};
use crate::numeric::{Complex, Exact, Scalar, Tolerance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Seed(pub u64);

impl From<u64> for Seed {
    fn from(value: u64) -> Self {
        Seed(value)
    }
}

/// `s i + t I j` with `s = (u + 1/u)/2`, `t = (u - 1/u)/2`, conjugated by `r`.
pub fn root_of_minus_one_from(u: &Exact, r: &Quaternion<Exact>) -> Result<RootOfMinusOne<Exact>> {
    if u.is_zero() {
        return Err(Error::ZeroScale);
    }
    if r.is_zero() {
        return Err(Error::ZeroInput);
    }
    let inv_u = Exact::one().checked_div(u)?;
    let half = Exact::half();
    let s = (u.clone() + inv_u.clone()) * half.clone();
    let t = (u.clone() - inv_u) * half;
    let base = Biquaternion::new(
        Complex::zero(),
        Complex::real(s),
        Complex::new(Exact::zero(), t),
        Complex::zero(),
    );
    let rotated = conjugate_by(&base, r)?;
    RootOfMinusOne::new(rotated, Tolerance::exact())
}

/// `r q r^-1` for a real quaternion `r`; preserves squares.
fn conjugate_by(q: &Biquaternion<Exact>, r: &Quaternion<Exact>) -> Result<Biquaternion<Exact>> {
    let r_inv = Biquaternion::from_real(&r.checked_inverse()?);
    let r = Biquaternion::from_real(r);
    Ok(&(&r * q) * &r_inv)
}

/// Deterministic stream of structured biquaternions.
#[derive(Clone, Debug)]
pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: Seed) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed.0),
        }
    }

    /// Independent stream for trial `index` under `seed`.
    pub fn for_trial(seed: Seed, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
        rng.set_stream(index);
        Self { rng }
    }

    fn small_rational(&mut self, max_numer: i64, max_denom: i64) -> Exact {
        let n = self.rng.random_range(-max_numer..=max_numer);
        let d = self.rng.random_range(1..=max_denom);
        Exact::from_ratio(n, d)
    }

    pub fn rational(&mut self) -> Exact {
        self.small_rational(6, 4)
    }

    pub fn nonzero_rational(&mut self) -> Exact {
        let n = self.rng.random_range(1..=9);
        let d = self.rng.random_range(1..=9);
        let v = Exact::from_ratio(n, d);
        if self.rng.random_bool(0.5) {
            -v
        } else {
            v
        }
    }

    pub fn complex(&mut self) -> Complex<Exact> {
        Complex::new(self.rational(), self.rational())
    }

    pub fn nonzero_complex(&mut self) -> Complex<Exact> {
        loop {
            let c = self.complex();
            if !c.is_zero() {
                return c;
            }
        }
    }

    pub fn sign(&mut self) -> Sign {
        if self.rng.random_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn invertible_quaternion(&mut self) -> Quaternion<Exact> {
        loop {
            let mut c = || self.small_rational(3, 2);
            let q = Quaternion::new(c(), c(), c(), c());
            if !q.is_zero() {
                return q;
            }
        }
    }

    pub fn root_of_minus_one(&mut self) -> RootOfMinusOne<Exact> {
        let u = self.nonzero_rational();
        let r = self.invertible_quaternion();
        root_of_minus_one_from(&u, &r).expect("hyperbola construction yields a root of -1")
    }

    pub fn idempotent(&mut self) -> Biquaternion<Exact> {
        let xi = self.root_of_minus_one();
        let sign = self.sign();
        make_idempotent(&xi, sign, false).expect("non-trivial root")
    }

    pub fn nilpotent(&mut self) -> Biquaternion<Exact> {
        let scale = self.nonzero_complex();
        let r = self.invertible_quaternion();
        let base = Biquaternion::unit_i() + Biquaternion::unit_j().scale(&Complex::i());
        conjugate_by(&base, &r)
            .expect("r is invertible")
            .scale(&scale)
    }

    /// `alpha * q` for a random idempotent `q` and nonzero `alpha`.
    pub fn non_pure_zero_divisor(&mut self) -> Biquaternion<Exact> {
        let alpha = self.nonzero_complex();
        self.idempotent().scale(&alpha)
    }

    /// Fair coin between a scaled idempotent and a nilpotent.
    pub fn zero_divisor(&mut self) -> Biquaternion<Exact> {
        if self.rng.random_bool(0.5) {
            self.non_pure_zero_divisor()
        } else {
            self.nilpotent()
        }
    }

    /// Nonzero biquaternion with independent small rational components.
    pub fn biquaternion(&mut self) -> Biquaternion<Exact> {
        loop {
            let q = Biquaternion::new(self.complex(), self.complex(), self.complex(), self.complex());
            if !q.is_zero() {
                return q;
            }
        }
    }

    /// Nonzero pure biquaternion with small Gaussian-integer components.
    pub fn small_pure(&mut self) -> Biquaternion<Exact> {
        loop {
            let mut c = || Complex::from_i64(self.rng.random_range(-2..=2), self.rng.random_range(-2..=2));
            let q = Biquaternion::new(Complex::zero(), c(), c(), c());
            if !q.is_zero() {
                return q;
            }
        }
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }
}

pub fn random_root_of_minus_one(seed: Seed) -> RootOfMinusOne<Exact> {
    Generator::new(seed).root_of_minus_one()
}

pub fn random_idempotent(seed: Seed) -> Biquaternion<Exact> {
    Generator::new(seed).idempotent()
}

pub fn random_nilpotent(seed: Seed) -> Biquaternion<Exact> {
    Generator::new(seed).nilpotent()
}

pub fn random_zero_divisor(seed: Seed) -> Biquaternion<Exact> {
    Generator::new(seed).zero_divisor()
}
