//! Randomized verification suites for the structure theorems.
//!
//! Each trial is a pure function of `(seed, index)`, so trials run in
//! parallel and the merged report is independent of scheduling.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{json::to_json, Biquaternion};
use crate::numeric::{Complex, Exact, Scalar, Tolerance};
use crate::structure::{
    decompose_zero_divisor, is_nilpotent, is_zero_divisor, is_zero_divisor_hamilton,
    square_scaling_check, Generator, Seed, ZeroDivisorDecomposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Vanishing semi-norm iff equal part norms and perpendicular parts.
    CriterionEquivalence,
    /// Every non-trivial idempotent is a divisor of zero with `W = 1/2`.
    IdempotentsAreDivisors,
    /// `q^2 = 0` forces `W = 0`, and agrees with the component criterion.
    NilpotentsArePure,
    /// A pure divisor of zero squares to zero.
    PureDivisorsSquareZero,
    /// Decompose-then-recompose is the identity on divisors of zero.
    DecompositionRoundtrip,
    /// `p^2 = 2W p` for every non-pure divisor of zero.
    SquareScaling,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::CriterionEquivalence,
        TheoremId::IdempotentsAreDivisors,
        TheoremId::NilpotentsArePure,
        TheoremId::PureDivisorsSquareZero,
        TheoremId::DecompositionRoundtrip,
        TheoremId::SquareScaling,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::CriterionEquivalence => "criterion-equivalence",
            TheoremId::IdempotentsAreDivisors => "idempotents-are-divisors",
            TheoremId::NilpotentsArePure => "nilpotents-are-pure",
            TheoremId::PureDivisorsSquareZero => "pure-divisors-square-zero",
            TheoremId::DecompositionRoundtrip => "decomposition-roundtrip",
            TheoremId::SquareScaling => "square-scaling",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownTheorem(pub String);

impl fmt::Display for UnknownTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = TheoremId::ALL.iter().map(|t| t.as_str()).collect();
        write!(f, "unknown theorem `{}` (expected one of: {})", self.0, names.join(", "))
    }
}

impl std::error::Error for UnknownTheorem {}

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub theorem_id: TheoremId,
    pub trials: u64,
    pub failures: u64,
    /// Lowest-index failing input; present iff `failures > 0`.
    pub first_counterexample: Option<Biquaternion<Exact>>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "theorem_id": self.theorem_id.as_str(),
            "trials": self.trials,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample.as_ref().map(to_json),
            "elapsed": self.elapsed.as_secs_f64(),
        })
    }
}

const EXACT: Tolerance = Tolerance::exact();

type Trial = Result<(), Biquaternion<Exact>>;

fn require(ok: bool, q: &Biquaternion<Exact>) -> Trial {
    if ok {
        Ok(())
    } else {
        Err(q.clone())
    }
}

/// Small Gaussian-integer pure biquaternion with vanishing semi-norm, found by
/// rejection sampling (integer arithmetic, no structure assumed).
fn sampled_pure_zero_divisor(g: &mut Generator) -> Biquaternion<Exact> {
    loop {
        let q = g.small_pure();
        if q.semi_norm().is_zero() {
            return q;
        }
    }
}

fn criterion_equivalence(index: u64, g: &mut Generator) -> Trial {
    let q = match index % 4 {
        0 => g.zero_divisor(),
        1 => g.biquaternion(),
        2 => g.small_pure(),
        _ => {
            // A divisor of zero nudged off the null cone in one component.
            let mut p = g.zero_divisor();
            p.y = p.y + Complex::real(g.nonzero_rational());
            p
        }
    };
    match (is_zero_divisor(&q, EXACT), is_zero_divisor_hamilton(&q, EXACT)) {
        (Ok(a), Ok(b)) => require(a == b, &q),
        _ => Err(q),
    }
}

fn idempotents_are_divisors(_index: u64, g: &mut Generator) -> Trial {
    let q = g.idempotent();
    let quarter = Complex::real(Exact::from_ratio(-1, 4));
    let ok = q.square() == q
        && is_zero_divisor(&q, EXACT) == Ok(true)
        && is_zero_divisor_hamilton(&q, EXACT) == Ok(true)
        && q.w == Complex::real(Exact::half())
        && q.vector_square_sum() == quarter;
    require(ok, &q)
}

fn nilpotents_are_pure(index: u64, g: &mut Generator) -> Trial {
    let q = match index % 4 {
        0 => g.nilpotent(),
        1 => {
            let mut n = g.nilpotent();
            n.w = g.nonzero_complex();
            n
        }
        2 => g.small_pure(),
        _ => {
            let mut p = g.small_pure();
            p.w = g.nonzero_complex();
            p
        }
    };
    let squares_to_zero = q.square().is_zero();
    let generated_ok = !index.is_multiple_of(4) || squares_to_zero;
    let pure_if_nilpotent = !squares_to_zero || q.w.is_zero();
    require(generated_ok && pure_if_nilpotent && is_nilpotent(&q, EXACT) == squares_to_zero, &q)
}

fn pure_divisors_square_zero(index: u64, g: &mut Generator) -> Trial {
    let q = if index.is_multiple_of(2) {
        sampled_pure_zero_divisor(g)
    } else {
        g.nilpotent()
    };
    let is_pure_divisor = q.w.is_zero() && is_zero_divisor(&q, EXACT) == Ok(true);
    let pure_branch = matches!(decompose_zero_divisor(&q, EXACT), Ok(d) if d.is_pure());
    require(is_pure_divisor && q.square().is_zero() && pure_branch, &q)
}

fn decomposition_roundtrip(_index: u64, g: &mut Generator) -> Trial {
    let p = g.zero_divisor();
    let Ok(d) = decompose_zero_divisor(&p, EXACT) else {
        return Err(p);
    };
    let consistent = match &d {
        ZeroDivisorDecomposition::NonPure { scale, idempotent } => {
            !p.w.is_zero()
                && *scale == p.w.clone() + p.w.clone()
                && idempotent.square() == *idempotent
        }
        ZeroDivisorDecomposition::Pure { nilpotent } => p.w.is_zero() && nilpotent.square().is_zero(),
    };
    require(consistent && d.recompose() == p, &p)
}

fn square_scaling(_index: u64, g: &mut Generator) -> Trial {
    let p = g.non_pure_zero_divisor();
    let two_w = p.w.clone() + p.w.clone();
    let ok = square_scaling_check(&p, EXACT).as_ref() == Ok(&two_w)
        && p.square() == p.scale(&two_w);
    require(ok, &p)
}

/// Runs one trial of `theorem`; `Err` carries the counterexample.
pub fn run_trial(theorem: TheoremId, seed: Seed, index: u64) -> Result<(), Biquaternion<Exact>> {
    let mut g = Generator::for_trial(seed, index);
    match theorem {
        TheoremId::CriterionEquivalence => criterion_equivalence(index, &mut g),
        TheoremId::IdempotentsAreDivisors => idempotents_are_divisors(index, &mut g),
        TheoremId::NilpotentsArePure => nilpotents_are_pure(index, &mut g),
        TheoremId::PureDivisorsSquareZero => pure_divisors_square_zero(index, &mut g),
        TheoremId::DecompositionRoundtrip => decomposition_roundtrip(index, &mut g),
        TheoremId::SquareScaling => square_scaling(index, &mut g),
    }
}

pub fn run_verification(theorem: TheoremId, trials: u64, seed: Seed) -> VerifyReport {
    let start = Instant::now();
    let (failures, first) = (0..trials)
        .into_par_iter()
        .map(|index| match run_trial(theorem, seed, index) {
            Ok(()) => (0u64, None),
            Err(q) => (1, Some((index, q))),
        })
        .reduce(
            || (0, None),
            |(fa, a), (fb, b)| {
                let first = match (a, b) {
                    (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
                    (a, b) => a.or(b),
                };
                (fa + fb, first)
            },
        );
    VerifyReport {
        theorem_id: theorem,
        trials,
        failures,
        first_counterexample: first.map(|(_, q)| q),
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
        assert!("no-such-theorem".parse::<TheoremId>().is_err());
    }

    #[test]
    fn small_runs_pass_and_are_deterministic() {
        for t in TheoremId::ALL {
            let a = run_verification(t, 200, Seed(5));
            assert!(a.passed(), "{t}: {:?}", a.first_counterexample);
            assert!(a.first_counterexample.is_none());
            let b = run_verification(t, 200, Seed(5));
            assert_eq!((a.trials, a.failures), (b.trials, b.failures));
        }
    }

    #[test]
    fn report_json_shape() {
        let r = VerifyReport {
            theorem_id: TheoremId::SquareScaling,
            trials: 3,
            failures: 1,
            first_counterexample: Some(Biquaternion::one()),
            elapsed: Duration::from_millis(5),
        };
        let v = r.to_json();
        assert_eq!(v["theorem_id"], "square-scaling");
        assert_eq!(v["failures"], 1);
        assert_eq!(v["first_counterexample"]["W"][0], "1");
    }
}
