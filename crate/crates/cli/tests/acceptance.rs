//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the lines are always printed; exits nonzero if any fail.

use std::cell::Cell;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bqalg::prelude::*;
use serde_json::Value;

const EXACT: Tolerance = Tolerance::exact();
const BIN: &str = env!("CARGO_BIN_EXE_bqalg");

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn ex(text: &str) -> Biquaternion<Exact> {
    parse(text).expect("literal parses")
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn c1() -> Outcome {
    let start = Instant::now();
    // c = 1 + I: q = c + conj(c) i - c j - conj(c) k
    let q = ex("(1+1I) + (1-1I)i + (-1-1I)j + (-1+1I)k");
    let semi = q.semi_norm();
    let view = q.pair_view();
    let (nr, ni) = (view.real_part.norm(), view.imag_part.norm());
    let inner = view.real_part.inner(&view.imag_part);
    let elapsed = start.elapsed();
    ensure(semi.is_zero(), format!("semi_norm = {semi}"))?;
    ensure(nr == Exact::from_i64(4) && ni == Exact::from_i64(4), format!("norms {nr}/{ni}"))?;
    ensure(inner.is_zero(), format!("inner = {inner}"))?;
    ensure(elapsed < Duration::from_millis(1), format!("took {:.3} ms", ms(elapsed)))?;
    Ok(format!("semi_norm 0, norms {nr}/{ni}, inner 0, {:.3} ms", ms(elapsed)))
}

fn c2() -> Outcome {
    let a = |x: f64| Approx::new(x).unwrap();
    let z = Approx::zero();
    let q = Biquaternion::new(
        Complex::real(a(8f64.sqrt())),
        Complex::zero(),
        Complex::new(z, a(2.0)),
        Complex::new(z, a(2.0)),
    );
    let tol = Tolerance::new(1e-12).unwrap();
    let scale = q.scale_measure();
    let semi = q.semi_norm().magnitude();
    ensure(semi <= 1e-12 * scale, format!("|semi_norm| = {semi:e}"))?;
    let view = q.pair_view();
    let (nr, ni) = (view.real_part.norm().to_f64(), view.imag_part.norm().to_f64());
    ensure((nr - 8.0).abs() <= 1e-12 && (ni - 8.0).abs() <= 1e-12, format!("norms {nr}/{ni}"))?;
    let (alpha, idem) = normalize_to_idempotent(&q, tol).map_err(|e| e.to_string())?;
    let residual = (idem.square() - idem.clone())
        .components()
        .iter()
        .map(|c| c.magnitude())
        .fold(0.0, f64::max);
    ensure(residual <= 1e-12, format!("|q^2 - q| = {residual:e}"))?;
    Ok(format!(
        "|semi_norm| {semi:.1e}, norms {nr}/{ni}, alpha {alpha}, idempotent residual {residual:.1e}"
    ))
}

fn c3() -> Outcome {
    let q = ex("1/2 + 1/2 Ii");
    ensure(q.square() == q, format!("square = {}", q.square()))?;
    Ok(format!("({q})^2 = itself"))
}

fn c4() -> Outcome {
    let q = ex("i + Ij");
    ensure(q.square().is_zero(), format!("square = {}", q.square()))?;
    match q.scalar_axis_form(EXACT) {
        Err(Error::AxisUndefined) => Ok("(i + Ij)^2 = 0, scalar_axis_form -> AxisUndefined".into()),
        other => Err(format!("scalar_axis_form gave {other:?}")),
    }
}

/// Runs `trials` seeded trials of `check`, stopping at the first failure.
fn suite(
    seed: u64,
    trials: u64,
    check: impl Fn(&mut Generator) -> Result<(), Biquaternion<Exact>>,
) -> Result<Duration, String> {
    let start = Instant::now();
    for index in 0..trials {
        let mut g = Generator::for_trial(Seed(seed), index);
        check(&mut g).map_err(|q| format!("trial {index} fails on {q}"))?;
    }
    Ok(start.elapsed())
}

fn both_criteria(q: &Biquaternion<Exact>) -> bool {
    is_zero_divisor(q, EXACT) == Ok(true) && is_zero_divisor_hamilton(q, EXACT) == Ok(true)
}

fn c5() -> Outcome {
    let divisors = Cell::new(0u32);
    let elapsed = suite(5, 10_000, |g| {
        let q = if g.coin() {
            divisors.set(divisors.get() + 1);
            g.zero_divisor()
        } else {
            g.biquaternion()
        };
        match (is_zero_divisor(&q, EXACT), is_zero_divisor_hamilton(&q, EXACT)) {
            (Ok(a), Ok(b)) if a == b => Ok(()),
            _ => Err(q),
        }
    })?;
    let divisors = divisors.get();
    ensure(elapsed < Duration::from_secs(5), format!("took {:.2} s", elapsed.as_secs_f64()))?;
    ensure(divisors > 0 && divisors < 10_000, "trial mix is one-sided")?;
    Ok(format!(
        "10000 trials ({divisors} generated divisors) agree, {:.2} s",
        elapsed.as_secs_f64()
    ))
}

fn c6() -> Outcome {
    let half = Complex::real(Exact::half());
    let elapsed = suite(6, 10_000, |g| {
        let q = g.idempotent();
        if q.square() == q && both_criteria(&q) && q.w == half {
            Ok(())
        } else {
            Err(q)
        }
    })?;
    Ok(format!("10000 idempotents, {:.2} s", elapsed.as_secs_f64()))
}

fn c7() -> Outcome {
    let elapsed = suite(7, 10_000, |g| {
        let q = g.nilpotent();
        let ok = q.w.is_zero() && q.vector_square_sum().is_zero() && q.square().is_zero() && both_criteria(&q);
        if ok {
            Ok(())
        } else {
            Err(q)
        }
    })?;
    Ok(format!("10000 nilpotents, {:.2} s", elapsed.as_secs_f64()))
}

fn c8() -> Outcome {
    let non_pure = suite(8, 10_000, |g| {
        let p = g.non_pure_zero_divisor();
        let two_w = p.w.clone() + p.w.clone();
        let round_trip = match decompose_zero_divisor(&p, EXACT) {
            Ok(d @ ZeroDivisorDecomposition::NonPure { .. }) => d.recompose() == p,
            _ => false,
        };
        if p.square() == p.scale(&two_w) && round_trip {
            Ok(())
        } else {
            Err(p)
        }
    })?;
    let pure = suite(80, 10_000, |g| {
        let p = g.nilpotent();
        let ok = match decompose_zero_divisor(&p, EXACT) {
            Ok(d) => d.is_pure() && d.recompose() == p,
            Err(_) => false,
        };
        if ok && p.square().is_zero() {
            Ok(())
        } else {
            Err(p)
        }
    })?;
    Ok(format!(
        "10000 non-pure round trips with p^2 = 2W p, 10000 pure on the Pure branch, {:.2} s",
        (non_pure + pure).as_secs_f64()
    ))
}

fn c9() -> Outcome {
    let elapsed = suite(9, 1_000, |g| {
        let (a, b, c) = (g.biquaternion(), g.biquaternion(), g.biquaternion());
        let assoc = &(&a * &b) * &c == &a * &(&b * &c);
        let left = &a * &(b.clone() + c.clone()) == &a * &b + &a * &c;
        let right = &(a.clone() + b.clone()) * &c == &a * &c + &b * &c;
        let anti = (&a * &b).conjugate() == &b.conjugate() * &a.conjugate();
        let auto = (&a * &b).complex_conjugate() == &a.complex_conjugate() * &b.complex_conjugate();
        if assoc && left && right && anti && auto {
            Ok(())
        } else {
            Err(a)
        }
    })?;
    Ok(format!("1000 triples, {:.2} s", elapsed.as_secs_f64()))
}

fn run_cli(args: &[&str]) -> Result<(std::process::Output, Duration), String> {
    let start = Instant::now();
    let out = Command::new(Path::new(BIN))
        .args(args)
        .output()
        .map_err(|e| format!("spawning {BIN}: {e}"))?;
    Ok((out, start.elapsed()))
}

fn c10() -> Outcome {
    let args = ["generate", "--seed", "42", "--count", "100"];
    let (first, _) = run_cli(&args)?;
    let (second, _) = run_cli(&args)?;
    ensure(first.status.success() && second.status.success(), "generate failed")?;
    ensure(first.stdout == second.stdout, "generate output differs between runs")?;
    let lines = String::from_utf8_lossy(&first.stdout).lines().count();
    ensure(lines == 100, format!("generate emitted {lines} lines"))?;

    let mut total = Duration::ZERO;
    for theorem in TheoremId::ALL {
        let (out, elapsed) = run_cli(&["verify", theorem.as_str()])?;
        total += elapsed;
        ensure(out.status.success(), format!("verify {theorem} exited {:?}", out.status.code()))?;
        let report: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        ensure(report["failures"] == 0, format!("verify {theorem}: {report}"))?;
    }
    ensure(total < Duration::from_secs(10), format!("verify took {:.2} s", total.as_secs_f64()))?;
    Ok(format!(
        "generate byte-identical ({} bytes), six verify suites exit 0 in {:.2} s",
        first.stdout.len(),
        total.as_secs_f64()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("worked divisor example, exact", c1),
        ("worked divisor example, approx", c2),
        ("idempotent example", c3),
        ("nilpotent example", c4),
        ("criterion equivalence suite", c5),
        ("idempotent suite", c6),
        ("nilpotent suite", c7),
        ("decomposition suite", c8),
        ("ring-law suite", c9),
        ("CLI determinism and verify", c10),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {:>2}: {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {why}", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
