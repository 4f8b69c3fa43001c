use std::fmt;
use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Value};

use bqalg::algebra::json::to_json;
use bqalg::algebra::{Biquaternion, Quaternion};
use bqalg::dynamic::AnyBiquaternion;
use bqalg::numeric::{Backend, Scalar, Tolerance};
use bqalg::structure::{self, decompose_zero_divisor, normalize_nilpotent, Generator, Seed, ZeroDivisorDecomposition};
use bqalg::verify::{run_verification, TheoremId};
use bqalg::{with_backend, Error};

/// Failure mapped to the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// 1: a property check failed.
    Property(String),
    /// 2: bad flags or unreadable input.
    Usage(String),
    /// 3: a well-formed input outside an operation's domain.
    Domain(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Property(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Property(msg) => write!(f, "property failure: {msg}"),
            CliError::Usage(msg) => write!(f, "error: {msg}"),
            CliError::Domain(e) => write!(f, "error: {}: {e}", e.name()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            CliError::Usage(format!("{}: {e}", e.name()))
        } else {
            CliError::Domain(e)
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("writing output: {e}"))
    }
}

pub struct Options {
    pub backend: Option<Backend>,
    pub tolerance: Option<f64>,
    pub json_input: bool,
}

impl Options {
    fn read(&self, input: &str) -> Result<AnyBiquaternion, CliError> {
        let q = if self.json_input {
            let value: Value = serde_json::from_str(input.trim())
                .map_err(|e| CliError::Usage(format!("JsonError: {e}")))?;
            AnyBiquaternion::from_json(&value, self.backend)?
        } else {
            AnyBiquaternion::read(input, self.backend)?
        };
        Ok(q)
    }

    fn tolerance(&self, backend: Backend) -> Result<Tolerance, CliError> {
        match self.tolerance {
            None => Ok(Tolerance::for_backend(backend)),
            Some(eps) => Tolerance::checked_for(backend, eps).map_err(|_| {
                CliError::Usage(format!(
                    "tolerance {eps} is not valid for the {backend} backend (exact requires 0)"
                ))
            }),
        }
    }
}

fn emit(out: &mut impl Write, value: &Value) -> Result<(), CliError> {
    writeln!(out, "{value}")?;
    Ok(())
}

fn quaternion_json<S: Scalar>(q: &Quaternion<S>) -> Value {
    json!([q.w.to_json(), q.x.to_json(), q.y.to_json(), q.z.to_json()])
}

fn evidence<S: Scalar>(q: &Biquaternion<S>, tol: Tolerance) -> Value {
    let view = q.pair_view();
    let semi = q.semi_norm();
    json!({
        "input": to_json(q),
        "classification": structure::classify(q, tol).as_str(),
        "semi_norm": [semi.re.to_json(), semi.im.to_json()],
        "norm_real": view.real_part.norm().to_json(),
        "norm_imag": view.imag_part.norm().to_json(),
        "inner_product": view.real_part.inner(&view.imag_part).to_json(),
    })
}

pub fn classify(opts: &Options, inputs: &[String], out: &mut impl Write) -> Result<(), CliError> {
    for input in inputs {
        let q = opts.read(input)?;
        let tol = opts.tolerance(q.backend())?;
        let record = with_backend!(&q, q => evidence(q, tol));
        emit(out, &record)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Idempotent,
    Nilpotent,
    ZeroDivisor,
    RootOfMinusOne,
}

impl Kind {
    fn holds<S: Scalar>(self, q: &Biquaternion<S>, tol: Tolerance) -> bool {
        let scale = q.scale_measure();
        let nonzero = !q.is_zero_within(tol, scale);
        match self {
            Kind::Idempotent => nonzero && structure::is_idempotent(q, tol),
            Kind::Nilpotent => nonzero && q.square().is_zero_within(tol, scale * scale),
            Kind::ZeroDivisor => structure::is_zero_divisor(q, tol).unwrap_or(false),
            Kind::RootOfMinusOne => structure::is_root_of_minus_one(q, tol),
        }
    }
}

pub fn generate(opts: &Options, kind: Kind, count: u64, seed: u64, out: &mut impl Write) -> Result<(), CliError> {
    if count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let backend = opts.backend.unwrap_or(Backend::Exact);
    let tol = opts.tolerance(backend)?;
    let mut g = Generator::new(Seed(seed));
    for index in 0..count {
        let q = match kind {
            Kind::Idempotent => g.idempotent(),
            Kind::Nilpotent => g.nilpotent(),
            Kind::ZeroDivisor => g.zero_divisor(),
            Kind::RootOfMinusOne => g.root_of_minus_one().into_value(),
        };
        let q = AnyBiquaternion::Exact(q).into_backend(backend)?;
        if !with_backend!(&q, q => kind.holds(q, tol)) {
            return Err(CliError::Property(format!(
                "generated value {index} fails its defining property: {q}"
            )));
        }
        emit(out, &q.to_json())?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Product,
    Square,
    Seminorm,
    Inverse,
    Conjugate,
    ComplexConjugate,
}

impl Op {
    fn arity(self) -> usize {
        match self {
            Op::Product => 2,
            _ => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Op::Product => "product",
            Op::Square => "square",
            Op::Seminorm => "seminorm",
            Op::Inverse => "inverse",
            Op::Conjugate => "conjugate",
            Op::ComplexConjugate => "complex-conjugate",
        }
    }

    fn apply<S: Scalar>(self, args: &[&Biquaternion<S>], tol: Tolerance) -> Result<Biquaternion<S>, Error> {
        let q = args[0];
        let result = match self {
            Op::Product => q * args[1],
            Op::Square => q.square(),
            Op::Seminorm => Biquaternion::from_complex(q.semi_norm()),
            Op::Inverse => q.inverse(tol)?,
            Op::Conjugate => q.conjugate(),
            Op::ComplexConjugate => q.complex_conjugate(),
        };
        result.check_finite()?;
        Ok(result)
    }
}

/// Puts every operand on one backend: the explicit flag, else approx if any
/// operand is approx.
fn unify(operands: Vec<AnyBiquaternion>, explicit: Option<Backend>) -> Result<Vec<AnyBiquaternion>, CliError> {
    let target = explicit.unwrap_or_else(|| {
        if operands.iter().any(|q| q.backend() == Backend::Approx) {
            Backend::Approx
        } else {
            Backend::Exact
        }
    });
    operands
        .into_iter()
        .map(|q| q.into_backend(target).map_err(CliError::from))
        .collect()
}

pub fn compute(opts: &Options, op: Op, operands: &[String], out: &mut impl Write) -> Result<(), CliError> {
    let arity = op.arity();
    if operands.is_empty() || !operands.len().is_multiple_of(arity) {
        return Err(CliError::Usage(format!(
            "`{}` takes {arity} operand(s) per application, got {}",
            op.name(),
            operands.len()
        )));
    }
    for group in operands.chunks(arity) {
        let parsed = group.iter().map(|s| opts.read(s)).collect::<Result<Vec<_>, _>>()?;
        let parsed = unify(parsed, opts.backend)?;
        let backend = parsed[0].backend();
        let tol = opts.tolerance(backend)?;
        let result: AnyBiquaternion = match backend {
            Backend::Exact => {
                let args: Vec<_> = parsed
                    .iter()
                    .map(|q| match q {
                        AnyBiquaternion::Exact(q) => q,
                        AnyBiquaternion::Approx(_) => unreachable!("unified to exact"),
                    })
                    .collect();
                op.apply(&args, tol)?.into()
            }
            Backend::Approx => {
                let args: Vec<_> = parsed
                    .iter()
                    .map(|q| match q {
                        AnyBiquaternion::Approx(q) => q,
                        AnyBiquaternion::Exact(_) => unreachable!("unified to approx"),
                    })
                    .collect();
                op.apply(&args, tol)?.into()
            }
        };
        emit(out, &json!({"op": op.name(), "result": result.to_json()}))?;
    }
    Ok(())
}

fn normal_form<S: Scalar>(q: &Biquaternion<S>, tol: Tolerance) -> Result<Value, Error> {
    match decompose_zero_divisor(q, tol)? {
        ZeroDivisorDecomposition::NonPure { scale, idempotent } => Ok(json!({
            "input": to_json(q),
            "kind": "non-pure",
            "alpha": [scale.re.to_json(), scale.im.to_json()],
            "idempotent": to_json(&idempotent),
        })),
        ZeroDivisorDecomposition::Pure { nilpotent } => {
            let form = normalize_nilpotent(&nilpotent, tol)?;
            Ok(json!({
                "input": to_json(q),
                "kind": "nilpotent",
                "mu": quaternion_json(&form.mu),
                "nu": quaternion_json(&form.nu),
                "common_norm": form.common_norm.to_json(),
                "modulus": form.modulus.to_json(),
            }))
        }
    }
}

pub fn normalize(opts: &Options, inputs: &[String], out: &mut impl Write) -> Result<(), CliError> {
    for input in inputs {
        let q = opts.read(input)?;
        let tol = opts.tolerance(q.backend())?;
        let record = with_backend!(&q, q => normal_form(q, tol))?;
        emit(out, &record)?;
    }
    Ok(())
}

pub fn verify(theorem: &str, trials: u64, seed: u64, out: &mut impl Write) -> Result<(), CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let theorems: Vec<TheoremId> = if theorem == "all" {
        TheoremId::ALL.to_vec()
    } else {
        vec![theorem.parse().map_err(|e| CliError::Usage(format!("{e}")))?]
    };
    let mut failed = Vec::new();
    for t in theorems {
        let report = run_verification(t, trials, Seed(seed));
        emit(out, &report.to_json())?;
        if !report.passed() {
            failed.push(format!("{t}: {} of {trials} trials failed", report.failures));
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Property(failed.join("; ")))
    }
}
