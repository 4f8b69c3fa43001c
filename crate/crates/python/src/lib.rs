use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyTuple;

use bqalg::algebra::json::to_json;
use bqalg::algebra::{Biquaternion, Quaternion};
use bqalg::dynamic::AnyBiquaternion;
use bqalg::numeric::{Approx, Backend, Complex, Exact, Scalar, Tolerance};
use bqalg::structure::{self, decompose_zero_divisor, normalize_nilpotent, Generator, Seed, ZeroDivisorDecomposition};
use bqalg::verify::{run_verification, TheoremId};
use bqalg::{with_backend, Error};

create_exception!(bqalg_py, BqalgError, PyValueError);

fn err(e: Error) -> PyErr {
    BqalgError::new_err(format!("{}: {e}", e.name()))
}

fn backend_arg(name: Option<&str>) -> PyResult<Option<Backend>> {
    name.map(|n| n.parse::<Backend>().map_err(|e| err(e.into()))).transpose()
}

fn tolerance(backend: Backend, eps: Option<f64>) -> PyResult<Tolerance> {
    match eps {
        None => Ok(Tolerance::for_backend(backend)),
        Some(eps) => Tolerance::checked_for(backend, eps).map_err(|e| err(e.into())),
    }
}

fn json_loads<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (value.to_string(),))
}

/// Exact scalars become `fractions.Fraction`, approx scalars `float`.
fn scalar<'py, S: Scalar>(py: Python<'py>, s: &S) -> PyResult<Bound<'py, PyAny>> {
    match S::BACKEND {
        Backend::Exact => py.import("fractions")?.getattr("Fraction")?.call1((s.to_string(),)),
        Backend::Approx => Ok(s.to_f64().into_pyobject(py)?.into_any()),
    }
}

fn quaternion_json<S: Scalar>(q: &Quaternion<S>) -> serde_json::Value {
    serde_json::json!([q.w.to_json(), q.x.to_json(), q.y.to_json(), q.z.to_json()])
}

fn complex<'py, S: Scalar>(py: Python<'py>, c: &Complex<S>) -> PyResult<Bound<'py, PyTuple>> {
    PyTuple::new(py, [scalar(py, &c.re)?, scalar(py, &c.im)?])
}

/// Biquaternion over the exact (rational) or approx (float) backend.
#[pyclass(name = "Biquaternion", module = "bqalg_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyBiquaternion(AnyBiquaternion);

impl PyBiquaternion {
    fn tol(&self, eps: Option<f64>) -> PyResult<Tolerance> {
        tolerance(self.0.backend(), eps)
    }

    /// Mixed operands are evaluated on the approx backend.
    fn binary(
        &self,
        other: &Self,
        exact: impl FnOnce(&Biquaternion<Exact>, &Biquaternion<Exact>) -> Biquaternion<Exact>,
        approx: impl FnOnce(&Biquaternion<Approx>, &Biquaternion<Approx>) -> Biquaternion<Approx>,
    ) -> PyResult<Self> {
        let target = if self.0.backend() == other.0.backend() { self.0.backend() } else { Backend::Approx };
        let a = self.0.clone().into_backend(target).map_err(err)?;
        let b = other.0.clone().into_backend(target).map_err(err)?;
        let out: AnyBiquaternion = match (a, b) {
            (AnyBiquaternion::Exact(a), AnyBiquaternion::Exact(b)) => exact(&a, &b).into(),
            (AnyBiquaternion::Approx(a), AnyBiquaternion::Approx(b)) => {
                let r = approx(&a, &b);
                r.check_finite().map_err(|e| err(e.into()))?;
                r.into()
            }
            _ => unreachable!("operands share a backend"),
        };
        Ok(Self(out))
    }
}

#[pymethods]
impl PyBiquaternion {
    /// Parses text such as `"1/2 + 1/2 Ii"` or a JSON document; decimals select approx.
    #[new]
    #[pyo3(signature = (text, backend=None))]
    fn new(text: &str, backend: Option<&str>) -> PyResult<Self> {
        AnyBiquaternion::read(text, backend_arg(backend)?).map(Self).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (document, backend=None))]
    fn from_json(document: &str, backend: Option<&str>) -> PyResult<Self> {
        let value: serde_json::Value =
            serde_json::from_str(document).map_err(|e| err(Error::Json(e.to_string())))?;
        AnyBiquaternion::from_json(&value, backend_arg(backend)?).map(Self).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    #[getter]
    fn backend(&self) -> &'static str {
        self.0.backend().as_str()
    }

    /// `[(re, im)] * 4` for W, X, Y, Z.
    fn components<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyTuple>>> {
        with_backend!(&self.0, q => q.components().iter().map(|c| complex(py, c)).collect())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Biquaternion('{}', backend='{}')", self.0, self.backend())
    }

    fn __eq__(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (AnyBiquaternion::Exact(a), AnyBiquaternion::Exact(b)) => a == b,
            (AnyBiquaternion::Approx(a), AnyBiquaternion::Approx(b)) => a == b,
            _ => false,
        }
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.binary(other, |a, b| a * b, |a, b| a * b)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.binary(other, |a, b| a.clone() + b.clone(), |a, b| a.clone() + b.clone())
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.binary(other, |a, b| a.clone() - b.clone(), |a, b| a.clone() - b.clone())
    }

    fn __neg__(&self) -> Self {
        Self(with_backend!(&self.0, q => (-q.clone()).into()))
    }

    fn square(&self) -> PyResult<Self> {
        let out: AnyBiquaternion = with_backend!(&self.0, q => {
            let s = q.square();
            s.check_finite().map_err(|e| err(e.into()))?;
            s.into()
        });
        Ok(Self(out))
    }

    fn conjugate(&self) -> Self {
        Self(with_backend!(&self.0, q => q.conjugate().into()))
    }

    fn complex_conjugate(&self) -> Self {
        Self(with_backend!(&self.0, q => q.complex_conjugate().into()))
    }

    /// `W^2 + X^2 + Y^2 + Z^2` as `(re, im)`.
    fn semi_norm<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyTuple>> {
        with_backend!(&self.0, q => complex(py, &q.semi_norm()))
    }

    /// `(q_r, q_i)` as two `(w, x, y, z)` tuples.
    fn pair_view<'py>(&self, py: Python<'py>) -> PyResult<(Bound<'py, PyTuple>, Bound<'py, PyTuple>)> {
        with_backend!(&self.0, q => {
            let view = q.pair_view();
            let part = |p: &Quaternion<_>| -> PyResult<Bound<'py, PyTuple>> {
                PyTuple::new(py, [scalar(py, &p.w)?, scalar(py, &p.x)?, scalar(py, &p.y)?, scalar(py, &p.z)?])
            };
            Ok((part(&view.real_part)?, part(&view.imag_part)?))
        })
    }

    #[pyo3(signature = (tolerance=None))]
    fn inverse(&self, tolerance: Option<f64>) -> PyResult<Self> {
        let tol = self.tol(tolerance)?;
        let out: AnyBiquaternion = with_backend!(&self.0, q => q.inverse(tol).map_err(err)?.into());
        Ok(Self(out))
    }

    #[pyo3(signature = (tolerance=None))]
    fn classify(&self, tolerance: Option<f64>) -> PyResult<&'static str> {
        let tol = self.tol(tolerance)?;
        Ok(with_backend!(&self.0, q => structure::classify(q, tol).as_str()))
    }

    #[pyo3(signature = (tolerance=None))]
    fn is_zero_divisor(&self, tolerance: Option<f64>) -> PyResult<bool> {
        let tol = self.tol(tolerance)?;
        with_backend!(&self.0, q => structure::is_zero_divisor(q, tol).map_err(err))
    }

    #[pyo3(signature = (tolerance=None))]
    fn is_zero_divisor_hamilton(&self, tolerance: Option<f64>) -> PyResult<bool> {
        let tol = self.tol(tolerance)?;
        with_backend!(&self.0, q => structure::is_zero_divisor_hamilton(q, tol).map_err(err))
    }

    #[pyo3(signature = (tolerance=None))]
    fn is_idempotent(&self, tolerance: Option<f64>) -> PyResult<bool> {
        let tol = self.tol(tolerance)?;
        Ok(with_backend!(&self.0, q => structure::is_idempotent(q, tol)))
    }

    #[pyo3(signature = (tolerance=None))]
    fn is_nilpotent(&self, tolerance: Option<f64>) -> PyResult<bool> {
        let tol = self.tol(tolerance)?;
        Ok(with_backend!(&self.0, q => structure::is_nilpotent(q, tol)))
    }

    #[pyo3(signature = (tolerance=None))]
    fn is_root_of_minus_one(&self, tolerance: Option<f64>) -> PyResult<bool> {
        let tol = self.tol(tolerance)?;
        Ok(with_backend!(&self.0, q => structure::is_root_of_minus_one(q, tol)))
    }

    /// `("non-pure", alpha, idempotent)` or `("nilpotent", nilpotent)`.
    #[pyo3(signature = (tolerance=None))]
    fn decompose<'py>(&self, py: Python<'py>, tolerance: Option<f64>) -> PyResult<Bound<'py, PyTuple>> {
        let tol = self.tol(tolerance)?;
        with_backend!(&self.0, q => match decompose_zero_divisor(q, tol).map_err(err)? {
            ZeroDivisorDecomposition::NonPure { scale, idempotent } => PyTuple::new(py, [
                "non-pure".into_pyobject(py)?.into_any(),
                complex(py, &scale)?.into_any(),
                Bound::new(py, Self(idempotent.into()))?.into_any(),
            ]),
            ZeroDivisorDecomposition::Pure { nilpotent } => PyTuple::new(py, [
                "nilpotent".into_pyobject(py)?.into_any(),
                Bound::new(py, Self(nilpotent.into()))?.into_any(),
            ]),
        })
    }

    /// Normal form as a dict, in the same layout as the command line prints.
    #[pyo3(signature = (tolerance=None))]
    fn normalize<'py>(&self, py: Python<'py>, tolerance: Option<f64>) -> PyResult<Bound<'py, PyAny>> {
        let tol = self.tol(tolerance)?;
        let value = with_backend!(&self.0, q => match decompose_zero_divisor(q, tol).map_err(err)? {
            ZeroDivisorDecomposition::NonPure { scale, idempotent } => serde_json::json!({
                "kind": "non-pure",
                "alpha": [scale.re.to_json(), scale.im.to_json()],
                "idempotent": to_json(&idempotent),
            }),
            ZeroDivisorDecomposition::Pure { nilpotent } => {
                let form = normalize_nilpotent(&nilpotent, tol).map_err(err)?;
                serde_json::json!({
                    "kind": "nilpotent",
                    "mu": quaternion_json(&form.mu),
                    "nu": quaternion_json(&form.nu),
                    "common_norm": form.common_norm.to_json(),
                    "modulus": form.modulus.to_json(),
                })
            }
        });
        json_loads(py, &value)
    }
}

/// Seeded structured values; `kind` is idempotent, nilpotent, zero-divisor or root-of-minus-one.
#[pyfunction]
#[pyo3(signature = (kind, count=1, seed=0, backend=None))]
fn generate(kind: &str, count: usize, seed: u64, backend: Option<&str>) -> PyResult<Vec<PyBiquaternion>> {
    let backend = backend_arg(backend)?.unwrap_or(Backend::Exact);
    let mut g = Generator::new(Seed(seed));
    let draw: fn(&mut Generator) -> Biquaternion<Exact> = match kind {
        "idempotent" => Generator::idempotent,
        "nilpotent" => Generator::nilpotent,
        "zero-divisor" => Generator::zero_divisor,
        "root-of-minus-one" => |g| g.root_of_minus_one().into_value(),
        other => return Err(PyValueError::new_err(format!("unknown kind `{other}`"))),
    };
    (0..count)
        .map(|_| {
            AnyBiquaternion::Exact(draw(&mut g))
                .into_backend(backend)
                .map(PyBiquaternion)
                .map_err(err)
        })
        .collect()
}

/// Runs a randomized theorem suite and returns its report as a dict.
#[pyfunction]
#[pyo3(signature = (theorem, trials=10_000, seed=0))]
fn verify<'py>(py: Python<'py>, theorem: &str, trials: u64, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    if trials == 0 {
        return Err(PyValueError::new_err("trials must be at least 1"));
    }
    let id: TheoremId = theorem.parse().map_err(|e| PyValueError::new_err(format!("{e}")))?;
    let report = py.detach(|| run_verification(id, trials, Seed(seed)));
    json_loads(py, &report.to_json())
}

#[pymodule]
fn bqalg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBiquaternion>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("BqalgError", m.py().get_type::<BqalgError>())?;
    Ok(())
}
