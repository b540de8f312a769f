//! Python bindings: exact scalars, modules, relation suites and stable limits.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use serde_json::Value;

use bqt_core::bqt::{extract_basis, lk_spanning_set, BWord, LVector};
use bqt_core::daha::{apply_word, GeneratorWord, Realization};
use bqt_core::family::{AnyModule, ModuleSpec, SeqSpec};
use bqt_core::io::{format_vector, parse_vector};
use bqt_core::limit::{LimitConfig, StableLimit};
use bqt_core::scalar::QtScalar;
use bqt_core::syt::YoungDiagram;
use bqt_core::verify::{
    all_pass, check_aux_identities, check_bqt_relations, check_compatibility, check_daha_relations, CheckConfig,
};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py(py: Python<'_>, v: &impl serde::Serialize) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(v).map_err(err)?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// An element of Q(q, t), always in lowest terms.
#[pyclass(name = "Scalar", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct Scalar(QtScalar);

#[derive(FromPyObject)]
enum ScalarLike {
    Scalar(Scalar),
    Int(i64),
    Text(String),
}

impl ScalarLike {
    fn get(self) -> PyResult<QtScalar> {
        match self {
            ScalarLike::Scalar(s) => Ok(s.0),
            ScalarLike::Int(i) => Ok(QtScalar::int(i)),
            ScalarLike::Text(t) => t.parse().map_err(err),
        }
    }
}

#[pymethods]
impl Scalar {
    #[new]
    fn new(value: ScalarLike) -> PyResult<Self> {
        Ok(Scalar(value.get()?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Scalar('{}')", self.0)
    }

    fn __add__(&self, o: ScalarLike) -> PyResult<Self> {
        Ok(Scalar(self.0.add(&o.get()?)))
    }

    fn __radd__(&self, o: ScalarLike) -> PyResult<Self> {
        self.__add__(o)
    }

    fn __sub__(&self, o: ScalarLike) -> PyResult<Self> {
        Ok(Scalar(self.0.sub(&o.get()?)))
    }

    fn __rsub__(&self, o: ScalarLike) -> PyResult<Self> {
        Ok(Scalar(o.get()?.sub(&self.0)))
    }

    fn __mul__(&self, o: ScalarLike) -> PyResult<Self> {
        Ok(Scalar(self.0.mul(&o.get()?)))
    }

    fn __rmul__(&self, o: ScalarLike) -> PyResult<Self> {
        self.__mul__(o)
    }

    fn __truediv__(&self, o: ScalarLike) -> PyResult<Self> {
        self.0.div(&o.get()?).map(Scalar).map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn __pow__(&self, e: i32, _modulo: Option<i64>) -> PyResult<Self> {
        self.0.pow(e).map(Scalar).map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn __neg__(&self) -> Self {
        Scalar(self.0.neg())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

fn shape(s: &str) -> PyResult<YoungDiagram> {
    YoungDiagram::parse(s).map_err(err)
}

fn module_spec(kind: &str, n: usize, s: &str) -> PyResult<ModuleSpec> {
    match kind {
        "poly" => Ok(ModuleSpec::poly(n)),
        "murnaghan" => Ok(ModuleSpec::murnaghan(shape(s)?, n)),
        other => Err(PyValueError::new_err(format!("unknown module kind {other:?}"))),
    }
}

/// The polynomial module of rank `n`, or the induced module of a shape.
#[pyclass(name = "Module", frozen)]
struct Module {
    spec: ModuleSpec,
    inner: AnyModule<QtScalar>,
}

impl Module {
    fn vector(&self, text: &str) -> PyResult<bqt_core::vector::Vector<QtScalar>> {
        parse_vector(text, self.inner.rank(), self.inner.tableaux()).map_err(err)
    }

    fn show(&self, v: &bqt_core::vector::Vector<QtScalar>) -> String {
        format_vector(v, self.inner.tableaux())
    }
}

#[pymethods]
impl Module {
    #[new]
    #[pyo3(signature = (n, kind = "poly", shape = ""))]
    fn new(n: usize, kind: &str, shape: &str) -> PyResult<Self> {
        let spec = module_spec(kind, n, shape)?;
        let inner = spec.build::<QtScalar>(()).map_err(err)?;
        Ok(Module { spec, inner })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn __repr__(&self) -> String {
        self.spec.to_string()
    }

    /// Basis vectors of degree `d`, as text.
    fn basis(&self, d: u32) -> Vec<String> {
        self.inner.basis(d).into_iter().map(|k| self.show(&bqt_core::vector::Vector::basis(k))).collect()
    }

    /// Apply a DAHA generator word given as JSON, e.g. `[["T",1],["X",2]]`.
    fn act(&self, word: &str, vector: &str) -> PyResult<String> {
        let j: Value = serde_json::from_str(word).map_err(err)?;
        let w = GeneratorWord::from_json(&j).map_err(err)?;
        w.validate(self.inner.rank()).map_err(err)?;
        Ok(self.show(&apply_word(&self.inner, &self.vector(vector)?, &w).map_err(err)?))
    }

    /// Apply a word in the B operators to a flavor-`k` vector; returns the
    /// new flavor and the image.
    fn act_b(&self, word: &str, vector: &str, k: usize) -> PyResult<(usize, String)> {
        let j: Value = serde_json::from_str(word).map_err(err)?;
        let w = BWord::from_json(&j).map_err(err)?;
        let out = w.apply(&self.inner, &LVector::new(k, self.vector(vector)?)).map_err(err)?;
        Ok((out.k, self.show(&out.v)))
    }

    /// A basis of the flavor-`k`, degree-`d` piece of L(V).
    fn lk_basis(&self, k: usize, d: u32) -> PyResult<Vec<String>> {
        let span = lk_spanning_set(&self.inner, k, d).map_err(err)?;
        let b = extract_basis(&span, k, d).map_err(err)?;
        Ok(b.generators.iter().map(|g| self.show(&g.v)).collect())
    }
}

/// Run a relation suite; returns `(all_pass, reports)`.
#[pyfunction]
#[pyo3(signature = (suite, n, kind = "poly", shape = "", dmax = 2, kmax = None, probabilistic = false, seed = 0))]
#[allow(clippy::too_many_arguments)]
fn check(
    py: Python<'_>,
    suite: &str,
    n: usize,
    kind: &str,
    shape: &str,
    dmax: u32,
    kmax: Option<usize>,
    probabilistic: bool,
    seed: u64,
) -> PyResult<(bool, Py<PyAny>)> {
    let mut cfg = CheckConfig::exact(dmax);
    if let Some(k) = kmax {
        cfg = cfg.k_max(k);
    }
    if probabilistic {
        cfg = cfg.probabilistic(seed);
    }
    let reports = match suite {
        "daha" => check_daha_relations(&module_spec(kind, n, shape)?, &cfg),
        "bqt" => check_bqt_relations(&module_spec(kind, n, shape)?, &cfg),
        "aux" => check_aux_identities(&module_spec(kind, n, shape)?, &cfg),
        "compat" => check_compatibility(&seq_spec(if kind == "poly" { "pol" } else { "mur" }, shape)?, n, &cfg),
        other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
    }
    .map_err(err)?;
    Ok((all_pass(&reports), to_py(py, &reports)?))
}

fn seq_spec(kind: &str, s: &str) -> PyResult<SeqSpec> {
    match kind {
        "pol" => Ok(SeqSpec::Pol),
        "mur" => Ok(SeqSpec::Murnaghan(shape(s)?)),
        other => Err(PyValueError::new_err(format!("unknown sequence {other:?}"))),
    }
}

/// Truncated stable limit of the polynomial or a Murnaghan-type tower.
#[pyclass(name = "Limit", frozen)]
struct Limit(StableLimit);

#[pymethods]
impl Limit {
    #[new]
    #[pyo3(signature = (seq = "pol", shape = "", window = 2, ncap = 8, seed = 0, probabilistic = false))]
    fn new(seq: &str, shape: &str, window: usize, ncap: usize, seed: u64, probabilistic: bool) -> PyResult<Self> {
        let cfg = LimitConfig { window, ncap, seed, probabilistic };
        Ok(Limit(StableLimit::new(seq_spec(seq, shape)?, cfg).map_err(err)?))
    }

    /// Stable dimension, or `None` if the cap was reached first.
    fn dim(&self, k: usize, d: u32) -> PyResult<Option<usize>> {
        Ok(self.0.cell(k, d).map_err(err)?.dim)
    }

    fn n_stabilized(&self, k: usize, d: u32) -> PyResult<Option<usize>> {
        Ok(self.0.cell(k, d).map_err(err)?.n_stabilized)
    }

    fn rows(&self, kmax: usize, dmax: u32) -> PyResult<Vec<Vec<Option<usize>>>> {
        Ok(self.0.dim_table(kmax, dmax).map_err(err)?.rows())
    }

    fn table(&self, py: Python<'_>, kmax: usize, dmax: u32) -> PyResult<Py<PyAny>> {
        to_py(py, &self.0.dim_table(kmax, dmax).map_err(err)?)
    }

    /// Basis towers of the `(k, d)` piece as `(n_lo, [component text])`.
    fn towers(&self, k: usize, d: u32) -> PyResult<Vec<(usize, Vec<String>)>> {
        let (_, ts) = self.0.limit_component(k, d).map_err(err)?;
        Ok(ts.iter().map(|t| (t.n_lo, t.components.iter().enumerate().map(|(i, c)| self.0.format_at(t.n_lo + i, c)).collect())).collect())
    }
}

#[pymodule]
fn bqt(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Scalar>()?;
    m.add_class::<Module>()?;
    m.add_class::<Limit>()?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    Ok(())
}
