//! Python bindings: `import tbchar`.

use num_bigint::BigInt;
use pyo3::exceptions::{PyArithmeticError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use tbchar_core::charvariety::{self, CharacterRingReport};
use tbchar_core::polyring::{ParseError, PolyError};
use tbchar_core::traceengine::{self, Word};
use tbchar_core::{oracle, skeinreduce, ParamError, Polynomial, TwoBridgeParam, Var, VariableSet};

fn poly_err(e: PolyError) -> PyErr {
    match e {
        PolyError::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        PolyError::NotDivisible | PolyError::LeadingCoefficientNotUnit => {
            PyArithmeticError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse_err(e: ParseError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn param_err(e: ParamError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn var_of(p: &Polynomial, name: &str) -> PyResult<Var> {
    p.variable_set()
        .index_of(name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown variable `{name}`")))
}

/// Exact polynomial in `x, xp, y` (or `u, v, w` when `vars="trace"`).
#[pyclass(
    name = "Polynomial",
    module = "tbchar",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyPolynomial {
    inner: Polynomial,
}

impl From<Polynomial> for PyPolynomial {
    fn from(inner: Polynomial) -> Self {
        PyPolynomial { inner }
    }
}

#[pymethods]
impl PyPolynomial {
    #[new]
    #[pyo3(signature = (text, vars = "barred"))]
    fn new(text: &str, vars: &str) -> PyResult<Self> {
        let set = match vars {
            "barred" => VariableSet::Barred,
            "trace" => VariableSet::Trace,
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown variable set `{other}`"
                )))
            }
        };
        Polynomial::parse(text, set)
            .map(Into::into)
            .map_err(parse_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str::<Polynomial>(text)
            .map(Into::into)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    #[getter]
    fn variables(&self) -> [&'static str; 3] {
        self.inner.variable_set().names()
    }

    fn terms(&self) -> Vec<([u32; 3], BigInt)> {
        self.inner.terms().map(|(m, c)| (m.0, c.clone())).collect()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn degree(&self, var: &str) -> PyResult<Option<u32>> {
        Ok(self.inner.degree_in(var_of(&self.inner, var)?))
    }

    fn derivative(&self, var: &str) -> PyResult<Self> {
        Ok(self.inner.derivative(var_of(&self.inner, var)?).into())
    }

    fn evaluate(&self, a: BigInt, b: BigInt, c: BigInt) -> BigInt {
        self.inner.evaluate(&[a, b, c])
    }

    /// Substitutes integers for the named variables; omitted ones stay.
    #[pyo3(signature = (first = None, second = None, third = None))]
    fn specialize(&self, first: Option<i64>, second: Option<i64>, third: Option<i64>) -> Self {
        self.inner.specialize([first, second, third]).into()
    }

    fn divide_exact(&self, other: &PyPolynomial) -> PyResult<Self> {
        self.inner
            .divide_exact(&other.inner)
            .map(Into::into)
            .map_err(poly_err)
    }

    fn div_rem_in_y(&self, other: &PyPolynomial) -> PyResult<(Self, Self)> {
        let (q, r) = self.inner.div_rem_in_y(&other.inner).map_err(poly_err)?;
        Ok((q.into(), r.into()))
    }

    fn is_squarefree_univariate(&self) -> PyResult<bool> {
        self.inner.is_squarefree_univariate().map_err(poly_err)
    }

    fn __add__(&self, other: &PyPolynomial) -> PyResult<Self> {
        self.inner
            .try_add(&other.inner)
            .map(Into::into)
            .map_err(poly_err)
    }

    fn __sub__(&self, other: &PyPolynomial) -> PyResult<Self> {
        self.inner
            .try_sub(&other.inner)
            .map(Into::into)
            .map_err(poly_err)
    }

    fn __mul__(&self, other: &PyPolynomial) -> PyResult<Self> {
        self.inner
            .try_mul(&other.inner)
            .map(Into::into)
            .map_err(poly_err)
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __pow__(&self, exp: u32, modulo: Option<Py<PyAny>>) -> PyResult<Self> {
        if modulo.is_some() {
            return Err(PyValueError::new_err("modular power is not supported"));
        }
        Ok(self.inner.pow(exp).into())
    }

    fn __str__(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({:?})", self.inner.to_text())
    }
}

#[pyclass(
    name = "TwoBridgeParam",
    module = "tbchar",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Hash)]
struct PyParam {
    inner: TwoBridgeParam,
}

#[pymethods]
impl PyParam {
    #[new]
    fn new(twop: i64, q: i64) -> PyResult<Self> {
        TwoBridgeParam::new(twop, q)
            .map(|inner| PyParam { inner })
            .map_err(param_err)
    }

    #[getter]
    fn twop(&self) -> u32 {
        self.inner.twop()
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.p()
    }

    #[getter]
    fn q(&self) -> u32 {
        self.inner.q()
    }

    fn canonical(&self) -> Self {
        PyParam {
            inner: self.inner.canonical(),
        }
    }

    fn is_equivalent(&self, other: &PyParam) -> bool {
        self.inner.is_equivalent(&other.inner)
    }

    fn epsilon_sequence(&self) -> Vec<i32> {
        self.inner
            .epsilon_sequence()
            .iter()
            .map(|s| s.value())
            .collect()
    }

    fn relator_word(&self) -> String {
        self.inner.relator_word().to_string()
    }

    fn presentation(&self) -> String {
        self.inner.presentation().to_string()
    }

    fn __repr__(&self) -> String {
        format!("TwoBridgeParam({}, {})", self.inner.twop(), self.inner.q())
    }
}

#[pyclass(name = "CharacterRingReport", module = "tbchar", frozen)]
struct PyReport {
    inner: CharacterRingReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn eta(&self) -> PyPolynomial {
        self.inner.eta.clone().into()
    }

    #[getter]
    fn eta_ab(&self) -> PyPolynomial {
        self.inner.eta_ab.clone().into()
    }

    #[getter]
    fn eta_nab(&self) -> Option<PyPolynomial> {
        self.inner.eta_nab.clone().map(Into::into)
    }

    /// `(name, passed, detail)` triples.
    #[getter]
    fn checks(&self) -> Vec<(&'static str, bool, String)> {
        self.inner
            .checks
            .iter()
            .map(|c| (c.name, c.passed, c.detail.clone()))
            .collect()
    }

    fn all_passed(&self) -> bool {
        self.inner.all_passed()
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

fn parse_word(text: &str) -> PyResult<Word> {
    text.parse()
        .map_err(|e: traceengine::WordParseError| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
fn eta(param: &PyParam) -> PyPolynomial {
    charvariety::eta(&param.inner).into()
}

#[pyfunction]
fn eta_ab() -> PyPolynomial {
    charvariety::eta_ab().into()
}

#[pyfunction]
fn eta_nab(param: &PyParam) -> PyResult<PyPolynomial> {
    charvariety::eta_nab(&param.inner)
        .map(Into::into)
        .map_err(poly_err)
}

#[pyfunction]
fn chebyshev_s(n: u32) -> PyPolynomial {
    charvariety::chebyshev_s(n).into()
}

#[pyfunction]
fn delta(n: u32) -> PyResult<PyPolynomial> {
    if n == 0 {
        return Err(PyValueError::new_err("delta is indexed from 1"));
    }
    Ok(charvariety::delta(n).into())
}

#[pyfunction]
#[pyo3(signature = (param, samples = 20, seed = 0))]
fn run_checks(param: &PyParam, samples: u64, seed: u64) -> PyReport {
    PyReport {
        inner: charvariety::run_checks(&param.inner, samples, seed),
    }
}

/// Trace polynomial in `u, v, w` of a word such as `"x x' x^-1 x'^-1"`.
#[pyfunction]
fn trace_of_word(word: &str) -> PyResult<PyPolynomial> {
    Ok(traceengine::trace_of_word(&parse_word(word)?).into())
}

#[pyfunction]
fn to_barred(poly: &PyPolynomial) -> PyResult<PyPolynomial> {
    if poly.inner.variable_set() != VariableSet::Trace {
        return Err(PyValueError::new_err("expected a polynomial in u, v, w"));
    }
    Ok(traceengine::to_barred(&poly.inner).into())
}

#[pyfunction]
#[pyo3(signature = (word, samples = 20, seed = 0))]
fn verify_trace_polynomial(word: &str, samples: u64, seed: u64) -> PyResult<bool> {
    Ok(oracle::verify_trace_polynomial(
        &parse_word(word)?,
        samples,
        seed,
    ))
}

#[pyfunction]
fn normal_form(param: &PyParam, poly: &PyPolynomial) -> PyResult<PyPolynomial> {
    skeinreduce::normal_form(&param.inner, &poly.inner)
        .map(Into::into)
        .map_err(poly_err)
}

#[pyfunction]
fn is_zero_in_character_ring(param: &PyParam, poly: &PyPolynomial) -> PyResult<bool> {
    skeinreduce::is_zero_in_character_ring(&param.inner, &poly.inner).map_err(poly_err)
}

#[pyfunction]
fn basis_monomials(param: &PyParam, max_total_degree: u32) -> Vec<[u32; 3]> {
    skeinreduce::basis_monomials(&param.inner, max_total_degree)
        .into_iter()
        .map(|m| m.0)
        .collect()
}

#[pymodule]
fn tbchar(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyParam>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(eta, m)?)?;
    m.add_function(wrap_pyfunction!(eta_ab, m)?)?;
    m.add_function(wrap_pyfunction!(eta_nab, m)?)?;
    m.add_function(wrap_pyfunction!(chebyshev_s, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    m.add_function(wrap_pyfunction!(trace_of_word, m)?)?;
    m.add_function(wrap_pyfunction!(to_barred, m)?)?;
    m.add_function(wrap_pyfunction!(verify_trace_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(is_zero_in_character_ring, m)?)?;
    m.add_function(wrap_pyfunction!(basis_monomials, m)?)?;
    Ok(())
}
