//! Python bindings: the `critbase` extension module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use critbase_core::cli::commands::{parse_h, parse_word};
use critbase_core::critical::{self, Settings, Status};
use critbase_core::expand::{self, Alphabet};
use critbase_core::numeric::{parse_rational, Rational, Real};
use critbase_core::words::{self, AdmissibleSeq};

fn value_error(e: critbase_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Reads an int, float or string such as `"7/3"` as an exact rational.
fn rational(x: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(&x.str()?.to_string()).map_err(value_error)
}

fn settings(tol: &str, max_depth: usize, allow_small_m: bool) -> PyResult<Settings> {
    Ok(Settings { tol: parse_rational(tol).map_err(value_error)?, max_depth, allow_small_m })
}

fn binary_word(pre: &str, per: &str) -> PyResult<words::BinaryEpw> {
    words::binary(pre, per).map_err(value_error)
}

#[pyclass(name = "CriticalResult", module = "critbase", frozen, get_all)]
pub struct PyCriticalResult {
    m: String,
    kind: String,
    h: Vec<u64>,
    d: String,
    d_period: Option<String>,
    p_prime: f64,
    p_double_prime: f64,
    p: f64,
    big_p: f64,
    p_exact: Option<String>,
    big_p_exact: Option<String>,
    in_c: String,
    resolved: bool,
    small_m: bool,
    bracket: Option<(f64, f64)>,
}

#[pymethods]
impl PyCriticalResult {
    fn __repr__(&self) -> String {
        format!("CriticalResult(m={}, d={}, p={:.12}, P={:.12}, in_C={})", self.m, self.d, self.p, self.big_p, self.in_c)
    }
}

impl From<critical::CriticalResult> for PyCriticalResult {
    fn from(r: critical::CriticalResult) -> Self {
        let d_period = r.d.word().ok().filter(|w| w.is_purely_periodic()).map(|w| w.period().iter().map(u8::to_string).collect());
        PyCriticalResult {
            m: r.m.to_string(),
            kind: r.d.kind_name().to_string(),
            h: r.d.h().to_vec(),
            d: r.d.to_string(),
            d_period,
            p_prime: r.p_prime.to_f64(),
            p_double_prime: r.p_double_prime.to_f64(),
            p: r.p.to_f64(),
            big_p: r.big_p.to_f64(),
            p_exact: r.p.symbolic(),
            big_p_exact: r.big_p.symbolic(),
            in_c: r.in_c.to_string(),
            resolved: r.status == Status::Resolved,
            small_m: r.small_m,
            bracket: r.bracket.map(|(a, b)| (a.to_f64(), b.to_f64())),
        }
    }
}

#[pyclass(name = "ComponentInterval", module = "critbase", frozen, get_all)]
pub struct PyComponentInterval {
    d: String,
    h: Vec<u64>,
    m_d: f64,
    mu_d: f64,
    big_m_d: f64,
    m_d_exact: Option<String>,
    mu_d_exact: Option<String>,
    big_m_d_exact: Option<String>,
}

#[pymethods]
impl PyComponentInterval {
    fn __repr__(&self) -> String {
        format!("ComponentInterval(d={}, m_d={:.12}, mu_d={:.12}, M_d={:.12})", self.d, self.m_d, self.mu_d, self.big_m_d)
    }
}

#[pyclass(name = "ExpansionReport", module = "critbase", frozen, get_all)]
pub struct PyExpansionReport {
    unique: bool,
    violation_position: Option<usize>,
    violation_condition: Option<u8>,
}

#[pymethods]
impl PyExpansionReport {
    fn __bool__(&self) -> bool {
        self.unique
    }

    fn __repr__(&self) -> String {
        match (self.violation_position, self.violation_condition) {
            (Some(n), Some(c)) => format!("ExpansionReport(unique=False, position={n}, condition={c})"),
            _ => "ExpansionReport(unique=True)".into(),
        }
    }
}

/// The critical base `p_m` of `{0, 1, m}` with the attached sequence.
#[pyfunction]
#[pyo3(signature = (m, tol = "1e-12", max_depth = 64, allow_small_m = false))]
fn p_m(m: &Bound<'_, PyAny>, tol: &str, max_depth: usize, allow_small_m: bool) -> PyResult<PyCriticalResult> {
    let m = rational(m)?;
    let s = settings(tol, max_depth, allow_small_m)?;
    critical::p_m(&m, &s).map(Into::into).map_err(value_error)
}

/// One row per integer `m` in `[lo, hi]`.
#[pyfunction]
#[pyo3(signature = (lo, hi, tol = "1e-12", max_depth = 64))]
fn table(py: Python<'_>, lo: u64, hi: u64, tol: &str, max_depth: usize) -> PyResult<Vec<PyCriticalResult>> {
    let s = settings(tol, max_depth, false)?;
    let rows = py.detach(|| critical::table(lo, hi, &s)).map_err(value_error)?;
    Ok(rows.into_iter().map(Into::into).collect())
}

/// `G_A` of a three-letter alphabet such as `"0,2,3"`.
#[pyfunction]
#[pyo3(signature = (alphabet, tol = "1e-12", max_depth = 64))]
fn ternary_g(alphabet: &str, tol: &str, max_depth: usize) -> PyResult<PyCriticalResult> {
    let a = Alphabet::parse(alphabet).map_err(value_error)?;
    critical::ternary_g(&a, &settings(tol, max_depth, false)?).map(Into::into).map_err(value_error)
}

/// `P_m = 1 + sqrt(m/(m-1))` as `(value, exact form)`.
#[pyfunction]
fn big_p(m: &Bound<'_, PyAny>) -> PyResult<(f64, String)> {
    let p = critical::big_p(&rational(m)?).map_err(value_error)?;
    Ok((p.to_f64(), p.symbolic()))
}

/// `m_d`, `mu_d`, `M_d` for `d = S(N,1)^inf`; an empty `h` means `0^inf`.
#[pyfunction]
#[pyo3(signature = (h, tol = "1e-12"))]
fn component_interval(h: Vec<u64>, tol: &str) -> PyResult<PyComponentInterval> {
    let d = if h.is_empty() { AdmissibleSeq::Zero } else { AdmissibleSeq::finite(h.clone()).map_err(value_error)? };
    let tol = parse_rational(tol).map_err(value_error)?;
    let c = critical::component_interval(&d, &tol).map_err(value_error)?;
    let exact = |r: &Real| r.symbolic();
    Ok(PyComponentInterval {
        d: c.d.to_string(),
        h,
        m_d: c.m_d.to_f64(),
        mu_d: c.mu_d.to_f64(),
        big_m_d: c.big_m_d.to_f64(),
        m_d_exact: exact(&c.m_d),
        mu_d_exact: exact(&c.mu_d),
        big_m_d_exact: exact(&c.big_m_d),
    })
}

/// `"yes"`, `"no"` or `"depth-limited"`.
#[pyfunction]
#[pyo3(signature = (m, max_depth = 64))]
fn in_cantor(m: &Bound<'_, PyAny>, max_depth: usize) -> PyResult<String> {
    critical::in_cantor(&rational(m)?, max_depth).map(|x| x.to_string()).map_err(value_error)
}

/// Uniqueness of `pre (per)^inf` in base `q` over a comma-separated alphabet.
#[pyfunction]
fn is_unique(q: &Bound<'_, PyAny>, alphabet: &str, pre: &str, per: &str) -> PyResult<PyExpansionReport> {
    let a = Alphabet::parse(alphabet).map_err(value_error)?;
    let c = parse_word(pre, per).map_err(value_error)?;
    let report = expand::is_unique(&c, &rational(q)?, &a).map_err(value_error)?;
    let v = report.first_violation;
    Ok(PyExpansionReport {
        unique: report.unique,
        violation_position: v.as_ref().map(|v| v.position),
        violation_condition: v.as_ref().map(|v| v.condition),
    })
}

/// Critical base of one sequence with `(position, condition, threshold)` for
/// every condition of the uniqueness test.
#[pyfunction]
#[pyo3(signature = (alphabet, pre, per, tol = "1e-12"))]
fn critical_base(alphabet: &str, pre: &str, per: &str, tol: &str) -> PyResult<(f64, Vec<(usize, u8, f64)>)> {
    let a = Alphabet::parse(alphabet).map_err(value_error)?;
    let c = parse_word(pre, per).map_err(value_error)?;
    let tol = parse_rational(tol).map_err(value_error)?;
    let qc = expand::critical_base_of_sequence(&c, &a, &tol).map_err(value_error)?;
    let q_max = a.q_max();
    let roots = qc.conditions.iter().map(|r| (r.position, r.condition, r.value(&q_max).to_f64())).collect();
    Ok((qc.value.to_f64(), roots))
}

/// Whether the binary word `pre (per)^inf` is admissible.
#[pyfunction]
fn is_admissible(pre: &str, per: &str) -> PyResult<bool> {
    Ok(words::is_admissible(&binary_word(pre, per)?))
}

/// Type and h-parameters of an admissible binary word.
#[pyfunction]
#[pyo3(signature = (pre, per, max_depth = 64))]
fn classify(pre: &str, per: &str, max_depth: usize) -> PyResult<(String, Vec<u64>)> {
    let d = words::classify(&binary_word(pre, per)?, max_depth).map_err(value_error)?;
    Ok((d.kind_name().to_string(), d.h().to_vec()))
}

/// Preperiod and period of `S(N,1)^inf` for comma-separated h-parameters.
#[pyfunction]
fn materialize(h: &str) -> PyResult<(String, String)> {
    let d = AdmissibleSeq::finite(parse_h(h).map_err(value_error)?).map_err(value_error)?;
    let w = d.word().map_err(value_error)?;
    let bits = |b: &[u8]| b.iter().map(u8::to_string).collect();
    Ok((bits(w.preperiod()), bits(w.period())))
}

#[pymodule]
fn critbase(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCriticalResult>()?;
    m.add_class::<PyComponentInterval>()?;
    m.add_class::<PyExpansionReport>()?;
    m.add_function(wrap_pyfunction!(p_m, m)?)?;
    m.add("critical", m.getattr("p_m")?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(ternary_g, m)?)?;
    m.add_function(wrap_pyfunction!(big_p, m)?)?;
    m.add_function(wrap_pyfunction!(component_interval, m)?)?;
    m.add_function(wrap_pyfunction!(in_cantor, m)?)?;
    m.add_function(wrap_pyfunction!(is_unique, m)?)?;
    m.add_function(wrap_pyfunction!(critical_base, m)?)?;
    m.add_function(wrap_pyfunction!(is_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(materialize, m)?)?;
    Ok(())
}
