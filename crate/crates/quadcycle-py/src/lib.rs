//! Python bindings: a thin functional surface over the quadcycle library.
//!
//! Cycles and reports cross the boundary as plain dicts/tuples so callers
//! need no wrapper classes; errors become `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use quadcycle::{Branch, LogisticParameter, Parameter, SweepConfig};

fn domain_err(e: quadcycle::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parameter(c: f64) -> PyResult<Parameter> {
    Parameter::new(c).map_err(domain_err)
}

fn logistic_parameter(r: f64) -> PyResult<LogisticParameter> {
    LogisticParameter::new(r).map_err(domain_err)
}

fn branch_from(name: &str) -> PyResult<Branch> {
    Branch::parse(name).ok_or_else(|| {
        PyValueError::new_err(format!("unknown branch {name:?}: expected 'tilde' or 'doubletilde'"))
    })
}

/// f_c(x) = x^2 + c.
#[pyfunction]
fn eval_f(c: f64, x: f64) -> PyResult<f64> {
    Ok(quadcycle::eval_f(parameter(c)?, x))
}

/// n-fold iterate of f_c starting at x0.
#[pyfunction]
fn iterate(c: f64, x0: f64, n: u32) -> PyResult<f64> {
    Ok(quadcycle::iterate(parameter(c)?, x0, n))
}

/// Fixed points (p1, p2) of f_c, or None when c > 1/4.
#[pyfunction]
fn fixed_points(c: f64) -> PyResult<Option<(f64, f64)>> {
    Ok(quadcycle::fixed_points(parameter(c)?).map(|f| (f.p1, f.p2)))
}

/// True when 3-cycles exist, i.e. c <= -7/4.
#[pyfunction]
fn has_cycles(c: f64) -> PyResult<bool> {
    Ok(quadcycle::existence_condition(parameter(c)?))
}

fn cycle_dict<'py>(
    py: Python<'py>,
    c: Parameter,
    cycle: &quadcycle::Cycle3,
) -> PyResult<Bound<'py, PyDict>> {
    let triple = quadcycle::symmetric_triple(c, cycle.branch).map_err(domain_err)?;
    let cubic = quadcycle::cycle_cubic(c, cycle.branch).map_err(domain_err)?;
    let report = quadcycle::classify(c, cycle).map_err(domain_err)?;
    let discriminant =
        quadcycle::cubic_discriminant_closed_form(c, cycle.branch).map_err(domain_err)?;

    let dict = PyDict::new(py);
    dict.set_item("branch", cycle.branch.name())?;
    dict.set_item("s", (triple.s1, triple.s2, triple.s3))?;
    dict.set_item("cubic", (cubic.b, cubic.c2, cubic.d))?;
    dict.set_item("roots", cycle.components())?;
    dict.set_item("multiplier", report.multiplier)?;
    dict.set_item("stability", report.class.name())?;
    dict.set_item("stable", report.class.is_stable())?;
    dict.set_item("discriminant", discriminant)?;
    Ok(dict)
}

/// All 3-cycles at parameter c (empty list when c > -7/4), each as a dict
/// with branch, symmetric functions, cubic coefficients, orbit-ordered
/// roots, multiplier, stability class, and discriminant.
#[pyfunction]
fn cycles(py: Python<'_>, c: f64) -> PyResult<Py<PyList>> {
    let p = parameter(c)?;
    let dicts = quadcycle::cycles_for(p)
        .iter()
        .map(|cycle| cycle_dict(py, p, cycle))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(PyList::new(py, dicts)?.unbind())
}

/// Orbit-ordered components of one branch's cycle at parameter c.
#[pyfunction]
fn solve_cycle(c: f64, branch: &str) -> PyResult<(f64, f64, f64)> {
    let p = parameter(c)?;
    let wanted = branch_from(branch)?;
    quadcycle::cycles_for(p)
        .into_iter()
        .find(|cycle| cycle.branch == wanted)
        .map(|cycle| (cycle.x1, cycle.x2, cycle.x3))
        .ok_or_else(|| domain_err(quadcycle::Error::NoCycle { c }))
}

/// The stability-flip parameter: the real root of 64c^3+128c^2+72c+81.
#[pyfunction]
fn c_tilde() -> f64 {
    quadcycle::c_tilde().value()
}

/// Open interval (c_tilde, -7/4) on which the doubletilde cycle attracts.
#[pyfunction]
fn stability_window() -> (f64, f64) {
    quadcycle::stability_window()
}

/// Quadratic parameter conjugate to logistic parameter r: c = -r(r-2)/4.
#[pyfunction]
fn c_of_r(r: f64) -> PyResult<f64> {
    Ok(quadcycle::c_of_r(logistic_parameter(r)?).value())
}

/// Both logistic parameters conjugate to c, ascending, or None when the
/// square root is not real.
#[pyfunction]
fn r_of_c(c: f64) -> PyResult<Option<(f64, f64)>> {
    Ok(quadcycle::r_of_c(parameter(c)?))
}

/// 3-cycles of the logistic map r*y*(1-y) with stability, pulled back
/// through the conjugacy.
#[pyfunction]
fn logistic_cycles(py: Python<'_>, r: f64) -> PyResult<Py<PyList>> {
    let cycles = quadcycle::logistic_cycles(logistic_parameter(r)?).map_err(domain_err)?;
    let dicts = cycles
        .iter()
        .map(|cycle| {
            let dict = PyDict::new(py);
            dict.set_item("branch", cycle.branch.name())?;
            dict.set_item("orbit", cycle.components())?;
            dict.set_item("multiplier", cycle.report.multiplier)?;
            dict.set_item("stability", cycle.report.class.name())?;
            dict.set_item("stable", cycle.report.class.is_stable())?;
            Ok(dict)
        })
        .collect::<PyResult<Vec<_>>>()?;
    Ok(PyList::new(py, dicts)?.unbind())
}

/// Logistic r-intervals with a stable 3-cycle, as
/// ((lower_lo, lower_hi), (upper_lo, upper_hi)).
#[pyfunction]
fn logistic_stable_window() -> ((f64, f64), (f64, f64)) {
    let window = quadcycle::logistic_stable_window();
    (window.lower_interval(), window.upper_interval())
}

/// Full analysis report for parameter c as a JSON string (schema 1).
#[pyfunction]
fn analyze_json(c: f64) -> PyResult<String> {
    Ok(quadcycle::analyze(parameter(c)?).to_json())
}

/// Bifurcation sweep as CSV text (header `c,x`).
#[pyfunction]
#[pyo3(signature = (c_min=-2.0, c_max=0.0, samples=2000, transient=1000, keep=200, x0=0.0))]
fn bifurcation_csv(
    c_min: f64,
    c_max: f64,
    samples: usize,
    transient: u32,
    keep: usize,
    x0: f64,
) -> PyResult<String> {
    let config = SweepConfig { c_min, c_max, samples, transient, keep, x0 };
    let rows = quadcycle::sweep(&config).map_err(domain_err)?;
    Ok(quadcycle::csv_string(&rows))
}

/// Runs the randomized self-verification suites; returns a list of
/// (name, trials, failures, first_failure) tuples.
#[pyfunction]
#[pyo3(signature = (seed=42, trials=100))]
fn verify(seed: u64, trials: u32) -> Vec<(String, u32, u32, Option<String>)> {
    quadcycle::run_all(seed, trials)
        .into_iter()
        .map(|r| (r.name.to_owned(), r.trials, r.failures, r.first_failure))
        .collect()
}

/// C-style `%.12g` rendering used by the CSV output.
#[pyfunction]
fn format_g12(x: f64) -> String {
    quadcycle::format_g12(x)
}

#[pymodule]
fn quadcycle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(eval_f, m)?)?;
    m.add_function(wrap_pyfunction!(iterate, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_points, m)?)?;
    m.add_function(wrap_pyfunction!(has_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(cycles, m)?)?;
    m.add_function(wrap_pyfunction!(solve_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(c_tilde, m)?)?;
    m.add_function(wrap_pyfunction!(stability_window, m)?)?;
    m.add_function(wrap_pyfunction!(c_of_r, m)?)?;
    m.add_function(wrap_pyfunction!(r_of_c, m)?)?;
    m.add_function(wrap_pyfunction!(logistic_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(logistic_stable_window, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_json, m)?)?;
    m.add_function(wrap_pyfunction!(bifurcation_csv, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(format_g12, m)?)?;
    m.add("EXISTENCE_THRESHOLD", quadcycle::EXISTENCE_THRESHOLD)?;
    m.add("SCHEMA_VERSION", quadcycle::SCHEMA_VERSION)?;
    Ok(())
}
