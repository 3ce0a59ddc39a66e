//! Python bindings. Reports cross the boundary as plain dicts built from
//! the same JSON the CLI emits.

use alphaspec::bounds::full_report;
use alphaspec::closed_forms::{srg_alpha_spectrum, SrgParams};
use alphaspec::graph::{parse_graph6, write_graph6};
use alphaspec::verify::{run_suite, SweepConfig, TheoremId};
use alphaspec::{Graph, GraphFamily};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_error)?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A simple undirected graph.
#[pyclass(name = "Graph", module = "alphaspec", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::new(n, edges).map(|inner| Self { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn from_graph6(code: &str) -> PyResult<Self> {
        parse_graph6(code.trim().as_bytes()).map(|inner| Self { inner }).map_err(value_error)
    }

    /// Builds a named family member, e.g. `complete:4` or `petersen`.
    #[staticmethod]
    fn generate(spec: &str) -> PyResult<Self> {
        let family: GraphFamily = spec.parse().map_err(value_error)?;
        family.generate().map(|inner| Self { inner }).map_err(value_error)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees().to_vec()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_regular(&self) -> bool {
        self.inner.is_regular()
    }

    fn graph6(&self) -> PyResult<String> {
        write_graph6(&self.inner).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        match write_graph6(&self.inner) {
            Ok(code) => format!("Graph.from_graph6({code:?})"),
            Err(_) => format!("<Graph order={} size={}>", self.inner.order(), self.inner.size()),
        }
    }
}

/// Eigenvalues of `alpha D + (1 - alpha) A`, largest first.
#[pyfunction]
#[pyo3(signature = (graph, alpha = 0.0))]
fn spectrum(graph: &PyGraph, alpha: f64) -> PyResult<Vec<f64>> {
    alphaspec::spectrum(&graph.inner, alpha).map(|s| s.values).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (graph, alpha = 0.0))]
fn energy(graph: &PyGraph, alpha: f64) -> PyResult<f64> {
    alphaspec::spectrum(&graph.inner, alpha).map(|s| s.energy).map_err(value_error)
}

/// Every bound evaluated on one graph, as a dict.
#[pyfunction]
#[pyo3(signature = (graph, alpha = 0.0))]
fn bounds<'py>(py: Python<'py>, graph: &PyGraph, alpha: f64) -> PyResult<Bound<'py, PyAny>> {
    let report = full_report(&graph.inner, alpha).map_err(value_error)?;
    to_py(py, &report)
}

/// Closed-form spectrum of an srg(n, r, a, c) as `[(value, multiplicity), ...]`.
#[pyfunction]
#[pyo3(signature = (n, r, a, c, alpha = 0.0))]
fn srg_spectrum(n: u64, r: u64, a: u64, c: u64, alpha: f64) -> PyResult<Vec<(f64, usize)>> {
    let params = SrgParams::new(n, r, a, c).map_err(value_error)?;
    let s = srg_alpha_spectrum(params, alpha).map_err(value_error)?;
    Ok(s.as_multiset())
}

/// Runs the exhaustive sweep and returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (n_max = 6, alphas = None, theorems = None, connected_only = false, jobs = None))]
fn verify<'py>(
    py: Python<'py>,
    n_max: usize,
    alphas: Option<Vec<f64>>,
    theorems: Option<Vec<String>>,
    connected_only: bool,
    jobs: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let mut cfg = SweepConfig { n_max, connected_only, jobs, ..SweepConfig::default() };
    if let Some(a) = alphas {
        cfg.alpha_grid = a;
    }
    if let Some(names) = theorems {
        cfg.theorems = names.iter().map(|t| t.parse::<TheoremId>()).collect::<Result<_, _>>().map_err(value_error)?;
    }
    let report = py.detach(|| run_suite(&cfg)).map_err(value_error)?;
    to_py(py, &report)
}

#[pymodule(name = "alphaspec")]
fn alphaspec_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(energy, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(srg_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
