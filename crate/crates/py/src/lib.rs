use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use totdom::families::{self, F1Params, F3Added, F3Case, FamilyWitness};
use totdom::verify::{self as tv, GraphSource, Theorem, VerifyOptions};

create_exception!(totdom_py, BudgetError, PyException);

fn err(e: totdom::Error) -> PyErr {
    match e {
        totdom::Error::Budget { .. } => BudgetError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_u64() {
            Some(u) => u.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or_default().into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(xs) => {
            let items = xs.iter().map(|x| to_py(py, x)).collect::<PyResult<Vec<_>>>()?;
            PyList::new(py, items)?.into_any()
        }
        Value::Object(map) => {
            let d = PyDict::new(py);
            for (k, x) in map {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn json_to_py<'py, T: serde::Serialize>(py: Python<'py>, x: &T) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &serde_json::to_value(x).map_err(|e| PyValueError::new_err(e.to_string()))?)
}

/// Simple undirected graph on at most 64 vertices.
#[pyclass(name = "Graph", module = "totdom_py", eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: totdom::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: totdom::Graph::from_edges(n, &edges).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = totdom::parse_graph6(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyGraph { inner })
    }

    fn graph6(&self) -> String {
        totdom::to_graph6(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn in_class_c(&self) -> bool {
        self.inner.in_class_c()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> PyResult<bool> {
        totdom::is_isomorphic(&self.inner, &other.inner).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Graph({:?})", self.graph6())
    }
}

/// Direction for every edge of a graph.
#[pyclass(name = "Orientation", module = "totdom_py", skip_from_py_object)]
#[derive(Clone)]
struct PyOrientation {
    inner: totdom::Orientation,
}

#[pymethods]
impl PyOrientation {
    #[new]
    fn new(graph: &PyGraph, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyOrientation {
            inner: totdom::Orientation::from_arcs(&graph.inner, &arcs).map_err(err)?,
        })
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs()
    }

    fn is_valid(&self) -> bool {
        self.inner.is_valid()
    }

    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.base().clone(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Orientation({:?})", self.inner.arcs())
    }
}

/// Total domination number and one minimum set.
#[pyfunction]
fn gamma_t(d: &PyOrientation) -> PyResult<(usize, Vec<usize>)> {
    let sol = totdom::gamma_t(&d.inner).map_err(err)?;
    Ok((sol.size, sol.witness.to_vec()))
}

/// `(dom_t, DOM_t)` by exhaustive orientation enumeration.
#[pyfunction]
fn domt_range(g: &PyGraph) -> PyResult<(usize, usize)> {
    let r = totdom::domt_range(&g.inner).map_err(err)?;
    Ok((r.lower, r.upper))
}

/// Valid orientation attaining `dom_t` and one attaining `DOM_t`.
#[pyfunction]
fn domt_witnesses(g: &PyGraph) -> PyResult<(PyOrientation, PyOrientation)> {
    let r = totdom::domt_range(&g.inner).map_err(err)?;
    Ok((PyOrientation { inner: r.argmin }, PyOrientation { inner: r.argmax }))
}

/// Theorem-class witness as a dict, or None.
#[pyfunction]
fn recognize<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    json_to_py(py, &families::recognize_theorem_class(&g.inner))
}

#[pyfunction]
fn recognize_result1_class<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    json_to_py(py, &families::recognize_result1_class(&g.inner))
}

/// Extremal orientation from the recognizer's witness; None outside the
/// theorem class.
#[pyfunction]
fn extremal_orientation(g: &PyGraph) -> PyResult<Option<PyOrientation>> {
    let Some(w) = families::recognize_theorem_class(&g.inner) else {
        return Ok(None);
    };
    let inner = families::extremal_orientation_for(&g.inner, &w).map_err(err)?;
    Ok(Some(PyOrientation { inner }))
}

#[pyfunction]
fn exists_extremal_orientation(g: &PyGraph) -> PyResult<Option<PyOrientation>> {
    let s = totdom::exists_extremal_orientation(&g.inner).map_err(err)?;
    Ok(s.orientation.map(|inner| PyOrientation { inner }))
}

/// Named graph and its drawn orientations.
#[pyfunction]
fn fixture(name: &str) -> PyResult<(PyGraph, Vec<(String, PyOrientation)>)> {
    let f = totdom::fixture(name).map_err(err)?;
    let named = f
        .orientations
        .into_iter()
        .map(|(n, inner)| (n.to_string(), PyOrientation { inner }))
        .collect();
    Ok((PyGraph { inner: f.graph }, named))
}

fn generated<'py>(py: Python<'py>, g: totdom::Graph, w: FamilyWitness) -> PyResult<(PyGraph, Bound<'py, PyAny>)> {
    Ok((PyGraph { inner: g }, json_to_py(py, &w)?))
}

#[pyfunction]
#[pyo3(signature = (k, cycles = Vec::new(), links = Vec::new(), chords = Vec::new()))]
fn generate_f1<'py>(
    py: Python<'py>,
    k: usize,
    cycles: Vec<usize>,
    links: Vec<usize>,
    chords: Vec<usize>,
) -> PyResult<(PyGraph, Bound<'py, PyAny>)> {
    let (g, w) = families::generate_f1(&F1Params { k, cycle_lengths: cycles, links, chords }).map_err(err)?;
    generated(py, g, FamilyWitness::F1(w))
}

#[pyfunction]
fn generate_f2<'py>(py: Python<'py>, cycles: Vec<usize>, links: Vec<usize>) -> PyResult<(PyGraph, Bound<'py, PyAny>)> {
    let (g, w) = families::generate_f2(&cycles, &links).map_err(err)?;
    generated(py, g, FamilyWitness::F2(w))
}

#[pyfunction]
#[pyo3(signature = (k, case, cycles = Vec::new(), links = Vec::new(), chords = Vec::new(), to = None))]
fn generate_f3<'py>(
    py: Python<'py>,
    k: usize,
    case: &str,
    cycles: Vec<usize>,
    links: Vec<usize>,
    chords: Vec<usize>,
    to: Option<usize>,
) -> PyResult<(PyGraph, Bound<'py, PyAny>)> {
    let case = F3Case::from_tag(case).ok_or_else(|| PyValueError::new_err(format!("unknown case {case:?}")))?;
    let need = || to.ok_or_else(|| PyValueError::new_err(format!("`to` is required for {}", case.tag())));
    let added = match case {
        F3Case::SingleEdge => F3Added::Single(need()?),
        F3Case::DwkAtLeast4 | F3Case::Dwk3ViaWk | F3Case::Dwk2ViaWk => F3Added::ViaWk(need()?),
        F3Case::Dwk3ViaXy => F3Added::ViaXy,
        F3Case::Dwk2ViaX => F3Added::ViaX(need()?),
    };
    let params = F1Params { k, cycle_lengths: cycles, links, chords };
    let (g, w) = families::generate_f3(&params, &added).map_err(err)?;
    generated(py, g, FamilyWitness::F3(w))
}

/// Runs a verification pipeline and returns its summary dict. `graphs`
/// replaces the built-in enumeration when given.
#[pyfunction]
#[pyo3(signature = (theorem, max_n = 6, workers = 1, graphs = None, trials = 100, seed = 0))]
fn verify<'py>(
    py: Python<'py>,
    theorem: &str,
    max_n: usize,
    workers: usize,
    graphs: Option<Vec<PyGraph>>,
    trials: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let theorem: Theorem = theorem.parse().map_err(err)?;
    let source = match graphs {
        Some(gs) => GraphSource::Graphs(gs.into_iter().map(|g| g.inner).collect()),
        None => GraphSource::Builtin { max_n },
    };
    let opts = VerifyOptions { workers, trials, seed, ..VerifyOptions::default() };
    let report = py.detach(|| tv::verify(theorem, &source, &opts)).map_err(err)?;
    to_py(py, &report.summary(true))
}

#[pymodule]
fn totdom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyOrientation>()?;
    m.add("BudgetError", m.py().get_type::<BudgetError>())?;
    m.add_function(wrap_pyfunction!(gamma_t, m)?)?;
    m.add_function(wrap_pyfunction!(domt_range, m)?)?;
    m.add_function(wrap_pyfunction!(domt_witnesses, m)?)?;
    m.add_function(wrap_pyfunction!(recognize, m)?)?;
    m.add_function(wrap_pyfunction!(recognize_result1_class, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_orientation, m)?)?;
    m.add_function(wrap_pyfunction!(exists_extremal_orientation, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(generate_f1, m)?)?;
    m.add_function(wrap_pyfunction!(generate_f2, m)?)?;
    m.add_function(wrap_pyfunction!(generate_f3, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
