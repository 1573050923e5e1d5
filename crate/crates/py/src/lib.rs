//! Python bindings. Results come back as plain dicts and lists mirroring the
//! CLI's JSON records.

use edgering::classifier::{classify_window, lemma_witness as core_lemma, scan as core_scan};
use edgering::graph::format::{parse_graph, write_graph};
use edgering::graph::{even_girth, Side};
use edgering::{Error, FamilyKind, FamilySpec, Limits, SimpleGraph};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(edgering, BudgetError, PyException, "A configured cap was exceeded.");
create_exception!(edgering, AnomalyError, PyException, "An internal consistency check failed.");

fn to_py(e: Error) -> PyErr {
    if e.is_budget() {
        BudgetError::new_err(e.to_string())
    } else if e.is_anomaly() {
        AnomalyError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn cli_to_py(e: edgering_cli::CliError) -> PyErr {
    match e {
        edgering_cli::CliError::Core(e) => to_py(e),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn out<'py, T: Serialize + ?Sized>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    pythonize::pythonize(py, v).map_err(|e| AnomalyError::new_err(e.to_string()))
}

fn limits(budget_cycles: Option<usize>, budget_points: Option<u128>) -> Limits {
    let mut l = Limits::default();
    if let Some(c) = budget_cycles {
        l.cycles = c;
    }
    if let Some(p) = budget_points {
        l.points = p;
    }
    l
}

fn parse_kind(kind: &str) -> PyResult<FamilyKind> {
    match kind {
        "disjoint" => Ok(FamilyKind::DisjointPair),
        "one-common" => Ok(FamilyKind::OneCommonVertex),
        "even" => Ok(FamilyKind::EvenEar),
        "odd" => Ok(FamilyKind::OddEar),
        _ => Err(PyValueError::new_err(format!(
            "unknown family `{kind}`; expected disjoint, one-common, even or odd"
        ))),
    }
}

fn spec(kind: &str, q: usize, k: Option<usize>, m: Option<usize>) -> PyResult<FamilySpec> {
    edgering_cli::family_spec(parse_kind(kind)?, q, k, m).map_err(cli_to_py)
}

/// A simple graph on vertices `1..=n`; edge `i` is the `i`-th pair given.
#[pyclass(name = "Graph", module = "edgering", frozen)]
pub struct PyGraph {
    inner: SimpleGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        SimpleGraph::new(n, edges).map(|inner| PyGraph { inner }).map_err(to_py)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        parse_graph(text).map(|inner| PyGraph { inner }).map_err(to_py)
    }

    /// One of the four witness families: `disjoint`, `one-common`, `even`, `odd`.
    #[staticmethod]
    #[pyo3(signature = (kind, q, k=None, m=None))]
    fn family(kind: &str, q: usize, k: Option<usize>, m: Option<usize>) -> PyResult<Self> {
        let s = spec(kind, q, k, m)?;
        s.build().map(|inner| PyGraph { inner }).map_err(to_py)
    }

    fn to_text(&self) -> String {
        write_graph(&self.inner)
    }

    #[getter]
    fn n_vertices(&self) -> usize {
        self.inner.n_vertices()
    }

    #[getter]
    fn n_edges(&self) -> usize {
        self.inner.n_edges()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn even_girth(&self) -> Option<usize> {
        even_girth(&self.inner)
    }

    fn cycle_rank(&self) -> usize {
        self.inner.structure().cycle_rank
    }

    /// `(left, right)` vertex lists, or `None` for a non-bipartite graph.
    fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let b = self.inner.structure().bipartition?;
        let n = self.inner.n_vertices();
        Some((
            (1..=n).filter(|&v| b.side(v) == Side::Left).collect(),
            (1..=n).filter(|&v| b.side(v) == Side::Right).collect(),
        ))
    }

    fn __len__(&self) -> usize {
        self.inner.n_vertices()
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, {:?})", self.inner.n_vertices(), self.inner.edges())
    }
}

#[pyfunction]
#[pyo3(signature = (graph, budget_cycles=None, budget_points=None))]
fn analyze<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    budget_cycles: Option<usize>,
    budget_points: Option<u128>,
) -> PyResult<Bound<'py, PyAny>> {
    let l = limits(budget_cycles, budget_points);
    let o = py.detach(|| edgering_cli::analyze(&graph.inner, &l)).map_err(cli_to_py)?;
    out(py, &o.record)
}

#[pyfunction]
#[pyo3(signature = (graph, budget_points=None))]
fn hstar_profile<'py>(py: Python<'py>, graph: &PyGraph, budget_points: Option<u128>) -> PyResult<Bound<'py, PyAny>> {
    let l = limits(None, budget_points);
    let profile = py
        .detach(|| edgering::EdgePolytope::new(&graph.inner).and_then(|p| edgering::hstar_profile(&p, &l)))
        .map_err(to_py)?;
    out(py, &profile)
}

/// `β_{i,j}` for `j <= jmax` (default: the edge count, which is complete).
#[pyfunction]
#[pyo3(signature = (graph, jmax=None))]
fn betti_table<'py>(py: Python<'py>, graph: &PyGraph, jmax: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let j = jmax.unwrap_or(graph.inner.n_edges());
    let t = py
        .detach(|| edgering::betti_table(&graph.inner, j, &Limits::default()))
        .map_err(to_py)?;
    out(py, &t)
}

#[pyfunction]
#[pyo3(signature = (graph, verify=true, jmax=None))]
fn classify<'py>(py: Python<'py>, graph: &PyGraph, verify: bool, jmax: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let window = verify.then(|| jmax.unwrap_or(graph.inner.n_edges()));
    let r = py
        .detach(|| classify_window(&graph.inner, window, &Limits::default()))
        .map_err(to_py)?;
    out(py, &r)
}

#[pyfunction]
fn extract_witness<'py>(py: Python<'py>, graph: &PyGraph, q: usize) -> PyResult<Bound<'py, PyAny>> {
    let w = py
        .detach(|| edgering::classifier::extract_witness(&graph.inner, q, &Limits::default()))
        .map_err(to_py)?;
    out(py, &w)
}

#[pyfunction]
#[pyo3(signature = (kind, q, k=None, m=None))]
fn lemma_witness<'py>(
    py: Python<'py>,
    kind: &str,
    q: usize,
    k: Option<usize>,
    m: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let s = spec(kind, q, k, m)?;
    let r = py.detach(|| core_lemma(&s, &Limits::default())).map_err(to_py)?;
    out(py, &r)
}

#[pyfunction]
#[pyo3(signature = (nmax, verify_budget=14))]
fn scan<'py>(py: Python<'py>, nmax: usize, verify_budget: usize) -> PyResult<Bound<'py, PyAny>> {
    let r = py
        .detach(|| core_scan(nmax, verify_budget, &Limits::default()))
        .map_err(to_py)?;
    out(py, &r)
}

/// Relative-interior test of `b` in the `r`-th dilation of the edge polytope.
#[pyfunction]
fn membership<'py>(py: Python<'py>, graph: &PyGraph, b: Vec<i64>, r: usize) -> PyResult<Bound<'py, PyAny>> {
    let c = edgering::EdgePolytope::new(&graph.inner)
        .and_then(|p| edgering::membership(&p, &b, r))
        .map_err(to_py)?;
    out(py, &c)
}

/// Edge labels summing to `b`, or `None` when `b` is not in the semigroup.
#[pyfunction]
fn semigroup_member(graph: &PyGraph, b: Vec<i64>) -> PyResult<Option<Vec<usize>>> {
    edgering::semigroup_member(&graph.inner, &b).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (graph, t, budget_points=None))]
fn lattice_points(graph: &PyGraph, t: usize, budget_points: Option<u128>) -> PyResult<Vec<Vec<i64>>> {
    let l = limits(None, budget_points);
    let p = edgering::EdgePolytope::new(&graph.inner).map_err(to_py)?;
    let pts = edgering::lattice_points(&p, t, &l).map_err(to_py)?;
    Ok(pts.into_iter().map(|v| v.into_inner()).collect())
}

#[pymodule]
#[pyo3(name = "edgering")]
fn edgering_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add("BudgetError", m.py().get_type::<BudgetError>())?;
    m.add("AnomalyError", m.py().get_type::<AnomalyError>())?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(hstar_profile, m)?)?;
    m.add_function(wrap_pyfunction!(betti_table, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(extract_witness, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_witness, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    m.add_function(wrap_pyfunction!(membership, m)?)?;
    m.add_function(wrap_pyfunction!(semigroup_member, m)?)?;
    m.add_function(wrap_pyfunction!(lattice_points, m)?)?;
    Ok(())
}
