use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use mixnull::characterization::{attains_upper, cycle_rank as table_cycle_rank, nullity_bounds};
use mixnull::families::{gen_cycle as make_cycle, gen_family as make_family, gen_for_k, FamilySpec};
use mixnull::invariants::{matching_number, ped, ped_closure};
use mixnull::verify::{verify_all, EnumerationScope};

fn value_error(e: mixnull::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A mixed graph: each edge undirected or oriented.
#[pyclass(name = "MixedGraph", module = "mixnull", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMixedGraph(mixnull::MixedGraph);

#[pymethods]
impl PyMixedGraph {
    /// Builds a graph from `(u, v, state)` triples with state `"u"`, `"f"` or `"b"`.
    #[new]
    fn new(order: usize, edges: Vec<(usize, usize, char)>) -> PyResult<Self> {
        let mut triples = Vec::with_capacity(edges.len());
        for (u, v, s) in edges {
            let state = mixnull::EdgeState::from_symbol(s)
                .ok_or_else(|| PyValueError::new_err(format!("unknown edge state {s:?}")))?;
            triples.push((u, v, state));
        }
        mixnull::MixedGraph::new(order, triples).map(Self).map_err(value_error)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_error)
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn edges(&self) -> Vec<(usize, usize, char)> {
        self.0.edges().iter().map(|e| (e.u, e.v, e.state.symbol())).collect()
    }

    fn rank(&self) -> usize {
        mixnull::linalg::rank(&self.0)
    }

    fn nullity(&self) -> usize {
        mixnull::linalg::nullity(&self.0)
    }

    /// `(rank, nullity, positive, negative)`.
    fn inertia(&self) -> (usize, usize, usize, usize) {
        let s = mixnull::spectrum(&self.0);
        (s.rank, s.nullity, s.positive, s.negative)
    }

    fn matching_number(&self) -> usize {
        matching_number(&self.0.underlying()).0
    }

    /// `(lower, upper, eta, s)`.
    fn bounds(&self) -> (i64, i64, i64, i64) {
        let b = nullity_bounds(&self.0);
        (b.lower, b.upper, b.eta, b.s)
    }

    fn attains_upper(&self) -> bool {
        attains_upper(&self.0).attains
    }

    /// The full analysis report as a JSON string.
    fn analyze(&self) -> String {
        serde_json::to_string(&mixnull::report::analyze(&self.0)).expect("report serialises")
    }

    fn ped(&self) -> PyResult<Self> {
        ped(&self.0).map(|s| Self(s.graph)).map_err(value_error)
    }

    fn ped_closure(&self) -> Self {
        Self(ped_closure(&self.0))
    }

    fn __str__(&self) -> String {
        self.0.to_text()
    }

    fn __repr__(&self) -> String {
        format!("MixedGraph(order={}, size={})", self.0.order(), self.0.size())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

#[pyfunction]
fn gen_cycle(n: usize, sigma: usize) -> PyResult<PyMixedGraph> {
    make_cycle(n, sigma).map(PyMixedGraph).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (s1, s2, s3, seed = 0))]
fn gen_family(s1: usize, s2: usize, s3: usize, seed: u64) -> PyResult<PyMixedGraph> {
    let spec = FamilySpec::new(s1, s2, s3).with_seed(seed);
    make_family(&spec).map(PyMixedGraph).map_err(value_error)
}

/// `(s1, s2, s3)` reaching deficiency `k` with cyclomatic number `c`.
#[pyfunction]
fn family_for_k(c: usize, k: usize) -> PyResult<(usize, usize, usize)> {
    gen_for_k(c, k).map(|s| (s.s1, s.s2, s.s3)).map_err(value_error)
}

#[pyfunction]
fn cycle_rank(n: usize, sigma: usize) -> PyResult<usize> {
    table_cycle_rank(n, sigma).map_err(value_error)
}

/// Verification report for connected graphs up to `n_max` vertices and
/// `e_max` edges, as a JSON string.
#[pyfunction]
#[pyo3(signature = (n_max, e_max, jobs = 1))]
fn verify(py: Python<'_>, n_max: usize, e_max: usize, jobs: usize) -> PyResult<String> {
    let scope = EnumerationScope::new(n_max, e_max);
    let report = py.detach(|| verify_all(&scope, jobs)).map_err(value_error)?;
    Ok(report.to_json())
}

#[pymodule(name = "mixnull")]
fn mixnull_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMixedGraph>()?;
    m.add_function(wrap_pyfunction!(gen_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(gen_family, m)?)?;
    m.add_function(wrap_pyfunction!(family_for_k, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_rank, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
