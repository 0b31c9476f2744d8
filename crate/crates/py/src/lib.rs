//! Python bindings: `UnitGraph` and `LinearCode` classes plus module-level
//! helpers mirroring the command line verbs. Distance results cross the
//! boundary as dicts so partial knowledge (lower bounds, budget stops)
//! stays distinguishable from exact values.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use unitgraph_core::code_builder;
use unitgraph_core::distance::{
    self, DistanceResult, DEFAULT_ENUM_BUDGET, DEFAULT_MAX_DEPENDENCY_WEIGHT,
    DEFAULT_SEARCH_OPS_BUDGET,
};
use unitgraph_core::report::{method_name, MetricValue};
use unitgraph_core::ring_zn;
use unitgraph_core::unit_graph::{self, Diameter, Girth};
use unitgraph_core::verify::{self, Budgets};

fn value_err(e: unitgraph_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// `{"method", "exact", "display", "witness_weight"}`: `exact` is None
/// whenever the result is only a bound or an unverified-by-enumeration
/// witness; `display` always carries the full story as a string.
fn distance_dict<'py>(py: Python<'py>, res: &DistanceResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("method", method_name(res.method))?;
    d.set_item("exact", res.exact())?;
    d.set_item("display", MetricValue::from(res).to_string())?;
    let witness_weight = res
        .witness
        .as_ref()
        .map(|w| w.iter().filter(|&&c| c != 0).count());
    d.set_item("witness_weight", witness_weight)?;
    Ok(d)
}

/// The unit graph on Z_n: distinct vertices are adjacent when their sum is
/// invertible mod n.
#[pyclass(name = "UnitGraph", frozen)]
struct PyUnitGraph {
    inner: unit_graph::UnitGraph,
}

#[pymethods]
impl PyUnitGraph {
    #[new]
    fn new(n: u64) -> PyResult<Self> {
        unit_graph::build(n)
            .map(|inner| PyUnitGraph { inner })
            .map_err(value_err)
    }

    #[getter]
    fn n(&self) -> u64 {
        self.inner.n()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    /// Edges as (u, v) pairs with u < v, sorted lexicographically.
    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<u32>> {
        if v >= self.inner.vertex_count() {
            return Err(PyIndexError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.vertex_count() {
            return Err(PyIndexError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    #[getter]
    fn min_degree(&self) -> usize {
        self.inner.min_degree()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_bipartite(&self) -> bool {
        self.inner.bipartition().is_some()
    }

    /// None when the graph is disconnected.
    fn diameter(&self) -> Option<u32> {
        match self.inner.diameter() {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }

    /// None when the graph has no cycle.
    fn girth(&self) -> Option<u32> {
        match self.inner.girth() {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }

    fn edge_connectivity(&self, py: Python<'_>) -> PyResult<usize> {
        py.allow_threads(|| self.inner.edge_connectivity())
            .map_err(value_err)
    }

    /// The q-ary linear code spanned by the rows of the incidence matrix.
    fn code(&self, q: u64) -> PyResult<PyLinearCode> {
        code_builder::code_from_incidence(&self.inner, q)
            .map(|inner| PyLinearCode {
                inner,
                graph: self.inner.clone(),
            })
            .map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "UnitGraph(n={}, edges={})",
            self.inner.n(),
            self.inner.edge_count()
        )
    }
}

/// A linear code built from a unit graph's incidence matrix.
#[pyclass(name = "LinearCode", frozen)]
struct PyLinearCode {
    inner: code_builder::LinearCode,
    /// Source graph, kept for the structure-aware dual search.
    graph: unit_graph::UnitGraph,
}

#[pymethods]
impl PyLinearCode {
    #[getter]
    fn q(&self) -> u64 {
        self.inner.field().q()
    }

    #[getter]
    fn length(&self) -> usize {
        self.inner.length()
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn dual_dimension(&self) -> usize {
        self.inner.dual_dimension()
    }

    fn generator(&self) -> Vec<Vec<u64>> {
        let g = self.inner.generator();
        (0..g.row_count()).map(|r| g.row(r).to_vec()).collect()
    }

    fn parity_check(&self) -> Vec<Vec<u64>> {
        let h = self.inner.parity_check();
        (0..h.row_count()).map(|r| h.row(r).to_vec()).collect()
    }

    fn contains(&self, word: Vec<u64>) -> PyResult<bool> {
        if word.len() != self.inner.length() {
            return Err(PyValueError::new_err(format!(
                "word length {} != code length {}",
                word.len(),
                self.inner.length()
            )));
        }
        Ok(self.inner.contains(&word))
    }

    /// Exhaustive minimum distance. Returns a distance dict; `exact` is
    /// None with `display == "BUDGET_EXCEEDED"` when q^dimension exceeds
    /// the enumeration budget.
    #[pyo3(signature = (budget = DEFAULT_ENUM_BUDGET, threads = 1))]
    fn min_distance<'py>(
        &self,
        py: Python<'py>,
        budget: u64,
        threads: usize,
    ) -> PyResult<Bound<'py, PyDict>> {
        let res =
            py.allow_threads(|| distance::min_distance_exhaustive(&self.inner, budget, threads));
        distance_dict(py, &res)
    }

    /// Minimum distance of the dual code by dependency search over the
    /// incidence structure (weights above `max_weight` report a lower
    /// bound).
    #[pyo3(signature = (max_weight = DEFAULT_MAX_DEPENDENCY_WEIGHT, ops_budget = DEFAULT_SEARCH_OPS_BUDGET))]
    fn dual_min_distance<'py>(
        &self,
        py: Python<'py>,
        max_weight: usize,
        ops_budget: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let field = self.inner.field();
        let res = py.allow_threads(|| {
            distance::incidence_dual_distance(&self.graph, field, max_weight, ops_budget)
        });
        distance_dict(py, &res)
    }

    fn __repr__(&self) -> String {
        format!(
            "LinearCode(q={}, length={}, dimension={})",
            self.inner.field().q(),
            self.inner.length(),
            self.inner.dimension()
        )
    }
}

/// Euler's totient of n.
#[pyfunction]
fn euler_phi(n: u64) -> PyResult<u64> {
    ring_zn::euler_phi(n).map_err(value_err)
}

/// Run every invariant check for one modulus and return the report as a
/// JSON line (same schema as `ugc analyze --format json`). `q` defaults to
/// 2 for odd n and 3 for even n.
#[pyfunction]
#[pyo3(signature = (n, q = None, threads = 1))]
fn analyze_json(py: Python<'_>, n: u64, q: Option<u64>, threads: usize) -> PyResult<String> {
    let budgets = Budgets {
        threads,
        ..Budgets::default()
    };
    let started = std::time::Instant::now();
    let mut rec = py
        .allow_threads(|| verify::verify_one(n, q, &budgets))
        .map_err(value_err)?;
    rec.elapsed_ms = Some(started.elapsed().as_millis() as u64);
    Ok(rec.to_json_line())
}

/// Verify every n in [from_n, to_n] and return one JSON line per modulus,
/// in ascending order (same schema as `ugc sweep`).
#[pyfunction]
#[pyo3(signature = (from_n, to_n, q = None, jobs = 1))]
fn sweep_json(
    py: Python<'_>,
    from_n: u64,
    to_n: u64,
    q: Option<u64>,
    jobs: usize,
) -> PyResult<Vec<String>> {
    py.allow_threads(|| {
        let mut lines = Vec::new();
        verify::sweep(from_n, to_n, q, jobs, &Budgets::default(), |rec| {
            lines.push(rec.to_json_line());
        })
        .map(|_| lines)
    })
    .map_err(value_err)
}

#[pymodule]
fn unitgraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyUnitGraph>()?;
    m.add_class::<PyLinearCode>()?;
    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_json, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_json, m)?)?;
    Ok(())
}
