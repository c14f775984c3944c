//! Python bindings: graph construction, the coloring and induced-path
//! solvers, and the verification pipeline.

use p19free_cli::verify::{verify_all as run_verify_all, VerifyOptions};
use p19free_core::snake::PathDecision;
use p19free_core::{
    self as core, Budget, ColoringOutcome, CoreGraphId, LabeledGraph, MnaeInstance,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

type Clause = (usize, usize, usize);

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn budget(nodes: Option<u64>, seconds: Option<f64>) -> PyResult<Budget> {
    let mut b = Budget::snake_default();
    if nodes.is_some() {
        b.max_nodes = nodes;
    }
    if let Some(s) = seconds {
        b.max_time = Some(std::time::Duration::try_from_secs_f64(s).map_err(value_error)?);
    }
    Ok(b)
}

fn instance(num_vars: usize, clauses: Vec<Clause>) -> PyResult<MnaeInstance> {
    MnaeInstance::new(
        num_vars,
        clauses.into_iter().map(|(a, b, c)| [a, b, c]).collect(),
    )
    .map_err(value_error)
}

/// Undirected simple graph with typed vertices.
#[pyclass(name = "Graph", frozen)]
pub struct PyGraph {
    inner: LabeledGraph,
}

#[pymethods]
impl PyGraph {
    /// Parses the `.graph` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: core::read_graph(text).map_err(value_error)?,
        })
    }

    fn to_text(&self) -> String {
        core::write_graph(&self.inner)
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
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(value_error(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    /// Short type label per vertex, e.g. `a`, `x`, `t3'`.
    fn labels(&self) -> Vec<String> {
        self.inner.tags().iter().map(|t| t.short_label()).collect()
    }

    fn is_triangle_free(&self) -> bool {
        self.inner.is_triangle_free()
    }

    fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        self.inner.find_triangle().map(|[a, b, c]| (a, b, c))
    }

    fn is_induced_path(&self, vertices: Vec<usize>) -> bool {
        core::is_induced_path(&self.inner, &vertices)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

#[pyclass(frozen, get_all)]
pub struct ColoringResult {
    /// `colorable`, `not-colorable` or `budget-exhausted`.
    status: String,
    colors: Option<Vec<u8>>,
    nodes: u64,
}

#[pymethods]
impl ColoringResult {
    fn __repr__(&self) -> String {
        format!(
            "ColoringResult(status={:?}, nodes={})",
            self.status, self.nodes
        )
    }
}

#[pyclass(frozen, get_all)]
pub struct PathResult {
    /// `found`, `exhausted-no` or `budget-exhausted`.
    decision: String,
    witness: Option<Vec<usize>>,
    nodes: u64,
}

#[pymethods]
impl PathResult {
    fn __repr__(&self) -> String {
        format!(
            "PathResult(decision={:?}, nodes={})",
            self.decision, self.nodes
        )
    }
}

#[pyfunction]
fn mycielski(k: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: core::build_mk(k).map_err(value_error)?,
    })
}

/// `M5` with vertex 16 removed, connector quadruples tagged.
#[pyfunction]
fn m_prime() -> PyGraph {
    PyGraph {
        inner: core::build_m_prime().graph,
    }
}

/// One of `G0,0` .. `G0,5`, `G1`, `G2`, `G3`.
#[pyfunction]
fn core_graph(name: &str) -> PyResult<PyGraph> {
    let id: CoreGraphId = name.parse().map_err(value_error)?;
    Ok(PyGraph {
        inner: core::build_core(id).map_err(value_error)?,
    })
}

#[pyfunction]
fn core_graph_names() -> Vec<String> {
    CoreGraphId::ALL.iter().map(ToString::to_string).collect()
}

#[pyfunction]
fn build_reduction(num_vars: usize, clauses: Vec<Clause>) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: core::build_reduction(&instance(num_vars, clauses)?),
    })
}

#[pyfunction]
fn parse_mnae(text: &str) -> PyResult<(usize, Vec<Clause>)> {
    let inst = core::parse_mnae(text).map_err(value_error)?;
    Ok((
        inst.num_vars(),
        inst.clauses().iter().map(|c| (c[0], c[1], c[2])).collect(),
    ))
}

#[pyfunction]
fn nae_satisfiable(num_vars: usize, clauses: Vec<Clause>) -> PyResult<Option<Vec<bool>>> {
    core::nae_satisfiable(&instance(num_vars, clauses)?).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (graph, k, budget_nodes=None, budget_seconds=None))]
fn decide_coloring(
    py: Python<'_>,
    graph: &PyGraph,
    k: usize,
    budget_nodes: Option<u64>,
    budget_seconds: Option<f64>,
) -> PyResult<ColoringResult> {
    let b = budget(budget_nodes, budget_seconds)?;
    let problem = core::ColoringProblem::new(&graph.inner, k).map_err(value_error)?;
    let r = py.detach(|| core::decide_coloring(&problem, &b));
    let status = match &r.outcome {
        ColoringOutcome::Colorable { .. } => "colorable",
        ColoringOutcome::NotColorable => "not-colorable",
        ColoringOutcome::BudgetExhausted => "budget-exhausted",
    };
    Ok(ColoringResult {
        status: status.to_string(),
        colors: r.outcome.witness().map(|w| w.colors.clone()),
        nodes: r.nodes,
    })
}

#[pyfunction]
#[pyo3(signature = (graph, target, budget_nodes=None, budget_seconds=None, threads=None))]
fn has_induced_path(
    py: Python<'_>,
    graph: &PyGraph,
    target: usize,
    budget_nodes: Option<u64>,
    budget_seconds: Option<f64>,
    threads: Option<usize>,
) -> PyResult<PathResult> {
    let q = core::PathQuery::new(&graph.inner, target)
        .with_budget(budget(budget_nodes, budget_seconds)?)
        .with_threads(threads);
    let r = py
        .detach(|| core::has_induced_path(&q))
        .map_err(value_error)?;
    let decision = match &r.decision {
        PathDecision::Found { .. } => "found",
        PathDecision::ExhaustedNo => "exhausted-no",
        PathDecision::BudgetExhausted => "budget-exhausted",
    };
    Ok(PathResult {
        decision: decision.to_string(),
        witness: r.witness().map(<[usize]>::to_vec),
        nodes: r.nodes,
    })
}

/// Returns `(order, witness)`; `order` is `None` only for the empty graph.
/// Raises if the budget runs out before the maximum is proven.
#[pyfunction]
#[pyo3(signature = (graph, threads=None))]
fn longest_induced_path(
    py: Python<'_>,
    graph: &PyGraph,
    threads: Option<usize>,
) -> PyResult<(Option<usize>, Option<Vec<usize>>)> {
    let r = py
        .detach(|| core::longest_induced_path(&graph.inner, &Budget::snake_default(), threads))
        .map_err(value_error)?;
    if !r.exhaustive {
        return Err(value_error(format!(
            "budget exhausted, best so far {:?}",
            r.order
        )));
    }
    Ok((r.order, r.witness))
}

/// Runs the full verification pipeline and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (threads=None, budget_nodes=None, budget_seconds=None, seed=p19free_cli::corpus::DEFAULT_SEED))]
fn verify_all(
    py: Python<'_>,
    threads: Option<usize>,
    budget_nodes: Option<u64>,
    budget_seconds: Option<f64>,
    seed: u64,
) -> PyResult<String> {
    let opts = VerifyOptions {
        budget: budget(budget_nodes, budget_seconds)?,
        threads,
        seed,
    };
    Ok(py.detach(|| run_verify_all(&opts)).to_json())
}

#[pymodule]
pub fn p19free(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<ColoringResult>()?;
    m.add_class::<PathResult>()?;
    m.add_function(wrap_pyfunction!(mycielski, m)?)?;
    m.add_function(wrap_pyfunction!(m_prime, m)?)?;
    m.add_function(wrap_pyfunction!(core_graph, m)?)?;
    m.add_function(wrap_pyfunction!(core_graph_names, m)?)?;
    m.add_function(wrap_pyfunction!(build_reduction, m)?)?;
    m.add_function(wrap_pyfunction!(parse_mnae, m)?)?;
    m.add_function(wrap_pyfunction!(nae_satisfiable, m)?)?;
    m.add_function(wrap_pyfunction!(decide_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(has_induced_path, m)?)?;
    m.add_function(wrap_pyfunction!(longest_induced_path, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
