//! Python bindings: host builders, embedders, adjacency labeling, decoders,
//! bound tables, and the verification suites, mirroring the CLI surface.

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use iugraph::bounds::{gv_bounds_table, OConstants};
use iugraph::cycles::{AwareCycleUniversal, ObliviousCycleUniversal};
use iugraph::deg2::{embed_acyclic, embed_deg2, u_adjacent, up_adjacent};
use iugraph::degd::embed_degd;
use iugraph::error::Error;
use iugraph::graph::{parse_graph, serialize_graph, to_dot, Graph as CoreGraph};
use iugraph::labeling as lb;
use iugraph::labeling::{Scheme, SchemeName};
use iugraph::verify::run_suite;

fn err(e: Error) -> PyErr {
    match e {
        Error::Io(_) => PyIOError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse_name(construction: &str) -> PyResult<SchemeName> {
    SchemeName::parse(construction).map_err(err)
}

fn scheme_for(
    construction: &str,
    n: usize,
    d: Option<usize>,
    seed: Option<u64>,
) -> PyResult<Scheme> {
    let name = parse_name(construction)?;
    Ok(Scheme {
        name,
        n,
        d,
        seed: if name == SchemeName::DegDRand {
            Some(seed.unwrap_or(0))
        } else {
            seed
        },
    })
}

/// Undirected graph on vertices `0..n` with at most one edge per pair.
#[pyclass(name = "Graph")]
#[derive(Clone)]
struct PyGraph {
    inner: CoreGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: CoreGraph::from_edges(n, &edges).map_err(err)?,
        })
    }

    /// The path `0 - 1 - … - (n-1)`.
    #[staticmethod]
    fn path(n: usize) -> Self {
        PyGraph {
            inner: CoreGraph::path(n),
        }
    }

    /// The cycle `0 - 1 - … - (n-1) - 0`; needs n ≥ 3.
    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        if n < 3 {
            return Err(PyValueError::new_err("a cycle needs at least 3 vertices"));
        }
        Ok(PyGraph {
            inner: CoreGraph::cycle(n),
        })
    }

    /// Parses the text format: a "n m" header line, then one "u v" line per
    /// edge; '#' starts a comment.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: parse_graph(text).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn num_edges(&self) -> usize {
        self.inner.num_edges()
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: u32, v: u32) -> bool {
        self.inner.has_edge(u, v)
    }

    fn degree(&self, u: u32) -> PyResult<usize> {
        self.check_vertex(u)?;
        Ok(self.inner.degree(u))
    }

    fn neighbors(&self, u: u32) -> PyResult<Vec<u32>> {
        self.check_vertex(u)?;
        Ok(self.inner.neighbors(u).to_vec())
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    /// Serializes back into the text format `parse` accepts.
    fn serialize(&self) -> String {
        serialize_graph(&self.inner)
    }

    fn to_dot(&self) -> String {
        to_dot(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, num_edges={})",
            self.inner.n(),
            self.inner.num_edges()
        )
    }
}

impl PyGraph {
    fn check_vertex(&self, u: u32) -> PyResult<()> {
        if (u as usize) < self.inner.n() {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!(
                "vertex {u} out of range for a graph on {} vertices",
                self.inner.n()
            )))
        }
    }
}

/// Materializes the universal host graph of a construction for family size n.
/// `d` is the degree bound for `degd-det`; `degd-rand` has no host graph.
#[pyfunction]
#[pyo3(signature = (construction, n, d=None))]
fn build(construction: &str, n: usize, d: Option<usize>) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: lb::host_graph(parse_name(construction)?, n, d).map_err(err)?,
    })
}

/// Embeds a family member into its host; returns the host vertex image of
/// each guest vertex 0..n. Cycle hosts take `embed_cycle` instead.
#[pyfunction]
#[pyo3(signature = (construction, graph, d=None))]
fn embed(construction: &str, graph: &PyGraph, d: Option<usize>) -> PyResult<Vec<u64>> {
    let map = match parse_name(construction)? {
        SchemeName::Paths => embed_acyclic(&graph.inner),
        SchemeName::Deg2 => embed_deg2(&graph.inner),
        SchemeName::DegDDet => {
            let d = d.ok_or_else(|| PyValueError::new_err("degd-det needs the degree bound d"))?;
            embed_degd(&graph.inner, d)
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "embed takes paths, deg2, or degd-det; {} embeds cycles via embed_cycle",
                other.as_str()
            )))
        }
    }
    .map_err(err)?;
    Ok(map.images)
}

/// Embeds the cycle of the given length into a cycle host serving family
/// size n (defaults to the length); returns the host route in cycle order.
#[pyfunction]
#[pyo3(signature = (construction, length, n=None))]
fn embed_cycle(construction: &str, length: usize, n: Option<usize>) -> PyResult<Vec<u32>> {
    let n = n.unwrap_or(length);
    match parse_name(construction)? {
        SchemeName::CyclesAware => AwareCycleUniversal::new(n)
            .and_then(|h| h.embed(length))
            .map_err(err),
        SchemeName::CyclesOblivious => ObliviousCycleUniversal::new(n)
            .and_then(|h| h.embed(length))
            .map_err(err),
        other => Err(PyValueError::new_err(format!(
            "embed_cycle takes cycles-aware or cycles-oblivious, not {}",
            other.as_str()
        ))),
    }
}

/// Issues one adjacency label (an ASCII bitstring) per vertex. The family
/// size defaults to the guest's vertex count; `degd-rand` also takes the
/// degree bound d and a seed.
#[pyfunction]
#[pyo3(signature = (construction, graph, n=None, d=None, seed=None))]
fn label(
    construction: &str,
    graph: &PyGraph,
    n: Option<usize>,
    d: Option<usize>,
    seed: Option<u64>,
) -> PyResult<Vec<String>> {
    let scheme = scheme_for(construction, n.unwrap_or(graph.inner.n()), d, seed)?;
    Ok(lb::encode(&scheme, &graph.inner).map_err(err)?.labels)
}

/// Like `label`, but rendered in the CLI's label-file format: a header
/// comment with the scheme context, then "vertex<TAB>bits" lines.
#[pyfunction]
#[pyo3(signature = (construction, graph, n=None, d=None, seed=None))]
fn label_file(
    construction: &str,
    graph: &PyGraph,
    n: Option<usize>,
    d: Option<usize>,
    seed: Option<u64>,
) -> PyResult<String> {
    let scheme = scheme_for(construction, n.unwrap_or(graph.inner.n()), d, seed)?;
    Ok(lb::write_label_file(
        &lb::encode(&scheme, &graph.inner).map_err(err)?,
    ))
}

/// Decides adjacency from two labels alone plus the declared context: the
/// family size n where the scheme needs it, the degree bound d for the
/// degree-D schemes.
#[pyfunction]
#[pyo3(signature = (construction, label1, label2, n=None, d=None))]
fn decode(
    construction: &str,
    label1: &str,
    label2: &str,
    n: Option<usize>,
    d: Option<usize>,
) -> PyResult<bool> {
    lb::decode(parse_name(construction)?, label1, label2, n, d).map_err(err)
}

/// Number of label bits the scheme spends per vertex at family size n.
#[pyfunction]
#[pyo3(signature = (construction, n, d=None))]
fn label_bits(construction: &str, n: usize, d: Option<usize>) -> PyResult<usize> {
    lb::scheme_label_bits(&scheme_for(construction, n, d, None)?).map_err(err)
}

/// Adjacency in the acyclic host: u ≠ v and one is the other's successor.
#[pyfunction(name = "up_adjacent")]
fn up_adjacent_py(u: u64, v: u64) -> bool {
    up_adjacent(u, v)
}

/// Adjacency in the degree-≤2 host: both differ from 2 and are consecutive
/// or successor-linked.
#[pyfunction(name = "u_adjacent")]
fn u_adjacent_py(u: u64, v: u64) -> bool {
    u_adjacent(u, v)
}

/// Size-bound table for one (n, D) cell: rows (name, kind, log2_value,
/// exact_value or None). `constants` overrides hidden constants by name.
#[pyfunction]
#[pyo3(signature = (n, d, constants=None))]
fn bounds_table(
    n: usize,
    d: usize,
    constants: Option<std::collections::HashMap<String, f64>>,
) -> PyResult<Vec<(String, String, f64, Option<String>)>> {
    let mut c = OConstants::default();
    for (name, value) in constants.unwrap_or_default() {
        c.set(&name, value).map_err(err)?;
    }
    let report = gv_bounds_table(n, d, &c).map_err(err)?;
    report.validate().map_err(err)?;
    Ok(report
        .entries
        .iter()
        .map(|e| {
            (
                e.name.to_string(),
                e.kind.as_str().to_string(),
                e.log2_value,
                e.exact.as_ref().map(|v| v.to_string()),
            )
        })
        .collect())
}

/// Runs a verification suite ("all", "sizes", "universality", "rand",
/// "cycles", "prefix", "oracle", "euler", "subset-sum", "negative-control")
/// and returns one dict per campaign report.
#[pyfunction]
#[pyo3(signature = (suite="all", max_n=None, seed=0xC0FFEE))]
fn verify<'py>(
    py: Python<'py>,
    suite: &str,
    max_n: Option<usize>,
    seed: u64,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let reports = run_suite(suite, max_n, seed).map_err(err)?;
    let mut out = Vec::with_capacity(reports.len());
    for r in reports {
        let d = PyDict::new(py);
        d.set_item("suite", r.suite)?;
        d.set_item("construction", &r.construction)?;
        d.set_item("n_lo", r.n_lo)?;
        d.set_item("n_hi", r.n_hi)?;
        d.set_item("cases", r.passes + r.failures)?;
        d.set_item("passes", r.passes)?;
        d.set_item("failures", r.failures)?;
        d.set_item("verdict", r.verdict.as_str())?;
        d.set_item("notes", r.notes.clone())?;
        d.set_item(
            "first_counterexample",
            r.first_counterexample
                .as_ref()
                .map(|ce| format!("n={} case={} {} — {}", ce.n, ce.case, ce.description, ce.reason)),
        )?;
        d.set_item("text", r.to_text())?;
        out.push(d);
    }
    Ok(out)
}

#[pymodule]
#[pyo3(name = "iugraph")]
fn iugraph_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(embed, m)?)?;
    m.add_function(wrap_pyfunction!(embed_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(label, m)?)?;
    m.add_function(wrap_pyfunction!(label_file, m)?)?;
    m.add_function(wrap_pyfunction!(decode, m)?)?;
    m.add_function(wrap_pyfunction!(label_bits, m)?)?;
    m.add_function(wrap_pyfunction!(up_adjacent_py, m)?)?;
    m.add_function(wrap_pyfunction!(u_adjacent_py, m)?)?;
    m.add_function(wrap_pyfunction!(bounds_table, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add(
        "SCHEMES",
        vec![
            "paths",
            "deg2",
            "degd-det",
            "degd-rand",
            "cycles-aware",
            "cycles-oblivious",
        ],
    )?;
    Ok(())
}
