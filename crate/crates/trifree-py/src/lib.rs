//! Python bindings: a `Graph` class over the bitset core plus module-level
//! constructors, enumeration, and verification entry points. Reports cross
//! the boundary as JSON strings; graphs as graph6 lines.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use trifree::classify;
use trifree::enumerate::{self, GenConstraints};
use trifree::families::{self, Attachment};
use trifree::graph::{CycleAnchor, Graph as CoreGraph, VertexSet};
use trifree::graph6;
use trifree::invariants;
use trifree::iso;

fn value_err(err: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn vertex_set(vertices: Vec<usize>) -> PyResult<VertexSet> {
    for &v in &vertices {
        if v >= trifree::MAX_VERTICES {
            return Err(value_err(format!("vertex {v} out of range")));
        }
    }
    Ok(vertices.into_iter().collect())
}

/// An immutable simple undirected graph on at most 64 vertices.
#[pyclass(frozen, name = "Graph")]
struct PyGraph {
    inner: CoreGraph,
}

impl PyGraph {
    fn wrap(inner: CoreGraph) -> PyGraph {
        PyGraph { inner }
    }

    fn check_vertex(&self, v: usize) -> PyResult<()> {
        if v < self.inner.vertex_count() {
            Ok(())
        } else {
            Err(value_err(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.inner.vertex_count()
            )))
        }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph::wrap(
            CoreGraph::from_edge_list(n, &edges).map_err(value_err)?,
        ))
    }

    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Self> {
        Ok(PyGraph::wrap(graph6::decode(line).map_err(value_err)?))
    }

    fn to_graph6(&self) -> PyResult<String> {
        graph6::encode(&self.inner).map_err(value_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn e(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.check_vertex(v)?;
        Ok(self.inner.degree(v))
    }

    fn link(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self.inner.link(v).to_vec())
    }

    fn second_valency(&self, v: usize) -> PyResult<usize> {
        self.check_vertex(v)?;
        Ok(self.inner.second_valency(v))
    }

    fn distance(&self, u: usize, v: usize) -> PyResult<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.inner.distance(u, v))
    }

    fn ball(&self, vertices: Vec<usize>, radius: usize) -> PyResult<Vec<usize>> {
        let s = vertex_set(vertices)?;
        Ok(self.inner.ball(s, radius).to_vec())
    }

    fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        self.inner.degree_histogram()
    }

    fn min_degree(&self) -> Option<usize> {
        self.inner.min_degree()
    }

    fn girth(&self) -> Option<usize> {
        self.inner.girth()
    }

    fn is_triangle_free(&self) -> bool {
        self.inner.is_triangle_free()
    }

    fn count_components(&self) -> usize {
        self.inner.count_components()
    }

    /// Number of cycles of the given length, optionally through a vertex.
    #[pyo3(signature = (length, vertex=None))]
    fn count_cycles(&self, length: usize, vertex: Option<usize>) -> PyResult<u64> {
        if length < 3 {
            return Err(value_err("cycles have length at least 3"));
        }
        let anchor = match vertex {
            Some(v) => {
                self.check_vertex(v)?;
                CycleAnchor::Vertex(v)
            }
            None => CycleAnchor::Free,
        };
        Ok(self.inner.count_cycles(length, anchor))
    }

    fn alpha(&self) -> usize {
        trifree::alpha::alpha(&self.inner)
    }

    fn alpha_witness(&self) -> Vec<usize> {
        trifree::independence_number(&self.inner).witness.to_vec()
    }

    fn t(&self) -> i64 {
        invariants::t_value(&self.inner)
    }

    fn q(&self) -> i64 {
        invariants::q_value(&self.inner)
    }

    fn is_edge_critical(&self) -> bool {
        invariants::is_edge_critical(&self.inner)
    }

    fn is_destabilizer(&self, vertices: Vec<usize>) -> PyResult<bool> {
        Ok(invariants::is_destabilizer(
            &self.inner,
            vertex_set(vertices)?,
        ))
    }

    fn is_s_stable(&self, s: usize) -> bool {
        invariants::is_s_stable(&self.inner, s)
    }

    /// Inclusion-minimal destabilizing sets up to `max_size`, as sorted
    /// vertex lists.
    fn minimal_destabilizers(&self, max_size: usize) -> Vec<Vec<usize>> {
        invariants::minimal_destabilizers(&self.inner, max_size)
            .sets
            .into_iter()
            .map(|entry| entry.vertices.to_vec())
            .collect()
    }

    fn delete_closed_neighborhood(&self, vertices: Vec<usize>) -> PyResult<PyGraph> {
        let s = vertex_set(vertices)?;
        Ok(PyGraph::wrap(
            self.inner
                .delete_closed_neighborhood(s)
                .map_err(value_err)?,
        ))
    }

    fn disjoint_sum(&self, other: PyRef<'_, PyGraph>) -> PyGraph {
        PyGraph::wrap(self.inner.disjoint_sum(&other.inner))
    }

    fn is_isomorphic(&self, other: PyRef<'_, PyGraph>) -> bool {
        iso::are_isomorphic(&self.inner, &other.inner)
    }

    fn canonical_graph6(&self) -> PyResult<String> {
        graph6::encode(&iso::canonical_form(&self.inner).graph).map_err(value_err)
    }

    /// Classification report as a JSON string.
    fn classify(&self) -> PyResult<String> {
        let report = classify::classify_graph(&self.inner).map_err(value_err)?;
        Ok(report.to_json().to_string())
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, e={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

#[pyfunction]
fn chain(k: usize) -> PyResult<PyGraph> {
    Ok(PyGraph::wrap(families::chain(k).map_err(value_err)?))
}

#[pyfunction]
fn bicycle(k: usize) -> PyResult<PyGraph> {
    Ok(PyGraph::wrap(families::bicycle(k).map_err(value_err)?))
}

#[pyfunction]
fn w13() -> PyGraph {
    PyGraph::wrap(families::w13())
}

#[pyfunction]
fn loop_chain(l: usize, m: usize, attachment: &str) -> PyResult<PyGraph> {
    let att = Attachment::parse(attachment)
        .ok_or_else(|| value_err("attachment must be star, path, or cycle"))?;
    Ok(PyGraph::wrap(
        families::loop_chain(l, m, att).map_err(value_err)?,
    ))
}

#[pyfunction]
fn path(i: usize) -> PyResult<PyGraph> {
    Ok(PyGraph::wrap(families::path(i).map_err(value_err)?))
}

#[pyfunction]
fn cycle(i: usize) -> PyResult<PyGraph> {
    Ok(PyGraph::wrap(families::cycle(i).map_err(value_err)?))
}

#[pyfunction]
fn star(i: usize) -> PyResult<PyGraph> {
    Ok(PyGraph::wrap(families::star(i).map_err(value_err)?))
}

#[pyfunction]
fn complete_bipartite(i: usize, j: usize) -> PyResult<PyGraph> {
    Ok(PyGraph::wrap(
        families::complete_bipartite(i, j).map_err(value_err)?,
    ))
}

/// All triangle-free graphs on `n` vertices (one per isomorphism class) as
/// graph6 lines.
#[pyfunction]
#[pyo3(signature = (n, alpha_less_than=None, max_edges=None, min_degree=None, connected=false))]
fn generate_triangle_free(
    n: usize,
    alpha_less_than: Option<usize>,
    max_edges: Option<usize>,
    min_degree: Option<usize>,
    connected: bool,
) -> PyResult<Vec<String>> {
    let c = GenConstraints {
        vertex_count: n,
        alpha_less_than,
        max_edges,
        min_degree,
        connected_only: connected,
    };
    let mut lines = Vec::new();
    enumerate::generate_triangle_free(&c, |g| {
        lines.push(graph6::encode(g).expect("generated graphs encode"))
    })
    .map_err(value_err)?;
    Ok(lines)
}

/// Minimal edge count with independence number below `j` on `n` vertices;
/// returns `(value_or_None, realisers)`.
#[pyfunction]
#[pyo3(signature = (j, n, workers=1))]
fn e_number(j: usize, n: usize, workers: usize) -> PyResult<(Option<usize>, Vec<String>)> {
    let result = enumerate::e_number(j, n, workers).map_err(value_err)?;
    Ok((result.value, result.realisers))
}

#[pyfunction]
fn prop1_formula(k: i64, n: i64) -> (i64, bool) {
    let v = enumerate::prop1_formula(k, n);
    (v.value, v.within_validity)
}

/// `(bound, exact)` for the edge minimum just above the 3.25k threshold.
#[pyfunction]
fn corollary4_bound(k: i64, n: i64) -> PyResult<(i64, bool)> {
    let b = classify::corollary4_bound(k, n).map_err(value_err)?;
    Ok((b.value, b.exact))
}

/// JSON report of the exhaustive t/q nonnegativity scan.
#[pyfunction]
#[pyo3(signature = (n_max, workers=1))]
fn verify_t_nonnegative(n_max: usize, workers: usize) -> PyResult<String> {
    let report = enumerate::verify_t_nonnegative(n_max, workers).map_err(value_err)?;
    serde_json::to_string(&report).map_err(value_err)
}

/// JSON report of the exhaustive classification scan.
#[pyfunction]
#[pyo3(signature = (n_max, workers=1))]
fn verify_theorem3(n_max: usize, workers: usize) -> PyResult<String> {
    let report = enumerate::verify_theorem3(n_max, workers).map_err(value_err)?;
    serde_json::to_string(&report).map_err(value_err)
}

#[pymodule]
fn trifree_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(chain, m)?)?;
    m.add_function(wrap_pyfunction!(bicycle, m)?)?;
    m.add_function(wrap_pyfunction!(w13, m)?)?;
    m.add_function(wrap_pyfunction!(loop_chain, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(complete_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(generate_triangle_free, m)?)?;
    m.add_function(wrap_pyfunction!(e_number, m)?)?;
    m.add_function(wrap_pyfunction!(prop1_formula, m)?)?;
    m.add_function(wrap_pyfunction!(corollary4_bound, m)?)?;
    m.add_function(wrap_pyfunction!(verify_t_nonnegative, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem3, m)?)?;
    Ok(())
}
