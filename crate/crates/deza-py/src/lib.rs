//! Python bindings: a `Graph` class plus module-level functions mirroring
//! the CLI surface. Structured results (reports, spectra, scheme data,
//! census records) come back as plain dicts and lists.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList};
use serde_json::Value;

use deza_core::codec::{from_graph6, to_graph6};
use deza_core::constructions::{dual_seidel_switch, FamilySpec};
use deza_core::cyclotomic::{
    condition_certificate, lm_solutions, one_class_strictly_deza_condition, scheme as scheme_of,
    scheme_is_symmetric, solve_lm, two_class_strictly_deza_condition,
};
use deza_core::enumeration::{enumerate_circulants, enumerate_circulants_jobs, verify_2p};
use deza_core::field::FiniteField;
use deza_core::iso;
use deza_core::{classify, VertexPermutation};

fn err(e: deza_core::Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.tag()))
}

fn json_to_py(py: Python<'_>, value: &Value) -> PyResult<Py<PyAny>> {
    Ok(match value {
        Value::Null => py.None(),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any().unbind(),
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                i.into_pyobject(py)?.into_any().unbind()
            } else if let Some(u) = num.as_u64() {
                u.into_pyobject(py)?.into_any().unbind()
            } else {
                num.as_f64()
                    .expect("JSON number fits f64")
                    .into_pyobject(py)?
                    .into_any()
                    .unbind()
            }
        }
        Value::String(s) => s.into_pyobject(py)?.into_any().unbind(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any().unbind()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (key, item) in map {
                dict.set_item(key, json_to_py(py, item)?)?;
            }
            dict.into_any().unbind()
        }
    })
}

fn serialize_to_py<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let json = serde_json::to_value(value)
        .map_err(|e| PyValueError::new_err(format!("serialization failed: {e}")))?;
    json_to_py(py, &json)
}

/// An undirected simple graph on vertices 0..n-1.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: deza_core::Graph,
}

#[pymethods]
impl Graph {
    /// Decode a graph6 string.
    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Graph> {
        Ok(Graph {
            inner: from_graph6(text).map_err(err)?,
        })
    }

    /// Build from a vertex count and an edge list.
    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Graph> {
        Ok(Graph {
            inner: deza_core::Graph::from_edges(n, &edges).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyIndexError::new_err(format!(
                "vertex {v} out of range for n = {}",
                self.inner.n()
            )));
        }
        Ok(self.inner.degree(v))
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn to_graph6(&self) -> PyResult<String> {
        to_graph6(&self.inner).map_err(err)
    }

    fn complement(&self) -> Graph {
        Graph {
            inner: self.inner.complement(),
        }
    }

    fn lexicographic_product(&self, other: &Graph) -> PyResult<Graph> {
        Ok(Graph {
            inner: self
                .inner
                .lexicographic_product(&other.inner)
                .map_err(err)?,
        })
    }

    fn __eq__(&self, other: &Graph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={})",
            self.inner.n(),
            self.inner.edge_count()
        )
    }
}

/// Classify a graph; returns the full report as a dict.
#[pyfunction]
fn analyze(py: Python<'_>, g: &Graph) -> PyResult<Py<PyAny>> {
    let report = classify(&g.inner).map_err(err)?;
    serialize_to_py(py, &report)
}

/// Adjacency spectrum as a list of {value, multiplicity, is_integer} dicts.
#[pyfunction]
fn spectrum(py: Python<'_>, g: &Graph) -> PyResult<Py<PyAny>> {
    let s = deza_core::spectra::spectrum(&g.inner).map_err(err)?;
    serialize_to_py(py, &s.lines)
}

/// Build a named family member; same family names as the CLI.
#[pyfunction]
fn construct(family: &str, params: Vec<u64>) -> PyResult<Graph> {
    let spec = FamilySpec::parse(family, &params).map_err(err)?;
    Ok(Graph {
        inner: spec.build().map_err(err)?,
    })
}

/// Dual Seidel switch by an involution written in cycle notation.
#[pyfunction]
fn switch(g: &Graph, involution: &str) -> PyResult<Graph> {
    let p = VertexPermutation::parse_cycles(g.inner.n(), involution).map_err(err)?;
    Ok(Graph {
        inner: dual_seidel_switch(&g.inner, &p).map_err(err)?,
    })
}

/// All involutive automorphisms moving only non-adjacent vertices, in cycle
/// notation ("()" is the identity).
#[pyfunction]
fn find_switching_involutions(g: &Graph) -> PyResult<Vec<String>> {
    let found = deza_core::constructions::find_switching_involutions(&g.inner).map_err(err)?;
    Ok(found.iter().map(|p| p.cycle_string()).collect())
}

/// The 3-class cyclotomic scheme data over GF(q), as one dict.
#[pyfunction]
fn scheme(py: Python<'_>, q: u64) -> PyResult<Py<PyAny>> {
    let symmetric = scheme_is_symmetric(q, 3).map_err(err)?;
    let field = FiniteField::of_order(q).map_err(err)?;
    let sch = scheme_of(&field).map_err(err)?;
    let doc = serde_json::json!({
        "q": q,
        "t": sch.t,
        "symmetric": symmetric,
        "classes": sch.classes,
        "p": sch.p,
        "r": sch.r,
        "s": sch.s,
        "l": sch.l,
        "m": sch.m_sol,
        "lm_unique": solve_lm(q).ok(),
        "lm_solutions": lm_solutions(q),
        "one_class_strictly_deza": one_class_strictly_deza_condition(q),
        "one_class_certificate": condition_certificate(q, 3),
        "two_class_strictly_deza": two_class_strictly_deza_condition(q),
        "two_class_certificate": condition_certificate(q, 12),
    });
    json_to_py(py, &doc)
}

/// Census of circulant Deza graphs on n vertices, as a list of record dicts.
#[pyfunction]
#[pyo3(signature = (n, strict_only = false, jobs = None))]
fn circulant_census(
    py: Python<'_>,
    n: usize,
    strict_only: bool,
    jobs: Option<usize>,
) -> PyResult<Py<PyAny>> {
    let records = match jobs {
        Some(j) => enumerate_circulants_jobs(n, strict_only, j).map_err(err)?,
        None => enumerate_circulants(n, strict_only).map_err(err)?,
    };
    serialize_to_py(py, &records)
}

/// Exhaustive strict-circulant check on 2p vertices; returns the verdict dict.
#[pyfunction]
fn verify_two_prime(py: Python<'_>, p: u64) -> PyResult<Py<PyAny>> {
    let verdict = verify_2p(p).map_err(err)?;
    serialize_to_py(py, &verdict)
}

/// Cayley graph of Z_{orders[0]} x ... with an inverse-closed connection set.
#[pyfunction]
fn cayley_graph(orders: Vec<usize>, connection: Vec<usize>) -> PyResult<Graph> {
    Ok(Graph {
        inner: deza_core::cayley_graph(&orders, &connection).map_err(err)?,
    })
}

#[pyfunction]
fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    iso::is_isomorphic(&g.inner, &h.inner)
}

#[pymodule]
fn deza_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(switch, m)?)?;
    m.add_function(wrap_pyfunction!(find_switching_involutions, m)?)?;
    m.add_function(wrap_pyfunction!(scheme, m)?)?;
    m.add_function(wrap_pyfunction!(circulant_census, m)?)?;
    m.add_function(wrap_pyfunction!(verify_two_prime, m)?)?;
    m.add_function(wrap_pyfunction!(cayley_graph, m)?)?;
    m.add_function(wrap_pyfunction!(is_isomorphic, m)?)?;
    Ok(())
}
