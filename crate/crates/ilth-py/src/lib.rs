//! Python bindings: the hypergraph and graph types with the step operators,
//! plus the analysis entry points (metrics, census, clustering, random
//! baselines, embeddings). Reports cross the boundary as plain dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use ilth::clustering;
use ilth::eigen;
use ilth::hgf;
use ilth::hom;
use ilth::hypergraph::{self, Hypergraph, Lineage, DEFAULT_EDGE_CAP};
use ilth::metrics;
use ilth::motif::{self, CardinalityVector, CensusOptions, MotifClass, Pattern};
use ilth::random;
use ilth::Graph;

fn err(e: ilth::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// serde_json::Value -> Python object, for report dicts.
fn json_to_py<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Py<PyAny>> {
    Ok(match value {
        serde_json::Value::Null => py.None(),
        serde_json::Value::Bool(b) => b.into_pyobject(py)?.to_owned().unbind().into_any(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.unbind().into_any()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.unbind().into_any()
            } else {
                n.as_f64().unwrap().into_pyobject(py)?.unbind().into_any()
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py)?.unbind().into_any(),
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.unbind().into_any()
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, v) in map {
                dict.set_item(k, json_to_py(py, v)?)?;
            }
            dict.unbind().into_any()
        }
    })
}

fn report_to_py<T: serde::Serialize>(py: Python<'_>, report: &T) -> PyResult<Py<PyAny>> {
    let value = serde_json::to_value(report).map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_to_py(py, &value)
}

/// Immutable k-uniform hypergraph.
#[pyclass(name = "Hypergraph", frozen)]
struct PyHypergraph {
    inner: Hypergraph,
}

/// Parent maps describing one cloning step.
#[pyclass(name = "Lineage", frozen)]
struct PyLineage {
    inner: Lineage,
}

/// Simple undirected graph (2-sections, embedding hosts).
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyHypergraph {
    /// Build from explicit hyperedges; edges are sorted and all invariants
    /// checked.
    #[new]
    fn new(k: usize, n: usize, edges: Vec<Vec<u32>>) -> PyResult<Self> {
        Ok(PyHypergraph {
            inner: Hypergraph::new(k, n, edges).map_err(err)?,
        })
    }

    /// One hyperedge {0, .., k-1} on k vertices.
    #[staticmethod]
    fn single_edge(k: usize) -> Self {
        PyHypergraph {
            inner: Hypergraph::single_edge(k),
        }
    }

    #[staticmethod]
    fn from_hgf(text: &str) -> PyResult<Self> {
        Ok(PyHypergraph {
            inner: hgf::parse_hgf("<python>", text).map_err(err)?,
        })
    }

    fn to_hgf(&self) -> String {
        hgf::write_hgf(&self.inner)
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<Vec<u32>> {
        self.inner.edges().to_vec()
    }

    fn degree(&self, v: u32) -> PyResult<usize> {
        if v as usize >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    /// One cloning step; returns (hypergraph, lineage).
    fn step(&self) -> (PyHypergraph, PyLineage) {
        let (h, lineage) = self.inner.step();
        (PyHypergraph { inner: h }, PyLineage { inner: lineage })
    }

    /// Multi-clone step with the clone-family hyperedges.
    fn step_multi(&self) -> PyResult<(PyHypergraph, PyLineage)> {
        let (h, lineage) = self.inner.step_multi().map_err(err)?;
        Ok((PyHypergraph { inner: h }, PyLineage { inner: lineage }))
    }

    /// t cloning steps under an edge cap; returns (hypergraph, lineages).
    #[pyo3(signature = (t, edge_cap=None))]
    fn iterate(&self, t: usize, edge_cap: Option<u64>) -> PyResult<(PyHypergraph, Vec<PyLineage>)> {
        let (h, lineages) = self
            .inner
            .iterate(t, edge_cap.unwrap_or(DEFAULT_EDGE_CAP))
            .map_err(err)?;
        Ok((
            PyHypergraph { inner: h },
            lineages
                .into_iter()
                .map(|inner| PyLineage { inner })
                .collect(),
        ))
    }

    #[pyo3(signature = (t, edge_cap=None))]
    fn iterate_multi(
        &self,
        t: usize,
        edge_cap: Option<u64>,
    ) -> PyResult<(PyHypergraph, Vec<PyLineage>)> {
        let (h, lineages) = self
            .inner
            .iterate_multi(t, edge_cap.unwrap_or(DEFAULT_EDGE_CAP))
            .map_err(err)?;
        Ok((
            PyHypergraph { inner: h },
            lineages
                .into_iter()
                .map(|inner| PyLineage { inner })
                .collect(),
        ))
    }

    fn two_section(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.two_section(),
        }
    }

    fn validate(&self) -> PyResult<()> {
        self.inner.validate().map_err(err)
    }

    fn __eq__(&self, other: &PyHypergraph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Hypergraph(k={}, n={}, m={})",
            self.inner.k(),
            self.inner.n(),
            self.inner.m()
        )
    }
}

#[pymethods]
impl PyLineage {
    #[getter]
    fn generation(&self) -> usize {
        self.inner.generation
    }

    #[getter]
    fn vertex_parent(&self) -> Vec<u32> {
        self.inner.vertex_parent.clone()
    }

    #[getter]
    fn edge_parent(&self) -> Vec<Option<u32>> {
        self.inner.edge_parent.clone()
    }

    #[getter]
    fn clone_rank(&self) -> Vec<u32> {
        self.inner.clone_rank.clone()
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: Graph::new(n, edges).map_err(err)?,
        })
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        PyGraph {
            inner: Graph::complete(n),
        }
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        PyGraph {
            inner: Graph::cycle(n),
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: u32, v: u32) -> bool {
        (u as usize) < self.inner.n() && (v as usize) < self.inner.n() && self.inner.has_edge(u, v)
    }

    /// Graph-level cloning step (the 2-section counterpart of `step`).
    fn clone_step(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.clone_step(),
        }
    }

    fn max_clique_size(&self) -> usize {
        self.inner.max_clique_size()
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

/// Distance summary of the 2-section as a dict.
#[pyfunction]
fn distance_summary(py: Python<'_>, h: &PyHypergraph) -> PyResult<Py<PyAny>> {
    report_to_py(py, &metrics::distance_summary(&h.inner))
}

/// BFS distances from a source vertex; None marks unreachable.
#[pyfunction]
fn bfs_distances(h: &PyHypergraph, source: u32) -> PyResult<Vec<Option<u32>>> {
    metrics::bfs_distances(&h.inner, source).map_err(err)
}

#[pyfunction]
fn wiener_closed_form(w0: u64, m2_0: u64, n0: u64, t: u32) -> PyResult<u64> {
    metrics::wiener_closed_form(w0, m2_0, n0, t).map_err(err)
}

/// Adjacency eigenvalues of a graph, descending.
#[pyfunction]
#[pyo3(signature = (g, tol=1e-10))]
fn spectrum(g: &PyGraph, tol: f64) -> PyResult<Vec<f64>> {
    Ok(eigen::spectrum(&g.inner, tol).map_err(err)?.eigenvalues)
}

/// Motif census as a dict with pattern counts and motif-number aliases.
#[pyfunction]
#[pyo3(signature = (h, brute_force=false, by_cardinality_vector=false))]
fn census(
    py: Python<'_>,
    h: &PyHypergraph,
    brute_force: bool,
    by_cardinality_vector: bool,
) -> PyResult<Py<PyAny>> {
    let opts = CensusOptions {
        per_cardinality_vector: by_cardinality_vector,
        ..CensusOptions::default()
    };
    let counted = if brute_force {
        motif::census_bruteforce(&h.inner, &opts).map_err(err)?
    } else {
        motif::census(&h.inner, &opts).map_err(err)?
    };
    let out = PyDict::new(py);
    out.set_item("triples", counted.triples_examined)?;
    let counts = PyDict::new(py);
    for (pattern, count) in &counted.counts {
        counts.set_item(pattern.to_string(), count)?;
    }
    out.set_item("counts", counts)?;
    let numbered = PyDict::new(py);
    for (number, count) in counted.numbered_counts() {
        numbered.set_item(number, count)?;
    }
    out.set_item("motif_numbers", numbered)?;
    if let Some(cvs) = &counted.cv_counts {
        let list = PyList::empty(py);
        for (cv, count) in cvs {
            let row = PyDict::new(py);
            row.set_item("cv", cv.0)?;
            row.set_item("pattern", cv.indicator().canonical().to_string())?;
            row.set_item("count", count)?;
            list.append(row)?;
        }
        out.set_item("cardinality_vectors", list)?;
    }
    Ok(out.unbind().into_any())
}

/// Classify a 7-region cardinality vector; returns None for disconnected
/// triples, else (canonical pattern, motif number or None).
#[pyfunction]
fn classify(cv: [u32; 7]) -> Option<(String, Option<u8>)> {
    match motif::classify(&CardinalityVector(cv)) {
        MotifClass::Disconnected => None,
        MotifClass::Motif { pattern, number } => Some((pattern.to_string(), number)),
    }
}

/// Region sizes of a hyperedge triple.
#[pyfunction]
fn cardinality_vector(e1: Vec<u32>, e2: Vec<u32>, e3: Vec<u32>) -> [u32; 7] {
    let mut sorted = [e1, e2, e3];
    for e in &mut sorted {
        e.sort_unstable();
    }
    CardinalityVector::from_edges(&sorted[0], &sorted[1], &sorted[2]).0
}

#[pyfunction]
fn descendant_multiplier(cv: [u32; 7]) -> u64 {
    motif::descendant_multiplier(&CardinalityVector(cv))
}

/// Maximum vertex count realizing a pattern at uniformity k, or None.
#[pyfunction]
fn alpha(pattern: &str, k: usize) -> PyResult<Option<u32>> {
    let p = Pattern::parse(pattern)
        .ok_or_else(|| PyValueError::new_err(format!("bad pattern {pattern:?}")))?;
    Ok(motif::alpha(p, k))
}

/// Exact tuple counters and the clustering coefficients.
#[pyfunction]
fn clustering_report(py: Python<'_>, h: &PyHypergraph) -> PyResult<Py<PyAny>> {
    report_to_py(py, &clustering::clustering_report(&h.inner).map_err(err)?)
}

/// Sample G(n, k, p) with p given exactly as num/den.
#[pyfunction]
fn sample(n: usize, k: usize, p_num: i64, p_den: i64, seed: u64) -> PyResult<PyHypergraph> {
    let params = random::RandomModelParams::new(
        n,
        k,
        ilth::frac::frac(p_num as i128, p_den as i128),
        seed,
        1,
    )
    .map_err(err)?;
    Ok(PyHypergraph {
        inner: random::sample(&params).map_err(err)?,
    })
}

/// Matched-density inclusion probability m / C(n, k) as (num, den).
#[pyfunction]
fn matched_p(h: &PyHypergraph) -> PyResult<(i64, i64)> {
    let params = random::matched_params(&h.inner, 0, 1).map_err(err)?;
    let p = params.p_exact;
    Ok((*p.numer() as i64, *p.denom() as i64))
}

#[pyfunction]
fn expected_hc1(n: usize, k: usize, p: f64) -> f64 {
    random::expected_hc1(n, k, p)
}

#[pyfunction]
fn expected_hc2(n: usize, k: usize, p: f64) -> f64 {
    random::expected_hc2(n, k, p)
}

/// "grows", "decays", or "critical" for the matched random model.
#[pyfunction]
fn motif_expectation_class(pattern: &str, k: usize) -> PyResult<String> {
    let p = Pattern::parse(pattern)
        .ok_or_else(|| PyValueError::new_err(format!("bad pattern {pattern:?}")))?;
    let class = random::motif_expectation_class(p, k).map_err(err)?;
    Ok(match class {
        random::GrowthClass::Grows => "grows".to_string(),
        random::GrowthClass::Decays => "decays".to_string(),
        random::GrowthClass::Critical => "critical".to_string(),
    })
}

/// Homomorphism image per vertex, or None when none exists.
#[pyfunction]
#[pyo3(signature = (g, target, budget=100_000_000))]
fn find_homomorphism(g: &PyGraph, target: &PyGraph, budget: u64) -> PyResult<Option<Vec<u32>>> {
    Ok(hom::find_homomorphism(&g.inner, &target.inner, budget)
        .map_err(err)?
        .map(|m| m.image))
}

/// Constructive embedding; returns (t, image) with the image inducing a copy
/// of g in the 2-section of the t-th generation.
#[pyfunction]
fn embed(g: &PyGraph, h0: &PyHypergraph, image: Vec<u32>) -> PyResult<(usize, Vec<u32>)> {
    let (t, map) = hom::embed(
        &g.inner,
        &h0.inner,
        &hom::VertexMap::new(image),
        &hom::EmbedOptions::default(),
    )
    .map_err(err)?;
    Ok((t, map.image))
}

/// The embedding host: 2-section after t cloning steps.
#[pyfunction]
fn host_after(h0: &PyHypergraph, t: usize) -> PyGraph {
    PyGraph {
        inner: hom::host_after(&h0.inner, t),
    }
}

#[pyfunction]
fn verify_embedding(g: &PyGraph, host: &PyGraph, image: Vec<u32>) -> bool {
    hom::verify_embedding(&g.inner, &host.inner, &hom::VertexMap::new(image))
}

/// Generation-0 ancestor of a vertex under a run's lineages.
#[pyfunction]
fn project_to_initial(lineages: Vec<PyRef<PyLineage>>, v: u32) -> PyResult<u32> {
    let owned: Vec<Lineage> = lineages.iter().map(|l| l.inner.clone()).collect();
    hypergraph::project_to_initial(&owned, v).map_err(err)
}

#[pymodule]
fn ilth_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyHypergraph>()?;
    m.add_class::<PyLineage>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(distance_summary, m)?)?;
    m.add_function(wrap_pyfunction!(bfs_distances, m)?)?;
    m.add_function(wrap_pyfunction!(wiener_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(cardinality_vector, m)?)?;
    m.add_function(wrap_pyfunction!(descendant_multiplier, m)?)?;
    m.add_function(wrap_pyfunction!(alpha, m)?)?;
    m.add_function(wrap_pyfunction!(clustering_report, m)?)?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    m.add_function(wrap_pyfunction!(matched_p, m)?)?;
    m.add_function(wrap_pyfunction!(expected_hc1, m)?)?;
    m.add_function(wrap_pyfunction!(expected_hc2, m)?)?;
    m.add_function(wrap_pyfunction!(motif_expectation_class, m)?)?;
    m.add_function(wrap_pyfunction!(find_homomorphism, m)?)?;
    m.add_function(wrap_pyfunction!(embed, m)?)?;
    m.add_function(wrap_pyfunction!(host_after, m)?)?;
    m.add_function(wrap_pyfunction!(verify_embedding, m)?)?;
    m.add_function(wrap_pyfunction!(project_to_initial, m)?)?;
    Ok(())
}
