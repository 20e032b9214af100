//! Python bindings: graphs, invariants, families, transformations,
//! enumeration and the conjecture registry.

use avecc::conjectures::{self as registry, ScanRequest};
use avecc::enumeration::{EnumerationQuery, GraphClass};
use avecc::families::{self, FamilySpec};
use avecc::graph::canon::is_isomorphic;
use avecc::graph::distance::{average_eccentricity, eccentricities};
use avecc::graph::edgelist::{parse_edge_list, to_edge_list};
use avecc::invariants::InvariantReport;
use avecc::transforms;
use avecc::{canonical_certificate, decode_graph6, eccentricity_profile, encode_graph6, Rational};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(pyavecc, AveccError, PyValueError, "Raised for any error reported by avecc.");

fn err(e: avecc::Error) -> PyErr {
    AveccError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((*r.numer(), *r.denom()))
}

fn from_json<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("value serializes")
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", frozen, module = "pyavecc")]
pub struct PyGraph {
    inner: avecc::Graph,
}

impl From<avecc::Graph> for PyGraph {
    fn from(inner: avecc::Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        avecc::Graph::from_edges(n, &edges).map(Into::into).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        decode_graph6(text).map(Into::into).map_err(err)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        parse_edge_list(text).map(Into::into).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn graph6(&self) -> String {
        encode_graph6(&self.inner)
    }

    fn edge_list(&self) -> String {
        to_edge_list(&self.inner)
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(err(avecc::Error::VertexOutOfRange { vertex: v, n: self.inner.n() }));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree()
    }

    fn is_unicyclic(&self) -> bool {
        self.inner.is_unicyclic()
    }

    /// Canonical graph6 string; equal for isomorphic graphs.
    fn certificate(&self) -> String {
        String::from_utf8(canonical_certificate(&self.inner)).expect("graph6 is ascii")
    }

    fn is_isomorphic(&self, other: PyRef<'_, PyGraph>) -> bool {
        is_isomorphic(&self.inner, &other.inner)
    }

    fn eccentricities(&self) -> PyResult<Vec<u32>> {
        eccentricities(&self.inner).map_err(err)
    }

    /// Exact average eccentricity as a `fractions.Fraction`.
    fn average_eccentricity<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, average_eccentricity(&self.inner).map_err(err)?)
    }

    /// Eccentricities, radius, diameter, center and the average as `"p/q"`.
    fn profile<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        from_json(py, &to_json(&eccentricity_profile(&self.inner).map_err(err)?))
    }

    /// Every invariant as a dict.
    fn invariants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        from_json(py, &InvariantReport::compute(&self.inner).map_err(err)?.to_json())
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: PyRef<'_, PyGraph>) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", encode_graph6(&self.inner))
    }
}

/// Builds a family member from the grammar, e.g. `"broom n=11 delta=6"`.
#[pyfunction]
fn family(spec: &str) -> PyResult<PyGraph> {
    let spec = FamilySpec::parse(spec).map_err(err)?;
    families::make(&spec).map(Into::into).map_err(err)
}

/// Closed-form average eccentricity of a family member.
#[pyfunction]
fn closed_form<'py>(py: Python<'py>, spec: &str) -> PyResult<Bound<'py, PyAny>> {
    let spec = FamilySpec::parse(spec).map_err(err)?;
    fraction(py, families::closed_form_ecc(&spec).map_err(err)?)
}

/// Pendant paths at `w`, longest first, each listed from `w` outward.
#[pyfunction]
fn pendant_paths(g: PyRef<'_, PyGraph>, w: usize) -> Vec<Vec<usize>> {
    transforms::pendant_paths_at(&g.inner, w).into_iter().map(|p| p.vertices).collect()
}

/// Applies π at `w`, moving the leaf of path `shorter` onto path `longer`
/// (indices into `pendant_paths`; `shorter` defaults to the last path).
#[pyfunction]
#[pyo3(signature = (g, w, longer = 0, shorter = None))]
fn pi_transform(g: PyRef<'_, PyGraph>, w: usize, longer: usize, shorter: Option<usize>) -> PyResult<PyGraph> {
    let paths = transforms::pendant_paths_at(&g.inner, w);
    let shorter = shorter.unwrap_or(paths.len().saturating_sub(1));
    let pick = |i: usize| {
        paths.get(i).ok_or_else(|| {
            err(avecc::Error::Precondition(format!("vertex {w} has {} pendant paths, no index {i}", paths.len())))
        })
    };
    transforms::pi_transform(&g.inner, w, pick(longer)?, pick(shorter)?).map(Into::into).map_err(err)
}

/// Applies σ to the bridge `(u, v)`.
#[pyfunction]
fn sigma_transform(g: PyRef<'_, PyGraph>, u: usize, v: usize) -> PyResult<PyGraph> {
    transforms::sigma_transform(&g.inner, (u, v)).map(Into::into).map_err(err)
}

/// A pendant vertex of a non-path tree whose removal keeps every other
/// eccentricity.
#[pyfunction]
fn removable_pendant(g: PyRef<'_, PyGraph>) -> PyResult<usize> {
    transforms::removable_pendant(&g.inner).map_err(err)
}

/// Every graph of `class` (`trees`, `graphs`, `unicyclic`, `starlike`) on `n` vertices.
#[pyfunction]
#[pyo3(signature = (class, n, max_degree = None, chemical = false))]
fn enumerate(class: &str, n: usize, max_degree: Option<usize>, chemical: bool) -> PyResult<Vec<PyGraph>> {
    let mut query = EnumerationQuery::new(class.parse::<GraphClass>().map_err(err)?, n);
    query.max_degree = max_degree;
    query.chemical = chemical;
    Ok(query.run().map_err(err)?.into_iter().map(Into::into).collect())
}

/// The conjecture registry.
#[pyfunction]
fn conjectures<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    from_json(py, &to_json(&registry::registry()))
}

/// Evaluates one closed-bound conjecture on `g`.
#[pyfunction]
fn evaluate<'py>(py: Python<'py>, conjecture: &str, g: PyRef<'_, PyGraph>) -> PyResult<Bound<'py, PyAny>> {
    let spec = registry::lookup(conjecture).map_err(err)?;
    from_json(py, &to_json(&registry::evaluate(&spec, &g.inner).map_err(err)?))
}

/// Scans a conjecture over `class` for `n_min ≤ n ≤ n_max`.
#[pyfunction]
#[pyo3(signature = (conjecture, class, n_min, n_max, jobs = None))]
fn scan<'py>(
    py: Python<'py>,
    conjecture: &str,
    class: &str,
    n_min: usize,
    n_max: usize,
    jobs: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let spec = registry::lookup(conjecture).map_err(err)?;
    let mut request = ScanRequest::new(class.parse::<GraphClass>().map_err(err)?, n_min, n_max);
    request.jobs = jobs;
    let report = py.detach(|| registry::scan(&spec, &request)).map_err(err)?;
    from_json(py, &report.to_json())
}

/// Margins of `δ · ecc(PC(k, δ))` over the conjectured `2n − 2`.
#[pyfunction]
fn refute_a100<'py>(py: Python<'py>, ks: Vec<usize>, deltas: Vec<usize>) -> PyResult<Bound<'py, PyAny>> {
    from_json(py, &registry::refute_a100(&ks, &deltas).map_err(err)?.to_json())
}

/// Real root `k*` and the integer maximizers of `k · ecc(LP(n, k))`.
#[pyfunction]
fn lollipop_kstar(n: usize) -> PyResult<(f64, Vec<usize>)> {
    let ks = families::lollipop_kstar(n).map_err(err)?;
    Ok((ks.root, ks.argmax))
}

#[pymodule]
fn pyavecc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("AveccError", m.py().get_type::<AveccError>())?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(pendant_paths, m)?)?;
    m.add_function(wrap_pyfunction!(pi_transform, m)?)?;
    m.add_function(wrap_pyfunction!(sigma_transform, m)?)?;
    m.add_function(wrap_pyfunction!(removable_pendant, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(conjectures, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    m.add_function(wrap_pyfunction!(refute_a100, m)?)?;
    m.add_function(wrap_pyfunction!(lollipop_kstar, m)?)?;
    Ok(())
}
