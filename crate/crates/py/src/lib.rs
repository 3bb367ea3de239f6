//! Python bindings: root systems, `R(m)` classification, closed-form
//! predictions, grid verification and table rendering.

use heightfilter_core::report::{self, CellReport, GridSpec, VerifyOptions};
use heightfilter_core::{self as core, Family, SystemLabel, TableFormat, TableId};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(heightfilter, HeightFilterError, PyException);

fn to_py(e: core::Error) -> PyErr {
    match e {
        core::Error::Parse(_) | core::Error::InvalidModulus(_) | core::Error::NoPrediction(..) => {
            PyValueError::new_err(e.to_string())
        }
        _ => HeightFilterError::new_err(e.to_string()),
    }
}

fn label(system: &str) -> PyResult<SystemLabel> {
    system.parse().map_err(to_py)
}

#[pyclass(frozen, name = "RootSystem")]
struct PyRootSystem {
    inner: core::RootSystem,
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(system: &str) -> PyResult<Self> {
        Ok(PyRootSystem {
            inner: core::RootSystem::build(label(system)?).map_err(to_py)?,
        })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn coxeter_number(&self) -> i64 {
        self.inner.coxeter_number()
    }

    #[getter]
    fn exponents(&self) -> Vec<i64> {
        self.inner.exponents().to_vec()
    }

    /// Coefficients of the positive roots over the simple roots.
    #[getter]
    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner
            .positive_roots()
            .iter()
            .map(|b| b.coeffs().to_vec())
            .collect()
    }

    /// Number of positive roots of height `k`.
    fn pi(&self, k: usize) -> usize {
        self.inner.pi(k)
    }

    fn classify(&self, m: usize) -> PyResult<Classification> {
        Ok(Classification {
            cell: CellReport::compute(&self.inner, m).map_err(to_py)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.label())
    }
}

#[pyclass(frozen)]
struct Classification {
    cell: CellReport,
}

#[pymethods]
impl Classification {
    #[getter]
    fn system(&self) -> String {
        self.cell.system.to_string()
    }

    #[getter]
    fn m(&self) -> usize {
        self.cell.m
    }

    #[getter]
    fn cardinality(&self) -> usize {
        self.cell.cardinality
    }

    #[getter]
    fn base(&self) -> Vec<Vec<i64>> {
        self.cell.base.clone()
    }

    #[getter(r#type)]
    fn dynkin(&self) -> String {
        self.cell.dynkin.to_string()
    }

    #[getter]
    fn levi(&self) -> bool {
        self.cell.levi
    }

    #[getter]
    fn delta(&self) -> Option<Vec<i64>> {
        self.cell.delta.clone()
    }

    #[getter]
    fn d(&self) -> Option<u64> {
        self.cell.d()
    }

    #[getter]
    fn x_dagger(&self) -> Option<String> {
        self.cell.x_dagger().map(|x| x.to_string())
    }

    #[getter]
    fn x_zero(&self) -> Option<String> {
        self.cell.x_zero().map(|t| t.to_string_or_empty_set())
    }

    fn text(&self) -> String {
        self.cell.text()
    }

    fn to_json(&self) -> String {
        self.cell.to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "Classification(system='{}', m={}, type='{}')",
            self.cell.system, self.cell.m, self.cell.dynkin
        )
    }
}

#[pyclass(frozen)]
struct Prediction {
    inner: core::Prediction,
}

#[pymethods]
impl Prediction {
    #[getter(r#type)]
    fn dynkin(&self) -> String {
        self.inner.dynkin.to_string()
    }

    #[getter]
    fn levi(&self) -> bool {
        self.inner.levi
    }

    #[getter]
    fn d(&self) -> u64 {
        self.inner.d
    }

    #[getter]
    fn d_alt(&self) -> Option<u64> {
        self.inner.d_alt
    }

    #[getter]
    fn source(&self) -> &'static str {
        self.inner.source.tag()
    }

    #[getter]
    fn x_dagger(&self) -> Option<String> {
        self.inner.x_dagger.map(|x| x.to_string())
    }

    #[getter]
    fn x_zero(&self) -> Option<String> {
        self.inner
            .x_dagger
            .map(|_| self.inner.x_zero_type().to_string_or_empty_set())
    }

    fn __repr__(&self) -> String {
        format!("Prediction(type='{}', d={})", self.inner.dynkin, self.inner.d)
    }
}

#[pyclass(frozen)]
struct VerifyResult {
    inner: report::VerifyReport,
}

#[pymethods]
impl VerifyResult {
    #[getter]
    fn passed(&self) -> bool {
        self.inner.all_passed()
    }

    #[getter]
    fn cells(&self) -> usize {
        self.inner.summary.cells
    }

    #[getter]
    fn failing(&self) -> Vec<String> {
        self.inner.summary.failing.clone()
    }

    fn summary(&self) -> String {
        self.inner.summary_text()
    }

    fn text(&self) -> String {
        self.inner.text()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }
}

/// Classify `R(m)` for the system named by `system` (e.g. "E7").
#[pyfunction]
fn classify(system: &str, m: usize) -> PyResult<Classification> {
    PyRootSystem::new(system)?.classify(m)
}

/// Closed-form prediction for `R(m)`, valid for `2 <= m < h`.
#[pyfunction]
fn predict(system: &str, m: usize) -> PyResult<Prediction> {
    Ok(Prediction {
        inner: core::predict(label(system)?, m).map_err(to_py)?,
    })
}

/// Compare classification with prediction on every cell of a grid.
#[pyfunction]
#[pyo3(signature = (family=None, min_rank=None, max_rank=None))]
fn verify(
    py: Python<'_>,
    family: Option<&str>,
    min_rank: Option<usize>,
    max_rank: Option<usize>,
) -> PyResult<VerifyResult> {
    let family = family
        .map(|f| {
            let mut chars = f.chars();
            match (chars.next().and_then(Family::from_letter), chars.next()) {
                (Some(fam), None) => Ok(fam),
                _ => Err(PyValueError::new_err(format!("unknown family {f:?}"))),
            }
        })
        .transpose()?;
    let spec = GridSpec {
        family,
        min_rank,
        max_rank,
    };
    let inner = py
        .detach(|| report::verify(&spec, VerifyOptions::default()))
        .map_err(to_py)?;
    Ok(VerifyResult { inner })
}

/// Render one of the tables: thm1, e-prop, cardinalities, heights, f4.
#[pyfunction]
#[pyo3(signature = (id, format="text"))]
fn table(id: &str, format: &str) -> PyResult<String> {
    let id: TableId = id.parse().map_err(to_py)?;
    let format = match format {
        "text" => TableFormat::Text,
        "json" => TableFormat::Json,
        other => return Err(PyValueError::new_err(format!("unknown format {other:?}"))),
    };
    core::render_table(id, format).map_err(to_py)
}

#[pymodule]
fn heightfilter(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_class::<Classification>()?;
    m.add_class::<Prediction>()?;
    m.add_class::<VerifyResult>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(predict, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add("HeightFilterError", m.py().get_type::<HeightFilterError>())?;
    Ok(())
}
