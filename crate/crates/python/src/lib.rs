//! Python bindings. Rationals cross the boundary as strings like `"3/5"`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use cliffan::demo::run_demo;
use cliffan::psi::{psi_k_closed_form, psi_k_hypergeometric};
use cliffan::rational::parse_rational;
use cliffan::solver::{class_dimensions, converse_counterexample, find_region_witness};
use cliffan::suite::{run_suite, SuiteConfig};
use cliffan::{Blade, Multivector, PolyField, PsiKind, PsiPair, RegionLabel, StructuralSet, TransitionMatrix};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn kind(name: &str) -> PyResult<PsiKind> {
    match name {
        "plus" | "+" => Ok(PsiKind::Plus),
        "minus" | "-" => Ok(PsiKind::Minus),
        other => other
            .parse::<usize>()
            .map(PsiKind::Level)
            .map_err(|_| err(format!("unknown Psi kind {other:?}; use a level, 'plus' or 'minus'"))),
    }
}

#[pyclass(name = "Multivector", module = "cliffan_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMultivector(Multivector);

#[pymethods]
impl PyMultivector {
    #[new]
    fn new(text: &str, m: usize) -> PyResult<Self> {
        Multivector::parse(text, m).map(PyMultivector).map_err(err)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    /// Coefficient of the blade with the given increasing indices, as a string.
    fn coefficient(&self, indices: Vec<usize>) -> PyResult<String> {
        let b = Blade::from_indices(&indices, self.0.dim()).map_err(err)?;
        Ok(self.0.coefficient(b).to_string())
    }

    fn grade(&self, k: usize) -> PyResult<Self> {
        self.0.grade_project(k).map(PyMultivector).map_err(err)
    }

    fn even(&self) -> Self {
        PyMultivector(self.0.even_part())
    }

    fn odd(&self) -> Self {
        PyMultivector(self.0.odd_part())
    }

    fn reverse(&self) -> Self {
        PyMultivector(self.0.reverse())
    }

    fn conjugate(&self) -> Self {
        PyMultivector(self.0.conjugate())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __mul__(&self, other: PyRef<'_, PyMultivector>) -> PyResult<Self> {
        self.0.geometric_product(&other.0).map(PyMultivector).map_err(err)
    }

    fn __add__(&self, other: PyRef<'_, PyMultivector>) -> PyResult<Self> {
        self.0.try_add(&other.0).map(PyMultivector).map_err(err)
    }

    fn __sub__(&self, other: PyRef<'_, PyMultivector>) -> PyResult<Self> {
        self.0.try_add(&-&other.0).map(PyMultivector).map_err(err)
    }

    fn __neg__(&self) -> Self {
        PyMultivector(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Multivector({:?}, {})", self.0.to_string(), self.0.dim())
    }
}

#[pyclass(name = "StructuralSet", module = "cliffan_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyStructuralSet(StructuralSet);

#[pymethods]
impl PyStructuralSet {
    /// From a list of multivector strings such as `["e[3]", "e[2]", "e[1]"]`.
    #[new]
    fn new(vectors: Vec<String>) -> PyResult<Self> {
        let m = vectors.len();
        let vs = vectors.iter().map(|s| Multivector::parse(s, m)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        StructuralSet::validate(vs).map(PyStructuralSet).map_err(err)
    }

    #[staticmethod]
    fn standard(m: usize) -> PyResult<Self> {
        StructuralSet::standard(m).map(PyStructuralSet).map_err(err)
    }

    #[staticmethod]
    fn reversed(m: usize) -> PyResult<Self> {
        StructuralSet::reversed(m).map(PyStructuralSet).map_err(err)
    }

    #[staticmethod]
    fn signed_permutation(spec: Vec<i64>) -> PyResult<Self> {
        StructuralSet::signed_permutation(&spec).map(PyStructuralSet).map_err(err)
    }

    #[staticmethod]
    fn rotation2(c1: &str) -> PyResult<Self> {
        StructuralSet::rotation2(parse_rational(c1).map_err(err)?).map(PyStructuralSet).map_err(err)
    }

    #[staticmethod]
    fn reflection2(c1: &str) -> PyResult<Self> {
        StructuralSet::reflection2(parse_rational(c1).map_err(err)?).map(PyStructuralSet).map_err(err)
    }

    /// Rows of an orthogonal rational matrix, entries as strings.
    #[staticmethod]
    fn from_matrix(rows: Vec<Vec<String>>) -> PyResult<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let matrix = cliffan::Matrix::from_rows(rows).map_err(err)?;
        let t = TransitionMatrix::new(matrix).map_err(err)?;
        StructuralSet::from_matrix(&t).map(PyStructuralSet).map_err(err)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn vectors(&self) -> Vec<PyMultivector> {
        self.0.vectors().iter().cloned().map(PyMultivector).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("StructuralSet({})", self.0)
    }
}

#[pyclass(name = "PolyField", module = "cliffan_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPolyField(PolyField);

#[pymethods]
impl PyPolyField {
    #[new]
    fn new(text: &str, m: usize) -> PyResult<Self> {
        PolyField::parse(text, m).map(PyPolyField).map_err(err)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn laplacian(&self) -> Self {
        PyPolyField(self.0.laplacian())
    }

    fn dirac_left(&self, psi: PyRef<'_, PyStructuralSet>) -> PyResult<Self> {
        self.0.dirac_left(&psi.0).map(PyPolyField).map_err(err)
    }

    fn dirac_right(&self, psi: PyRef<'_, PyStructuralSet>) -> PyResult<Self> {
        self.0.dirac_right(&psi.0).map(PyPolyField).map_err(err)
    }

    fn sandwich(&self, phi: PyRef<'_, PyStructuralSet>, psi: PyRef<'_, PyStructuralSet>) -> PyResult<Self> {
        self.0.sandwich(&phi.0, &psi.0).map(PyPolyField).map_err(err)
    }

    fn dirac_left_left(&self, phi: PyRef<'_, PyStructuralSet>, psi: PyRef<'_, PyStructuralSet>) -> PyResult<Self> {
        self.0.dirac_left_left(&phi.0, &psi.0).map(PyPolyField).map_err(err)
    }

    fn even(&self) -> Self {
        PyPolyField(self.0.even_part())
    }

    fn odd(&self) -> Self {
        PyPolyField(self.0.odd_part())
    }

    fn grade(&self, k: usize) -> PyResult<Self> {
        self.0.grade_project(k).map(PyPolyField).map_err(err)
    }

    /// Term list `[{"alpha": [...], "blade": [...], "coef": "p/q"}, ...]`.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        self.0
            .to_term_list()
            .into_iter()
            .map(|t| {
                let d = PyDict::new(py);
                d.set_item("alpha", t.alpha)?;
                d.set_item("blade", t.blade)?;
                d.set_item("coef", t.coef)?;
                Ok(d)
            })
            .collect()
    }

    fn __add__(&self, other: PyRef<'_, PyPolyField>) -> PyResult<Self> {
        self.0.try_add(&other.0).map(PyPolyField).map_err(err)
    }

    fn __sub__(&self, other: PyRef<'_, PyPolyField>) -> PyResult<Self> {
        self.0.try_sub(&other.0).map(PyPolyField).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PolyField({:?}, {})", self.0.to_string(), self.0.dim())
    }
}

#[pyclass(name = "PsiPair", module = "cliffan_py", frozen)]
struct PyPsiPair(PsiPair);

#[pymethods]
impl PyPsiPair {
    #[new]
    fn new(phi: PyRef<'_, PyStructuralSet>, psi: PyRef<'_, PyStructuralSet>) -> PyResult<Self> {
        PsiPair::new(&phi.0, &psi.0).map(PyPsiPair).map_err(err)
    }

    /// `kind` is a level `"0".."m"`, `"plus"` or `"minus"`.
    fn apply(&self, kind_name: &str, a: PyRef<'_, PyMultivector>) -> PyResult<PyMultivector> {
        self.0.apply(&kind(kind_name)?, &a.0).map(PyMultivector).map_err(err)
    }

    fn apply_subset(&self, indices: Vec<usize>, a: PyRef<'_, PyMultivector>) -> PyResult<PyMultivector> {
        self.0.subset(&indices, &a.0).map(PyMultivector).map_err(err)
    }

    fn apply_field(&self, kind_name: &str, f: PyRef<'_, PyPolyField>) -> PyResult<PyPolyField> {
        self.0.apply_field(&kind(kind_name)?, &f.0).map(PyPolyField).map_err(err)
    }

    /// Rank of the operator matrix on the full algebra.
    fn rank(&self, kind_name: &str) -> PyResult<usize> {
        Ok(self.0.matrix(&kind(kind_name)?).map_err(err)?.rank())
    }
}

/// Membership report with keys harmonic, phiPsiHarmonic, inframonogenic,
/// hypLeft, hypRight, region.
#[pyfunction]
fn classify<'py>(
    py: Python<'py>,
    phi: PyRef<'_, PyStructuralSet>,
    psi: PyRef<'_, PyStructuralSet>,
    f: PyRef<'_, PyPolyField>,
) -> PyResult<Bound<'py, PyDict>> {
    let r = cliffan::classify(&phi.0, &psi.0, &f.0).map_err(err)?.report();
    let d = PyDict::new(py);
    d.set_item("harmonic", r.harmonic)?;
    d.set_item("phiPsiHarmonic", r.phi_psi_harmonic)?;
    d.set_item("inframonogenic", r.inframonogenic)?;
    d.set_item("hypLeft", r.hyp_left)?;
    d.set_item("hypRight", r.hyp_right)?;
    d.set_item("region", r.region)?;
    Ok(d)
}

#[pyfunction]
fn closed_form(m: usize, j: usize, k: usize) -> String {
    psi_k_closed_form(m, j, k).to_string()
}

#[pyfunction]
fn hypergeometric_form(m: usize, j: usize, k: usize) -> PyResult<String> {
    psi_k_hypergeometric(m, j, k).map(|r| r.to_string()).map_err(err)
}

#[pyfunction]
fn dimensions<'py>(
    py: Python<'py>,
    phi: PyRef<'_, PyStructuralSet>,
    psi: PyRef<'_, PyStructuralSet>,
    degree: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let dims = class_dimensions(&phi.0, &psi.0, phi.0.dim(), degree).map_err(err)?;
    let d = PyDict::new(py);
    for (k, v) in [
        ("H", dims.h),
        ("Hpp", dims.hpp),
        ("I", dims.i),
        ("H∩Hpp", dims.h_hpp),
        ("H∩I", dims.h_i),
        ("Hpp∩I", dims.hpp_i),
        ("triple", dims.triple),
    ] {
        d.set_item(k, v)?;
    }
    Ok(d)
}

/// Witness in exactly `region` (e.g. `"Hpp,I"`), or None when the bounded
/// search finds nothing.
#[pyfunction]
fn witness(
    phi: PyRef<'_, PyStructuralSet>,
    psi: PyRef<'_, PyStructuralSet>,
    degree: usize,
    region: &str,
) -> PyResult<Option<PyPolyField>> {
    let target: RegionLabel = region.parse().map_err(err)?;
    Ok(find_region_witness(&phi.0, &psi.0, phi.0.dim(), degree, target).map_err(err)?.map(PyPolyField))
}

#[pyfunction]
fn converse(phi: PyRef<'_, PyStructuralSet>) -> PyResult<PyPolyField> {
    converse_counterexample(&phi.0, phi.0.dim()).map(PyPolyField).map_err(err)
}

/// Runs the identity suite; returns `(all_pass, text_report)`.
#[pyfunction]
#[pyo3(signature = (dims = vec![2, 3], trials = 10, seed = 1))]
fn verify(dims: Vec<usize>, trials: usize, seed: u64) -> PyResult<(bool, String)> {
    let cfg = SuiteConfig { dims, trials, seed, ..SuiteConfig::default() };
    let r = run_suite(&cfg).map_err(err)?;
    Ok((r.all_pass, r.to_text()))
}

/// Replays the worked examples; returns `(all_pass, text_report)`.
#[pyfunction]
fn demo() -> PyResult<(bool, String)> {
    let r = run_demo().map_err(err)?;
    Ok((r.all_pass, r.to_text()))
}

#[pymodule]
fn cliffan_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMultivector>()?;
    m.add_class::<PyStructuralSet>()?;
    m.add_class::<PyPolyField>()?;
    m.add_class::<PyPsiPair>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(hypergeometric_form, m)?)?;
    m.add_function(wrap_pyfunction!(dimensions, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(converse, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(demo, m)?)?;
    Ok(())
}
