//! Python bindings for `commclass-core`.
//!
//! Counts come back as Python `int`s of arbitrary size. Long-running calls
//! release the GIL.

use std::time::Duration;

use commclass_core::coxeter;
use commclass_core::engine;
use commclass_core::reference;
use commclass_core::repr::{self, SvgOptions};
use commclass_core::{BigCount, Error};
use pyo3::exceptions::{PyTimeoutError, PyValueError};
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[pyclass(module = "commclass", name = "Permutation", frozen, eq, ord, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(coxeter::Permutation);

#[pymethods]
impl Permutation {
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        coxeter::Permutation::from_one_line(&images).map(Self).map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        coxeter::Permutation::identity(n).map(Self).map_err(err)
    }

    /// The longest element `[n, ..., 1]`.
    #[staticmethod]
    fn longest(n: usize) -> PyResult<Self> {
        coxeter::Permutation::longest(n).map(Self).map_err(err)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn images(&self) -> Vec<usize> {
        self.0.images().iter().map(|&v| v as usize).collect()
    }

    fn length(&self) -> usize {
        self.0.length()
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    /// `self * other`, acting as `self(other(k))`.
    fn compose(&self, other: &Self) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    fn left_descents(&self) -> Vec<usize> {
        self.0.left_descents()
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn is_longest(&self) -> bool {
        self.0.is_longest()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.images())
    }
}

/// A word in the generators `s_1, ..., s_{n-1}` of `S_n`.
#[pyclass(module = "commclass", name = "Word", frozen, eq, ord, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(coxeter::Word);

#[pymethods]
impl Word {
    #[new]
    fn new(letters: Vec<u8>, rank: usize) -> PyResult<Self> {
        coxeter::Word::new(rank, letters).map(Self).map_err(err)
    }

    /// Digits (`"321323"`) or comma-separated letters.
    #[staticmethod]
    fn parse(text: &str, rank: usize) -> PyResult<Self> {
        coxeter::Word::parse(text, rank).map(Self).map_err(err)
    }

    #[getter]
    fn letters(&self) -> Vec<usize> {
        self.0.letters().iter().map(|&x| x as usize).collect()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn evaluate(&self) -> Permutation {
        Permutation(self.0.evaluate())
    }

    fn is_reduced(&self) -> bool {
        self.0.is_reduced()
    }

    fn is_canonical(&self) -> bool {
        engine::is_canonical(&self.0)
    }

    /// Lexicographically least word in the commutation class.
    fn canonicalize(&self) -> Word {
        Word(engine::canonicalize(&self.0))
    }

    /// Every word reachable by commutation moves, sorted.
    fn commutation_class(&self) -> PyResult<Vec<Word>> {
        engine::commutation_class_of(&self.0).map(|s| s.into_iter().map(Word).collect()).map_err(err)
    }

    /// Swaps letters `pos` and `pos + 1` (1-based).
    fn apply_commutation(&self, pos: usize) -> PyResult<Word> {
        engine::apply_commutation(&self.0, pos).map(Word).map_err(err)
    }

    /// Rewrites `i j i` at `pos` (1-based) as `j i j`.
    fn apply_braid(&self, pos: usize) -> PyResult<Word> {
        engine::apply_braid(&self.0, pos).map(Word).map_err(err)
    }

    /// Number of words in the commutation class, via linear extensions of the heap.
    fn class_size(&self) -> BigCount {
        repr::linear_extension_count(&repr::heap_of_word(&self.0))
    }

    #[pyo3(signature = (scale = 40.0, margin = 10.0, transpose = false))]
    fn heap_svg(&self, scale: f64, margin: f64, transpose: bool) -> String {
        repr::render_svg(&repr::heap_of_word(&self.0), &SvgOptions { scale, margin, transpose_heap: transpose })
    }

    #[pyo3(signature = (scale = 40.0, margin = 10.0))]
    fn network_svg(&self, scale: f64, margin: f64) -> String {
        repr::render_svg(&repr::wiring_diagram(&self.0), &SvgOptions { scale, margin, transpose_heap: false })
    }

    /// Only for reduced words of the longest element.
    #[pyo3(signature = (scale = 40.0, margin = 10.0))]
    fn tiling_svg(&self, scale: f64, margin: f64) -> PyResult<String> {
        let tiling = repr::rhombic_tiling(&self.0).map_err(err)?;
        Ok(repr::render_svg(&tiling, &SvgOptions { scale, margin, transpose_heap: false }))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Word('{}', rank={})", self.0, self.0.rank())
    }
}

#[pyclass(module = "commclass", name = "CommutationClass", frozen)]
pub struct CommutationClass {
    #[pyo3(get)]
    canonical: Word,
    #[pyo3(get)]
    size: BigCount,
    #[pyo3(get)]
    rank: usize,
    #[pyo3(get)]
    members: Option<Vec<Word>>,
}

#[pymethods]
impl CommutationClass {
    fn __repr__(&self) -> String {
        format!("CommutationClass(canonical='{}', size={})", self.canonical.0, self.size)
    }
}

impl From<engine::CommutationClass> for CommutationClass {
    fn from(c: engine::CommutationClass) -> Self {
        Self {
            canonical: Word(c.canonical),
            size: c.size,
            rank: c.rank,
            members: c.members.map(|m| m.into_iter().map(Word).collect()),
        }
    }
}

#[pyfunction]
fn count_reduced_words(py: Python<'_>, w: &Permutation) -> BigCount {
    let w = w.0.clone();
    py.detach(move || commclass_core::count_reduced_words(&w))
}

/// Closed-form count for the longest element of `S_n`.
#[pyfunction]
fn count_reduced_words_longest(n: usize) -> PyResult<BigCount> {
    commclass_core::count_reduced_words_longest(n).map_err(err)
}

/// Reduced words of `w` in lexicographic order, at most `limit` of them.
#[pyfunction]
#[pyo3(signature = (w, limit = None))]
fn reduced_words(py: Python<'_>, w: &Permutation, limit: Option<usize>) -> Vec<Word> {
    let w = w.0.clone();
    py.detach(move || commclass_core::enumerate_reduced_words(&w).take(limit.unwrap_or(usize::MAX)).map(Word).collect())
}

/// Raises `TimeoutError` when `time_limit` (seconds) runs out first.
#[pyfunction]
#[pyo3(signature = (w, threads = 1, time_limit = None))]
fn count_commutation_classes(
    py: Python<'_>,
    w: &Permutation,
    threads: usize,
    time_limit: Option<f64>,
) -> PyResult<BigCount> {
    let time_limit = match time_limit {
        Some(t) if !(t.is_finite() && t >= 0.0) => {
            return Err(PyValueError::new_err("time_limit must be non-negative"))
        }
        t => t.map(Duration::from_secs_f64),
    };
    let options = engine::SearchOptions { threads, time_limit };
    let w = w.0.clone();
    let result = py.detach(move || commclass_core::count_commutation_classes_with(&w, &options)).map_err(err)?;
    if result.complete {
        Ok(result.count)
    } else {
        Err(PyTimeoutError::new_err(format!("time limit reached after counting {} classes", result.count)))
    }
}

/// Canonical words of every commutation class of `w`, sorted.
#[pyfunction]
#[pyo3(signature = (w, limit = None))]
fn canonical_words(py: Python<'_>, w: &Permutation, limit: Option<usize>) -> PyResult<Vec<Word>> {
    let w = w.0.clone();
    py.detach(move || {
        let words = commclass_core::canonical_words(&w)?;
        Ok(words.take(limit.unwrap_or(usize::MAX)).map(Word).collect())
    })
    .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (w, members = false, limit = None))]
fn commutation_classes(
    py: Python<'_>,
    w: &Permutation,
    members: bool,
    limit: Option<usize>,
) -> PyResult<Vec<CommutationClass>> {
    let w = w.0.clone();
    py.detach(move || {
        let classes = commclass_core::enumerate_classes(&w, members)?;
        Ok(classes.take(limit.unwrap_or(usize::MAX)).map(CommutationClass::from).collect())
    })
    .map_err(err)
}

/// Brute-force partition of all reduced words into commutation classes.
#[pyfunction]
#[pyo3(signature = (w, budget = engine::DEFAULT_ORACLE_BUDGET))]
fn partition_reduced_words(py: Python<'_>, w: &Permutation, budget: u64) -> PyResult<Vec<Vec<Word>>> {
    let w = w.0.clone();
    py.detach(move || commclass_core::partition_reduced_words(&w, budget))
        .map(|classes| classes.into_iter().map(|c| c.into_iter().map(Word).collect()).collect())
        .map_err(err)
}

/// Known class counts for the longest element, `n = 1..=10`.
#[pyfunction]
fn known_class_count(n: usize) -> Option<BigCount> {
    reference::known_class_count(n)
}

#[pymodule]
fn commclass(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Permutation>()?;
    m.add_class::<Word>()?;
    m.add_class::<CommutationClass>()?;
    m.add_function(wrap_pyfunction!(count_reduced_words, m)?)?;
    m.add_function(wrap_pyfunction!(count_reduced_words_longest, m)?)?;
    m.add_function(wrap_pyfunction!(reduced_words, m)?)?;
    m.add_function(wrap_pyfunction!(count_commutation_classes, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_words, m)?)?;
    m.add_function(wrap_pyfunction!(commutation_classes, m)?)?;
    m.add_function(wrap_pyfunction!(partition_reduced_words, m)?)?;
    m.add_function(wrap_pyfunction!(known_class_count, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
