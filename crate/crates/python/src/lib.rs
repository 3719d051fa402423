//! Python bindings: permutations, combinatorial maps, classes, knots,
//! isomorphism and the graph view, exposed as the `rotmap_py` module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use rotmap::classes;
use rotmap::graph;
use rotmap::iso;
use rotmap::knot;
use rotmap::map::{normal_matching as normal_matching_rs, CombMap};
use rotmap::perm::Perm;

fn err(e: rotmap::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A permutation on corners 1..=n, in the left-to-right product convention.
#[pyclass(name = "Permutation", frozen, from_py_object)]
#[derive(Clone)]
struct PyPerm {
    inner: Perm,
}

#[pymethods]
impl PyPerm {
    /// Parse cycle notation, e.g. Permutation("(1 2)(3 4)", 4).
    #[new]
    fn new(cycles: &str, n: usize) -> PyResult<Self> {
        Ok(PyPerm {
            inner: Perm::parse_cycles(cycles, n).map_err(err)?,
        })
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyPerm {
            inner: Perm::identity(n),
        }
    }

    #[staticmethod]
    fn from_images(images: Vec<usize>) -> PyResult<Self> {
        Ok(PyPerm {
            inner: Perm::from_images(images).map_err(err)?,
        })
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn apply(&self, corner: usize) -> PyResult<usize> {
        if corner < 1 || corner > self.inner.order() {
            return Err(err(rotmap::Error::CornerOutOfRange(
                corner,
                self.inner.order(),
            )));
        }
        Ok(self.inner.apply(corner))
    }

    fn compose(&self, other: &PyPerm) -> PyResult<Self> {
        Ok(PyPerm {
            inner: self.inner.compose(&other.inner).map_err(err)?,
        })
    }

    fn inverse(&self) -> Self {
        PyPerm {
            inner: self.inner.inverse(),
        }
    }

    fn conjugate(&self, other: &PyPerm) -> PyResult<Self> {
        Ok(PyPerm {
            inner: self.inner.conjugate(&other.inner).map_err(err)?,
        })
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        self.inner.cycles()
    }

    fn images(&self) -> Vec<usize> {
        self.inner.images()
    }

    fn is_involution(&self) -> bool {
        self.inner.is_involution()
    }

    fn is_matching(&self) -> bool {
        self.inner.is_matching()
    }

    fn __str__(&self) -> String {
        self.inner.cycle_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Permutation({:?}, {})",
            self.inner.cycle_string(),
            self.inner.order()
        )
    }

    fn __eq__(&self, other: &PyPerm) -> bool {
        self.inner == other.inner
    }
}

/// A combinatorial map (P, pi).
#[pyclass(name = "Map", frozen, from_py_object)]
#[derive(Clone)]
struct PyMap {
    inner: CombMap,
}

#[pymethods]
impl PyMap {
    /// Map(p_cycles, m) over the normal matching, or pass pi_cycles explicitly.
    #[new]
    #[pyo3(signature = (p, m, pi=None))]
    fn new(p: &str, m: usize, pi: Option<&str>) -> PyResult<Self> {
        let pi = match pi {
            Some(text) => Perm::parse_cycles(text, 2 * m).map_err(err)?,
            None => normal_matching_rs(m).map_err(err)?,
        };
        let p = Perm::parse_cycles(p, 2 * m).map_err(err)?;
        Ok(PyMap {
            inner: CombMap::new(p, pi).map_err(err)?,
        })
    }

    #[staticmethod]
    fn identity(m: usize) -> PyResult<Self> {
        Ok(PyMap {
            inner: CombMap::identity_normal(m).map_err(err)?,
        })
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn vertex_permutation(&self) -> PyPerm {
        PyPerm {
            inner: self.inner.vertex_permutation().clone(),
        }
    }

    fn n_matching(&self) -> PyPerm {
        PyPerm {
            inner: self.inner.n_matching().clone(),
        }
    }

    fn face_permutation(&self) -> PyPerm {
        PyPerm {
            inner: self.inner.face_permutation(),
        }
    }

    fn e_matching(&self) -> PyPerm {
        PyPerm {
            inner: self.inner.e_matching(),
        }
    }

    fn multiply(&self, other: &PyMap) -> PyResult<Self> {
        Ok(PyMap {
            inner: self.inner.multiply(&other.inner).map_err(err)?,
        })
    }

    fn dual(&self) -> Self {
        PyMap {
            inner: self.inner.dual(),
        }
    }

    fn reverse(&self) -> Self {
        PyMap {
            inner: self.inner.reverse(),
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().into_iter().map(|e| (e.0, e.1)).collect()
    }

    fn next_edges(&self) -> Vec<(usize, usize)> {
        self.inner
            .next_edges()
            .into_iter()
            .map(|e| (e.0, e.1))
            .collect()
    }

    fn is_selfconjugate(&self) -> bool {
        classes::is_selfconjugate(&self.inner)
    }

    /// The canonical knot: (mu, C1 corners) with pi^mu = rho.
    fn knot(&self) -> (PyPerm, Vec<usize>) {
        let k = knot::knot_of(&self.inner);
        let c1 = k.coloring.c1();
        (PyPerm { inner: k.mu }, c1)
    }

    /// Factor as knot x selfconjugate: returns (mu, A).
    fn decompose(&self) -> (PyPerm, PyMap) {
        let (k, a) = knot::decompose(&self.inner);
        (PyPerm { inner: k.mu }, PyMap { inner: a })
    }

    /// (vertex cycles, face cycles, edges, component count).
    fn view(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<(usize, usize)>, usize) {
        let gv = graph::view(&self.inner);
        (
            gv.vertices,
            gv.faces,
            gv.edge_pairs.into_iter().map(|e| (e.0, e.1)).collect(),
            gv.components.len(),
        )
    }

    fn euler_characteristic(&self) -> Vec<i64> {
        graph::euler_characteristic(&self.inner)
    }

    fn genus(&self) -> Vec<i64> {
        graph::genus(&self.inner)
    }

    fn export_graph(&self, format: &str) -> PyResult<String> {
        graph::export_graph(&self.inner, format).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Map(p={:?}, pi={:?})",
            self.inner.vertex_permutation().cycle_string(),
            self.inner.n_matching().cycle_string()
        )
    }

    fn __eq__(&self, other: &PyMap) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction]
fn normal_matching(m: usize) -> PyResult<PyPerm> {
    Ok(PyPerm {
        inner: normal_matching_rs(m).map_err(err)?,
    })
}

/// Number of fixed-edge classes, (2m-1)!!.
#[pyfunction]
fn class_count(m: usize) -> u128 {
    classes::class_count(m)
}

/// Size of each class, m!*2^m.
#[pyfunction]
fn class_size(m: usize) -> u128 {
    classes::class_size(m)
}

/// All members of K_pi over the normal matching on 2m corners.
#[pyfunction]
fn enumerate_selfconjugate(m: usize) -> PyResult<Vec<PyMap>> {
    let pi = normal_matching_rs(m).map_err(err)?;
    Ok(classes::enumerate_selfconjugate(&pi)
        .into_iter()
        .map(|inner| PyMap { inner })
        .collect())
}

/// Census rows (rho cycle string, member count) over the normal matching.
#[pyfunction]
fn census(m: usize) -> PyResult<Vec<(String, u64)>> {
    Ok(classes::census(m)
        .map_err(err)?
        .into_iter()
        .map(|(rho, count)| (rho.cycle_string(), count))
        .collect())
}

/// Witness search; returns the conjugator or None.
#[pyfunction]
fn are_isomorphic(m1: &PyMap, m2: &PyMap) -> PyResult<Option<PyPerm>> {
    Ok(iso::are_isomorphic(&m1.inner, &m2.inner)
        .map_err(err)?
        .map(|inner| PyPerm { inner }))
}

#[pyfunction]
fn same_class_criterion(m1: &PyMap, m2: &PyMap, witness: &PyPerm) -> PyResult<bool> {
    iso::same_class_criterion(&m1.inner, &m2.inner, &witness.inner).map_err(err)
}

#[pymodule]
fn rotmap_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPerm>()?;
    m.add_class::<PyMap>()?;
    m.add_function(wrap_pyfunction!(normal_matching, m)?)?;
    m.add_function(wrap_pyfunction!(class_count, m)?)?;
    m.add_function(wrap_pyfunction!(class_size, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_selfconjugate, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(same_class_criterion, m)?)?;
    Ok(())
}
