//! Python bindings: a `Complex` class plus free functions covering the
//! characteristic-class, structure-counting, admissibility, higher-limit,
//! and coloring operations.
//!
//! Polynomials cross the boundary as lists of `(coefficient, exponents)`
//! pairs in graded-lex order; sign data as lists of `+1`/`-1`; finitely
//! generated abelian groups as `{"rank": r, "torsion": [...]}` dicts.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use pyo3::IntoPyObjectExt;

use djspace::admissible;
use djspace::classes::{self, Sign, SignFunction, VertexSigns};
use djspace::coloring;
use djspace::complex::{FaceSet, SimplicialComplex};
use djspace::limits::{AbFunctor, AbGroup, Ring};
use djspace::matrix::{ExactMatrix, IntMatrix};
use djspace::poly::SrPolynomial;
use djspace::structures;

fn err(e: djspace::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn face_from_list(vertices: Vec<u32>) -> PyResult<FaceSet> {
    FaceSet::from_vertices(&vertices).map_err(err)
}

fn signs_from_ints(values: Vec<i64>) -> PyResult<VertexSigns> {
    VertexSigns::from_values(&values).map_err(err)
}

fn omega_from_ints(k: &SimplicialComplex, values: Vec<i64>) -> PyResult<SignFunction> {
    let signs = values
        .iter()
        .map(|&v| Sign::from_value(v))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    SignFunction::from_signs(k, signs).map_err(err)
}

type PyPoly = Vec<(BigInt, Vec<u32>)>;

fn poly_to_py(p: &SrPolynomial) -> PyPoly {
    p.to_pairs()
}

fn group_to_py<'py>(py: Python<'py>, g: &AbGroup) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("rank", g.rank)?;
    d.set_item("torsion", g.torsion.clone())?;
    Ok(d)
}

fn groups_to_py<'py>(py: Python<'py>, gs: &[AbGroup]) -> PyResult<Vec<Bound<'py, PyDict>>> {
    gs.iter().map(|g| group_to_py(py, g)).collect()
}

fn ring_from_str(text: &str) -> PyResult<Ring> {
    Ring::parse(text).map_err(err)
}

/// An exact matrix entry arriving from Python: an int or a "p/q" string.
#[derive(FromPyObject)]
enum Entry {
    Int(i64),
    Text(String),
}

fn exact_matrix_from_py(rows: Vec<Vec<Entry>>) -> PyResult<ExactMatrix> {
    use std::str::FromStr;
    let converted = rows
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|entry| match entry {
                    Entry::Int(v) => Ok(num_rational::BigRational::from(BigInt::from(v))),
                    Entry::Text(s) => num_rational::BigRational::from_str(s.trim())
                        .map_err(|_| PyValueError::new_err(format!("bad entry `{s}`"))),
                })
                .collect::<PyResult<Vec<_>>>()
        })
        .collect::<PyResult<Vec<_>>>()?;
    ExactMatrix::from_rows(converted).map_err(err)
}

/// A finite simplicial complex on vertices 1..=m, given by its facets.
#[pyclass(name = "Complex", frozen)]
struct PyComplex {
    inner: SimplicialComplex,
}

#[pymethods]
impl PyComplex {
    #[new]
    fn new(m: u32, facets: Vec<Vec<u32>>) -> PyResult<Self> {
        Ok(PyComplex {
            inner: SimplicialComplex::from_facets(m, &facets).map_err(err)?,
        })
    }

    #[staticmethod]
    fn full_simplex(m: u32) -> PyResult<Self> {
        Ok(PyComplex {
            inner: SimplicialComplex::full_simplex(m).map_err(err)?,
        })
    }

    #[staticmethod]
    fn boundary_simplex(m: u32) -> PyResult<Self> {
        Ok(PyComplex {
            inner: SimplicialComplex::boundary_simplex(m).map_err(err)?,
        })
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn dim(&self) -> i32 {
        self.inner.dim()
    }

    fn facets(&self) -> Vec<Vec<u32>> {
        self.inner.facets().iter().map(|f| f.vertices()).collect()
    }

    fn top_faces(&self) -> Vec<Vec<u32>> {
        self.inner.top_faces().iter().map(|f| f.vertices()).collect()
    }

    fn is_face(&self, vertices: Vec<u32>) -> PyResult<bool> {
        Ok(self.inner.is_face(face_from_list(vertices)?))
    }

    fn is_pure(&self) -> bool {
        self.inner.is_pure()
    }

    fn f_vector(&self) -> Vec<u64> {
        self.inner.f_vector()
    }

    fn faces_of_card(&self, k: u32) -> Vec<Vec<u32>> {
        self.inner
            .faces_of_card(k)
            .iter()
            .map(|f| f.vertices())
            .collect()
    }

    fn link(&self, alpha: Vec<u32>) -> PyResult<Self> {
        Ok(PyComplex {
            inner: self.inner.link(face_from_list(alpha)?).map_err(err)?,
        })
    }

    fn total_chern(&self) -> Vec<(BigInt, Vec<u32>)> {
        poly_to_py(&classes::total_chern(&self.inner))
    }

    fn total_pontrjagin(&self) -> Vec<(BigInt, Vec<u32>)> {
        poly_to_py(&classes::total_pontrjagin(&self.inner))
    }

    fn signed_chern(&self, f: Vec<i64>) -> PyResult<Vec<(BigInt, Vec<u32>)>> {
        let signs = signs_from_ints(f)?;
        Ok(poly_to_py(
            &classes::signed_chern(&self.inner, &signs).map_err(err)?,
        ))
    }

    /// Euler class for signs listed in the lexicographic top-face order.
    fn euler_class(&self, omega: Vec<i64>) -> PyResult<Vec<(BigInt, Vec<u32>)>> {
        let omega = omega_from_ints(&self.inner, omega)?;
        Ok(poly_to_py(
            &classes::euler_class(&self.inner, &omega).map_err(err)?,
        ))
    }

    fn euler_square_roots(&self) -> Vec<Vec<(BigInt, Vec<u32>)>> {
        classes::euler_square_roots(&self.inner)
            .iter()
            .map(poly_to_py)
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }

    fn __eq__(&self, other: &PyComplex) -> bool {
        self.inner == other.inner
    }
}

/// The induced sign function ω_f on the top faces, as +1/-1 ints in
/// lexicographic top-face order.
#[pyfunction]
fn induced_sign_function(k: &PyComplex, f: Vec<i64>) -> PyResult<Vec<i64>> {
    let signs = signs_from_ints(f)?;
    let omega = structures::induced_sign_function(&k.inner, &signs).map_err(err)?;
    Ok(omega.signs().iter().map(|s| s.value()).collect())
}

/// Vertex signs f with ω_f = ω, or None.
#[pyfunction]
fn realize(k: &PyComplex, omega: Vec<i64>) -> PyResult<Option<Vec<i64>>> {
    let omega = omega_from_ints(&k.inner, omega)?;
    Ok(structures::realize(&k.inner, &omega)
        .map_err(err)?
        .map(|f| f.values()))
}

/// A pair (epsilon, f) with ω = ε ω_f, or None.
#[pyfunction]
fn realize_up_to_sign(k: &PyComplex, omega: Vec<i64>) -> PyResult<Option<(i64, Vec<i64>)>> {
    let omega = omega_from_ints(&k.inner, omega)?;
    Ok(structures::realize_up_to_sign(&k.inner, &omega)
        .map_err(err)?
        .map(|(eps, f)| (eps.value(), f.values())))
}

#[pyfunction]
fn count_realizations(k: &PyComplex, omega: Vec<i64>) -> PyResult<num_bigint::BigUint> {
    let omega = omega_from_ints(&k.inner, omega)?;
    structures::count_realizations(&k.inner, &omega).map_err(err)
}

#[pyfunction]
fn count_structures(k: &PyComplex, omega: Vec<i64>) -> PyResult<num_bigint::BigUint> {
    let omega = omega_from_ints(&k.inner, omega)?;
    structures::count_structures(&k.inner, &omega).map_err(err)
}

#[pyfunction]
fn count_structures_brute(k: &PyComplex, omega: Vec<i64>) -> PyResult<num_bigint::BigUint> {
    let omega = omega_from_ints(&k.inner, omega)?;
    structures::count_structures_brute(&k.inner, &omega).map_err(err)
}

#[pyfunction]
fn stable_structure_count(k: &PyComplex, s: u32) -> PyResult<num_bigint::BigUint> {
    structures::stable_structure_count(&k.inner, s).map_err(err)
}

/// The matrix with entry s^r, rows s = 1..m-n, columns r = 1..m.
#[pyfunction]
fn vandermonde(m: u32, n: u32) -> PyResult<Vec<Vec<BigInt>>> {
    let a = admissible::vandermonde(m, n).map_err(err)?;
    Ok((0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| a.get(i, j).to_integer())
                .collect()
        })
        .collect())
}

/// K-admissibility; returns (admissible, witness-face-or-None).
#[pyfunction]
#[pyo3(signature = (k, rows, all_faces = false))]
fn is_admissible(
    k: &PyComplex,
    rows: Vec<Vec<Entry>>,
    all_faces: bool,
) -> PyResult<(bool, Option<Vec<u32>>)> {
    let a = exact_matrix_from_py(rows)?;
    let outcome = if all_faces {
        admissible::admissibility_all_faces(&k.inner, &a)
    } else {
        admissible::admissibility(&k.inner, &a)
    }
    .map_err(err)?;
    Ok((
        outcome.is_admissible(),
        outcome.witness().map(|w| w.vertices()),
    ))
}

/// Reduced link cohomology; entry i of the result is degree i - 1.
#[pyfunction]
#[pyo3(signature = (k, alpha, ring = "Z"))]
fn link_cohomology<'py>(
    py: Python<'py>,
    k: &PyComplex,
    alpha: Vec<u32>,
    ring: &str,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let groups = djspace::limits::link_cohomology(
        &k.inner,
        face_from_list(alpha)?,
        ring_from_str(ring)?,
        1,
    )
    .map_err(err)?;
    groups_to_py(py, &groups)
}

/// Higher derived limits of the constant functor with a free value.
#[pyfunction]
#[pyo3(signature = (k, rank = 1, ring = "Z", max_degree = None))]
fn lim_constant<'py>(
    py: Python<'py>,
    k: &PyComplex,
    rank: usize,
    ring: &str,
    max_degree: Option<usize>,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let functor = AbFunctor::constant(&k.inner, &AbGroup::free(rank), ring_from_str(ring)?)
        .map_err(err)?;
    let deg = max_degree.unwrap_or(k.inner.n() as usize + 1);
    groups_to_py(py, &functor.derived_limits(deg))
}

/// Higher derived limits of the functor concentrated at one face.
#[pyfunction]
#[pyo3(signature = (k, alpha, rank = 1, ring = "Z", max_degree = None))]
fn lim_atomic<'py>(
    py: Python<'py>,
    k: &PyComplex,
    alpha: Vec<u32>,
    rank: usize,
    ring: &str,
    max_degree: Option<usize>,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let functor = AbFunctor::atomic(
        &k.inner,
        face_from_list(alpha)?,
        &AbGroup::free(rank),
        ring_from_str(ring)?,
    )
    .map_err(err)?;
    let deg = max_degree.unwrap_or(k.inner.n() as usize + 1);
    groups_to_py(py, &functor.derived_limits(deg))
}

#[pyfunction]
#[pyo3(signature = (k, alpha, ring = "Z"))]
fn verify_atomic_formula(k: &PyComplex, alpha: Vec<u32>, ring: &str) -> PyResult<bool> {
    djspace::limits::verify_atomic_formula(
        &k.inner,
        face_from_list(alpha)?,
        ring_from_str(ring)?,
        k.inner.n() as usize + 1,
    )
    .map_err(err)
}

#[pyfunction]
fn find_coloring(k: &PyComplex, r: u32) -> Option<Vec<u32>> {
    coloring::find_coloring(&k.inner, r).map(|c| c.colors().to_vec())
}

#[pyfunction]
fn chromatic_number(k: &PyComplex) -> PyResult<u32> {
    coloring::chromatic_number(&k.inner).map_err(err)
}

/// First Chern classes of the line-bundle factors of an r-coloring.
#[pyfunction]
fn splitting_factors(k: &PyComplex, r: u32, colors: Vec<u32>) -> PyResult<Vec<PyPoly>> {
    let coloring = coloring::Coloring::new(r, colors).map_err(err)?;
    Ok(coloring::splitting_factors(&k.inner, &coloring)
        .map_err(err)?
        .iter()
        .map(poly_to_py)
        .collect())
}

/// Validates a dicharacteristic pair; returns a dict with the determinant
/// signs, the Euler class, and whether a complex structure exists.
#[pyfunction]
fn validate_pair<'py>(
    py: Python<'py>,
    k: &PyComplex,
    oriented_facets: Vec<Vec<u32>>,
    lambda: Vec<Vec<i64>>,
) -> PyResult<Bound<'py, PyDict>> {
    let pair = structures::DicharacteristicPair::new(
        k.inner.clone(),
        oriented_facets,
        IntMatrix::from_rows_i64(&lambda),
    )
    .map_err(err)?;
    let (omega, euler) = pair.validate().map_err(err)?;
    let admits = pair.admits_complex_structure().map_err(err)?;
    let out = PyDict::new(py);
    out.set_item(
        "dets",
        omega.signs().iter().map(|s| s.value()).collect::<Vec<_>>(),
    )?;
    out.set_item("euler_class", poly_to_py(&euler).into_py_any(py)?)?;
    out.set_item("admits_complex_structure", admits)?;
    Ok(out)
}

#[pymodule]
fn djspace_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_function(wrap_pyfunction!(induced_sign_function, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(realize_up_to_sign, m)?)?;
    m.add_function(wrap_pyfunction!(count_realizations, m)?)?;
    m.add_function(wrap_pyfunction!(count_structures, m)?)?;
    m.add_function(wrap_pyfunction!(count_structures_brute, m)?)?;
    m.add_function(wrap_pyfunction!(stable_structure_count, m)?)?;
    m.add_function(wrap_pyfunction!(vandermonde, m)?)?;
    m.add_function(wrap_pyfunction!(is_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(link_cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(lim_constant, m)?)?;
    m.add_function(wrap_pyfunction!(lim_atomic, m)?)?;
    m.add_function(wrap_pyfunction!(verify_atomic_formula, m)?)?;
    m.add_function(wrap_pyfunction!(find_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(splitting_factors, m)?)?;
    m.add_function(wrap_pyfunction!(validate_pair, m)?)?;
    Ok(())
}
