//! K-admissibility of exact matrices.
//!
//! An `(m-n) x m` matrix `A` is K-admissible when for every face `α` the
//! submatrix `A_α` (columns indexed by the complement of `α`) has full row
//! rank. Checking the inclusion-maximal faces suffices: `α ⊆ β` means
//! `A_β`'s columns are a subset of `A_α`'s, so `rank(A_α) >= rank(A_β)`.
//! The all-faces loop is kept as an independent route for cross-checking.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// Outcome of an admissibility check, with a failing face as witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    NotAdmissible { witness: FaceSet },
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }

    pub fn witness(&self) -> Option<FaceSet> {
        match self {
            Admissibility::Admissible => None,
            Admissibility::NotAdmissible { witness } => Some(*witness),
        }
    }
}

fn check_shape(complex: &SimplicialComplex, a: &ExactMatrix) -> Result<usize> {
    let m = complex.m() as usize;
    let rows = m - complex.n() as usize;
    if a.rows() != rows || a.cols() != m {
        return Err(Error::MatrixShape {
            rows: a.rows(),
            cols: a.cols(),
            expected_rows: rows,
            expected_cols: m,
        });
    }
    Ok(rows)
}

/// Columns of `A` omitting the vertices of `α` (ascending column order).
pub fn submatrix_omitting(a: &ExactMatrix, alpha: FaceSet, m: u32) -> ExactMatrix {
    let cols: Vec<usize> = (1..=m)
        .filter(|&v| !alpha.contains(v))
        .map(|v| (v - 1) as usize)
        .collect();
    a.select_columns(&cols)
}

fn check_faces<I>(complex: &SimplicialComplex, a: &ExactMatrix, faces: I) -> Result<Admissibility>
where
    I: IntoIterator<Item = FaceSet>,
{
    let rows = check_shape(complex, a)?;
    for alpha in faces {
        let sub = submatrix_omitting(a, alpha, complex.m());
        if sub.rank() != rows {
            return Ok(Admissibility::NotAdmissible { witness: alpha });
        }
    }
    Ok(Admissibility::Admissible)
}

/// Admissibility via the maximal faces only (sound and complete).
pub fn admissibility(complex: &SimplicialComplex, a: &ExactMatrix) -> Result<Admissibility> {
    check_faces(complex, a, complex.maximal_faces().iter().copied())
}

/// Admissibility by the defining all-faces loop.
pub fn admissibility_all_faces(
    complex: &SimplicialComplex,
    a: &ExactMatrix,
) -> Result<Admissibility> {
    check_faces(complex, a, complex.all_faces())
}

pub fn is_admissible(complex: &SimplicialComplex, a: &ExactMatrix) -> Result<bool> {
    Ok(admissibility(complex, a)?.is_admissible())
}

/// The matrix with entry `s^r` at row `s`, column `r` (`1 <= s <= m - n`,
/// `1 <= r <= m`), admissible for every `(n-1)`-dimensional complex on `m`
/// vertices.
pub fn vandermonde(m: u32, n: u32) -> Result<ExactMatrix> {
    if n == 0 || n > m {
        return Err(Error::InvalidInput(format!(
            "vandermonde requires 1 <= n <= m, got m = {m}, n = {n}"
        )));
    }
    let rows = (m - n) as usize;
    let mut a = ExactMatrix::zero(rows, m as usize);
    for s in 1..=rows {
        let base = BigInt::from(s);
        let mut value = BigInt::from(1);
        for r in 1..=m as usize {
            value *= &base;
            a.set(s - 1, r - 1, BigRational::from(value.clone()));
        }
    }
    Ok(a)
}
