//! Exact computations in Stanley-Reisner algebras of finite simplicial
//! complexes.
//!
//! The crate works over the graded ring `Z[K] = Z[v_1, ..., v_m] / I_K`
//! attached to a simplicial complex `K` on vertices `{1, ..., m}`, where
//! `I_K` is generated by the squarefree monomials with non-face support.
//! On top of that ring it provides:
//!
//! - characteristic classes `c(K) = prod (1 + v_i)`, `p(K) = prod (1 - v_i^2)`
//!   and their sign-twisted variants, together with the complete enumeration
//!   of square roots of `(-1)^n p_n(K)` ([`classes`]);
//! - existence and counting of complex structures via GF(2) linear systems,
//!   and validity checks for dicharacteristic pairs ([`structures`]);
//! - K-admissibility of exact rational matrices ([`admissible`]);
//! - higher derived limits of abelian-group valued functors on the face
//!   poset, cross-checked against link cohomology ([`limits`]);
//! - regular colorings and the induced splittings of `c(K)` ([`coloring`]).
//!
//! All arithmetic is exact: coefficients are arbitrary-precision integers,
//! matrix entries arbitrary-precision rationals. Every value is immutable
//! after construction and safe to share across threads.

pub mod admissible;
pub mod classes;
pub mod coloring;
pub mod complex;
pub mod error;
pub mod gf2;
pub mod json;
pub mod limits;
pub mod matrix;
pub mod poly;
pub mod structures;

pub use classes::{Sign, SignFunction, VertexSigns};
pub use complex::{FaceSet, SimplicialComplex};
pub use error::Error;
pub use limits::{AbFunctor, AbGroup, Ring};
pub use matrix::{ExactMatrix, IntMatrix};
pub use poly::{Monomial, SrPolynomial};
