//! Error type shared by all modules.

use crate::complex::FaceSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(u32),
    #[error("vertex {vertex} out of range 1..={m}")]
    VertexOutOfRange { vertex: u32, m: u32 },
    #[error("{0} is not a face of the complex")]
    NotAFace(FaceSet),
    #[error("operands live over different ambient complexes")]
    AmbientMismatch,
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { got: usize, expected: usize },
    #[error("cohomological degree {0} is odd")]
    OddDegree(u64),
    #[error("sign data has length {got}, expected {expected}")]
    SignLength { got: usize, expected: usize },
    #[error("sign function domain does not match the top faces of the complex")]
    SignDomainMismatch,
    #[error("invalid sign token `{0}` (expected +, -, +1 or -1)")]
    InvalidSign(String),
    #[error("matrix has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("matrix entry `{0}` is not an exact rational")]
    InvalidEntry(String),
    #[error("brute-force enumeration over 2^{m} vertex sign maps exceeds the limit m <= {limit}")]
    BruteForceTooLarge { m: u32, limit: u32 },
    #[error("stable range requires s > n, got s = {s}, n = {n}")]
    StableRange { s: u32, n: u32 },
    #[error("constant term of the class is not 1")]
    NonUnitConstantTerm,
    #[error("minor at face {face} has determinant {det}, expected a unit")]
    NotUnimodular { face: FaceSet, det: String },
    #[error("oriented facet {0:?} repeats a vertex")]
    DegenerateOrientedFacet(Vec<u32>),
    #[error("oriented facets do not match the top faces of the complex")]
    OrientedFacetMismatch,
    #[error("functor value at {0} has unsupported torsion")]
    TorsionValue(FaceSet),
    #[error("functor maps are not path independent between {larger} and {smaller}")]
    NotAFunctor { larger: FaceSet, smaller: FaceSet },
    #[error("map for the pair ({larger}, {smaller}) is not a covering relation")]
    NotACoveringPair { larger: FaceSet, smaller: FaceSet },
    #[error("map for ({larger}, {smaller}) has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MapShape {
        larger: FaceSet,
        smaller: FaceSet,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("{0} is not a prime usable as a coefficient field characteristic")]
    NotPrime(u64),
    #[error("complex has no vertex that is a face")]
    NoVertices,
    #[error("coloring uses {got} colors, expected palette of size {expected}")]
    PaletteSize { got: usize, expected: usize },
    #[error("coloring is degenerate: face {0} has a repeated color")]
    DegenerateColoring(FaceSet),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
