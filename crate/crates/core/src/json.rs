//! JSON schemas for the file formats consumed and produced by the CLI.
//!
//! - complex: `{"m": 3, "facets": [[1,2],[1,3],[2,3]]}` (1-based vertices)
//! - polynomial: `[[coeff, [e1,...,em]], ...]` in graded-lex order;
//!   coefficients are JSON integers when they fit in 64 bits, decimal
//!   strings otherwise
//! - matrix: row-major arrays of exact entries: integers or strings like
//!   `"3/4"`
//! - dicharacteristic pair: `{"complex": ..., "oriented_facets": [[...]],
//!   "lambda": [[...]]}`
//! - functor: `{"ring": "Z", "values": [{"face": [1], "rank": 1}, ...],
//!   "maps": [{"from": [1,2], "to": [1], "matrix": [[1]]}, ...]}`

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classes::Sign;
use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::limits::{AbFunctor, AbGroup, Ring};
use crate::matrix::{ExactMatrix, IntMatrix};
use crate::poly::SrPolynomial;
use crate::structures::DicharacteristicPair;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexJson {
    pub m: u32,
    pub facets: Vec<Vec<u32>>,
}

impl ComplexJson {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.m, &self.facets)
    }

    pub fn from_complex(complex: &SimplicialComplex) -> Self {
        ComplexJson {
            m: complex.m(),
            facets: complex.facets().iter().map(|f| f.vertices()).collect(),
        }
    }
}

/// Exact integer as a JSON value: a number when it fits in i64.
pub fn bigint_to_json(v: &BigInt) -> Value {
    match i64::try_from(v.clone()) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

pub fn biguint_to_json(v: &BigUint) -> Value {
    match u64::try_from(v.clone()) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::InvalidEntry(n.to_string()))
            }
        }
        Value::String(s) => BigInt::from_str(s).map_err(|_| Error::InvalidEntry(s.clone())),
        other => Err(Error::InvalidEntry(other.to_string())),
    }
}

pub fn poly_to_json(p: &SrPolynomial) -> Value {
    Value::Array(
        p.to_pairs()
            .into_iter()
            .map(|(c, exps)| json!([bigint_to_json(&c), exps]))
            .collect(),
    )
}

pub fn poly_from_json(complex: &SimplicialComplex, v: &Value) -> Result<SrPolynomial> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput("polynomial: expected an array".into()))?;
    let mut terms = Vec::with_capacity(rows.len());
    for row in rows {
        let pair = row
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::InvalidInput("polynomial term: expected [coeff, exps]".into()))?;
        let coeff = bigint_from_json(&pair[0])?;
        let exps: Vec<u32> = serde_json::from_value(pair[1].clone())
            .map_err(|_| Error::InvalidInput("polynomial term: bad exponent vector".into()))?;
        terms.push((coeff, exps));
    }
    SrPolynomial::from_terms(complex, terms)
}

/// One exact rational entry: an integer or a `p/q` string.
pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigRational::from(BigInt::from(i)))
            } else {
                Err(Error::InvalidEntry(n.to_string()))
            }
        }
        Value::String(s) => {
            BigRational::from_str(s.trim()).map_err(|_| Error::InvalidEntry(s.clone()))
        }
        other => Err(Error::InvalidEntry(other.to_string())),
    }
}

pub fn exact_matrix_from_json(v: &Value) -> Result<ExactMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput("matrix: expected an array of rows".into()))?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let entries = row
            .as_array()
            .ok_or_else(|| Error::InvalidInput("matrix row: expected an array".into()))?;
        out.push(
            entries
                .iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>>>()?,
        );
    }
    ExactMatrix::from_rows(out)
}

pub fn exact_matrix_to_json(a: &ExactMatrix) -> Value {
    Value::Array(
        (0..a.rows())
            .map(|i| {
                Value::Array(
                    (0..a.cols())
                        .map(|j| json!(a.get(i, j).to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn int_matrix_from_json(v: &Value) -> Result<IntMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput("matrix: expected an array of rows".into()))?;
    let height = rows.len();
    let width = rows
        .first()
        .and_then(|r| r.as_array())
        .map_or(0, |r| r.len());
    let mut out = IntMatrix::zero(height, width);
    for (i, row) in rows.iter().enumerate() {
        let entries = row
            .as_array()
            .filter(|r| r.len() == width)
            .ok_or_else(|| Error::InvalidInput("matrix: ragged rows".into()))?;
        for (j, entry) in entries.iter().enumerate() {
            out.set(i, j, bigint_from_json(entry)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairJson {
    pub complex: ComplexJson,
    pub oriented_facets: Vec<Vec<u32>>,
    pub lambda: Vec<Vec<i64>>,
}

impl PairJson {
    pub fn to_pair(&self) -> Result<DicharacteristicPair> {
        let complex = self.complex.to_complex()?;
        let lambda = IntMatrix::from_rows_i64(&self.lambda);
        DicharacteristicPair::new(complex, self.oriented_facets.clone(), lambda)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctorValueJson {
    pub face: Vec<u32>,
    pub rank: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctorMapJson {
    pub from: Vec<u32>,
    pub to: Vec<u32>,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctorJson {
    pub ring: String,
    pub values: Vec<FunctorValueJson>,
    #[serde(default)]
    pub maps: Vec<FunctorMapJson>,
}

impl FunctorJson {
    pub fn to_functor(&self, complex: &SimplicialComplex) -> Result<AbFunctor> {
        let ring = Ring::parse(&self.ring)?;
        let mut ranks = BTreeMap::new();
        for value in &self.values {
            ranks.insert(FaceSet::from_vertices(&value.face)?, value.rank);
        }
        let mut maps = BTreeMap::new();
        for map in &self.maps {
            let larger = FaceSet::from_vertices(&map.from)?;
            let smaller = FaceSet::from_vertices(&map.to)?;
            maps.insert((larger, smaller), IntMatrix::from_rows_i64(&map.matrix));
        }
        AbFunctor::new(complex.clone(), ring, ranks, maps)
    }
}

pub fn ab_group_to_json(g: &AbGroup) -> Value {
    json!({
        "rank": g.rank,
        "torsion": g.torsion.iter().map(biguint_to_json).collect::<Vec<_>>(),
    })
}

/// Comma-separated sign list, e.g. `-,+,+` or `-1,1,1`.
pub fn parse_signs(text: &str) -> Result<Vec<Sign>> {
    text.split(',').map(Sign::parse_token).collect()
}

pub fn face_to_json(face: FaceSet) -> Value {
    json!(face.vertices())
}

/// Comma-separated vertex list, e.g. `1,2`; empty string is the empty face.
pub fn parse_face(text: &str) -> Result<FaceSet> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(FaceSet::EMPTY);
    }
    let verts = trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidInput(format!("bad vertex `{tok}`")))
        })
        .collect::<Result<Vec<u32>>>()?;
    FaceSet::from_vertices(&verts)
}
