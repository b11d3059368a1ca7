//! Characteristic classes in `Z[K]` and the enumeration of Euler-class
//! square roots.
//!
//! The classes computed here are `c(K) = prod (1 + v_i)`,
//! `p(K) = prod (1 - v_i^2)`, the sign-twisted `c_f(K) = prod (1 + f(i) v_i)`
//! for vertex signs `f`, and `e_ω(K) = Σ ω(μ) v_μ` for sign functions `ω` on
//! the top faces. The squares `e_ω^2` all equal `(-1)^n p_n(K)`, and the
//! `e_ω` exhaust the square roots of that class.
//!
//! Sign functions are defined on the faces of cardinality exactly `n`
//! (degree homogeneity of a degree-`2n` class forces this); on pure
//! complexes these are precisely the maximal faces. Callers rendering
//! non-pure complexes should surface a warning.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::poly::SrPolynomial;

/// An element of `{+1, -1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn coeff(self) -> BigInt {
        BigInt::from(self.value())
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn from_value(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidSign(v.to_string())),
        }
    }

    /// Parses `+`, `-`, `+1`, `-1` or `1`.
    pub fn parse_token(tok: &str) -> Result<Self> {
        match tok.trim() {
            "+" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other.to_string())),
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Debug for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A total map `{1, ..., m} -> {+1, -1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSigns {
    signs: Vec<Sign>,
}

impl VertexSigns {
    pub fn new(signs: Vec<Sign>) -> Self {
        VertexSigns { signs }
    }

    pub fn all_plus(m: u32) -> Self {
        VertexSigns {
            signs: vec![Sign::Plus; m as usize],
        }
    }

    pub fn from_values(values: &[i64]) -> Result<Self> {
        Ok(VertexSigns {
            signs: values
                .iter()
                .map(|&v| Sign::from_value(v))
                .collect::<Result<_>>()?,
        })
    }

    /// Vertex signs read off the bits of `mask`: bit `i` set means
    /// `f(i + 1) = -1`. Deterministic enumeration order for 0..2^m.
    pub fn from_mask(m: u32, mask: u64) -> Self {
        VertexSigns {
            signs: (0..m)
                .map(|i| if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Sign of vertex `v` (1-based).
    pub fn get(&self, v: u32) -> Sign {
        self.signs[(v - 1) as usize]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn values(&self) -> Vec<i64> {
        self.signs.iter().map(|s| s.value()).collect()
    }

    pub fn negated(&self) -> VertexSigns {
        VertexSigns {
            signs: self.signs.iter().map(|&s| -s).collect(),
        }
    }

    /// Product of the signs over the vertices of `face`.
    pub fn product_over(&self, face: FaceSet) -> Sign {
        face.iter()
            .fold(Sign::Plus, |acc, v| acc * self.get(v))
    }

    pub fn pointwise_mul(&self, other: &VertexSigns) -> VertexSigns {
        assert_eq!(self.signs.len(), other.signs.len());
        VertexSigns {
            signs: self
                .signs
                .iter()
                .zip(&other.signs)
                .map(|(&a, &b)| a * b)
                .collect(),
        }
    }
}

/// A map from the top faces of a complex (cardinality exactly `n`) to `{±1}`,
/// stored against the lexicographic top-face order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignFunction {
    faces: Vec<FaceSet>,
    signs: Vec<Sign>,
}

impl SignFunction {
    /// Signs listed in the lexicographic order of `top_faces(K)`.
    pub fn from_signs(complex: &SimplicialComplex, signs: Vec<Sign>) -> Result<Self> {
        let faces = complex.top_faces();
        if signs.len() != faces.len() {
            return Err(Error::SignLength {
                got: signs.len(),
                expected: faces.len(),
            });
        }
        Ok(SignFunction { faces, signs })
    }

    pub fn constant(complex: &SimplicialComplex, sign: Sign) -> Self {
        let faces = complex.top_faces();
        let signs = vec![sign; faces.len()];
        SignFunction { faces, signs }
    }

    pub fn from_fn(complex: &SimplicialComplex, f: impl Fn(FaceSet) -> Sign) -> Self {
        let faces = complex.top_faces();
        let signs = faces.iter().map(|&face| f(face)).collect();
        SignFunction { faces, signs }
    }

    /// The sign function encoded by the bits of `index`: bit `j` set means
    /// the `j`-th top face (lex order) carries `-1`. Index 0 is all-plus.
    pub fn from_index(complex: &SimplicialComplex, index: u64) -> Self {
        Self::from_fn_indexed(complex.top_faces(), index)
    }

    fn from_fn_indexed(faces: Vec<FaceSet>, index: u64) -> Self {
        let signs = (0..faces.len())
            .map(|j| {
                if index >> j & 1 == 1 {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            })
            .collect();
        SignFunction { faces, signs }
    }

    /// All `2^t` sign functions on the top faces, in index order.
    pub fn enumerate(complex: &SimplicialComplex) -> Vec<SignFunction> {
        let t = complex.top_faces().len();
        assert!(t < 63, "sign function enumeration over 2^{t} values");
        (0..1u64 << t)
            .map(|i| Self::from_index(complex, i))
            .collect()
    }

    /// Domain, in lexicographic order.
    pub fn faces(&self) -> &[FaceSet] {
        &self.faces
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn get(&self, face: FaceSet) -> Option<Sign> {
        self.faces
            .binary_search(&face)
            .ok()
            .map(|i| self.signs[i])
    }

    pub fn negated(&self) -> SignFunction {
        SignFunction {
            faces: self.faces.clone(),
            signs: self.signs.iter().map(|&s| -s).collect(),
        }
    }

    pub fn minus_count(&self) -> usize {
        self.signs.iter().filter(|s| s.is_minus()).count()
    }

    /// Checks that this sign function is defined on exactly the top faces
    /// of `complex`.
    pub fn matches(&self, complex: &SimplicialComplex) -> bool {
        self.faces == complex.top_faces()
    }
}

/// The total Chern class `c(K) = prod_{i=1}^m (1 + v_i)`, reduced.
pub fn total_chern(complex: &SimplicialComplex) -> SrPolynomial {
    signed_chern(complex, &VertexSigns::all_plus(complex.m())).expect("lengths match")
}

/// The twisted class `c_f(K) = prod_{i=1}^m (1 + f(i) v_i)`, reduced.
pub fn signed_chern(complex: &SimplicialComplex, f: &VertexSigns) -> Result<SrPolynomial> {
    if f.len() != complex.m() as usize {
        return Err(Error::SignLength {
            got: f.len(),
            expected: complex.m() as usize,
        });
    }
    let mut acc = SrPolynomial::one(complex);
    for i in 1..=complex.m() {
        let factor = SrPolynomial::from_terms(
            complex,
            [
                (BigInt::one(), vec![0; complex.m() as usize]),
                (f.get(i).coeff(), unit_exps(complex.m(), i)),
            ],
        )?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// The total Pontrjagin class `p(K) = prod_{i=1}^m (1 - v_i^2)`, reduced.
pub fn total_pontrjagin(complex: &SimplicialComplex) -> SrPolynomial {
    let mut acc = SrPolynomial::one(complex);
    for i in 1..=complex.m() {
        let mut sq = vec![0u32; complex.m() as usize];
        sq[(i - 1) as usize] = 2;
        let factor = SrPolynomial::from_terms(
            complex,
            [
                (BigInt::one(), vec![0; complex.m() as usize]),
                (BigInt::from(-1), sq),
            ],
        )
        .expect("well-formed exponents");
        acc = acc.mul(&factor).expect("same ambient");
    }
    acc
}

/// The class `e_ω(K) = Σ_{μ} ω(μ) v_μ` over the top faces.
pub fn euler_class(complex: &SimplicialComplex, omega: &SignFunction) -> Result<SrPolynomial> {
    if !omega.matches(complex) {
        return Err(Error::SignDomainMismatch);
    }
    SrPolynomial::from_terms(
        complex,
        omega.faces().iter().zip(omega.signs()).map(|(face, sign)| {
            let mut exps = vec![0u32; complex.m() as usize];
            for v in face.iter() {
                exps[(v - 1) as usize] = 1;
            }
            (sign.coeff(), exps)
        }),
    )
}

/// All square roots of `(-1)^n p_n(K)`: the classes `e_ω` over every sign
/// function, in the index order of [`SignFunction::enumerate`].
pub fn euler_square_roots(complex: &SimplicialComplex) -> Vec<SrPolynomial> {
    SignFunction::enumerate(complex)
        .iter()
        .map(|omega| euler_class(complex, omega).expect("matching domain"))
        .collect()
}

/// As [`euler_square_roots`], chunked over `threads` workers; the output
/// order is unchanged.
pub fn euler_square_roots_threaded(
    complex: &SimplicialComplex,
    threads: usize,
) -> Vec<SrPolynomial> {
    let t = complex.top_faces().len();
    assert!(t < 63);
    let total = 1u64 << t;
    let threads = threads.clamp(1, 64) as u64;
    if threads == 1 || total < 2 * threads {
        return euler_square_roots(complex);
    }
    let chunk = total.div_ceil(threads);
    let mut out: Vec<Vec<SrPolynomial>> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..threads {
            let lo = w * chunk;
            let hi = total.min(lo + chunk);
            handles.push(scope.spawn(move || {
                (lo..hi)
                    .map(|i| {
                        let omega = SignFunction::from_index(complex, i);
                        euler_class(complex, &omega).expect("matching domain")
                    })
                    .collect::<Vec<_>>()
            }));
        }
        for h in handles {
            out.push(h.join().expect("worker panicked"));
        }
    });
    out.into_iter().flatten().collect()
}

/// Total Pontrjagin class of the realification of a complex bundle with
/// total Chern class `c`: the product `c * c̄`, where `c̄` negates the
/// components of degree 2 mod 4. For `c = c_f(K)` this is `p(K)` for every f.
pub fn realification_pontrjagin(c: &SrPolynomial) -> Result<SrPolynomial> {
    if !c.constant_term().is_one() {
        return Err(Error::NonUnitConstantTerm);
    }
    c.mul(&c.sign_alternated())
}

fn unit_exps(m: u32, i: u32) -> Vec<u32> {
    let mut exps = vec![0u32; m as usize];
    exps[(i - 1) as usize] = 1;
    exps
}
