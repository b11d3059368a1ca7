//! Exact arithmetic in the graded Stanley-Reisner algebra
//! `Z[K] = Z[v_1, ..., v_m] / I_K`.
//!
//! Each generator `v_i` sits in cohomological degree 2. A polynomial is kept
//! in *reduced form*: every stored monomial has face support, and no zero
//! coefficients are stored. Reduction happens on construction and after every
//! ring operation, so reduced form is an invariant of the type.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};

/// A monomial in `v_1, ..., v_m`, stored as a dense exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(m: u32) -> Self {
        Monomial {
            exps: vec![0; m as usize],
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Cohomological degree `2 * Σ exponents`.
    pub fn degree(&self) -> u64 {
        2 * self.exps.iter().map(|&e| e as u64).sum::<u64>()
    }

    /// The set of vertices with positive exponent.
    pub fn support(&self) -> FaceSet {
        let mut bits = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                bits |= 1 << i;
            }
        }
        FaceSet::from_bits(bits)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: by total degree, then lexicographically on the
    /// exponent vector with `v_1` heaviest, so that within one degree the
    /// iteration order is `v_1^2, v_1 v_2, ..., v_2^2, v_2 v_3, ...`.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "v{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// An element of `Z[K]` in reduced form.
#[derive(Clone, PartialEq, Eq)]
pub struct SrPolynomial {
    ambient: SimplicialComplex,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SrPolynomial {
    pub fn zero(ambient: &SimplicialComplex) -> Self {
        SrPolynomial {
            ambient: ambient.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ambient: &SimplicialComplex) -> Self {
        Self::constant(ambient, BigInt::one())
    }

    pub fn constant(ambient: &SimplicialComplex, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ambient.m()), c);
        }
        SrPolynomial {
            ambient: ambient.clone(),
            terms,
        }
    }

    /// The generator `v_i` (reduced, so zero if `{i}` is not a face).
    pub fn var(ambient: &SimplicialComplex, i: u32) -> Result<Self> {
        if i == 0 || i > ambient.m() {
            return Err(Error::VertexOutOfRange {
                vertex: i,
                m: ambient.m(),
            });
        }
        let mut exps = vec![0; ambient.m() as usize];
        exps[(i - 1) as usize] = 1;
        Self::from_terms(ambient, [(1, exps)])
    }

    /// Reduction of a formal integer polynomial: drops every monomial whose
    /// support is not a face, merges duplicates, and drops zero coefficients.
    /// This is idempotent on already-reduced input.
    pub fn from_terms<I, C>(ambient: &SimplicialComplex, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (C, Vec<u32>)>,
        C: Into<BigInt>,
    {
        let m = ambient.m() as usize;
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (coeff, exps) in raw {
            if exps.len() != m {
                return Err(Error::ExponentLength {
                    got: exps.len(),
                    expected: m,
                });
            }
            let mono = Monomial::new(exps);
            if !ambient.is_face(mono.support()) {
                continue;
            }
            let c = coeff.into();
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(mono).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SrPolynomial {
            ambient: ambient.clone(),
            terms,
        })
    }

    pub fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one(self.ambient.m()))
    }

    /// Largest cohomological degree of a term (0 for the zero polynomial).
    pub fn max_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    fn check_ambient(&self, other: &SrPolynomial) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn add(&self, other: &SrPolynomial) -> Result<SrPolynomial> {
        self.check_ambient(other)?;
        let mut terms = self.terms.clone();
        for (mono, c) in &other.terms {
            let entry = terms.entry(mono.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SrPolynomial {
            ambient: self.ambient.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &SrPolynomial) -> Result<SrPolynomial> {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> SrPolynomial {
        SrPolynomial {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> SrPolynomial {
        if c.is_zero() {
            return Self::zero(&self.ambient);
        }
        SrPolynomial {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Reduced product. Cross terms whose supports unite to a non-face are
    /// dropped as they arise.
    pub fn mul(&self, other: &SrPolynomial) -> Result<SrPolynomial> {
        self.check_ambient(other)?;
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            let sa = ma.support();
            for (mb, cb) in &other.terms {
                if !self.ambient.is_face(sa.union(mb.support())) {
                    continue;
                }
                let mono = ma.mul(mb);
                let entry = terms.entry(mono).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SrPolynomial {
            ambient: self.ambient.clone(),
            terms,
        })
    }

    pub fn square(&self) -> SrPolynomial {
        self.mul(self).expect("same ambient")
    }

    /// The sum of terms of cohomological degree exactly `d` (`d` even).
    pub fn graded_component(&self, d: u64) -> Result<SrPolynomial> {
        if d % 2 != 0 {
            return Err(Error::OddDegree(d));
        }
        Ok(SrPolynomial {
            ambient: self.ambient.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// The image under `v_i -> -v_i` for all `i`, i.e. negation of the
    /// components of degree 2 mod 4.
    pub fn sign_alternated(&self) -> SrPolynomial {
        SrPolynomial {
            ambient: self.ambient.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let flip = (m.degree() / 2) % 2 == 1;
                    (m.clone(), if flip { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// The restriction `h^α`: substitutes `v_i -> 0` for `i ∉ α`. The result
    /// lives in the polynomial algebra on `α` (every subset of a face is a
    /// face, so no relations remain) and is returned over the ambient `Δ[α]`.
    pub fn restrict(&self, alpha: FaceSet) -> Result<SrPolynomial> {
        if !self.ambient.is_face(alpha) {
            return Err(Error::NotAFace(alpha));
        }
        let sub = SimplicialComplex::from_face_sets(self.ambient.m(), vec![alpha]);
        let terms: BTreeMap<Monomial, BigInt> = self
            .terms
            .iter()
            .filter(|(m, _)| m.support().is_subset_of(alpha))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Ok(SrPolynomial {
            ambient: sub,
            terms,
        })
    }

    /// Decides vanishing through the restriction monomorphism
    /// `Z[K] -> ⊕_{α ∈ K} Z[α]`: true iff every restriction vanishes.
    /// Agrees with [`is_zero`](Self::is_zero) on reduced forms.
    pub fn is_zero_via_restrictions(&self) -> bool {
        self.ambient
            .all_faces()
            .into_iter()
            .all(|alpha| self.restrict(alpha).expect("face").is_zero())
    }

    /// Serialization order: `[coefficient, exponent-vector]` pairs in
    /// graded-lex order.
    pub fn to_pairs(&self) -> Vec<(BigInt, Vec<u32>)> {
        self.terms
            .iter()
            .map(|(m, c)| (c.clone(), m.exponents().to_vec()))
            .collect()
    }
}

impl fmt::Debug for SrPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SrPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mono, coeff)) in self.terms.iter().enumerate() {
            let mag = coeff.abs();
            if k == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono:?}")?;
            } else {
                write!(f, "{mag}*{mono:?}")?;
            }
        }
        Ok(())
    }
}
