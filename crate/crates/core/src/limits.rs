//! Higher derived limits of abelian-group valued functors on the face poset.
//!
//! The face category has the faces of `K` (including `∅`) as objects and an
//! arrow from a face to each of its subsets; a functor assigns a free
//! finitely generated module to every face and a matrix to every covering
//! pair `β ⊃ α` with `|β| = |α| + 1`, mapping the value at the larger face to
//! the value at the smaller one. Composites along longer inclusions are
//! generated from the covering matrices, which must be path independent.
//!
//! `lim^i` is computed as the cohomology of the normalized cochain complex:
//! `C^k` is the direct sum, over strictly decreasing chains
//! `β_0 ⊃ β_1 ⊃ ... ⊃ β_k`, of the value at the smallest face `β_k`, with
//! the alternating-sum coboundary (drop an inner face, or drop the last face
//! and apply the functor's map). Cohomology over `Z` uses Smith normal form,
//! over `F_p` rank computations.
//!
//! As an independent oracle, the reduced simplicial cohomology of links is
//! computed from the augmented cochain complex; for an atomic functor
//! concentrated at `α` with free value `M`,
//! `lim^i = H̃^{i-1}(link(α); M)`, with `H̃^{-1}` of the void complex equal to
//! the coefficient module.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Coefficient ring: the integers or a prime field.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ring {
    Integers,
    ModP(u64),
}

impl Ring {
    pub fn mod_p(p: u64) -> Result<Ring> {
        if p < 2 || p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Ring::ModP(p))
    }

    pub fn parse(text: &str) -> Result<Ring> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("z") {
            return Ok(Ring::Integers);
        }
        let digits = t.strip_prefix(['F', 'f']).unwrap_or(t);
        digits
            .parse::<u64>()
            .ok()
            .map_or(Err(Error::InvalidInput(format!("unknown ring `{text}`"))), Ring::mod_p)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::ModP(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A finitely generated abelian group in canonical form: a free rank and
/// invariant factors `d_1 | d_2 | ...`, each greater than 1. Over a prime
/// field the rank is the dimension and the torsion list is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbGroup {
    pub rank: usize,
    pub torsion: Vec<BigUint>,
}

impl AbGroup {
    pub fn zero() -> Self {
        AbGroup {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// The direct sum of `copies` copies, preserving canonical form.
    pub fn repeated(&self, copies: usize) -> AbGroup {
        let mut torsion = Vec::with_capacity(self.torsion.len() * copies);
        for d in &self.torsion {
            for _ in 0..copies {
                torsion.push(d.clone());
            }
        }
        AbGroup {
            rank: self.rank * copies,
            torsion,
        }
    }
}

impl fmt::Debug for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.rank == 1 {
            parts.push("Z".to_string());
        } else if self.rank > 1 {
            parts.push(format!("Z^{}", self.rank));
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cohomology of one spot of a cochain complex of free modules:
/// `incoming` is the matrix into the spot, `outgoing` the matrix out of it,
/// `dim` the rank of the module at the spot.
fn cohomology_at(ring: Ring, dim: usize, incoming: &IntMatrix, outgoing: &IntMatrix) -> AbGroup {
    match ring {
        Ring::Integers => {
            let rank_out = outgoing.rank();
            let factors = incoming.smith_invariant_factors();
            let rank_in = factors.len();
            let torsion: Vec<BigUint> = factors.into_iter().filter(|d| !d.is_one()).collect();
            AbGroup {
                rank: dim - rank_out - rank_in,
                torsion,
            }
        }
        Ring::ModP(p) => AbGroup::free(dim - outgoing.rank_mod(p) - incoming.rank_mod(p)),
    }
}

/// A functor on the face poset with free finitely generated values.
///
/// `ranks` assigns each face (including `∅`) the rank of its value; absent
/// faces have rank 0. `maps` holds one matrix per covering pair, keyed by
/// `(larger, smaller)`; absent maps are zero.
#[derive(Clone, Debug)]
pub struct AbFunctor {
    complex: SimplicialComplex,
    ring: Ring,
    ranks: BTreeMap<FaceSet, usize>,
    maps: BTreeMap<(FaceSet, FaceSet), IntMatrix>,
}

impl AbFunctor {
    /// Validates shapes and two-step path independence of the covering maps.
    pub fn new(
        complex: SimplicialComplex,
        ring: Ring,
        ranks: BTreeMap<FaceSet, usize>,
        maps: BTreeMap<(FaceSet, FaceSet), IntMatrix>,
    ) -> Result<Self> {
        for face in ranks.keys() {
            if !complex.is_face(*face) {
                return Err(Error::NotAFace(*face));
            }
        }
        for ((larger, smaller), matrix) in &maps {
            let covering = smaller.is_subset_of(*larger)
                && larger.card() == smaller.card() + 1
                && complex.is_face(*larger);
            if !covering {
                return Err(Error::NotACoveringPair {
                    larger: *larger,
                    smaller: *smaller,
                });
            }
            let expected_rows = ranks.get(smaller).copied().unwrap_or(0);
            let expected_cols = ranks.get(larger).copied().unwrap_or(0);
            if matrix.rows() != expected_rows || matrix.cols() != expected_cols {
                return Err(Error::MapShape {
                    larger: *larger,
                    smaller: *smaller,
                    rows: matrix.rows(),
                    cols: matrix.cols(),
                    expected_rows,
                    expected_cols,
                });
            }
        }
        let functor = AbFunctor {
            complex,
            ring,
            ranks,
            maps,
        };
        functor.check_path_independence()?;
        Ok(functor)
    }

    fn check_path_independence(&self) -> Result<()> {
        for beta in self.complex.all_faces() {
            if beta.card() < 2 {
                continue;
            }
            let verts = beta.vertices();
            for (ai, &a) in verts.iter().enumerate() {
                for &b in verts.iter().skip(ai + 1) {
                    let alpha = beta.without(a).without(b);
                    let via_a = self
                        .covering_map(beta.without(b), alpha)
                        .mul(&self.covering_map(beta, beta.without(b)));
                    let via_b = self
                        .covering_map(beta.without(a), alpha)
                        .mul(&self.covering_map(beta, beta.without(a)));
                    if via_a != via_b {
                        return Err(Error::NotAFunctor {
                            larger: beta,
                            smaller: alpha,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The functor concentrated at `α` with free value `M`, all maps zero.
    pub fn atomic(
        complex: &SimplicialComplex,
        alpha: FaceSet,
        value: &AbGroup,
        ring: Ring,
    ) -> Result<Self> {
        if !complex.is_face(alpha) {
            return Err(Error::NotAFace(alpha));
        }
        if !value.is_free() {
            return Err(Error::TorsionValue(alpha));
        }
        let mut ranks = BTreeMap::new();
        ranks.insert(alpha, value.rank);
        Ok(AbFunctor {
            complex: complex.clone(),
            ring,
            ranks,
            maps: BTreeMap::new(),
        })
    }

    /// The constant functor with free value `M` and identity maps.
    pub fn constant(complex: &SimplicialComplex, value: &AbGroup, ring: Ring) -> Result<Self> {
        if !value.is_free() {
            return Err(Error::TorsionValue(FaceSet::EMPTY));
        }
        let rank = value.rank;
        let mut ranks = BTreeMap::new();
        let mut maps = BTreeMap::new();
        for face in complex.all_faces() {
            ranks.insert(face, rank);
            for v in face.iter() {
                maps.insert((face, face.without(v)), IntMatrix::identity(rank));
            }
        }
        Ok(AbFunctor {
            complex: complex.clone(),
            ring,
            ranks,
            maps,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rank_at(&self, face: FaceSet) -> usize {
        self.ranks.get(&face).copied().unwrap_or(0)
    }

    /// The truncation `Φ_{<=s}`: values kept on faces of cardinality at most
    /// `s`, zero above.
    pub fn truncate_at_most(&self, s: u32) -> AbFunctor {
        AbFunctor {
            complex: self.complex.clone(),
            ring: self.ring,
            ranks: self
                .ranks
                .iter()
                .filter(|(f, _)| f.card() <= s)
                .map(|(f, r)| (*f, *r))
                .collect(),
            maps: self
                .maps
                .iter()
                .filter(|((larger, _), _)| larger.card() <= s)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// The slice `Φ_s`: values kept only in cardinality exactly `s`; every
    /// covering pair crosses cardinalities, so no maps survive.
    pub fn slice(&self, s: u32) -> AbFunctor {
        AbFunctor {
            complex: self.complex.clone(),
            ring: self.ring,
            ranks: self
                .ranks
                .iter()
                .filter(|(f, _)| f.card() == s)
                .map(|(f, r)| (*f, *r))
                .collect(),
            maps: BTreeMap::new(),
        }
    }

    /// The matrix of one covering arrow (zero when unspecified).
    pub fn covering_map(&self, larger: FaceSet, smaller: FaceSet) -> IntMatrix {
        self.maps.get(&(larger, smaller)).cloned().unwrap_or_else(|| {
            IntMatrix::zero(self.rank_at(smaller), self.rank_at(larger))
        })
    }

    /// The composite matrix for an arbitrary inclusion `smaller ⊆ larger`,
    /// removing vertices in ascending order (any order agrees, by path
    /// independence).
    pub fn arrow_matrix(&self, larger: FaceSet, smaller: FaceSet) -> IntMatrix {
        debug_assert!(smaller.is_subset_of(larger));
        let mut acc = IntMatrix::identity(self.rank_at(larger));
        let mut current = larger;
        for v in larger.difference(smaller).iter() {
            let next = current.without(v);
            acc = self.covering_map(current, next).mul(&acc);
            current = next;
        }
        acc
    }

    /// Strictly decreasing chains of faces, grouped by length, up to
    /// `max_len` inclusive.
    fn chains(&self, max_len: usize) -> Vec<Vec<Vec<FaceSet>>> {
        let objects = self.complex.all_faces();
        let subfaces: BTreeMap<FaceSet, Vec<FaceSet>> = objects
            .iter()
            .map(|&f| {
                let subs: Vec<FaceSet> = objects
                    .iter()
                    .copied()
                    .filter(|s| *s != f && s.is_subset_of(f))
                    .collect();
                (f, subs)
            })
            .collect();
        let mut by_len: Vec<Vec<Vec<FaceSet>>> = Vec::with_capacity(max_len + 1);
        by_len.push(objects.iter().map(|&f| vec![f]).collect());
        for len in 1..=max_len {
            let mut next = Vec::new();
            for chain in &by_len[len - 1] {
                let tail = *chain.last().expect("nonempty chain");
                for &sub in &subfaces[&tail] {
                    let mut extended = chain.clone();
                    extended.push(sub);
                    next.push(extended);
                }
            }
            if next.is_empty() {
                by_len.push(next);
                break;
            }
            next.sort();
            by_len.push(next);
        }
        while by_len.len() <= max_len {
            by_len.push(Vec::new());
        }
        by_len
    }

    /// Dimensions and coboundary matrices `d^k : C^k -> C^{k+1}` of the
    /// normalized cochain complex, for `k = 0..=max_degree`.
    pub fn cochain_complex(&self, max_degree: usize) -> (Vec<usize>, Vec<IntMatrix>) {
        let chains = self.chains(max_degree + 1);
        // Block offsets per chain, skipping zero-rank tails.
        let mut offsets: Vec<BTreeMap<Vec<FaceSet>, usize>> = Vec::new();
        let mut dims: Vec<usize> = Vec::new();
        for level in &chains {
            let mut map = BTreeMap::new();
            let mut total = 0usize;
            for chain in level {
                let r = self.rank_at(*chain.last().expect("nonempty"));
                if r > 0 {
                    map.insert(chain.clone(), total);
                    total += r;
                }
            }
            offsets.push(map);
            dims.push(total);
        }
        let mut matrices = Vec::with_capacity(max_degree + 1);
        for k in 0..=max_degree {
            let rows = dims.get(k + 1).copied().unwrap_or(0);
            let cols = dims[k];
            let mut d = IntMatrix::zero(rows, cols);
            if rows > 0 && cols > 0 {
                for chain in &chains[k + 1] {
                    let tail = *chain.last().expect("nonempty");
                    let r = self.rank_at(tail);
                    if r == 0 {
                        continue;
                    }
                    let row_off = offsets[k + 1][chain];
                    // Drop a face keeping the tail: a signed identity block.
                    for drop in 0..chain.len() - 1 {
                        let mut sub: Vec<FaceSet> = chain.clone();
                        sub.remove(drop);
                        let Some(&col_off) = offsets[k].get(&sub) else {
                            continue;
                        };
                        let sign = if drop % 2 == 0 { 1 } else { -1 };
                        for i in 0..r {
                            let cur = d.get(row_off + i, col_off + i) + BigInt::from(sign);
                            d.set(row_off + i, col_off + i, cur);
                        }
                    }
                    // Drop the tail: apply the functor along the last step.
                    let prev_tail = chain[chain.len() - 2];
                    if self.rank_at(prev_tail) > 0 {
                        let sub = chain[..chain.len() - 1].to_vec();
                        if let Some(&col_off) = offsets[k].get(&sub) {
                            let m = self.arrow_matrix(prev_tail, tail);
                            let sign = if (chain.len() - 1) % 2 == 0 { 1 } else { -1 };
                            for i in 0..m.rows() {
                                for j in 0..m.cols() {
                                    let add = m.get(i, j) * BigInt::from(sign);
                                    if add != BigInt::from(0) {
                                        let cur = d.get(row_off + i, col_off + j) + add;
                                        d.set(row_off + i, col_off + j, cur);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            matrices.push(d);
        }
        (dims, matrices)
    }

    /// `lim^i` for `i = 0..=max_degree`, in canonical form.
    pub fn derived_limits(&self, max_degree: usize) -> Vec<AbGroup> {
        let (dims, mats) = self.cochain_complex(max_degree);
        (0..=max_degree)
            .map(|i| {
                let dim = dims.get(i).copied().unwrap_or(0);
                if dim == 0 {
                    return AbGroup::zero();
                }
                let incoming = if i == 0 {
                    IntMatrix::zero(dim, 0)
                } else {
                    mats[i - 1].clone()
                };
                cohomology_at(self.ring, dim, &incoming, &mats[i])
            })
            .collect()
    }
}

/// Reduced simplicial cohomology of the link of `α`, with coefficients in a
/// free module of rank `coeff_rank` over the ring.
///
/// Entry `i` of the result is `H̃^{i-1}`, so the vector aligns degree-wise
/// with `derived_limits` of the atomic functor at `α`; the list covers
/// degrees `-1 ..= dim link`. For a maximal face the link is the void
/// complex and the single entry is the coefficient module itself.
pub fn link_cohomology(
    complex: &SimplicialComplex,
    alpha: FaceSet,
    ring: Ring,
    coeff_rank: usize,
) -> Result<Vec<AbGroup>> {
    let link = complex.link(alpha)?;
    let levels: Vec<Vec<FaceSet>> = (0..=link.n()).map(|k| link.faces_of_card(k)).collect();
    // delta[j]: from faces of cardinality j+1 to faces of cardinality j+2,
    // i.e. the coboundary out of cohomological degree j (degree -1 is the
    // empty face).
    let mut deltas = Vec::new();
    for j in 0..link.n() as usize {
        let cols_faces = &levels[j];
        let rows_faces = &levels[j + 1];
        let col_index: BTreeMap<FaceSet, usize> = cols_faces
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i))
            .collect();
        let mut d = IntMatrix::zero(rows_faces.len(), cols_faces.len());
        for (ri, tau) in rows_faces.iter().enumerate() {
            for (pos, v) in tau.iter().enumerate() {
                let sigma = tau.without(v);
                let ci = col_index[&sigma];
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                d.set(ri, ci, BigInt::from(sign));
            }
        }
        deltas.push(d);
    }
    let mut out = Vec::with_capacity(levels.len());
    for j in 0..levels.len() {
        let dim = levels[j].len();
        let incoming = if j == 0 {
            IntMatrix::zero(dim, 0)
        } else {
            deltas[j - 1].clone()
        };
        let zero_out = IntMatrix::zero(0, dim);
        let outgoing = deltas.get(j).unwrap_or(&zero_out);
        out.push(cohomology_at(ring, dim, &incoming, outgoing).repeated(coeff_rank));
    }
    Ok(out)
}

/// Checks `lim^i (atomic at α) = H̃^{i-1}(link(α))` as canonical forms for
/// all `i <= max_degree`.
pub fn verify_atomic_formula(
    complex: &SimplicialComplex,
    alpha: FaceSet,
    ring: Ring,
    max_degree: usize,
) -> Result<bool> {
    let functor = AbFunctor::atomic(complex, alpha, &AbGroup::free(1), ring)?;
    let lims = functor.derived_limits(max_degree);
    let lc = link_cohomology(complex, alpha, ring, 1)?;
    Ok((0..=max_degree).all(|i| {
        let left = &lims[i];
        let right = lc.get(i).cloned().unwrap_or_else(AbGroup::zero);
        *left == right
    }))
}
