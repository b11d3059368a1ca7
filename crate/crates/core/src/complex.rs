//! Finite abstract simplicial complexes on the vertex set `{1, ..., m}`.
//!
//! A complex stores only its inclusion-maximal faces (facets); membership of
//! an arbitrary subset is decided against the facet list, and enumerations of
//! faces are generated on demand. All orderings are lexicographic on the
//! ascending vertex sequence, which fixes every serialization order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ambient vertex count; faces are stored as 64-bit masks.
pub const MAX_VERTICES: u32 = 64;

/// A subset of `{1, ..., m}` stored as a bitmask (vertex `i` is bit `i - 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FaceSet {
    bits: u64,
}

impl FaceSet {
    pub const EMPTY: FaceSet = FaceSet { bits: 0 };

    /// Builds a face from 1-based vertex indices. Duplicates collapse.
    pub fn from_vertices(vertices: &[u32]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    m: MAX_VERTICES,
                });
            }
            bits |= 1 << (v - 1);
        }
        Ok(FaceSet { bits })
    }

    pub fn singleton(vertex: u32) -> Result<Self> {
        Self::from_vertices(&[vertex])
    }

    pub fn from_bits(bits: u64) -> Self {
        FaceSet { bits }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn contains(self, vertex: u32) -> bool {
        vertex >= 1 && vertex <= MAX_VERTICES && self.bits >> (vertex - 1) & 1 == 1
    }

    /// Cardinality `|α|`.
    pub fn card(self) -> u32 {
        self.bits.count_ones()
    }

    /// Dimension `|α| - 1`; the empty face has dimension -1.
    pub fn dim(self) -> i32 {
        self.card() as i32 - 1
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn union(self, other: FaceSet) -> FaceSet {
        FaceSet {
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(self, other: FaceSet) -> FaceSet {
        FaceSet {
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(self, other: FaceSet) -> FaceSet {
        FaceSet {
            bits: self.bits & !other.bits,
        }
    }

    pub fn without(self, vertex: u32) -> FaceSet {
        FaceSet {
            bits: self.bits & !(1 << (vertex - 1)),
        }
    }

    pub fn with(self, vertex: u32) -> FaceSet {
        FaceSet {
            bits: self.bits | 1 << (vertex - 1),
        }
    }

    pub fn is_subset_of(self, other: FaceSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint_from(self, other: FaceSet) -> bool {
        self.bits & other.bits == 0
    }

    pub fn max_vertex(self) -> Option<u32> {
        if self.bits == 0 {
            None
        } else {
            Some(64 - self.bits.leading_zeros())
        }
    }

    /// Ascending 1-based vertex indices.
    pub fn vertices(self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl Ord for FaceSet {
    /// Lexicographic order on ascending vertex sequences, so that
    /// `{1,2} < {1,3} < {2,3}` and a set precedes its proper extensions.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.bits;
        let mut b = other.bits;
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                (false, false) => {}
            }
            let va = a.trailing_zeros();
            let vb = b.trailing_zeros();
            if va != vb {
                return va.cmp(&vb);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }
}

impl PartialOrd for FaceSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An abstract simplicial complex: a downward-closed family of subsets of
/// `{1, ..., m}` containing the empty set, represented by its facets.
///
/// `n` is the maximal face cardinality, so `dim K = n - 1`. Vertices that lie
/// in no face ("ghost" vertices) are permitted; the Stanley-Reisner relations
/// kill their generators downstream.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: u32,
    n: u32,
    facets: Vec<FaceSet>,
}

impl SimplicialComplex {
    /// Builds the complex generated by the given vertex lists.
    ///
    /// Facets are deduplicated and reduced to the inclusion-maximal members;
    /// an empty generator list (or only empty lists) yields the complex `{∅}`.
    pub fn from_facets(m: u32, facets: &[Vec<u32>]) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyVertexSet);
        }
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices(m));
        }
        let mut sets = Vec::with_capacity(facets.len());
        for facet in facets {
            let set = FaceSet::from_vertices(facet)?;
            if let Some(v) = set.max_vertex() {
                if v > m {
                    return Err(Error::VertexOutOfRange { vertex: v, m });
                }
            }
            sets.push(set);
        }
        Ok(Self::from_face_sets(m, sets))
    }

    /// As [`from_facets`](Self::from_facets) but from already-validated sets.
    pub(crate) fn from_face_sets(m: u32, mut sets: Vec<FaceSet>) -> Self {
        sets.sort_by_key(|s| std::cmp::Reverse(s.card()));
        let mut maximal: Vec<FaceSet> = Vec::new();
        for s in sets {
            if !maximal.iter().any(|t| s.is_subset_of(*t)) {
                maximal.push(s);
            }
        }
        if maximal.is_empty() {
            maximal.push(FaceSet::EMPTY);
        }
        maximal.sort();
        let n = maximal.iter().map(|f| f.card()).max().unwrap_or(0);
        SimplicialComplex {
            m,
            n,
            facets: maximal,
        }
    }

    /// The full simplex `Δ[m]` on `{1, ..., m}`.
    pub fn full_simplex(m: u32) -> Result<Self> {
        Self::from_facets(m, &[(1..=m).collect()])
    }

    /// The boundary `∂Δ[m]`: all proper subsets of `{1, ..., m}`.
    pub fn boundary_simplex(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let all: Vec<u32> = (1..=m).collect();
        let facets: Vec<Vec<u32>> = (1..=m)
            .map(|skip| all.iter().copied().filter(|&v| v != skip).collect())
            .collect();
        Self::from_facets(m, &facets)
    }

    /// Ambient vertex count `m`.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Maximal face cardinality; `dim K = n - 1`.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> i32 {
        self.n as i32 - 1
    }

    /// Inclusion-maximal faces, in lexicographic order.
    pub fn facets(&self) -> &[FaceSet] {
        &self.facets
    }

    /// Alias for [`facets`](Self::facets): the set `M_K` of maximal faces.
    pub fn maximal_faces(&self) -> &[FaceSet] {
        &self.facets
    }

    /// Membership oracle. The empty set is always a face; sets with a vertex
    /// beyond `m` are never faces.
    pub fn is_face(&self, set: FaceSet) -> bool {
        if let Some(v) = set.max_vertex() {
            if v > self.m {
                return false;
            }
        }
        self.facets.iter().any(|f| set.is_subset_of(*f))
    }

    /// Faces of cardinality exactly `n`, in lexicographic order.
    ///
    /// Any face of maximal cardinality is itself maximal, so these are the
    /// facets of cardinality `n`; for pure complexes this equals `M_K`.
    pub fn top_faces(&self) -> Vec<FaceSet> {
        self.facets
            .iter()
            .copied()
            .filter(|f| f.card() == self.n)
            .collect()
    }

    /// All faces of cardinality `k`, in lexicographic order.
    pub fn faces_of_card(&self, k: u32) -> Vec<FaceSet> {
        let mut out = BTreeSet::new();
        for facet in &self.facets {
            if facet.card() >= k {
                k_subsets(*facet, k, &mut out);
            }
        }
        out.into_iter().collect()
    }

    /// Every face including `∅`, ordered by cardinality then lexicographically.
    pub fn all_faces(&self) -> Vec<FaceSet> {
        (0..=self.n).flat_map(|k| self.faces_of_card(k)).collect()
    }

    /// Face counts by cardinality `0..=n` (the leading entry counts `∅`).
    pub fn f_vector(&self) -> Vec<u64> {
        (0..=self.n)
            .map(|k| self.faces_of_card(k).len() as u64)
            .collect()
    }

    /// True when all maximal faces share the same cardinality.
    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.card() == self.n)
    }

    /// The link `ℓ_K(α) = {β ∈ K : α ∩ β = ∅, α ∪ β ∈ K}`, as a complex on
    /// the same ambient vertex set.
    pub fn link(&self, alpha: FaceSet) -> Result<Self> {
        if !self.is_face(alpha) {
            return Err(Error::NotAFace(alpha));
        }
        let candidates: Vec<FaceSet> = self
            .facets
            .iter()
            .filter(|f| alpha.is_subset_of(**f))
            .map(|f| f.difference(alpha))
            .collect();
        Ok(Self::from_face_sets(self.m, candidates))
    }

    /// Union of all facets: the vertices that actually occur in a face.
    pub fn active_vertices(&self) -> FaceSet {
        self.facets
            .iter()
            .fold(FaceSet::EMPTY, |acc, f| acc.union(*f))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(m={}, facets=[", self.m)?;
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "])")
    }
}

fn k_subsets(face: FaceSet, k: u32, out: &mut BTreeSet<FaceSet>) {
    let verts = face.vertices();
    let mut current = Vec::with_capacity(k as usize);
    fn rec(verts: &[u32], k: usize, start: usize, current: &mut Vec<u32>, out: &mut BTreeSet<FaceSet>) {
        if current.len() == k {
            out.insert(FaceSet::from_vertices(current).expect("in-range vertices"));
            return;
        }
        let needed = k - current.len();
        for i in start..=verts.len().saturating_sub(needed) {
            current.push(verts[i]);
            rec(verts, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(&verts, k as usize, 0, &mut current, out);
}
