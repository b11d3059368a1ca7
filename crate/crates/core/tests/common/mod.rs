//! Shared test support: a deterministic RNG, random complex generators, and
//! an exhaustive search oracle for Euler-class square roots that never calls
//! into the sign-function machinery it is used to check.
#![allow(dead_code)] // each test binary uses its own subset

use std::collections::BTreeMap;

use djspace::complex::{FaceSet, SimplicialComplex};
use djspace::poly::SrPolynomial;

/// SplitMix64: tiny, seedable, stable across platforms.
pub struct Rng(pub u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn range(&mut self, lo: u64, hi_inclusive: u64) -> u64 {
        lo + self.below(hi_inclusive - lo + 1)
    }

    /// A random `card`-subset of `{1, ..., m}`.
    pub fn subset(&mut self, m: u32, card: u32) -> Vec<u32> {
        let mut pool: Vec<u32> = (1..=m).collect();
        for i in (1..pool.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            pool.swap(i, j);
        }
        let mut take: Vec<u32> = pool.into_iter().take(card as usize).collect();
        take.sort_unstable();
        take
    }
}

/// A random complex: m in `1..=max_m`, a handful of facets of card <= 5.
pub fn random_complex(rng: &mut Rng, max_m: u32) -> SimplicialComplex {
    let m = rng.range(1, max_m as u64) as u32;
    let facet_count = rng.range(1, 6);
    let facets: Vec<Vec<u32>> = (0..facet_count)
        .map(|_| {
            let card = rng.range(1, m.min(5) as u64) as u32;
            rng.subset(m, card)
        })
        .collect();
    SimplicialComplex::from_facets(m, &facets).expect("valid random complex")
}

/// A random pure complex: every facet of the same cardinality n, with at
/// most `max_t` top faces.
pub fn random_pure_complex(rng: &mut Rng, max_m: u32, max_t: u64) -> SimplicialComplex {
    let m = rng.range(2, max_m as u64) as u32;
    let n = rng.range(1, m.min(4) as u64) as u32;
    let t = rng.range(1, max_t);
    let facets: Vec<Vec<u32>> = (0..t).map(|_| rng.subset(m, n)).collect();
    SimplicialComplex::from_facets(m, &facets).expect("valid random pure complex")
}

/// A random complex of dimension exactly `n - 1` on `m` vertices.
pub fn random_complex_of_dim(rng: &mut Rng, m: u32, n: u32) -> SimplicialComplex {
    let mut facets = vec![rng.subset(m, n)];
    let extra = rng.below(5);
    for _ in 0..extra {
        let card = rng.range(1, n as u64) as u32;
        facets.push(rng.subset(m, card));
    }
    SimplicialComplex::from_facets(m, &facets).expect("valid random complex")
}

/// All exponent vectors of total (polynomial) degree `n` on `m` variables
/// whose support is a face, in descending numeric-lex order.
fn degree_n_monomials(k: &SimplicialComplex, n: u32) -> Vec<Vec<u32>> {
    let m = k.m() as usize;
    let mut out = Vec::new();
    let mut current = vec![0u32; m];
    fn rec(k: &SimplicialComplex, pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == current.len() {
            if left == 0 {
                let support: Vec<u32> = current
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, _)| i as u32 + 1)
                    .collect();
                if k.is_face(FaceSet::from_vertices(&support).unwrap()) {
                    out.push(current.clone());
                }
            }
            return;
        }
        for e in (0..=left).rev() {
            current[pos] = e;
            rec(k, pos + 1, left - e, current, out);
        }
        current[pos] = 0;
    }
    rec(k, 0, n, &mut current, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Every polynomial with coefficients in `{-1, 0, +1}` on the nonzero
/// degree-n monomials whose square equals `Σ_{μ top} v_μ^2` in `Z[K]`,
/// returned as coefficient vectors aligned with the monomial list.
///
/// The search is exhaustive over the full 3^D assignment space; branches are
/// cut only when a coefficient of the partial square is already fully
/// determined and differs from the target, which never excludes a genuine
/// solution (monomial products are monotone in the assignment order, so a
/// coefficient is "determined" exactly when no unassigned pair can still
/// contribute to it).
pub fn square_root_search(k: &SimplicialComplex) -> Vec<SrPolynomial> {
    let n = k.n();
    assert!(n >= 1, "needs a nonempty top face");
    let mons = degree_n_monomials(k, n);
    let d = mons.len();

    // Products with face support, their factorizations, and the target.
    let mut product_ids: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut factorizations: Vec<Vec<(usize, usize)>> = Vec::new();
    for i in 0..d {
        for j in i..d {
            let prod: Vec<u32> = mons[i].iter().zip(&mons[j]).map(|(a, b)| a + b).collect();
            let support: Vec<u32> = prod
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(p, _)| p as u32 + 1)
                .collect();
            if !k.is_face(FaceSet::from_vertices(&support).unwrap()) {
                continue;
            }
            let next_id = product_ids.len();
            let id = *product_ids.entry(prod).or_insert(next_id);
            if id == factorizations.len() {
                factorizations.push(Vec::new());
            }
            factorizations[id].push((i, j));
        }
    }
    let mut target = vec![0i64; product_ids.len()];
    for mu in k.top_faces() {
        let mut exps = vec![0u32; k.m() as usize];
        for v in mu.iter() {
            exps[(v - 1) as usize] = 2;
        }
        if let Some(&id) = product_ids.get(&exps) {
            target[id] = 1;
        }
    }
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); d];
    for (id, pairs) in factorizations.iter().enumerate() {
        for &(i, j) in pairs {
            touching[i].push(id);
            touching[j].push(id);
        }
    }
    for list in &mut touching {
        list.sort_unstable();
        list.dedup();
    }

    let mut assignment = vec![0i64; d];
    let mut solutions = Vec::new();
    search(
        0,
        &mut assignment,
        &factorizations,
        &target,
        &touching,
        &mut solutions,
    );

    solutions
        .into_iter()
        .map(|coeffs| {
            SrPolynomial::from_terms(
                k,
                coeffs
                    .iter()
                    .zip(&mons)
                    .filter(|(&c, _)| c != 0)
                    .map(|(&c, exps)| (c, exps.clone())),
            )
            .expect("face-supported monomials")
        })
        .collect()
}

fn search(
    level: usize,
    assignment: &mut Vec<i64>,
    factorizations: &[Vec<(usize, usize)>],
    target: &[i64],
    touching: &[Vec<usize>],
    solutions: &mut Vec<Vec<i64>>,
) {
    if level == assignment.len() {
        solutions.push(assignment.clone());
        return;
    }
    'values: for value in [0i64, 1, -1] {
        assignment[level] = value;
        for &pid in &touching[level] {
            let mut total = 0i64;
            let mut resolved = true;
            for &(i, j) in &factorizations[pid] {
                if j <= level {
                    total += if i == j {
                        assignment[i] * assignment[i]
                    } else {
                        2 * assignment[i] * assignment[j]
                    };
                } else if i <= level && assignment[i] == 0 {
                    // the pair contributes zero whatever assignment[j] is
                } else {
                    resolved = false;
                    break;
                }
            }
            if resolved && total != target[pid] {
                continue 'values;
            }
        }
        search(level + 1, assignment, factorizations, target, touching, solutions);
    }
    assignment[level] = 0;
}

/// Plain 3^D enumeration, usable only for small monomial counts; validates
/// the pruned search on tiny inputs.
pub fn square_root_search_unpruned(k: &SimplicialComplex) -> Vec<SrPolynomial> {
    let n = k.n();
    let mons = degree_n_monomials(k, n);
    let d = mons.len();
    assert!(d <= 12, "unpruned search is cubic-exponential");
    let target = {
        let p = djspace::classes::total_pontrjagin(k);
        let part = p.graded_component(4 * n as u64).unwrap();
        let sign = if n % 2 == 1 { -1 } else { 1 };
        part.scale(&num_bigint::BigInt::from(sign))
    };
    let mut out = Vec::new();
    for mask in 0..3u64.pow(d as u32) {
        let mut mask = mask;
        let mut coeffs = Vec::with_capacity(d);
        for _ in 0..d {
            coeffs.push([0i64, 1, -1][(mask % 3) as usize]);
            mask /= 3;
        }
        let candidate = SrPolynomial::from_terms(
            k,
            coeffs
                .iter()
                .zip(&mons)
                .filter(|(&c, _)| c != 0)
                .map(|(&c, exps)| (c, exps.clone())),
        )
        .unwrap();
        if candidate.square() == target {
            out.push(candidate);
        }
    }
    out
}

/// Canonical serialized forms, for set comparison of polynomial families.
pub fn poly_set(polys: &[SrPolynomial]) -> std::collections::BTreeSet<Vec<(num_bigint::BigInt, Vec<u32>)>> {
    polys.iter().map(|p| p.to_pairs()).collect()
}
