//! Existence and counting of complex structures through sign data.
//!
//! A vertex sign map `f` induces `ω_f(μ) = prod_{i ∈ μ} f(i)` on the top
//! faces. Whether a target sign function `ω` arises as `ω_f` (or as `ε ω_f`
//! with a global sign `ε`) is a linear question over GF(2) under the
//! encoding `s -> (1 - s) / 2`: one unknown per vertex, one optional unknown
//! for `ε`, one equation per top face. Consistent systems have `2^nullity`
//! solutions, which is the structure count.
//!
//! Two notions are exposed side by side:
//! - the *exact* (orientation-respecting) problem `ω_f = ω`;
//! - the *up-to-sign* problem `ω = ε ω_f`, whose solution set is symmetric
//!   in `ω` and `-ω`.
//!
//! The module also validates dicharacteristic pairs: an integer matrix whose
//! oriented facet minors are units, yielding the sign pattern `μ -> det Λ_μ`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use crate::classes::{Sign, SignFunction, VertexSigns};
use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::gf2::Gf2System;
use crate::matrix::IntMatrix;
use crate::poly::SrPolynomial;

/// The induced sign function `ω_f(μ) = prod_{i ∈ μ} f(i)` on the top faces.
pub fn induced_sign_function(
    complex: &SimplicialComplex,
    f: &VertexSigns,
) -> Result<SignFunction> {
    if f.len() != complex.m() as usize {
        return Err(Error::SignLength {
            got: f.len(),
            expected: complex.m() as usize,
        });
    }
    Ok(SignFunction::from_fn(complex, |face| f.product_over(face)))
}

fn omega_system(
    complex: &SimplicialComplex,
    omega: &SignFunction,
    with_epsilon: bool,
) -> Result<Gf2System> {
    if !omega.matches(complex) {
        return Err(Error::SignDomainMismatch);
    }
    let m = complex.m() as usize;
    let ncols = m + usize::from(with_epsilon);
    let mut sys = Gf2System::new(ncols);
    for (face, sign) in omega.faces().iter().zip(omega.signs()) {
        let mut coeffs: u128 = 0;
        for v in face.iter() {
            coeffs |= 1 << (v - 1);
        }
        if with_epsilon {
            coeffs |= 1 << m;
        }
        sys.push_row(coeffs, sign.is_minus());
    }
    Ok(sys)
}

fn signs_from_bits(bits: &[bool]) -> VertexSigns {
    VertexSigns::new(
        bits.iter()
            .map(|&b| if b { Sign::Minus } else { Sign::Plus })
            .collect(),
    )
}

/// A vertex sign map `f` with `ω_f = ω`, if one exists. The witness is the
/// lexicographically least solution bit vector under `+1 -> 0`, vertices in
/// ascending order.
pub fn realize(complex: &SimplicialComplex, omega: &SignFunction) -> Result<Option<VertexSigns>> {
    let sys = omega_system(complex, omega, false)?;
    Ok(sys.lex_min_solution().map(|bits| signs_from_bits(&bits)))
}

/// A pair `(ε, f)` with `ω = ε ω_f`, if one exists. The witness is the
/// lexicographically least solution bit vector over `(f(1), ..., f(m), ε)`.
pub fn realize_up_to_sign(
    complex: &SimplicialComplex,
    omega: &SignFunction,
) -> Result<Option<(Sign, VertexSigns)>> {
    let sys = omega_system(complex, omega, true)?;
    Ok(sys.lex_min_solution().map(|bits| {
        let eps = if bits[bits.len() - 1] {
            Sign::Minus
        } else {
            Sign::Plus
        };
        (eps, signs_from_bits(&bits[..bits.len() - 1]))
    }))
}

/// `|{f : ω_f = ω}|`, the number of complex structures compatible with the
/// orientation fixed by `ω`.
pub fn count_realizations(complex: &SimplicialComplex, omega: &SignFunction) -> Result<BigUint> {
    Ok(omega_system(complex, omega, false)?.solution_count())
}

/// `|{f : ω_f = ω or ω_f = -ω}|`, the number of complex structures of the
/// underlying non-oriented bundle.
///
/// With the global sign `ε` as one extra unknown the two branches form a
/// single system; since a complex always has a top face, `ω ≠ -ω` and the
/// branches are disjoint, so the count is exactly the solution count
/// `2^nullity` (or 0).
pub fn count_structures(complex: &SimplicialComplex, omega: &SignFunction) -> Result<BigUint> {
    Ok(omega_system(complex, omega, true)?.solution_count())
}

/// Exhaustive oracle for [`count_structures`]: walks all `2^m` vertex sign
/// maps. Rejects `m > 20`.
pub fn count_structures_brute(
    complex: &SimplicialComplex,
    omega: &SignFunction,
) -> Result<BigUint> {
    count_structures_brute_threaded(complex, omega, 1)
}

/// As [`count_structures_brute`], splitting the `2^m` masks over `threads`
/// workers; the total is independent of the split.
pub fn count_structures_brute_threaded(
    complex: &SimplicialComplex,
    omega: &SignFunction,
    threads: usize,
) -> Result<BigUint> {
    const LIMIT: u32 = 20;
    let m = complex.m();
    if m > LIMIT {
        return Err(Error::BruteForceTooLarge { m, limit: LIMIT });
    }
    if !omega.matches(complex) {
        return Err(Error::SignDomainMismatch);
    }
    let total = 1u64 << m;
    let threads = threads.clamp(1, 64) as u64;
    let chunk = total.div_ceil(threads);
    let neg = omega.negated();
    let count_range = |lo: u64, hi: u64| -> u64 {
        let mut hits = 0u64;
        for mask in lo..hi {
            let f = VertexSigns::from_mask(m, mask);
            let wf = SignFunction::from_fn(complex, |face| f.product_over(face));
            if wf == *omega || wf == neg {
                hits += 1;
            }
        }
        hits
    };
    let mut total_hits = 0u64;
    if threads == 1 {
        total_hits = count_range(0, total);
    } else {
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for w in 0..threads {
                let lo = w * chunk;
                let hi = total.min(lo + chunk);
                let count_range = &count_range;
                handles.push(scope.spawn(move || count_range(lo, hi)));
            }
            for h in handles {
                total_hits += h.join().expect("worker panicked");
            }
        });
    }
    Ok(BigUint::from(total_hits))
}

/// Number of complex structures in the stable range `s > n`: always `2^m`.
pub fn stable_structure_count(complex: &SimplicialComplex, s: u32) -> Result<BigUint> {
    if s <= complex.n() {
        return Err(Error::StableRange { s, n: complex.n() });
    }
    Ok(BigUint::one() << complex.m())
}

/// Combinatorial data of an oriented quasitoric manifold: a pure complex,
/// its top faces as oriented vertex tuples, and an `n x m` integer matrix
/// whose minors at the oriented facets must be units.
#[derive(Clone, Debug)]
pub struct DicharacteristicPair {
    complex: SimplicialComplex,
    oriented_facets: Vec<Vec<u32>>,
    lambda: IntMatrix,
}

impl DicharacteristicPair {
    /// Structural validation: the matrix is `n x m`, every oriented tuple has
    /// distinct vertices, and the tuple supports are exactly the top faces.
    pub fn new(
        complex: SimplicialComplex,
        oriented_facets: Vec<Vec<u32>>,
        lambda: IntMatrix,
    ) -> Result<Self> {
        let (n, m) = (complex.n() as usize, complex.m() as usize);
        if lambda.rows() != n || lambda.cols() != m {
            return Err(Error::MatrixShape {
                rows: lambda.rows(),
                cols: lambda.cols(),
                expected_rows: n,
                expected_cols: m,
            });
        }
        let mut supports = Vec::with_capacity(oriented_facets.len());
        for tuple in &oriented_facets {
            let set = FaceSet::from_vertices(tuple)?;
            if set.card() as usize != tuple.len() {
                return Err(Error::DegenerateOrientedFacet(tuple.clone()));
            }
            if let Some(v) = set.max_vertex() {
                if v > complex.m() {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        m: complex.m(),
                    });
                }
            }
            supports.push(set);
        }
        supports.sort();
        supports.dedup();
        if supports != complex.top_faces() {
            return Err(Error::OrientedFacetMismatch);
        }
        Ok(DicharacteristicPair {
            complex,
            oriented_facets,
            lambda,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// The minor of `Λ` at an oriented facet: columns in tuple order.
    fn minor(&self, tuple: &[u32]) -> IntMatrix {
        let n = self.complex.n() as usize;
        let mut sub = IntMatrix::zero(n, tuple.len());
        for (jj, &v) in tuple.iter().enumerate() {
            for i in 0..n {
                sub.set(i, jj, self.lambda.get(i, (v - 1) as usize).clone());
            }
        }
        sub
    }

    /// Exact determinants `det Λ_μ` in the supplied facet order.
    pub fn determinants(&self) -> Vec<(FaceSet, BigInt)> {
        self.oriented_facets
            .iter()
            .map(|tuple| {
                let set = FaceSet::from_vertices(tuple).expect("validated");
                (set, self.minor(tuple).det())
            })
            .collect()
    }

    /// Checks `|det Λ_μ| = 1` on every facet and returns the sign function
    /// `μ -> det Λ_μ` together with the Euler class `Σ det(Λ_μ) v_μ`.
    pub fn validate(&self) -> Result<(SignFunction, SrPolynomial)> {
        let mut signs = std::collections::BTreeMap::new();
        for (face, det) in self.determinants() {
            if !det.abs().is_one() {
                return Err(Error::NotUnimodular {
                    face,
                    det: det.to_string(),
                });
            }
            signs.insert(face, if det.is_negative() { Sign::Minus } else { Sign::Plus });
        }
        let omega = SignFunction::from_fn(&self.complex, |face| signs[&face]);
        let euler = crate::classes::euler_class(&self.complex, &omega)?;
        Ok((omega, euler))
    }

    /// Whether the associated bundle admits a complex structure: the det sign
    /// pattern must be `ε ω_f` for some vertex signs `f` and a global `ε`.
    pub fn admits_complex_structure(&self) -> Result<bool> {
        let (omega, _) = self.validate()?;
        Ok(realize_up_to_sign(&self.complex, &omega)?.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::euler_class;

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::boundary_simplex(3).unwrap()
    }

    fn square() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap()
    }

    fn sf(k: &SimplicialComplex, signs: &[i64]) -> SignFunction {
        SignFunction::from_signs(
            k,
            signs.iter().map(|&v| Sign::from_value(v).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn induced_sign_function_examples() {
        let t = triangle();
        let f = VertexSigns::from_values(&[-1, 1, 1]).unwrap();
        let w = induced_sign_function(&t, &f).unwrap();
        // Lex order of faces: {1,2}, {1,3}, {2,3}.
        assert_eq!(
            w.signs(),
            &[Sign::Minus, Sign::Minus, Sign::Plus]
        );
        let all_plus = induced_sign_function(&t, &VertexSigns::all_plus(3)).unwrap();
        assert_eq!(all_plus, SignFunction::constant(&t, Sign::Plus));
    }

    #[test]
    fn induced_map_is_a_bijection_on_boundary_4() {
        let k = SimplicialComplex::boundary_simplex(4).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0..16u64 {
            let f = VertexSigns::from_mask(4, mask);
            let w = induced_sign_function(&k, &f).unwrap();
            seen.insert(w.signs().to_vec());
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn realize_respects_orientation() {
        let t = triangle();
        // Odd number of minus signs: not of the form ω_f.
        let odd = sf(&t, &[-1, 1, 1]);
        assert!(realize(&t, &odd).unwrap().is_none());
        // ... but -ω is, so the up-to-sign problem is solvable.
        assert!(realize_up_to_sign(&t, &odd).unwrap().is_some());

        let all_plus = SignFunction::constant(&t, Sign::Plus);
        let f = realize(&t, &all_plus).unwrap().unwrap();
        assert_eq!(f, VertexSigns::all_plus(3));
        let (eps, g) = realize_up_to_sign(&t, &all_plus).unwrap().unwrap();
        assert_eq!(eps, Sign::Plus);
        assert_eq!(g, VertexSigns::all_plus(3));
    }

    #[test]
    fn realize_square_cycle_example() {
        let k = square();
        // Signs (-,+,+,-) on the cycle edges {1,2},{2,3},{3,4},{1,4}
        // reorder to lex as {1,2} -> -, {1,4} -> -, {2,3} -> +, {3,4} -> +.
        let omega = sf(&k, &[-1, -1, 1, 1]);
        // The stated witness is valid...
        let f = VertexSigns::from_values(&[-1, 1, 1, 1]).unwrap();
        assert_eq!(induced_sign_function(&k, &f).unwrap(), omega);
        // ... and the solver finds a valid witness deterministically.
        let got = realize(&k, &omega).unwrap().unwrap();
        assert_eq!(induced_sign_function(&k, &got).unwrap(), omega);
        assert_eq!(got, realize(&k, &omega).unwrap().unwrap());
        let (eps, g) = realize_up_to_sign(&k, &omega).unwrap().unwrap();
        let wg = induced_sign_function(&k, &g).unwrap();
        let target = if eps == Sign::Plus { omega.clone() } else { omega.negated() };
        assert_eq!(wg, target);
    }

    #[test]
    fn counts_on_named_complexes() {
        let t = triangle();
        for omega in SignFunction::enumerate(&t) {
            let exact = count_realizations(&t, &omega).unwrap();
            let expected = if omega.minus_count() % 2 == 0 { 2u32 } else { 0 };
            assert_eq!(exact, BigUint::from(expected));
            // Up to sign, every ω on the triangle counts 2.
            assert_eq!(count_structures(&t, &omega).unwrap(), BigUint::from(2u32));
            assert_eq!(
                count_structures_brute(&t, &omega).unwrap(),
                BigUint::from(2u32)
            );
        }

        let s = square();
        for omega in SignFunction::enumerate(&s) {
            let exact = count_realizations(&s, &omega).unwrap();
            let expected = if omega.minus_count() % 2 == 0 { 2u32 } else { 0 };
            assert_eq!(exact, BigUint::from(expected));
            let upto = count_structures(&s, &omega).unwrap();
            let expected_upto = if omega.minus_count() % 2 == 0 { 4u32 } else { 0 };
            assert_eq!(upto, BigUint::from(expected_upto));
            assert_eq!(count_structures_brute(&s, &omega).unwrap(), upto);
        }

        let b4 = SimplicialComplex::boundary_simplex(4).unwrap();
        for omega in SignFunction::enumerate(&b4) {
            assert_eq!(count_structures(&b4, &omega).unwrap(), BigUint::from(2u32));
            assert_eq!(count_realizations(&b4, &omega).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn single_vertex_counts() {
        let d1 = SimplicialComplex::full_simplex(1).unwrap();
        let omega = SignFunction::constant(&d1, Sign::Plus);
        assert_eq!(count_structures(&d1, &omega).unwrap(), BigUint::from(2u32));
        assert_eq!(
            count_structures_brute(&d1, &omega).unwrap(),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn sign_symmetry_of_the_up_to_sign_problem() {
        let k = square();
        for omega in SignFunction::enumerate(&k) {
            let neg = omega.negated();
            assert_eq!(
                count_structures(&k, &omega).unwrap(),
                count_structures(&k, &neg).unwrap()
            );
            assert_eq!(
                realize_up_to_sign(&k, &omega).unwrap().is_some(),
                realize_up_to_sign(&k, &neg).unwrap().is_some()
            );
        }
    }

    #[test]
    fn induced_sign_function_is_a_homomorphism() {
        let k = square();
        for fm in 0..16u64 {
            for gm in 0..16u64 {
                let f = VertexSigns::from_mask(4, fm);
                let g = VertexSigns::from_mask(4, gm);
                let wf = induced_sign_function(&k, &f).unwrap();
                let wg = induced_sign_function(&k, &g).unwrap();
                let wfg = induced_sign_function(&k, &f.pointwise_mul(&g)).unwrap();
                let pointwise: Vec<Sign> = wf
                    .signs()
                    .iter()
                    .zip(wg.signs())
                    .map(|(&a, &b)| a * b)
                    .collect();
                assert_eq!(wfg.signs(), &pointwise[..]);
            }
        }
    }

    #[test]
    fn brute_force_limit() {
        let k = SimplicialComplex::from_facets(21, &[vec![1, 2]]).unwrap();
        let omega = SignFunction::constant(&k, Sign::Plus);
        assert_eq!(
            count_structures_brute(&k, &omega).unwrap_err(),
            Error::BruteForceTooLarge { m: 21, limit: 20 }
        );
    }

    #[test]
    fn brute_force_threaded_matches() {
        let k = square();
        for omega in SignFunction::enumerate(&k) {
            assert_eq!(
                count_structures_brute(&k, &omega).unwrap(),
                count_structures_brute_threaded(&k, &omega, 3).unwrap()
            );
        }
    }

    #[test]
    fn stable_count_examples() {
        let k = square();
        assert_eq!(
            stable_structure_count(&k, 3).unwrap(),
            BigUint::from(16u32)
        );
        let d1 = SimplicialComplex::full_simplex(1).unwrap();
        assert_eq!(stable_structure_count(&d1, 2).unwrap(), BigUint::from(2u32));
        assert_eq!(
            stable_structure_count(&k, 2).unwrap_err(),
            Error::StableRange { s: 2, n: 2 }
        );
    }

    #[test]
    fn distinct_twisted_chern_classes() {
        // The number of distinct c_f over all f is 2^(active vertices).
        let k = square();
        let mut classes = std::collections::BTreeSet::new();
        for mask in 0..16u64 {
            let f = VertexSigns::from_mask(4, mask);
            classes.insert(crate::classes::signed_chern(&k, &f).unwrap().to_pairs());
        }
        assert_eq!(classes.len(), 16);

        let ghost = SimplicialComplex::from_facets(2, &[vec![1]]).unwrap();
        let mut classes = std::collections::BTreeSet::new();
        for mask in 0..4u64 {
            let f = VertexSigns::from_mask(2, mask);
            classes.insert(crate::classes::signed_chern(&ghost, &f).unwrap().to_pairs());
        }
        assert_eq!(classes.len(), 2);
    }

    fn cp2_fan_pair() -> DicharacteristicPair {
        DicharacteristicPair::new(
            triangle(),
            vec![vec![1, 2], vec![2, 3], vec![3, 1]],
            IntMatrix::from_rows_i64(&[vec![1, 0, -1], vec![0, 1, -1]]),
        )
        .unwrap()
    }

    #[test]
    fn cp2_fan_validates_all_plus() {
        let pair = cp2_fan_pair();
        let (omega, euler) = pair.validate().unwrap();
        assert_eq!(omega, SignFunction::constant(pair.complex(), Sign::Plus));
        assert_eq!(
            euler,
            euler_class(pair.complex(), &omega).unwrap()
        );
        assert!(pair.admits_complex_structure().unwrap());
    }

    #[test]
    fn identity_block_minor_is_plus_one() {
        let k = SimplicialComplex::from_facets(3, &[vec![1, 2]]).unwrap();
        let pair = DicharacteristicPair::new(
            k,
            vec![vec![1, 2]],
            IntMatrix::from_rows_i64(&[vec![1, 0, 5], vec![0, 1, -7]]),
        )
        .unwrap();
        let dets = pair.determinants();
        assert_eq!(dets[0].1, BigInt::one());
    }

    #[test]
    fn orientation_swap_flips_determinant() {
        let k = SimplicialComplex::from_facets(3, &[vec![1, 2]]).unwrap();
        let lambda = IntMatrix::from_rows_i64(&[vec![1, 0, 0], vec![0, 1, 0]]);
        let fwd = DicharacteristicPair::new(k.clone(), vec![vec![1, 2]], lambda.clone()).unwrap();
        let rev = DicharacteristicPair::new(k, vec![vec![2, 1]], lambda).unwrap();
        assert_eq!(fwd.determinants()[0].1, -rev.determinants()[0].1.clone());
    }

    #[test]
    fn even_permutations_preserve_determinants() {
        let k = SimplicialComplex::from_facets(4, &[vec![1, 2, 3]]).unwrap();
        let lambda =
            IntMatrix::from_rows_i64(&[vec![1, 0, 2, 0], vec![0, 1, 1, 0], vec![3, 0, 1, 0]]);
        let det_of = |tuple: Vec<u32>| {
            DicharacteristicPair::new(k.clone(), vec![tuple], lambda.clone())
                .unwrap()
                .determinants()[0]
                .1
                .clone()
        };
        let base = det_of(vec![1, 2, 3]);
        // 3-cycles are even, transpositions odd.
        assert_eq!(det_of(vec![2, 3, 1]), base);
        assert_eq!(det_of(vec![3, 1, 2]), base);
        assert_eq!(det_of(vec![2, 1, 3]), -base.clone());
        assert_eq!(det_of(vec![1, 3, 2]), -base.clone());
    }

    #[test]
    fn empty_only_complex_counts_every_sign_map() {
        // K = {∅}: the single top face is ∅ and ω_f(∅) = +1 for every f, so
        // one of the two branches matches all 2^m maps.
        let k = SimplicialComplex::from_facets(3, &[]).unwrap();
        for sign in [Sign::Plus, Sign::Minus] {
            let omega = SignFunction::constant(&k, sign);
            assert_eq!(count_structures(&k, &omega).unwrap(), BigUint::from(8u32));
            assert_eq!(
                count_structures_brute(&k, &omega).unwrap(),
                BigUint::from(8u32)
            );
        }
        let plus = SignFunction::constant(&k, Sign::Plus);
        assert_eq!(count_realizations(&k, &plus).unwrap(), BigUint::from(8u32));
        let minus = SignFunction::constant(&k, Sign::Minus);
        assert_eq!(count_realizations(&k, &minus).unwrap(), BigUint::ZERO);
    }

    #[test]
    fn non_unimodular_minor_is_reported() {
        let pair = DicharacteristicPair::new(
            triangle(),
            vec![vec![1, 2], vec![2, 3], vec![3, 1]],
            IntMatrix::from_rows_i64(&[vec![2, 0, -1], vec![0, 1, -1]]),
        )
        .unwrap();
        let err = pair.validate().unwrap_err();
        assert_eq!(
            err,
            Error::NotUnimodular {
                face: FaceSet::from_vertices(&[1, 2]).unwrap(),
                det: "2".into()
            }
        );
    }

    #[test]
    fn pair_structural_validation() {
        let err = DicharacteristicPair::new(
            triangle(),
            vec![vec![1, 2], vec![2, 3]],
            IntMatrix::from_rows_i64(&[vec![1, 0, -1], vec![0, 1, -1]]),
        )
        .unwrap_err();
        assert_eq!(err, Error::OrientedFacetMismatch);

        let err = DicharacteristicPair::new(
            triangle(),
            vec![vec![1, 1], vec![2, 3], vec![1, 3]],
            IntMatrix::from_rows_i64(&[vec![1, 0, -1], vec![0, 1, -1]]),
        )
        .unwrap_err();
        assert_eq!(err, Error::DegenerateOrientedFacet(vec![1, 1]));

        let err = DicharacteristicPair::new(
            triangle(),
            vec![vec![1, 2], vec![2, 3], vec![1, 3]],
            IntMatrix::from_rows_i64(&[vec![1, 0, -1]]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::MatrixShape { .. }));
    }

    #[test]
    fn odd_minus_pattern_admits_no_structure() {
        // Columns worked out so the cycle minors are (+1, +1, +1, -1).
        let pair = DicharacteristicPair::new(
            square(),
            vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 1]],
            IntMatrix::from_rows_i64(&[vec![1, 0, -1, -1], vec![0, 1, 2, 1]]),
        )
        .unwrap();
        let (omega, _) = pair.validate().unwrap();
        assert_eq!(omega.minus_count(), 1);
        assert!(!pair.admits_complex_structure().unwrap());
    }

    #[test]
    fn any_induced_pattern_admits_structure() {
        let k = square();
        let f = VertexSigns::from_values(&[-1, 1, -1, 1]).unwrap();
        let omega = induced_sign_function(&k, &f).unwrap();
        assert!(realize_up_to_sign(&k, &omega).unwrap().is_some());
    }
}
