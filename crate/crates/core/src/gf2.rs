//! Dense GF(2) linear systems on up to 65 unknowns, stored as bit rows.
//!
//! Row layout: bit `j` is the coefficient of unknown `j`, bit `ncols` the
//! right-hand side.

use num_bigint::BigUint;
use num_traits::One;

/// The system `A x = b` over GF(2).
#[derive(Clone, Debug)]
pub struct Gf2System {
    ncols: usize,
    rows: Vec<u128>,
}

impl Gf2System {
    pub fn new(ncols: usize) -> Self {
        assert!(ncols < 127, "too many unknowns for a u128 row");
        Gf2System {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Adds the row `Σ coeff_j x_j = rhs`.
    pub fn push_row(&mut self, coeffs: u128, rhs: bool) {
        debug_assert_eq!(coeffs >> self.ncols, 0);
        self.rows.push(coeffs | (rhs as u128) << self.ncols);
    }

    fn eliminate(rows: &mut [u128], ncols: usize) -> (usize, bool) {
        let mut rank = 0;
        for col in 0..ncols {
            let Some(pivot) = (rank..rows.len()).find(|&i| rows[i] >> col & 1 == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && *row >> col & 1 == 1 {
                    *row ^= pivot_row;
                }
            }
            rank += 1;
        }
        let consistent = rows[rank..].iter().all(|&r| r >> ncols & 1 == 0);
        (rank, consistent)
    }

    /// Rank of the coefficient matrix and consistency of the full system.
    pub fn rank_and_consistency(&self) -> (usize, bool) {
        let mut rows = self.rows.clone();
        Self::eliminate(&mut rows, self.ncols)
    }

    pub fn is_consistent(&self) -> bool {
        self.rank_and_consistency().1
    }

    /// Number of solutions: `2^(ncols - rank)` when consistent, else 0.
    pub fn solution_count(&self) -> BigUint {
        let (rank, consistent) = self.rank_and_consistency();
        if consistent {
            BigUint::one() << (self.ncols - rank)
        } else {
            BigUint::ZERO
        }
    }

    /// The lexicographically least solution bit vector `(x_0, ..., x_{n-1})`
    /// with `0 < 1`, or `None` when inconsistent. Found greedily: each
    /// unknown in turn is pinned to 0 if the system stays consistent.
    pub fn lex_min_solution(&self) -> Option<Vec<bool>> {
        if !self.is_consistent() {
            return None;
        }
        let mut rows = self.rows.clone();
        let mut assignment = Vec::with_capacity(self.ncols);
        for j in 0..self.ncols {
            let mut trial = rows.clone();
            trial.push(1 << j); // x_j = 0
            let (_, ok) = Self::eliminate(&mut trial, self.ncols);
            let bit = !ok;
            rows.push(1u128 << j | (bit as u128) << self.ncols);
            assignment.push(bit);
        }
        debug_assert!({
            let mut check = rows.clone();
            Self::eliminate(&mut check, self.ncols).1
        });
        Some(assignment)
    }
}
