//! Exact dense matrices: arbitrary-precision integer matrices with
//! fraction-free (Bareiss) elimination and Smith normal form, and rational
//! matrices for rank queries.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Row-major matrix over the integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    /// Rank over the rationals, by fraction-free Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let idx = |i: usize, j: usize| i * cols + j;
        let mut prev = BigInt::one();
        let mut r = 0usize;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let pivot = (r..rows).find(|&i| !a[idx(i, c)].is_zero());
            let Some(p) = pivot else { continue };
            if p != r {
                for j in 0..cols {
                    a.swap(idx(p, j), idx(r, j));
                }
            }
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let num = &a[idx(r, c)] * &a[idx(i, j)] - &a[idx(i, c)] * &a[idx(r, j)];
                    a[idx(i, j)] = num / &prev;
                }
                a[idx(i, c)] = BigInt::zero();
            }
            prev = a[idx(r, c)].clone();
            r += 1;
        }
        r
    }

    /// Exact determinant of a square matrix (Bareiss).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut prev = BigInt::one();
        let mut sign = 1i32;
        for c in 0..n {
            let pivot = (c..n).find(|&i| !a[idx(i, c)].is_zero());
            let Some(p) = pivot else {
                return BigInt::zero();
            };
            if p != c {
                for j in 0..n {
                    a.swap(idx(p, j), idx(c, j));
                }
                sign = -sign;
            }
            for i in c + 1..n {
                for j in c + 1..n {
                    let num = &a[idx(c, c)] * &a[idx(i, j)] - &a[idx(i, c)] * &a[idx(c, j)];
                    a[idx(i, j)] = num / &prev;
                }
                a[idx(i, c)] = BigInt::zero();
            }
            prev = a[idx(c, c)].clone();
        }
        if sign < 0 {
            -a[idx(n - 1, n - 1)].clone()
        } else {
            a[idx(n - 1, n - 1)].clone()
        }
    }

    /// Nonzero diagonal of the Smith normal form: invariant factors
    /// `d_1 | d_2 | ... | d_r` with `r = rank`, all positive.
    pub fn smith_invariant_factors(&self) -> Vec<BigUint> {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let idx = |i: usize, j: usize| i * cols + j;
        let mut t = 0usize;
        let mut diag: Vec<BigInt> = Vec::new();

        'outer: while t < rows && t < cols {
            // Minimal-absolute-value pivot keeps intermediate entries small.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[idx(i, j)].is_zero()
                        && best.is_none_or(|(bi, bj)| {
                            a[idx(i, j)].abs() < a[idx(bi, bj)].abs()
                        })
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            if pi != t {
                for j in 0..cols {
                    a.swap(idx(pi, j), idx(t, j));
                }
            }
            if pj != t {
                for i in 0..rows {
                    a.swap(idx(i, pj), idx(i, t));
                }
            }

            // Clear row and column t; re-pivot whenever a remainder survives.
            loop {
                let mut dirty = false;
                for i in t + 1..rows {
                    if a[idx(i, t)].is_zero() {
                        continue;
                    }
                    let q = &a[idx(i, t)] / &a[idx(t, t)];
                    if !q.is_zero() {
                        for j in t..cols {
                            let v = &a[idx(i, j)] - &q * &a[idx(t, j)];
                            a[idx(i, j)] = v;
                        }
                    }
                    if !a[idx(i, t)].is_zero() {
                        for j in 0..cols {
                            a.swap(idx(i, j), idx(t, j));
                        }
                        dirty = true;
                    }
                }
                for j in t + 1..cols {
                    if a[idx(t, j)].is_zero() {
                        continue;
                    }
                    let q = &a[idx(t, j)] / &a[idx(t, t)];
                    if !q.is_zero() {
                        for i in t..rows {
                            let v = &a[idx(i, j)] - &q * &a[idx(i, t)];
                            a[idx(i, j)] = v;
                        }
                    }
                    if !a[idx(t, j)].is_zero() {
                        for i in 0..rows {
                            a.swap(idx(i, j), idx(i, t));
                        }
                        dirty = true;
                    }
                }
                if !dirty {
                    break;
                }
            }

            // Divisibility: fold in any entry the pivot does not divide yet.
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&a[idx(i, j)] % &a[idx(t, t)]).is_zero() {
                        for jj in 0..cols {
                            let v = &a[idx(t, jj)] + &a[idx(i, jj)];
                            a[idx(t, jj)] = v;
                        }
                        continue 'outer;
                    }
                }
            }

            diag.push(a[idx(t, t)].abs());
            t += 1;
        }
        diag.iter().map(|d| d.to_biguint().expect("abs")).collect()
    }

    /// Rank over the field with `p` elements (`p` an odd or even prime
    /// below 2^31).
    pub fn rank_mod(&self, p: u64) -> usize {
        assert!(p >= 2 && p < 1 << 31, "characteristic out of range");
        let pb = BigInt::from(p);
        let mut a: Vec<u64> = self
            .data
            .iter()
            .map(|v| {
                let r = v.mod_floor(&pb);
                u64::try_from(r.to_biguint().expect("mod_floor is nonneg")).expect("below p")
            })
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        let idx = |i: usize, j: usize| i * cols + j;
        let mut r = 0usize;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| a[idx(i, c)] % p != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    a.swap(idx(piv, j), idx(r, j));
                }
            }
            let inv = mod_inverse(a[idx(r, c)] % p, p);
            for i in r + 1..rows {
                let factor = a[idx(i, c)] % p;
                if factor == 0 {
                    continue;
                }
                let scale = factor * inv % p;
                for j in c..cols {
                    let sub = scale * (a[idx(r, j)] % p) % p;
                    a[idx(i, j)] = (a[idx(i, j)] % p + p - sub) % p;
                }
            }
            r += 1;
        }
        r
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a nonzero mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Row-major matrix over the rationals, for exact rank computations.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            if row.len() != c {
                return Err(Error::InvalidInput("ragged matrix rows".into()));
            }
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|v| BigRational::from(BigInt::from(*v))).collect())
                .collect(),
        )
        .expect("rectangular input")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    /// New matrix keeping the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    /// Rank over the rationals. Rows are scaled to integers first, then
    /// fraction-free elimination runs over the integers.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut int = IntMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for j in 0..self.cols {
                lcm = lcm.lcm(self.get(i, j).denom());
            }
            for j in 0..self.cols {
                let v = self.get(i, j) * BigRational::from(lcm.clone());
                debug_assert!(v.is_integer());
                int.set(i, j, v.to_integer());
            }
        }
        int.rank()
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}
