//! Dense integer matrices with exact and modular determinants.
//!
//! Determinants are computed three ways, matched to the modulus structure:
//! fraction-free (Bareiss) elimination over the integers, field elimination
//! modulo a prime, and exact-then-reduce for composite moduli, whose
//! non-invertible pivots rule out direct elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::numtheory::{is_prime, mod_inv};
use crate::{Error, Result};

/// A dense square matrix of arbitrary-precision integers.
///
/// `index_origin` records whether row/column labels start at 0 or 1; storage
/// is always 0-based, the origin is bookkeeping for builders and reports.
/// Matrices are never mutated after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    index_origin: u8,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a `dim × dim` matrix by evaluating `f` at each labeled
    /// position `(i, j)` with `origin ≤ i, j ≤ origin + dim − 1`.
    pub fn from_fn<F>(dim: usize, index_origin: u8, mut f: F) -> Result<Self>
    where
        F: FnMut(u64, u64) -> BigInt,
    {
        if dim == 0 {
            return Err(Error::InvalidParam("matrix dimension must be ≥ 1".into()));
        }
        if index_origin > 1 {
            return Err(Error::InvalidParam("index origin must be 0 or 1".into()));
        }
        let o = index_origin as u64;
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim as u64 {
            for j in 0..dim as u64 {
                entries.push(f(o + i, o + j));
            }
        }
        Ok(IntMatrix {
            dim,
            index_origin,
            entries,
        })
    }

    /// Builds a matrix from explicit rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParam(
                "rows must form a nonempty square array".into(),
            ));
        }
        Ok(IntMatrix {
            dim,
            index_origin: 0,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for tests and small fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index_origin(&self) -> u8 {
        self.index_origin
    }

    /// Entry at storage position `(row, col)`, both 0-based.
    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut entries = Vec::with_capacity(self.dim * self.dim);
        for j in 0..self.dim {
            for i in 0..self.dim {
                entries.push(self.entry(i, j).clone());
            }
        }
        IntMatrix {
            dim: self.dim,
            index_origin: self.index_origin,
            entries,
        }
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate value is a minor of the input, so entries grow
/// polynomially instead of exponentially, and every division performed is
/// exact — this is asserted on each step. Pivoting takes the first nonzero
/// entry scanning down the column, so the elimination path is deterministic.
/// Returns 0 for singular matrices.
pub fn det_bareiss(m: &IntMatrix) -> BigInt {
    let n = m.dim;
    let mut a = m.entries.clone();
    let mut negated = false;
    let mut prev_pivot = BigInt::one();
    for k in 0..n {
        let pivot_row = match (k..n).find(|&i| !a[i * n + k].is_zero()) {
            Some(row) => row,
            None => return BigInt::zero(),
        };
        if pivot_row != k {
            for j in 0..n {
                a.swap(pivot_row * n + j, k * n + j);
            }
            negated = !negated;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                let (q, r) = num.div_rem(&prev_pivot);
                assert!(r.is_zero(), "inexact division in fraction-free elimination");
                a[i * n + j] = q;
            }
        }
        prev_pivot = a[k * n + k].clone();
    }
    let det = std::mem::take(&mut a[n * n - 1]);
    if negated {
        -det
    } else {
        det
    }
}

/// Determinant modulo an odd prime, by field elimination with inverse pivots.
///
/// Entries are reduced into `[0, p)` first; the result equals
/// `det_bareiss(m) mod p`.
pub fn det_mod_prime(m: &IntMatrix, p: u64) -> Result<u64> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let n = m.dim;
    let pb = BigInt::from(p);
    let mut a: Vec<u64> = m
        .entries
        .iter()
        .map(|e| e.mod_floor(&pb).to_u64().expect("residue fits u64"))
        .collect();
    let pw = p as u128;
    let mut det: u64 = 1;
    let mut negated = false;
    for k in 0..n {
        let pivot_row = match (k..n).find(|&i| a[i * n + k] != 0) {
            Some(row) => row,
            None => return Ok(0),
        };
        if pivot_row != k {
            for j in k..n {
                a.swap(pivot_row * n + j, k * n + j);
            }
            negated = !negated;
        }
        let pivot = a[k * n + k];
        det = (det as u128 * pivot as u128 % pw) as u64;
        let inv = mod_inv(pivot, p);
        for i in k + 1..n {
            if a[i * n + k] == 0 {
                continue;
            }
            let factor = a[i * n + k] as u128 * inv as u128 % pw;
            for j in k..n {
                let sub = factor * a[k * n + j] as u128 % pw;
                a[i * n + j] = ((a[i * n + j] as u128 + pw - sub) % pw) as u64;
            }
        }
    }
    if negated && det != 0 {
        det = p - det;
    }
    Ok(det)
}

/// Determinant modulo an arbitrary positive integer.
///
/// Computed as the exact integer determinant reduced afterwards: composite
/// moduli have non-invertible pivots, and at the matrix sizes used here the
/// exact computation is affordable.
pub fn det_mod(m: &IntMatrix, modulus: u64) -> u64 {
    assert!(modulus >= 1, "modulus must be positive");
    det_bareiss(m)
        .mod_floor(&BigInt::from(modulus))
        .to_u64()
        .expect("residue fits u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(n: usize) -> IntMatrix {
        IntMatrix::from_fn(n, 0, |i, j| BigInt::from((i == j) as i64)).unwrap()
    }

    #[test]
    fn bareiss_fixtures() {
        assert_eq!(det_bareiss(&identity(3)), BigInt::one());
        let m = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 4]]).unwrap();
        assert_eq!(det_bareiss(&m), BigInt::from(-1));
        let m = IntMatrix::from_i64_rows(&[&[0, 1, 4], &[1, 4, 9], &[4, 9, 16]]).unwrap();
        assert_eq!(det_bareiss(&m), BigInt::from(-8));
    }

    #[test]
    fn bareiss_singular_and_zero_pivot_paths() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(det_bareiss(&m), BigInt::zero());
        // leading zero forces a row swap
        let m = IntMatrix::from_i64_rows(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]]).unwrap();
        assert_eq!(det_bareiss(&m), BigInt::from(-3));
        // zero column
        let m = IntMatrix::from_i64_rows(&[&[0, 1], &[0, 7]]).unwrap();
        assert_eq!(det_bareiss(&m), BigInt::zero());
    }

    #[test]
    fn det_mod_prime_fixtures() {
        assert_eq!(det_mod_prime(&identity(4), 7).unwrap(), 1);
        let m = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 4]]).unwrap();
        assert_eq!(det_mod_prime(&m, 5).unwrap(), 4);
        let sc = IntMatrix::from_i64_rows(&[&[-1, 1], &[1, 1]]).unwrap();
        assert_eq!(det_mod_prime(&sc, 5).unwrap(), 3);
        assert!(det_mod_prime(&m, 6).is_err());
        assert!(det_mod_prime(&m, 2).is_err());
    }

    #[test]
    fn det_mod_fixtures() {
        let equal_rows = IntMatrix::from_i64_rows(&[&[3, 5], &[3, 5]]).unwrap();
        for modulus in 1..10 {
            assert_eq!(det_mod(&equal_rows, modulus), 0);
        }
        let m = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 4]]).unwrap();
        assert_eq!(det_mod(&m, 6), 5);
        assert_eq!(det_mod(&m, 1), 0);
    }

    #[test]
    fn matrix_validation() {
        assert!(IntMatrix::from_fn(0, 0, |_, _| BigInt::zero()).is_err());
        assert!(IntMatrix::from_fn(2, 2, |_, _| BigInt::zero()).is_err());
        assert!(IntMatrix::from_rows(vec![vec![BigInt::one()], vec![]]).is_err());
        let m = IntMatrix::from_fn(2, 1, |i, j| BigInt::from(10 * i + j)).unwrap();
        assert_eq!(m.index_origin(), 1);
        assert_eq!(*m.entry(0, 0), BigInt::from(11));
        assert_eq!(*m.entry(1, 0), BigInt::from(21));
    }

    #[test]
    fn transpose_metadata_and_entries() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]).unwrap();
        let t = m.transpose();
        assert_eq!(*t.entry(0, 1), BigInt::from(3));
        assert_eq!(t.dim(), 2);
    }
}
