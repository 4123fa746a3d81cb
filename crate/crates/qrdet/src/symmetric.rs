//! Elementary symmetric polynomials, Vandermonde products, and the
//! binomial-weighted sigma sums that drive the determinant closed forms.
//!
//! Sigma values are computed by incremental polynomial multiplication —
//! no divisions, so everything stays in the integers and the routines work
//! verbatim modulo any positive integer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::numtheory::{binomial, product_binomials};
use crate::{Error, Result};

/// The full list `σ_0, σ_1, …, σ_n` of elementary symmetric polynomial
/// values of an `n`-element sequence.
///
/// `σ_0 = 1` by convention (reduced modulo `m` in the modular constructor,
/// so mod 1 it is 0 like everything else), and
/// `∏ (t + x_i) = Σ σ_k t^{n−k}` as polynomials in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaVector {
    values: Vec<BigInt>,
}

impl SigmaVector {
    /// Length of the underlying sequence.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    /// `σ_k`; panics if `k > n`.
    pub fn sigma(&self, k: usize) -> &BigInt {
        &self.values[k]
    }

    /// All values `σ_0 ..= σ_n` in order.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// All elementary symmetric values of `x`, by incremental products:
/// appending `x_i` maps `σ_k ← σ_k + x_i σ_{k−1}`. O(n²) ring operations.
pub fn elem_sym_all(x: &[BigInt]) -> SigmaVector {
    let mut values = vec![BigInt::one()];
    for xi in x {
        values.push(BigInt::zero());
        for k in (1..values.len()).rev() {
            let add = xi * &values[k - 1];
            values[k] += add;
        }
    }
    SigmaVector { values }
}

/// Same recurrence with arithmetic modulo `m`; equals [`elem_sym_all`]
/// reduced mod `m`, entry by entry, into `[0, m)`.
pub fn elem_sym_mod(x: &[BigInt], m: u64) -> SigmaVector {
    assert!(m >= 1, "modulus must be positive");
    let mb = BigInt::from(m);
    let mw = m as u128;
    let reduced: Vec<u64> = x
        .iter()
        .map(|v| v.mod_floor(&mb).to_u64().expect("residue fits u64"))
        .collect();
    let mut values = vec![1 % m];
    for &xi in &reduced {
        values.push(0);
        for k in (1..values.len()).rev() {
            values[k] = ((values[k] as u128 + xi as u128 * values[k - 1] as u128) % mw) as u64;
        }
    }
    SigmaVector {
        values: values.into_iter().map(BigInt::from).collect(),
    }
}

/// `∏_{i<j} (x_j − x_i)`; the empty and singleton products are 1.
pub fn vandermonde_product(x: &[BigInt]) -> BigInt {
    let mut acc = BigInt::one();
    for j in 1..x.len() {
        for i in 0..j {
            acc *= &x[j] - &x[i];
        }
    }
    acc
}

/// `Σ_{k=0}^{n} (∏_{r∈[0,n]∖{k}} C(n,r)) · σ_k(x) · σ_{n−k}(y)`.
///
/// The deleted-factor products are obtained as `∏_{r} C(n,r) / C(n,k)` by
/// exact division, asserted remainder-free. Symmetric in `x` and `y`.
pub fn weighted_sigma_sum(x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.is_empty() {
        return Err(Error::EmptySequence);
    }
    let n = x.len();
    let sx = elem_sym_all(x);
    let sy = elem_sym_all(y);
    let all_binomials = product_binomials(n as u64);
    let mut acc = BigInt::zero();
    for k in 0..=n {
        let (coeff, rem) = all_binomials.div_rem(&binomial(n as u64, k as u64));
        assert!(rem.is_zero(), "binomial product division not exact");
        acc += coeff * sx.sigma(k) * sy.sigma(n - k);
    }
    Ok(acc)
}

/// The weighted sigma sum over `x = (0, 1, …, n−1)` and
/// `y = (c, d + c, …, d(n−1) + c)`. Positive whenever `c ≥ 0` and `d > 0`.
pub fn s_sum(n: u64, c: i64, d: i64) -> BigInt {
    assert!(n >= 1);
    let x: Vec<BigInt> = (0..n).map(BigInt::from).collect();
    let y: Vec<BigInt> = (0..n)
        .map(|j| BigInt::from(d as i128 * j as i128 + c as i128))
        .collect();
    weighted_sigma_sum(&x, &y).expect("equal nonempty lengths")
}

/// The weighted sigma sum over `x = (0², 1², …, (n−1)²)` and
/// `y = (d·0², …, d(n−1)²)`. Every value is divisible by `d`, which is
/// asserted here; positive whenever `d > 0`.
pub fn t_sum(n: u64, d: i64) -> BigInt {
    assert!(n >= 1);
    let x: Vec<BigInt> = (0..n).map(|j| BigInt::from(j as u128 * j as u128)).collect();
    let y: Vec<BigInt> = (0..n)
        .map(|j| BigInt::from(d as i128 * (j as i128 * j as i128)))
        .collect();
    let total = weighted_sigma_sum(&x, &y).expect("equal nonempty lengths");
    if d != 0 {
        assert!(
            total.is_multiple_of(&BigInt::from(d)),
            "weighted sum not divisible by its scale"
        );
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn sigmas(values: &[i64]) -> Vec<BigInt> {
        elem_sym_all(&big(values)).values().to_vec()
    }

    #[test]
    fn elem_sym_fixtures() {
        assert_eq!(sigmas(&[]), big(&[1]));
        assert_eq!(sigmas(&[1, 2, 3]), big(&[1, 6, 11, 6]));
        assert_eq!(sigmas(&[1, 4]), big(&[1, 5, 4]));
    }

    #[test]
    fn elem_sym_mod_fixtures() {
        assert_eq!(elem_sym_mod(&big(&[1, 4]), 5).values(), &big(&[1, 0, 4])[..]);
        // exact sigmas are (1, 14, 49, 36); mod 7 the top value is 36 ≡ 1,
        // consistent with σ_n ≡ −(−1)^n for the square sequence mod 7
        assert_eq!(
            elem_sym_mod(&big(&[1, 4, 9]), 7).values(),
            &big(&[1, 0, 0, 1])[..]
        );
        assert_eq!(elem_sym_mod(&big(&[3, -2, 7]), 1).values(), &big(&[0, 0, 0, 0])[..]);
    }

    #[test]
    fn elem_sym_mod_matches_exact_reduction() {
        let xs = big(&[-9, 4, 17, -3, 0, 12]);
        for m in [2u64, 3, 7, 10, 97] {
            let exact = elem_sym_all(&xs);
            let modular = elem_sym_mod(&xs, m);
            let mb = BigInt::from(m);
            for k in 0..=xs.len() {
                assert_eq!(*modular.sigma(k), exact.sigma(k).mod_floor(&mb), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn generating_identity_spot_checks() {
        for xs in [big(&[2, -1, 5]), big(&[0, 0, 3, 7]), big(&[-4])] {
            let s = elem_sym_all(&xs);
            let n = xs.len();
            for t in [0i64, 1, -1, 2] {
                let tb = BigInt::from(t);
                let lhs: BigInt = xs.iter().map(|x| &tb + x).product();
                let rhs: BigInt = (0..=n).map(|k| s.sigma(k) * tb.pow((n - k) as u32)).sum();
                assert_eq!(lhs, rhs, "t={t}");
            }
        }
    }

    #[test]
    fn vandermonde_fixtures() {
        assert_eq!(vandermonde_product(&big(&[])), BigInt::one());
        assert_eq!(vandermonde_product(&big(&[42])), BigInt::one());
        assert_eq!(vandermonde_product(&big(&[0, 1, 2])), BigInt::from(2));
        // consecutive integers give the superfactorial: 1!·2!·3! = 12
        assert_eq!(vandermonde_product(&big(&[0, 1, 2, 3])), BigInt::from(12));
        assert_eq!(vandermonde_product(&big(&[5, 5, 9])), BigInt::zero());
    }

    #[test]
    fn weighted_sigma_sum_fixtures() {
        let w = weighted_sigma_sum(&big(&[0, 1]), &big(&[0, 1])).unwrap();
        assert_eq!(w, BigInt::one());
        let w = weighted_sigma_sum(&big(&[7]), &big(&[-3])).unwrap();
        assert_eq!(w, BigInt::from(4));
        let w = weighted_sigma_sum(&big(&[0, 1, 2]), &big(&[0, 1, 2])).unwrap();
        assert_eq!(w, BigInt::from(36));
        assert!(weighted_sigma_sum(&big(&[1]), &big(&[1, 2])).is_err());
        assert!(weighted_sigma_sum(&big(&[]), &big(&[])).is_err());
    }

    #[test]
    fn s_and_t_sum_fixtures() {
        assert_eq!(s_sum(2, 0, 1), BigInt::one());
        for n in 2..8 {
            assert_eq!(t_sum(n, 0), BigInt::zero(), "n={n}");
        }
        assert_eq!(t_sum(3, 1), BigInt::from(120));
    }

    #[test]
    fn t_sum_divisible_by_scale() {
        for n in 1..=12u64 {
            for d in -6..=6i64 {
                if d == 0 {
                    continue;
                }
                let t = t_sum(n, d);
                assert!(t.is_multiple_of(&BigInt::from(d)), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn factorial_weighted_s_sum_divisibility() {
        // 1!·2!⋯(n−3)! · s_sum(n, c, d) ≡ 0 (mod n²) for 5 ≤ n ≤ 12
        use crate::numtheory::product_factorials;
        for n in 5..=12u64 {
            let prefix = product_factorials(n - 3);
            let n2 = BigInt::from(n * n);
            for c in -4..=4i64 {
                for d in -5..=5i64 {
                    let v = &prefix * s_sum(n, c, d);
                    assert!(v.is_multiple_of(&n2), "n={n} c={c} d={d}");
                }
            }
        }
    }
}
