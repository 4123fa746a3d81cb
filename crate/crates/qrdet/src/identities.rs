//! Builders for the four determinant families and evaluators for their
//! closed-form identities.
//!
//! The four families, in the naming used by the checkers and the CLI:
//!
//! - `THM11` — entries `(i² + dj²)·(i²+dj² / n)` for odd `n`, indexed from 0
//!   to `(n−1)/2`; the family whose determinant is divisible by `n`.
//! - `A_N` — entries `(i + dj + c)^n`, indexed `0..n−1`.
//! - `B_N` — entries `(i² + dj²)^n`, indexed `0..n−1`.
//! - `SC` — pure symbol entries `(i² + dj² + c / p)`, indexed `1..(p−1)/2`.
//!
//! Symbol arguments are passed unreduced; the Jacobi symbol is invariant
//! under reduction mod `n`, so this matches reducing first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactla::IntMatrix;
use crate::numtheory::{
    factorial, is_prime, jacobi, jacobi_i64, product_binomials, product_factorials,
    product_odd_factorials, OddModulus, SymbolValue,
};
use crate::symmetric::{s_sum, t_sum, vandermonde_product, weighted_sigma_sum};
use crate::{Error, Result};

/// Whether the triangular number `n(n−1)/2` is odd.
pub(crate) fn half_square_parity_odd(n: u64) -> bool {
    matches!(n % 4, 2 | 3)
}

/// The four matrix families.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Thm11,
    An,
    Bn,
    Sc,
}

/// Validated parameters selecting one matrix of one family.
///
/// The smart constructors enforce the per-family invariants: `THM11` needs
/// odd `n ≥ 3`; `A_N`/`B_N` accept any `n ≥ 1` (their theorem-level claims
/// need more, but the builder does not care); `SC` needs an odd prime `p`
/// dividing neither `c` nor `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    family: Family,
    n_or_p: u64,
    c: i64,
    d: i64,
}

impl FamilyParams {
    pub fn thm11(n: u64, d: i64) -> Result<Self> {
        if n < 3 || n % 2 == 0 {
            return Err(Error::InvalidParam(format!(
                "family THM11 needs odd n ≥ 3, got n={n}"
            )));
        }
        Ok(FamilyParams { family: Family::Thm11, n_or_p: n, c: 0, d })
    }

    pub fn a_n(n: u64, c: i64, d: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParam("family A_N needs n ≥ 1".into()));
        }
        Ok(FamilyParams { family: Family::An, n_or_p: n, c, d })
    }

    pub fn b_n(n: u64, d: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParam("family B_N needs n ≥ 1".into()));
        }
        Ok(FamilyParams { family: Family::Bn, n_or_p: n, c: 0, d })
    }

    pub fn sc(p: u64, c: i64, d: i64) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if c.rem_euclid(p as i64) == 0 || d.rem_euclid(p as i64) == 0 {
            return Err(Error::InvalidParam(format!(
                "family SC needs p ∤ c and p ∤ d, got p={p} c={c} d={d}"
            )));
        }
        Ok(FamilyParams { family: Family::Sc, n_or_p: p, c, d })
    }

    pub fn family(&self) -> Family {
        self.family
    }
}

/// Builds the matrix selected by `params`.
pub fn build_family(params: &FamilyParams) -> IntMatrix {
    let (n, c, d) = (params.n_or_p, params.c, params.d);
    match params.family {
        Family::Thm11 => symbol_weighted_matrix(n, d),
        Family::An => {
            let dim = n as usize;
            IntMatrix::from_fn(dim, 0, |i, j| {
                let base = i as i128 + d as i128 * j as i128 + c as i128;
                BigInt::from(base).pow(n as u32)
            })
            .expect("valid dimensions")
        }
        Family::Bn => {
            let dim = n as usize;
            IntMatrix::from_fn(dim, 0, |i, j| {
                let base = i as i128 * i as i128 + d as i128 * (j as i128 * j as i128);
                BigInt::from(base).pow(n as u32)
            })
            .expect("valid dimensions")
        }
        Family::Sc => symbol_matrix(n, c, d),
    }
}

/// The `THM11` matrix: entry `(i² + dj²)·(i²+dj² / n)` for
/// `0 ≤ i, j ≤ (n−1)/2`. Exposed to checkers for the odd `n ≥ 3` range.
pub(crate) fn symbol_weighted_matrix(n: u64, d: i64) -> IntMatrix {
    let modulus = OddModulus::from_u64(n).expect("odd positive n");
    let dim = ((n - 1) / 2 + 1) as usize;
    IntMatrix::from_fn(dim, 0, |i, j| {
        let v = i as i128 * i as i128 + d as i128 * (j as i128 * j as i128);
        let vb = BigInt::from(v);
        let s = jacobi(&vb, &modulus);
        vb * s.as_i64()
    })
    .expect("valid dimensions")
}

/// The pure symbol matrix `[(i² + dj² + c / p)]` for `1 ≤ i, j ≤ (p−1)/2`.
///
/// Used by the `SC` family (`p ∤ c`) and, with `c = 0`, by the companion
/// determinant whose symbol/vanishing dichotomy is checked separately.
pub(crate) fn symbol_matrix(p: u64, c: i64, d: i64) -> IntMatrix {
    let modulus = OddModulus::from_u64(p).expect("odd prime p");
    let dim = ((p - 1) / 2) as usize;
    IntMatrix::from_fn(dim, 1, |i, j| {
        let v = i as i128 * i as i128 + d as i128 * (j as i128 * j as i128) + c as i128;
        BigInt::from(jacobi(&BigInt::from(v), &modulus).as_i64())
    })
    .expect("valid dimensions")
}

/// The matrix `[(x_i + y_j)^n]` with `n` the common length.
pub fn power_matrix(x: &[BigInt], y: &[BigInt]) -> Result<IntMatrix> {
    check_pair(x, y)?;
    let n = x.len();
    IntMatrix::from_fn(n, 1, |i, j| {
        (&x[i as usize - 1] + &y[j as usize - 1]).pow(n as u32)
    })
}

/// The matrix `[P(x_i + y_j)]` for a polynomial given by its full
/// coefficient list in ascending degree order; `deg P ≤ n − 1` is required.
pub fn poly_matrix(coeffs: &[BigInt], x: &[BigInt], y: &[BigInt]) -> Result<IntMatrix> {
    check_pair(x, y)?;
    let n = x.len();
    if coeffs.len() > n {
        return Err(Error::InvalidParam(format!(
            "polynomial degree must be < {n}, got {} coefficients",
            coeffs.len()
        )));
    }
    IntMatrix::from_fn(n, 1, |i, j| {
        let z = &x[i as usize - 1] + &y[j as usize - 1];
        let mut acc = BigInt::zero();
        for coeff in coeffs.iter().rev() {
            acc = acc * &z + coeff;
        }
        acc
    })
}

fn check_pair(x: &[BigInt], y: &[BigInt]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    if x.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(())
}

/// Closed form for `det [(x_i + y_j)^n]`:
/// `(−1)^{n(n−1)/2} · ∏_{i<j}(x_j−x_i)(y_j−y_i) · Σ_k (∏_{r≠k} C(n,r)) σ_k(x) σ_{n−k}(y)`.
pub fn thm31_rhs(x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
    check_pair(x, y)?;
    let n = x.len() as u64;
    let mut acc = vandermonde_product(x) * vandermonde_product(y) * weighted_sigma_sum(x, y)?;
    if half_square_parity_odd(n) {
        acc = -acc;
    }
    Ok(acc)
}

/// Closed form for `det [P(x_i + y_j)]` with `deg P ≤ n − 1`:
/// `a^n · ∏_{k=0}^{n−1} C(n−1,k) · ∏_{i<j} (x_i − x_j)(y_j − y_i)`,
/// where `a` is the coefficient of `z^{n−1}` in `P` (zero degenerates to 0).
pub fn eqp_rhs(a_top: &BigInt, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
    check_pair(x, y)?;
    let n = x.len();
    let mut acc = a_top.pow(n as u32) * product_binomials(n as u64 - 1);
    for j in 1..n {
        for i in 0..j {
            acc *= (&x[i] - &x[j]) * (&y[j] - &y[i]);
        }
    }
    Ok(acc)
}

/// Closed form for the `A_N` determinant:
/// `(−d)^{n(n−1)/2} · S(n) · (∏_{j=1}^{n−1} j!)²` with `S(n) = s_sum(n, c, d)`.
pub fn a_closed(n: u64, c: i64, d: i64) -> BigInt {
    let sf = product_factorials(n - 1);
    let e = n * (n - 1) / 2;
    BigInt::from(-d).pow(e as u32) * s_sum(n, c, d) * &sf * &sf
}

/// Closed form for the `B_N` determinant:
/// `(−d)^{n(n−1)/2} · T(n) · ((n−1)!)² · (∏_{j=1}^{n−1} (2j−1)!)²`.
pub fn b_closed(n: u64, d: i64) -> BigInt {
    let f = factorial(n - 1);
    let of = product_odd_factorials(n - 1);
    let e = n * (n - 1) / 2;
    BigInt::from(-d).pow(e as u32) * t_sum(n, d) * &f * &f * &of * &of
}

/// An exact rational in lowest terms with positive denominator.
///
/// Holds the normalized determinants before their integrality is
/// established; `is_integer` is exactly `denominator == 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactRatio {
    numerator: BigInt,
    denominator: BigInt,
}

impl ExactRatio {
    pub fn new(numerator: BigInt, denominator: BigInt) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        let g = numerator.gcd(&denominator);
        let mut numerator = numerator / &g;
        let mut denominator = denominator / &g;
        if denominator.is_negative() {
            numerator = -numerator;
            denominator = -denominator;
        }
        ExactRatio { numerator, denominator }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn is_integer(&self) -> bool {
        self.denominator.is_one()
    }

    /// The integer value, when the ratio is one.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.is_integer().then_some(&self.numerator)
    }
}

impl core::fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// `a_n · d^{−n(n−1)/2} / ((n−2)! · n · ∏_{k=1}^{n} k!)` as an exact ratio.
///
/// Integrality is asserted by the theorem only for `n > 2`; `n = 2`
/// produces a genuine quarter-integer family.
pub fn normalize_a(n: u64, c: i64, d: i64) -> Result<ExactRatio> {
    check_normalizer_params(n, d)?;
    let e = n * (n - 1) / 2;
    let den = BigInt::from(d).pow(e as u32)
        * factorial(n - 2)
        * BigInt::from(n)
        * product_factorials(n);
    Ok(ExactRatio::new(a_closed(n, c, d), den))
}

/// `b_n · d^{−n(n−1)/2} / (2 ∏_{k=1}^{n} k!(2k−1)!)` as an exact ratio.
pub fn normalize_b(n: u64, d: i64) -> Result<ExactRatio> {
    check_normalizer_params(n, d)?;
    let e = n * (n - 1) / 2;
    let den = BigInt::from(d).pow(e as u32)
        * 2
        * product_factorials(n)
        * product_odd_factorials(n);
    Ok(ExactRatio::new(b_closed(n, d), den))
}

fn check_normalizer_params(n: u64, d: i64) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParam("normalizers need d ≠ 0".into()));
    }
    if n < 2 {
        return Err(Error::InvalidParam("normalizers need n ≥ 2".into()));
    }
    Ok(())
}

/// The four-case table for the symbol of the `SC` determinant, dispatching
/// on `(c/p)`, `(−c/p)` and `(d/p)`. Requires `p ∤ cd`.
pub fn sc_prediction(p: u64, c: i64, d: i64) -> Result<SymbolValue> {
    check_sc_params(p, c, d)?;
    let cp = jacobi_i64(c, p)?;
    let dp = jacobi_i64(d, p)?;
    let minus_cp = jacobi_i64(-c, p)?;
    Ok(match (cp, dp) {
        (SymbolValue::One, SymbolValue::MinusOne) => SymbolValue::One,
        (SymbolValue::MinusOne, SymbolValue::MinusOne) => jacobi_i64(-1, p)?,
        (_, SymbolValue::One) if minus_cp == SymbolValue::One => jacobi_i64(-2, p)?,
        (_, SymbolValue::One) => jacobi_i64(-6, p)?,
        _ => unreachable!("p ∤ cd leaves no other case"),
    })
}

/// The one-line formula for the same symbol:
/// `(−1)^{n(n−1)/2} (d/p)^{n(n−1)/2} · ((c/p) − (−1)^n (1 + (d/p)) / p)`
/// with `n = (p−1)/2`. The inner argument lands in `{±1, ±3}` and its
/// symbol is evaluated directly. Must agree with [`sc_prediction`].
pub fn sc_formula(p: u64, c: i64, d: i64) -> Result<SymbolValue> {
    check_sc_params(p, c, d)?;
    let n = (p - 1) / 2;
    let cp = jacobi_i64(c, p)?.as_i64();
    let dp = jacobi_i64(d, p)?;
    let n_sign = if n % 2 == 1 { -1 } else { 1 };
    let inner = cp - n_sign * (1 + dp.as_i64());
    let mut result = dp.pow(u64::from(half_square_parity_odd(n))) * jacobi_i64(inner, p)?;
    if half_square_parity_odd(n) {
        result = -result;
    }
    Ok(result)
}

fn check_sc_params(p: u64, c: i64, d: i64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if c.rem_euclid(p as i64) == 0 || d.rem_euclid(p as i64) == 0 {
        return Err(Error::InvalidParam(format!("p = {p} divides c·d")));
    }
    Ok(())
}
