//! Number-theoretic scalars: Jacobi/Legendre symbols, deterministic
//! primality, power-sum residues, and factorial building blocks.
//!
//! Everything here is a pure function of its arguments. Symbols are exact,
//! primality is deterministic (never probabilistic), and the factorial
//! products are arbitrary-precision, so verification verdicts built on top
//! are reproducible bit for bit.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Value of a Jacobi or Legendre symbol: −1, 0, or +1.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SymbolValue {
    MinusOne,
    Zero,
    One,
}

impl SymbolValue {
    /// The symbol as a plain integer in {−1, 0, 1}.
    pub fn as_i64(self) -> i64 {
        match self {
            SymbolValue::MinusOne => -1,
            SymbolValue::Zero => 0,
            SymbolValue::One => 1,
        }
    }

    fn from_i8(v: i8) -> Self {
        match v {
            -1 => SymbolValue::MinusOne,
            0 => SymbolValue::Zero,
            1 => SymbolValue::One,
            _ => unreachable!("symbol out of range"),
        }
    }

    /// `self` raised to a nonnegative power, using multiplicativity.
    pub fn pow(self, exp: u64) -> Self {
        match self {
            _ if exp == 0 => SymbolValue::One,
            SymbolValue::MinusOne if exp % 2 == 1 => SymbolValue::MinusOne,
            SymbolValue::MinusOne => SymbolValue::One,
            other => other,
        }
    }
}

impl core::ops::Neg for SymbolValue {
    type Output = Self;
    fn neg(self) -> Self {
        match self {
            SymbolValue::MinusOne => SymbolValue::One,
            SymbolValue::Zero => SymbolValue::Zero,
            SymbolValue::One => SymbolValue::MinusOne,
        }
    }
}

impl core::ops::Mul for SymbolValue {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        match (self, rhs) {
            (SymbolValue::Zero, _) | (_, SymbolValue::Zero) => SymbolValue::Zero,
            (a, b) if a == b => SymbolValue::One,
            _ => SymbolValue::MinusOne,
        }
    }
}

impl core::fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.as_i64())
    }
}

/// A positive odd modulus, the lower argument of a Jacobi symbol.
///
/// Construction enforces oddness and positivity, so [`jacobi`] itself is
/// total. `n = 1` and `n = 3` are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddModulus(BigUint);

impl OddModulus {
    pub fn new(n: BigUint) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::NonPositiveModulus);
        }
        if n.is_even() {
            return Err(Error::EvenModulus);
        }
        Ok(OddModulus(n))
    }

    pub fn from_u64(n: u64) -> Result<Self> {
        Self::new(BigUint::from(n))
    }

    /// Accepts any positive odd integer, rejecting zero and negatives.
    pub fn from_bigint(n: &BigInt) -> Result<Self> {
        if !n.is_positive() {
            return Err(Error::NonPositiveModulus);
        }
        Self::new(n.magnitude().clone())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

/// Computes the Jacobi symbol `(a/n)`.
///
/// Returns 0 exactly when `gcd(a, n) > 1`, and 1 for `n = 1`. Negative `a`
/// is handled through the `(−1/n) = (−1)^((n−1)/2)` factor; the remaining
/// computation is the standard reduce-and-flip recurrence, factoring out
/// twos with the `(2/n) = (−1)^((n²−1)/8)` rule and applying quadratic
/// reciprocity to the odd parts.
pub fn jacobi(a: &BigInt, n: &OddModulus) -> SymbolValue {
    let modulus = &n.0;
    if modulus.is_one() {
        return SymbolValue::One;
    }
    let mut sign = 1i8;
    if a.is_negative() && (modulus & BigUint::from(3u8)) == BigUint::from(3u8) {
        // (−1/n) = −1 for n ≡ 3 (mod 4)
        sign = -sign;
    }
    let reduced = a.magnitude() % modulus;
    let raw = match (reduced.to_u64(), modulus.to_u64()) {
        (Some(a64), Some(n64)) => jacobi_reduced_u64(a64, n64),
        _ => jacobi_reduced_biguint(reduced, modulus.clone()),
    };
    SymbolValue::from_i8(sign * raw)
}

/// `(a/n)` for machine-sized arguments; `n` must be odd and positive.
pub fn jacobi_i64(a: i64, n: u64) -> Result<SymbolValue> {
    let symbol = jacobi_u64(a.unsigned_abs(), n)?;
    // (−1/n) = −1 for n ≡ 3 (mod 4)
    Ok(if a < 0 && n % 4 == 3 { -symbol } else { symbol })
}

/// `(a/n)` for nonnegative machine-sized arguments.
pub fn jacobi_u64(a: u64, n: u64) -> Result<SymbolValue> {
    if n == 0 {
        return Err(Error::NonPositiveModulus);
    }
    if n % 2 == 0 {
        return Err(Error::EvenModulus);
    }
    if n == 1 {
        return Ok(SymbolValue::One);
    }
    Ok(SymbolValue::from_i8(jacobi_reduced_u64(a % n, n)))
}

/// Core recurrence on machine words. Pre: n odd, n > 1, a < n.
fn jacobi_reduced_u64(mut a: u64, mut n: u64) -> i8 {
    if a == 0 {
        return 0; // gcd(0, n) = n > 1
    }
    let mut t = 1i8;
    while a != 0 {
        let twos = a.trailing_zeros();
        a >>= twos;
        if twos % 2 == 1 {
            let r = n % 8;
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        core::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Same recurrence for moduli beyond the machine range. Pre: n odd, n > 1, a < n.
fn jacobi_reduced_biguint(mut a: BigUint, mut n: BigUint) -> i8 {
    if a.is_zero() {
        return 0;
    }
    let three = BigUint::from(3u8);
    let mut t = 1i8;
    while !a.is_zero() {
        let twos = a.trailing_zeros().expect("a is nonzero");
        a >>= twos;
        if twos % 2 == 1 {
            let r = (&n % 8u8).to_u8().unwrap();
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        if (&a & &three) == three && (&n & &three) == three {
            t = -t;
        }
        core::mem::swap(&mut a, &mut n);
        a %= &n;
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

/// Legendre symbol `(a/p)` by Euler's criterion: `a^((p−1)/2) mod p`.
///
/// Independent of [`jacobi`]'s recurrence, which makes it the oracle for the
/// symbol at prime moduli. Rejects `p` that is not an odd prime.
pub fn legendre_euler(a: &BigInt, p: u64) -> Result<SymbolValue> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let r = a
        .mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits u64");
    let e = mod_exp(r, (p - 1) / 2, p);
    Ok(match e {
        0 => SymbolValue::Zero,
        1 => SymbolValue::One,
        x if x == p - 1 => SymbolValue::MinusOne,
        _ => unreachable!("Euler criterion out of range for prime modulus"),
    })
}

/// `base^exp mod modulus` with 128-bit intermediates. `modulus` must be nonzero.
pub fn mod_exp(base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus != 0, "zero modulus");
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = (base as u128) % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo a prime `p`, by Fermat's little theorem.
pub fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(is_prime(p) && a % p != 0);
    mod_exp(a % p, p - 2, p)
}

/// Deterministic primality for the full `u64` range.
///
/// Trial division by a few small primes, then Miller–Rabin with the fixed
/// witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, which decides
/// primality exactly for every `n < 2^64`. No randomness is involved.
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for q in SMALL {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in SMALL {
        let mut x = mod_exp(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes in the inclusive range `[lo, hi]`, ascending.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// `Σ_{i=1}^{p−1} i^k mod p`, summed term by term.
///
/// For prime `p` the result is `p − 1` when `(p−1) | k` (including `k = 0`,
/// where the sum is literally `p − 1`) and `0` otherwise.
pub fn power_sum_mod(p: u64, k: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut acc: u64 = 0;
    for i in 1..p {
        acc = (acc + mod_exp(i, k, p)) % p;
    }
    Ok(acc)
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// `∏_{k=1}^{n} k!` (the superfactorial).
pub fn product_factorials(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for k in 1..=n {
        fact *= k;
        acc *= &fact;
    }
    acc
}

/// `∏_{k=1}^{n} (2k−1)!`.
pub fn product_odd_factorials(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut fact = BigInt::one(); // (2k−1)! as k advances
    for k in 1..=n {
        if k > 1 {
            fact *= (2 * k - 2) * (2 * k - 1);
        }
        acc *= &fact;
    }
    acc
}

/// Binomial coefficient `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `∏_{r=0}^{n} C(n, r)`.
///
/// Cross-checked on every call against the factorial form
/// `(n!)^{n+1} / (∏_{k=0}^{n} k!)²`.
pub fn product_binomials(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for r in 0..=n {
        acc *= binomial(n, r);
    }
    let sf = product_factorials(n);
    let (alt, rem) = factorial(n).pow(n as u32 + 1).div_rem(&(&sf * &sf));
    assert!(rem.is_zero() && alt == acc, "binomial product identity failed");
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(a: i64, n: u64) -> i64 {
        jacobi_i64(a, n).unwrap().as_i64()
    }

    /// Oracle: (a/n) as the product of Legendre symbols over the prime
    /// factorization of n, each evaluated by Euler's criterion.
    fn jacobi_by_factorization(a: i64, mut n: u64) -> i64 {
        if n == 1 {
            return 1;
        }
        let mut acc = 1i64;
        let mut q = 3;
        while n > 1 {
            while q * q <= n && n % q != 0 {
                q += 2;
            }
            let p = if q * q > n { n } else { q };
            while n % p == 0 {
                acc *= legendre_euler(&BigInt::from(a), p).unwrap().as_i64();
                n /= p;
            }
        }
        acc
    }

    #[test]
    fn jacobi_fixture_values() {
        for n in [1u64, 3, 9, 15, 999] {
            assert_eq!(j(1, n), 1);
        }
        assert_eq!(j(6, 3), 0);
        assert_eq!(j(2, 15), 1);
        assert_eq!(jacobi_by_factorization(2, 15), 1);
        assert_eq!(j(3, 7), -1);
        assert_eq!(jacobi_by_factorization(3, 7), -1);
        assert_eq!(j(-1, 3), -1);
        assert_eq!(j(0, 1), 1);
        assert_eq!(j(0, 9), 0);
    }

    #[test]
    fn jacobi_matches_factorization_oracle() {
        for n in (1..200u64).step_by(2) {
            for a in -30i64..30 {
                assert_eq!(j(a, n), jacobi_by_factorization(a, n), "({a}/{n})");
            }
        }
    }

    #[test]
    fn jacobi_rejects_bad_moduli() {
        assert_eq!(jacobi_i64(2, 4), Err(Error::EvenModulus));
        assert_eq!(jacobi_i64(2, 0), Err(Error::NonPositiveModulus));
        assert!(jacobi_u64(2, 6).is_err());
        assert!(OddModulus::from_u64(10).is_err());
        assert!(OddModulus::from_bigint(&BigInt::from(-3)).is_err());
    }

    #[test]
    fn jacobi_u64_handles_values_beyond_i64() {
        // largest u64 prime; symbols agree with Euler's criterion route
        let p = 18_446_744_073_709_551_557u64;
        for a in [p - 1, p - 2, u64::MAX, 2, 3] {
            let direct = jacobi_u64(a, p).unwrap();
            let euler = legendre_euler(&BigInt::from(a), p).unwrap();
            assert_eq!(direct, euler, "a={a}");
        }
        assert_eq!(jacobi_u64(0, p).unwrap(), SymbolValue::Zero);
    }

    #[test]
    fn jacobi_bigint_path_agrees_with_u64_path() {
        // Force the generic path through a modulus wider than u64, built so
        // that its value reduces the question to a known small case:
        // (a / n) with n = small odd prime times nothing is not expressible
        // here, so instead check internal consistency of the two reducers.
        for n in (3..400u64).step_by(2) {
            for a in 0..n {
                let wide = jacobi_reduced_biguint(BigUint::from(a), BigUint::from(n));
                assert_eq!(jacobi_reduced_u64(a, n), wide, "({a}/{n})");
            }
        }
    }

    #[test]
    fn legendre_euler_fixtures() {
        let e = |a: i64, p: u64| legendre_euler(&BigInt::from(a), p).unwrap().as_i64();
        assert_eq!(e(4, 7), 1);
        assert_eq!(e(3, 7), -1);
        assert_eq!(e(0, 5), 0);
        assert!(legendre_euler(&BigInt::from(3), 15).is_err());
        assert!(legendre_euler(&BigInt::from(3), 2).is_err());
    }

    #[test]
    fn jacobi_agrees_with_euler_at_all_primes_below_1000() {
        for p in primes_in(3, 1000) {
            for a in 0..p {
                assert_eq!(
                    jacobi_i64(a as i64, p).unwrap(),
                    legendre_euler(&BigInt::from(a), p).unwrap(),
                    "({a}/{p})"
                );
            }
        }
    }

    #[test]
    fn jacobi_two_sign_rule() {
        // (2/p) = (−1)^((p²−1)/8)
        for p in primes_in(3, 1000) {
            let expect = if p % 8 == 1 || p % 8 == 7 { 1 } else { -1 };
            assert_eq!(j(2, p), expect, "(2/{p})");
        }
    }

    #[test]
    fn half_factorial_symbol_equals_two_symbol() {
        // For p ≡ 1 (mod 4) and n = (p−1)/2: (n!/p) = (2/p).
        for p in primes_in(5, 1000) {
            if p % 4 != 1 {
                continue;
            }
            let n = (p - 1) / 2;
            let mut fact = 1u64;
            for i in 2..=n {
                fact = fact * i % p;
            }
            assert_eq!(j(fact as i64, p), j(2, p), "p={p}");
        }
    }

    #[test]
    fn is_prime_fixtures() {
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(15)); // 2n−1 at n = 8
        assert!(is_prime(2_147_483_647)); // 2^31 − 1
        assert!(!is_prime(u64::MAX)); // 3 | 2^64 − 1
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
    }

    #[test]
    fn is_prime_matches_trial_division() {
        let mut sieve = vec![true; 20_000];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..sieve.len() {
            if sieve[i] {
                for m in (i * i..sieve.len()).step_by(i) {
                    sieve[m] = false;
                }
            }
        }
        for (n, &expect) in sieve.iter().enumerate() {
            assert_eq!(is_prime(n as u64), expect, "n={n}");
        }
    }

    #[test]
    fn power_sum_fixtures() {
        assert_eq!(power_sum_mod(5, 4).unwrap(), 4);
        assert_eq!(power_sum_mod(5, 3).unwrap(), 0);
        assert_eq!(power_sum_mod(3, 2).unwrap(), 2);
        assert_eq!(power_sum_mod(5, 0).unwrap(), 4); // k = 0 sits in the (p−1) | k branch
        assert!(power_sum_mod(6, 2).is_err());
    }

    #[test]
    fn power_sum_dichotomy_below_50() {
        for p in primes_in(3, 50) {
            for k in 0..=3 * (p - 1) {
                let got = power_sum_mod(p, k).unwrap();
                let want = if k % (p - 1) == 0 { p - 1 } else { 0 };
                assert_eq!(got, want, "p={p} k={k}");
            }
        }
    }

    #[test]
    fn factorial_products() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(product_factorials(3), BigInt::from(12));
        assert_eq!(product_odd_factorials(1), BigInt::one());
        assert_eq!(product_odd_factorials(3), BigInt::from(6 * 120)); // 1!·3!·5!
        assert_eq!(product_binomials(2), BigInt::from(2));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        // identity check inside product_binomials runs on every call
        product_binomials(20);
    }

    #[test]
    fn symbol_value_algebra() {
        use SymbolValue::*;
        assert_eq!(MinusOne * MinusOne, One);
        assert_eq!(MinusOne * Zero, Zero);
        assert_eq!(-MinusOne, One);
        assert_eq!(MinusOne.pow(0), One);
        assert_eq!(MinusOne.pow(3), MinusOne);
        assert_eq!(Zero.pow(2), Zero);
        assert_eq!(Zero.pow(0), One);
        assert_eq!(One.to_string(), "1");
        assert_eq!(MinusOne.to_string(), "-1");
    }

    #[test]
    fn mod_exp_and_inverse() {
        assert_eq!(mod_exp(3, 3, 7), 6);
        assert_eq!(mod_exp(5, 0, 7), 1);
        assert_eq!(mod_exp(7, 100, 1), 0);
        for p in [5u64, 7, 101, 997] {
            for a in 1..p.min(50) {
                assert_eq!(mod_inv(a, p) * a % p, 1, "a={a} p={p}");
            }
        }
    }
}
