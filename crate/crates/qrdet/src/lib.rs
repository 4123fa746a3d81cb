//! Exact arithmetic for determinants built from quadratic residues.
//!
//! The crate computes, in exact integer arithmetic, the determinant families
//! that arise from Jacobi-symbol weighted matrices, checks them against their
//! closed forms, and packages every check as a reproducible pass/fail record.
//!
//! Module map:
//!
//! - [`numtheory`] — Jacobi/Legendre symbols, deterministic primality,
//!   power-sum residues, factorial products.
//! - [`exactla`] — dense integer matrices with fraction-free and modular
//!   determinants.
//! - [`symmetric`] — elementary symmetric polynomials, Vandermonde products,
//!   and the binomial-weighted sigma sums behind the closed forms.
//! - [`identities`] — matrix builders for the determinant families and
//!   evaluators for their closed-form identities.
//! - [`verify`] — theorem-level checkers producing [`verify::VerificationRecord`]s.

pub mod exactla;
pub mod identities;
pub mod numtheory;
pub mod symmetric;
pub mod verify;

/// Errors reported by constructors and checkers on invalid inputs.
///
/// All computational routines are total on validated inputs; errors only
/// arise from violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus must be odd")]
    EvenModulus,
    #[error("modulus must be positive")]
    NonPositiveModulus,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("sequences must be nonempty")]
    EmptySequence,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}

/// Crate-wide result alias.
pub type Result<T, E = Error> = core::result::Result<T, E>;
