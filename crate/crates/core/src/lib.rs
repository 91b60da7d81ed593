//! Exact and floating-point machinery for the transformation laws of the
//! Dedekind eta function and the Jacobi theta function θ₁.
//!
//! The crate is organized in four layers:
//!
//! - [`exact`]: integer/rational arithmetic — gcd, Jacobi symbols, Bernoulli
//!   polynomials, Dedekind sums, and exact root-of-unity phases ([`ExactPhase`]),
//!   including both closed forms of the eta multiplier ε(A).
//! - [`modular`]: 2×2 integer matrices of determinant 1, their Möbius action on
//!   the upper half-plane, and the (H, h, k) change of variables.
//! - [`qseries`]: floating-point evaluation of η, θ₁ (product and sine-series
//!   routes), the four-variable Λ log-series with its Bernoulli correction g₀,
//!   truncated Fourier sums, and the principal square-root automorphy factor.
//! - [`verify`]: an identity-checking harness that evaluates both sides of every
//!   supported identity on seeded samples and exhaustive small sweeps, producing
//!   structured [`verify::VerificationReport`] values.

pub mod exact;
pub mod modular;
pub mod qseries;
pub mod verify;

pub use exact::{
    bernoulli_b1, bernoulli_b2, dedekind_sum, eta_character_dedekind, eta_character_rademacher,
    gcd, jacobi_symbol, theta1_multiplier, ExactPhase, Rational,
};
pub use modular::{HHkFrame, ModularMatrix, UpperHalfPoint};
pub use qseries::{
    eta, eta_translate, fourier_f_partial, g0, lambda_series, principal_sqrt_factor,
    theta1_product, theta1_series, theta1_translate, LambdaParams, SeriesConfig,
};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("modulus must be a positive odd integer, got {0}")]
    BadModulus(i64),
    #[error("k must be positive, got {0}")]
    NonPositiveK(i64),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("determinant must be 1, got {0}")]
    BadDeterminant(i128),
    #[error("operation requires a matrix with c > 0")]
    RequiresPositiveC,
    #[error("point must lie in the open upper half-plane")]
    NotUpperHalf,
    #[error("series did not reach the tail bound {tail_eps} within {max_terms} terms")]
    MaxTermsExceeded { tail_eps: f64, max_terms: usize },
    #[error("parameter guard violated: {0}")]
    GuardViolation(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
