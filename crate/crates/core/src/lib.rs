//! Classical hypergeometric series, real periods of the curves
//! `E_λ: y² = (x − 1)(x² + λ)`, and their finite-field counterparts:
//! Gauss and Jacobi sums, Greene's Gaussian hypergeometric series and
//! traces of Frobenius.
//!
//! The real-analytic layer ([`special`], [`elliptic`]) is generic over the
//! floating-point scalar through [`Real`]; curve coefficients are generic
//! over any exact ring and default to [`BigRational`]. The finite-field
//! layer ([`finite_field`]) works with machine integers and `f64` complex
//! character values that are snapped back to exact rationals.
//!
//! [`verify`] turns each identity into a parameterized check producing a
//! [`verify::SuiteReport`].

pub mod elliptic;
pub mod error;
pub mod finite_field;
pub mod scalar;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use num_rational::{BigRational, Ratio};

/// Exact rational with machine-integer numerator and denominator.
pub type Rational = Ratio<i64>;

/// Complex value of a character sum.
pub type ComplexValue = Complex64;

pub type HypergeometricSpec64 = special::HypergeometricSpec<f64>;
pub type HypergeometricSpec32 = special::HypergeometricSpec<f32>;
pub type EvalOptions64 = special::EvalOptions<f64>;
pub type EvalOptions32 = special::EvalOptions<f32>;
pub type EvalResult64 = special::EvalResult<f64>;
pub type EvalResult32 = special::EvalResult<f32>;
pub type PeriodResult64 = elliptic::PeriodResult<f64>;
pub type PeriodResult32 = elliptic::PeriodResult<f32>;

/// Weierstrass curve with exact, arbitrary-size rational coefficients.
pub type RationalCurve = elliptic::WeierstrassCurve<BigRational>;
/// Weierstrass curve with floating-point coefficients.
pub type RealCurve = elliptic::WeierstrassCurve<f64>;
