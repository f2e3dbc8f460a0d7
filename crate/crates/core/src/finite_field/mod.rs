//! Characters of F_p*, Gauss and Jacobi sums, Greene's binomial
//! coefficients and Gaussian hypergeometric series, traces of Frobenius,
//! and the Jacobsthal sum Σ φ(x³ + 1).
//!
//! Characters are encoded by their exponent against the smallest primitive
//! root of p, so the sum over all characters is a loop over exponents and
//! conjugation is negation. Character sums are evaluated in `f64` and
//! snapped back to exact rationals with [`snap_to_rational`]; the intended
//! working range is p ≤ 1000, where a Gaussian ₃F₂ costs O(p²).

mod character;
mod context;
mod curve;
mod jacobsthal;
mod snap;
mod sums;

pub use character::{char_eval, Character};
pub use context::{is_prime, make_prime_context, odd_primes, PrimeContext, MAX_CONTEXT_PRIME};
pub use curve::{count_points, good_reduction, ono_condition, trace_frobenius, CubicModP};
pub use jacobsthal::{jacobsthal_phi_cubic, represent_a2_3b2};
pub use snap::{default_snap_tolerance, snap_to_rational, SnappedRational};
pub use sums::{ff_binomial, gauss_sum, gaussian_hyp, jacobi_sum, GaussianHypergeometric};

pub(crate) use snap::ratio_text;
