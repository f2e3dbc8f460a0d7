//! Real-analytic kernel: generalized hypergeometric series, the Euler
//! integral for ₂F₁, the gamma function and the arithmetic-geometric mean.

mod agm;
mod gamma;
mod hypergeometric;
mod quadrature;

pub use agm::agm;
pub use gamma::{gamma_real, rational_binomial};
pub use hypergeometric::{pfq, pfq_term, EvalOptions, EvalResult, HypergeometricSpec, SeriesTerms};
pub use quadrature::{adaptive_gauss_kronrod, gauss_2f1_integral};
