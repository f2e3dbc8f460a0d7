//! Verification harness: every identity becomes a parameterized check,
//! collected into a [`SuiteReport`].
//!
//! Real-analytic identities compare two independent floating chains with a
//! relative tolerance. Finite-field identities are equalities of algebraic
//! numbers; their sides are snapped to exact rationals and compared exactly,
//! so a failure is a hard mismatch rather than a borderline residual.
//!
//! Suites are pure and run in parallel; results keep grid order, so a run is
//! reproducible from its configuration and seed (timings aside).

mod analytic;
mod arithmetic;
mod report;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

pub use analytic::{integral_oracle_checks, verify_corollary, verify_theorem_period, verify_transformations};
pub use arithmetic::{
    gauss_jacobi_checks, gauss_modulus_checks, trace_oracle_checks, verify_greene_inversion,
    verify_greene_inversion_all, verify_jacobsthal, verify_ono, verify_theorem_binomial, verify_twist_relation,
};
pub use report::{
    format_float, round_significant, timed, CheckResult, Params, Quantity, Status, SuiteReport, VerificationReport,
};

use crate::finite_field::odd_primes;
use crate::Rational;

/// Grids, tolerances and seed for a harness run.
#[derive(Debug, Clone, PartialEq)]
pub struct HarnessConfig {
    pub seed: u64,
    /// Upper end of the finite-field prime grids (lower end 5).
    pub primes_max: u64,
    /// Upper end of the prime grid for Ono's evaluation.
    pub ono_primes_max: u64,
    pub lambdas: Vec<f64>,
    pub ono_lambdas: Vec<Rational>,
    pub greene_primes: Vec<u64>,
    pub twists: Vec<i64>,
    pub transformation_zs: Vec<f64>,
    pub random_transformations: usize,
    pub random_integrals: usize,
    /// Relative tolerance for real-analytic identities.
    pub analytic_tolerance: f64,
    pub corollary_tolerance: f64,
    pub transformation_tolerance: f64,
    pub integral_tolerance: f64,
    /// Largest prime for the |G(χ)|² = p sweep.
    pub gauss_modulus_max: u64,
    /// Largest prime for the Gauss–Jacobi sweep, O(p²) Jacobi sums each.
    pub gauss_jacobi_max: u64,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self {
            seed: 20_240_601,
            primes_max: 499,
            ono_primes_max: 199,
            lambdas: vec![0.1, 0.25, 1.0 / 3.0, 0.5, 1.0, 2.0, 3.0, 5.0, 9.0],
            ono_lambdas: vec![Rational::new(1, 3), Rational::new(1, 2), Rational::from_integer(2), Rational::from_integer(3)],
            greene_primes: vec![5, 7, 11, 13, 17, 19, 23],
            twists: vec![-6, -2, 5],
            transformation_zs: vec![0.0, 0.1, 0.25, 0.4, 0.5, 0.75, 0.9],
            random_transformations: 20,
            random_integrals: 50,
            analytic_tolerance: 1e-8,
            corollary_tolerance: 1e-9,
            transformation_tolerance: 1e-9,
            integral_tolerance: 1e-7,
            gauss_modulus_max: 101,
            gauss_jacobi_max: 61,
        }
    }
}

impl HarnessConfig {
    /// Moves every finite-field prime grid's upper end to `n`.
    pub fn with_primes_max(mut self, n: u64) -> Self {
        self.primes_max = n;
        self.ono_primes_max = n;
        self.greene_primes.retain(|&p| p <= n);
        self.gauss_modulus_max = self.gauss_modulus_max.min(n);
        self.gauss_jacobi_max = self.gauss_jacobi_max.min(n);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn primes(&self, hi: u64) -> Vec<u64> {
        odd_primes(5, hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    TheoremPeriod,
    Corollary,
    Ono,
    GreeneInversion,
    TheoremBinomial,
    Transformations,
    Twist,
    Jacobsthal,
    Oracles,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::TheoremPeriod,
        Suite::Corollary,
        Suite::Ono,
        Suite::GreeneInversion,
        Suite::TheoremBinomial,
        Suite::Transformations,
        Suite::Twist,
        Suite::Jacobsthal,
        Suite::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TheoremPeriod => "theorem-period",
            Suite::Corollary => "corollary",
            Suite::Ono => "ono",
            Suite::GreeneInversion => "greene-inversion",
            Suite::TheoremBinomial => "theorem-binomial",
            Suite::Transformations => "transformations",
            Suite::Twist => "twist",
            Suite::Jacobsthal => "jacobsthal",
            Suite::Oracles => "oracles",
        }
    }

    /// Whether the suite draws random instances from the seed.
    pub fn is_seeded(self) -> bool {
        matches!(self, Suite::Transformations | Suite::Oracles)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            format!("unknown suite '{s}' (expected one of: {}, all)", names.join(", "))
        })
    }
}

fn run_ono(config: &HarnessConfig) -> SuiteReport {
    let primes = config.primes(config.ono_primes_max);
    let results = config
        .ono_lambdas
        .par_iter()
        .map(|&l| verify_ono(l, &primes).results)
        .collect::<Vec<_>>()
        .concat();
    SuiteReport::new("ono", None, results)
}

fn run_oracles(config: &HarnessConfig) -> SuiteReport {
    let primes = config.primes(config.primes_max);
    let (traces, (moduli, (jacobi, integrals))) = rayon::join(
        || trace_oracle_checks(&primes, &config.ono_lambdas),
        || {
            rayon::join(
                || gauss_modulus_checks(&odd_primes(3, config.gauss_modulus_max), 1e-8),
                || {
                    rayon::join(
                        || gauss_jacobi_checks(&odd_primes(3, config.gauss_jacobi_max), 1e-7),
                        || integral_oracle_checks(config.seed, config.random_integrals, config.integral_tolerance),
                    )
                },
            )
        },
    );
    SuiteReport::new("oracles", Some(config.seed), [traces, moduli, jacobi, integrals].concat())
}

pub fn run_suite(suite: Suite, config: &HarnessConfig) -> SuiteReport {
    let primes = || config.primes(config.primes_max);
    match suite {
        Suite::TheoremPeriod => verify_theorem_period(&config.lambdas, config.analytic_tolerance),
        Suite::Corollary => verify_corollary(config.corollary_tolerance),
        Suite::Ono => run_ono(config),
        Suite::GreeneInversion => verify_greene_inversion_all(&config.greene_primes),
        Suite::TheoremBinomial => verify_theorem_binomial(&primes()),
        Suite::Transformations => verify_transformations(
            &config.transformation_zs,
            config.transformation_tolerance,
            config.seed,
            config.random_transformations,
        ),
        Suite::Twist => verify_twist_relation(&primes(), &config.twists),
        Suite::Jacobsthal => verify_jacobsthal(&primes()),
        Suite::Oracles => run_oracles(config),
    }
}

/// Every suite, in [`Suite::ALL`] order.
pub fn run_all(config: &HarnessConfig) -> Vec<SuiteReport> {
    Suite::ALL.par_iter().map(|&s| run_suite(s, config)).collect()
}

/// Runs the chosen suites and wraps them in a [`VerificationReport`].
pub fn run(suites: &[Suite], config: &HarnessConfig) -> VerificationReport {
    let reports = suites.par_iter().map(|&s| run_suite(s, config)).collect();
    VerificationReport::new(config.seed, config.primes_max, reports)
}
