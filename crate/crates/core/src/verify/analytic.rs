use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::elliptic::{real_period_2f1, real_period_lambda, MAX_SERIES_LAMBDA};
use crate::special::{gamma_real, gauss_2f1_integral, pfq, rational_binomial, EvalOptions, HypergeometricSpec};
use crate::verify::report::{timed, CheckResult, Params, SuiteReport};
use crate::{Rational, Result};

const AGM_TOLERANCE: f64 = 1e-15;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn series(upper: &[Rational], lower: &[Rational], z: f64) -> Result<f64> {
    let spec = HypergeometricSpec::new(upper.to_vec(), lower.to_vec(), z)?;
    Ok(pfq(&spec, &EvalOptions::default())?.value)
}

fn clausen_3f2(z: f64) -> Result<f64> {
    let half = r(1, 2);
    series(&[half, half, half], &[r(1, 1), r(1, 1)], z)
}

/// ₃F₂(½, ½, ½; 1, 1; λ/(1+λ)) against √(1+λ)·Ω(E_λ)²/π² with the period
/// from the AGM, and the AGM period against the ₂F₁ period.
pub fn verify_theorem_period(lambdas: &[f64], tol: f64) -> SuiteReport {
    let results: Vec<Vec<CheckResult>> = lambdas
        .par_iter()
        .map(|&lambda| {
            let params = || Params::new().real("lambda", lambda);
            if !(lambda > 0.0 && lambda <= MAX_SERIES_LAMBDA) {
                let reason = format!("lambda must lie in (0, {MAX_SERIES_LAMBDA}]");
                return vec![
                    CheckResult::skipped("hypergeometric-period", params(), reason.clone()),
                    CheckResult::skipped("period-routes", params(), reason),
                ];
            }
            let main = timed(|| {
                CheckResult::from_result("hypergeometric-period", params(), |p| {
                    let z = lambda / (1.0 + lambda);
                    let lhs = clausen_3f2(z)?;
                    let omega = real_period_lambda(lambda, AGM_TOLERANCE)?.omega;
                    let rhs = (1.0 + lambda).sqrt() * omega * omega / (std::f64::consts::PI.powi(2));
                    Ok(CheckResult::relative("hypergeometric-period", p, lhs, rhs, tol)
                        .with_raw(&[("z", z), ("omega_agm", omega)]))
                })
            });
            let routes = timed(|| {
                CheckResult::from_result("period-routes", params(), |p| {
                    let agm = real_period_lambda(lambda, AGM_TOLERANCE)?.omega;
                    let series = real_period_2f1(lambda)?.omega;
                    Ok(CheckResult::relative("period-routes", p, agm, series, tol))
                })
            });
            vec![main, routes]
        })
        .collect();
    SuiteReport::new("theorem-period", None, results.into_iter().flatten().collect()).with_note(
        "only the real part of the complex period relation is checked; the imaginary part is untested",
    )
}

/// The two special values of Ω(E_{1/3}): 2√2/(3π)·Ω = binom(1/3, 1/2) and
/// √2·Ω = Γ(1/3)Γ(1/2)/Γ(5/6), plus the ratio of the right-hand sides.
pub fn verify_corollary(tol: f64) -> SuiteReport {
    use std::f64::consts::{PI, SQRT_2};
    let params = || Params::new().with("lambda", "1/3");
    let omega = || real_period_lambda(1.0 / 3.0, AGM_TOLERANCE).map(|p| p.omega);
    let gamma_product = || -> Result<f64> {
        Ok(gamma_real(1.0 / 3.0)? * gamma_real(0.5)? / gamma_real(5.0 / 6.0)?)
    };
    let results = vec![
        timed(|| {
            CheckResult::from_result("binomial-value", params(), |p| {
                let omega = omega()?;
                let lhs = 2.0 * SQRT_2 / (3.0 * PI) * omega;
                let rhs = rational_binomial(r(1, 3), r(1, 2))?;
                Ok(CheckResult::relative("binomial-value", p, lhs, rhs, tol).with_raw(&[("omega_agm", omega)]))
            })
        }),
        timed(|| {
            CheckResult::from_result("gamma-value", params(), |p| {
                let omega = omega()?;
                let lhs = SQRT_2 * omega;
                Ok(CheckResult::relative("gamma-value", p, lhs, gamma_product()?, tol).with_raw(&[("omega_agm", omega)]))
            })
        }),
        timed(|| {
            CheckResult::from_result("right-side-ratio", params(), |p| {
                let ratio = gamma_product()? / rational_binomial::<f64>(r(1, 3), r(1, 2))?;
                Ok(CheckResult::relative("right-side-ratio", p, ratio, 1.5 * PI, tol))
            })
        }),
    ];
    SuiteReport::new("corollary", None, results)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Transformation {
    Quadratic,
    Square,
    Pfaff,
}

impl Transformation {
    fn name(self) -> &'static str {
        match self {
            Transformation::Quadratic => "quadratic",
            Transformation::Square => "square",
            Transformation::Pfaff => "pfaff",
        }
    }
}

/// Parameters `(a, b, c)`; `c` is only used by the Pfaff form.
#[derive(Debug, Clone, Copy)]
struct Instance {
    kind: Transformation,
    a: Rational,
    b: Rational,
    c: Rational,
    z: f64,
}

impl Instance {
    fn params(&self, origin: &str) -> Params {
        let base = Params::new().with("origin", origin).real("z", self.z).with("a", self.a).with("b", self.b);
        if self.kind == Transformation::Pfaff {
            base.with("c", self.c)
        } else {
            base
        }
    }

    /// Why the instance is outside the tested domain, if it is.
    fn excluded(&self) -> Option<String> {
        if !(0.0..=0.9).contains(&self.z) {
            return Some("z outside [0, 0.9]".into());
        }
        if self.kind == Transformation::Pfaff && self.z >= 0.5 {
            return Some("z/(z - 1) leaves the open unit disc for z >= 1/2".into());
        }
        None
    }

    /// Both sides of the transformation.
    fn sides(&self) -> Result<(f64, f64)> {
        let (a, b, c, z) = (self.a, self.b, self.c, self.z);
        let half = r(1, 2);
        match self.kind {
            Transformation::Quadratic => {
                let lower = a + b + half;
                let lhs = series(&[a, b], &[lower], z)?;
                let rhs = series(&[a * 2, b * 2], &[lower], 0.5 - 0.5 * (1.0 - z).sqrt())?;
                Ok((lhs, rhs))
            }
            Transformation::Square => {
                // general form of the squaring identity; a = b = 1/4 is the
                // ₃F₂(½, ½, ½; 1, 1) case
                let lhs = series(&[a * 2, b * 2, a + b], &[(a + b) * 2, a + b + half], z)?;
                let f = series(&[a, b], &[a + b + half], z)?;
                Ok((lhs, f * f))
            }
            Transformation::Pfaff => {
                let lhs = series(&[a, b], &[c], z)?;
                let a_f = *a.numer() as f64 / *a.denom() as f64;
                let rhs = (1.0 - z).powf(-a_f) * series(&[a, c - b], &[c], z / (z - 1.0))?;
                Ok((lhs, rhs))
            }
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng, max_numerator: i64) -> Rational {
    const DENOMINATORS: [i64; 5] = [1, 2, 3, 4, 6];
    let d = DENOMINATORS[rng.gen_range(0..DENOMINATORS.len())];
    Rational::new(rng.gen_range(1..=max_numerator * d), d * 4)
}

fn random_instances(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kinds = [Transformation::Quadratic, Transformation::Square, Transformation::Pfaff];
    (0..count)
        .map(|i| {
            let kind = kinds[i % kinds.len()];
            let a = random_rational(&mut rng, 3);
            let b = random_rational(&mut rng, 3);
            let c = random_rational(&mut rng, 6);
            let z = match kind {
                Transformation::Pfaff => rng.gen_range(0.0..0.45),
                _ => rng.gen_range(0.0..=0.9),
            };
            Instance { kind, a, b, c, z }
        })
        .collect()
}

/// The quadratic, squaring and Pfaff-type transformations at a = b = ¼,
/// c = 1 on the `zs` grid, plus `random` seeded instances with other
/// parameters.
pub fn verify_transformations(zs: &[f64], tol: f64, seed: u64, random: usize) -> SuiteReport {
    let quarter = r(1, 4);
    let mut instances: Vec<(Instance, &str)> = Vec::new();
    for kind in [Transformation::Quadratic, Transformation::Square, Transformation::Pfaff] {
        for &z in zs {
            instances.push((Instance { kind, a: quarter, b: quarter, c: r(1, 1), z }, "grid"));
        }
    }
    instances.extend(random_instances(seed, random).into_iter().map(|i| (i, "random")));

    let results = instances
        .par_iter()
        .map(|(inst, origin)| {
            let name = inst.kind.name();
            if let Some(reason) = inst.excluded() {
                return CheckResult::skipped(name, inst.params(origin), reason);
            }
            timed(|| {
                CheckResult::from_result(name, inst.params(origin), |p| {
                    let (lhs, rhs) = inst.sides()?;
                    Ok(CheckResult::relative(name, p, lhs, rhs, tol))
                })
            })
        })
        .collect();
    SuiteReport::new("transformations", Some(seed), results)
        .with_note("the transformations are tested on z in [0, 0.9] only (Pfaff form: z < 1/2); the boundary is untested")
}

/// Random admissible ₂F₁ instances (c > b > 0, 0 ≤ z ≤ 0.9): the series
/// against the Euler integral.
pub fn integral_oracle_checks(seed: u64, count: usize, tol: f64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances: Vec<(Rational, Rational, Rational, f64)> = (0..count)
        .map(|_| {
            let a = Rational::new(rng.gen_range(-24..=24), 12);
            let b = Rational::new(rng.gen_range(1..=24), 12);
            let c = b + Rational::new(rng.gen_range(1..=36), 12);
            (a, b, c, rng.gen_range(0.0..=0.9))
        })
        .collect();
    instances
        .par_iter()
        .map(|&(a, b, c, z)| {
            let params = Params::new().with("a", a).with("b", b).with("c", c).real("z", z);
            timed(|| {
                CheckResult::from_result("series-vs-integral", params, |p| {
                    let f = |q: Rational| *q.numer() as f64 / *q.denom() as f64;
                    let lhs = series(&[a, b], &[c], z)?;
                    let rhs = gauss_2f1_integral(f(a), f(b), f(c), z)?;
                    Ok(CheckResult::absolute("series-vs-integral", p, lhs, rhs, tol))
                })
            })
        })
        .collect()
}
