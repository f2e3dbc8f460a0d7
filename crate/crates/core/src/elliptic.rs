//! Weierstrass curves over an exact (or floating) coefficient ring, and the
//! real period of `E_λ: y² = (x − 1)(x² + λ)`.

use std::fmt;

use num_traits::{FromPrimitive, Num, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::special::{agm, pfq, EvalOptions, HypergeometricSpec};
use crate::{BigRational, Rational};

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve<T> {
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub a4: T,
    pub a6: T,
}

impl<T: Num + Clone> WeierstrassCurve<T> {
    pub fn new(a1: T, a2: T, a3: T, a4: T, a6: T) -> Self {
        Self { a1, a2, a3, a4, a6 }
    }

    /// `y² = x³ + a·x² + b·x + c`.
    pub fn short(a: T, b: T, c: T) -> Self {
        Self::new(T::zero(), a, T::zero(), b, c)
    }

    pub fn b2(&self) -> T {
        self.a1.clone() * self.a1.clone() + four::<T>() * self.a2.clone()
    }

    pub fn b4(&self) -> T {
        two::<T>() * self.a4.clone() + self.a1.clone() * self.a3.clone()
    }

    pub fn b6(&self) -> T {
        self.a3.clone() * self.a3.clone() + four::<T>() * self.a6.clone()
    }

    pub fn b8(&self) -> T {
        let (a1, a2, a3, a4, a6) =
            (self.a1.clone(), self.a2.clone(), self.a3.clone(), self.a4.clone(), self.a6.clone());
        a1.clone() * a1.clone() * a6.clone() + four::<T>() * a2.clone() * a6 - a1 * a3.clone() * a4.clone()
            + a2 * a3.clone() * a3
            - a4.clone() * a4
    }

    /// Δ = −b2²·b8 − 8·b4³ − 27·b6² + 9·b2·b4·b6.
    pub fn discriminant(&self) -> T {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        let eight = four::<T>() * two::<T>();
        let nine = eight.clone() + T::one();
        let twenty_seven = nine.clone() * (two::<T>() + T::one());
        T::zero() - b2.clone() * b2.clone() * b8 - eight * b4.clone() * b4.clone() * b4.clone()
            - twenty_seven * b6.clone() * b6.clone()
            + nine * b2 * b4 * b6
    }

    /// Whether `a1 = a3 = 0`, i.e. the curve is `y² = cubic(x)`.
    pub fn is_short(&self) -> bool {
        self.a1.is_zero() && self.a3.is_zero()
    }
}

impl<T: Num + Clone + PartialOrd> WeierstrassCurve<T> {
    /// Number of real roots of the cubic `4x³ + b2·x² + 2b4·x + b6`, read off
    /// the sign of Δ (negative: one root, positive: three). `None` if Δ = 0.
    pub fn real_root_count(&self) -> Option<usize> {
        let delta = self.discriminant();
        if delta.is_zero() {
            None
        } else if delta < T::zero() {
            Some(1)
        } else {
            Some(3)
        }
    }
}

impl<T: fmt::Display> fmt::Display for WeierstrassCurve<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}, {}]", self.a1, self.a2, self.a3, self.a4, self.a6)
    }
}

fn two<T: Num>() -> T {
    T::one() + T::one()
}

fn four<T: Num>() -> T {
    two::<T>() * two::<T>()
}

/// `E_λ` expanded to `y² = x³ − x² + λx − λ`.
pub fn to_lambda_weierstrass<T: Num + Clone + fmt::Display>(lambda: T) -> Result<WeierstrassCurve<T>> {
    if lambda.is_zero() || (lambda.clone() + T::one()).is_zero() {
        return Err(Error::ExcludedLambda(lambda.to_string()));
    }
    Ok(WeierstrassCurve::short(T::zero() - T::one(), lambda.clone(), T::zero() - lambda))
}

/// `E_λ` with exact rational λ.
pub fn lambda_curve(lambda: Rational) -> Result<WeierstrassCurve<BigRational>> {
    to_lambda_weierstrass(to_big(lambda))
}

pub(crate) fn to_big(r: Rational) -> BigRational {
    BigRational::new((*r.numer()).into(), (*r.denom()).into())
}

/// Whether `t` is a nonzero square-free integer.
pub fn is_square_free(t: i64) -> bool {
    if t == 0 {
        return false;
    }
    let mut n = t.unsigned_abs();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return false;
            }
        }
        d += 1;
    }
    true
}

/// The t-quadratic twist `y² = x³ + a·t·x² + b·t²·x + c·t³` of
/// `y² = x³ + a·x² + b·x + c`.
pub fn quadratic_twist<T: Num + Clone + FromPrimitive>(
    curve: &WeierstrassCurve<T>,
    t: i64,
) -> Result<WeierstrassCurve<T>> {
    if !curve.is_short() {
        return Err(Error::NotShortForm);
    }
    if !is_square_free(t) {
        return Err(Error::NotSquareFree(t));
    }
    let t = T::from_i64(t).ok_or(Error::NotSquareFree(t))?;
    Ok(WeierstrassCurve::short(
        curve.a2.clone() * t.clone(),
        curve.a4.clone() * t.clone() * t.clone(),
        curve.a6.clone() * t.clone() * t.clone() * t,
    ))
}

/// `E_{1/3}` and the model `y² = x³ − 6³` it is carried to by
/// `(x, y) ↦ (x/9 + 1/3, y/27)`; the latter is the −6 twist of `y² = x³ + 1`.
pub fn e_one_third_pair() -> (WeierstrassCurve<BigRational>, WeierstrassCurve<BigRational>) {
    let e = lambda_curve(Rational::new(1, 3)).expect("1/3 is admissible");
    let zero = BigRational::from_integer(0.into());
    let model = WeierstrassCurve::short(zero.clone(), zero, BigRational::from_integer((-216).into()));
    (e, model)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PeriodMethod {
    Agm,
    Hypergeometric,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodResult<T> {
    pub omega: T,
    pub method: PeriodMethod,
}

/// Largest λ for which the ₂F₁ route is summed directly (argument 0.9).
pub const MAX_SERIES_LAMBDA: f64 = 9.0;

/// Real period of `E_λ` for λ > 0 from the AGM:
/// Ω = 2π / AGM(2√b, √(2b + 2)) with b = √(1 + λ).
///
/// The formula is the one for `y² = 4(x − 1)(x² + λ)`, the model reached by
/// `y ↦ y/2`; it applies because the cubic then has a single real root.
pub fn real_period_lambda<T: Real>(lambda: T, tol: T) -> Result<PeriodResult<T>> {
    if !(lambda > T::zero()) || !lambda.is_finite() {
        return Err(Error::Domain(format!("real period needs lambda > 0, got {lambda}")));
    }
    let two = T::lit(2.0);
    let b = (T::one() + lambda).sqrt();
    let m = agm(two * b.sqrt(), (two * b + two).sqrt(), tol)?;
    Ok(PeriodResult { omega: two * T::PI() / m, method: PeriodMethod::Agm })
}

/// Real period of `E_λ` from the series route,
/// Ω = (1 + λ)^{−1/4} · π · ₂F₁(1/4, 1/4; 1; λ/(1 + λ)), for 0 < λ ≤ 9.
pub fn real_period_2f1<T: Real>(lambda: T) -> Result<PeriodResult<T>> {
    if !(lambda > T::zero()) || lambda > T::lit(MAX_SERIES_LAMBDA) {
        return Err(Error::Domain(format!(
            "series period supports 0 < lambda <= {MAX_SERIES_LAMBDA}, got {lambda}"
        )));
    }
    let quarter = Rational::new(1, 4);
    let z = lambda / (T::one() + lambda);
    let spec = HypergeometricSpec::gauss(quarter, quarter, Rational::from_integer(1), z)?;
    let series = pfq(&spec, &EvalOptions::default())?;
    let omega = (T::one() + lambda).powf(T::lit(-0.25)) * T::PI() * series.value;
    Ok(PeriodResult { omega, method: PeriodMethod::Hypergeometric })
}

/// Whether λ is admissible (not 0 or −1) as an exact rational.
pub fn lambda_admissible(lambda: Rational) -> bool {
    !lambda.is_zero() && !(lambda + Rational::from_integer(1)).is_zero()
}

/// Real roots of `4(x − 1)(x² + λ)`, from the sign of Δ(E_λ).
pub fn lambda_real_root_count(lambda: Rational) -> Option<usize> {
    let big = to_big(lambda);
    let curve = WeierstrassCurve::short(
        BigRational::from_integer((-1).into()),
        big.clone(),
        -big,
    );
    curve.real_root_count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        to_big(Rational::new(n, d))
    }

    #[test]
    fn cuspidal_cubic_is_singular() {
        let c: WeierstrassCurve<BigRational> = WeierstrassCurve::short(q(0, 1), q(0, 1), q(0, 1));
        assert!(c.discriminant().is_zero());
    }

    #[test]
    fn lambda_expansion() {
        let c = lambda_curve(Rational::new(1, 3)).unwrap();
        assert_eq!(c, WeierstrassCurve::new(q(0, 1), q(-1, 1), q(0, 1), q(1, 3), q(-1, 3)));
        assert!(!c.discriminant().is_zero());
        let c1 = lambda_curve(Rational::new(1, 1)).unwrap();
        assert_eq!(c1, WeierstrassCurve::new(q(0, 1), q(-1, 1), q(0, 1), q(1, 1), q(-1, 1)));
        assert!(matches!(lambda_curve(Rational::new(0, 1)), Err(Error::ExcludedLambda(_))));
        assert!(matches!(lambda_curve(Rational::new(-1, 1)), Err(Error::ExcludedLambda(_))));
    }

    #[test]
    fn discriminant_vanishes_exactly_at_excluded_lambdas() {
        // bypass the guard: Δ(E_λ) = -16·λ²(λ + 1)·... must vanish at λ = 0, -1
        for (lam, singular) in [(0, true), (-1, true), (1, false), (2, false), (-2, false)] {
            let l = q(lam, 1);
            let c = WeierstrassCurve::short(q(-1, 1), l.clone(), -l);
            assert_eq!(c.discriminant().is_zero(), singular, "lambda = {lam}");
        }
    }

    #[test]
    fn discriminant_of_x3_minus_216() {
        let (_, model) = e_one_third_pair();
        assert_eq!(model.discriminant(), q(-20_155_392, 1));
        assert_eq!(model.discriminant(), q(-432 * 216 * 216, 1));
    }

    #[test]
    fn float_curves_share_the_formulas() {
        let c: WeierstrassCurve<f64> = WeierstrassCurve::short(0.0, 0.0, -216.0);
        assert_eq!(c.discriminant(), -20_155_392.0);
    }

    #[test]
    fn twists() {
        let base = WeierstrassCurve::short(q(0, 1), q(0, 1), q(1, 1));
        assert_eq!(quadratic_twist(&base, 1).unwrap(), base);
        let (_, model) = e_one_third_pair();
        assert_eq!(quadratic_twist(&base, -6).unwrap(), model);
        assert!(matches!(quadratic_twist(&base, 12), Err(Error::NotSquareFree(12))));
        assert!(matches!(quadratic_twist(&base, 0), Err(Error::NotSquareFree(0))));
        let long = WeierstrassCurve::new(q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(1, 1));
        assert!(matches!(quadratic_twist(&long, 5), Err(Error::NotShortForm)));
    }

    #[test]
    fn twist_scales_discriminant_by_t6() {
        let e = lambda_curve(Rational::new(1, 3)).unwrap();
        for t in [-6i64, -2, 3, 5, 7] {
            let twisted = quadratic_twist(&e, t).unwrap();
            let t6 = q(t.pow(6), 1);
            assert_eq!(twisted.discriminant(), t6 * e.discriminant());
        }
    }

    #[test]
    fn square_free() {
        assert!(is_square_free(1));
        assert!(is_square_free(-6));
        assert!(is_square_free(30));
        assert!(!is_square_free(18));
        assert!(!is_square_free(-4));
        assert!(!is_square_free(0));
    }

    #[test]
    fn one_real_root_for_positive_lambda() {
        for lam in [Rational::new(1, 3), Rational::new(1, 1), Rational::new(9, 1)] {
            assert_eq!(lambda_real_root_count(lam), Some(1));
        }
        // λ = -4: (x - 1)(x - 2)(x + 2) has three real roots
        assert_eq!(lambda_real_root_count(Rational::new(-4, 1)), Some(3));
        assert_eq!(lambda_real_root_count(Rational::new(0, 1)), None);
    }

    #[test]
    fn period_at_one_third() {
        // Γ(1/3)Γ(1/2)/(√2·Γ(5/6)), mpmath: 2.97447742540217556146948555028690937622
        let agm_route = real_period_lambda(1.0f64 / 3.0, 1e-15).unwrap();
        assert_eq!(agm_route.method, PeriodMethod::Agm);
        assert!((agm_route.omega - 2.974_477_425_402_175_6).abs() < 1e-13);
        let series_route = real_period_2f1(1.0 / 3.0).unwrap();
        assert_eq!(series_route.method, PeriodMethod::Hypergeometric);
        assert!((series_route.omega - agm_route.omega).abs() < 1e-9 * agm_route.omega);
    }

    #[test]
    fn period_routes_agree() {
        for (lam, tol) in [(1.0f64, 1e-9), (3.0, 1e-9), (9.0, 1e-7)] {
            let a = real_period_lambda(lam, 1e-15).unwrap().omega;
            let b = real_period_2f1(lam).unwrap().omega;
            assert!(((a - b) / a).abs() < tol, "lambda = {lam}: {a} vs {b}");
        }
    }

    #[test]
    fn period_decreases_in_lambda() {
        let grid = [0.1, 0.5, 1.0, 2.0, 5.0];
        let omegas: Vec<f64> = grid.iter().map(|&l| real_period_lambda(l, 1e-15).unwrap().omega).collect();
        assert!(omegas.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn period_domain() {
        assert!(real_period_lambda(0.0, 1e-12).is_err());
        assert!(real_period_lambda(-0.5, 1e-12).is_err());
        assert!(real_period_2f1(0.0).is_err());
        assert!(real_period_2f1(9.5).is_err());
    }

    #[test]
    fn single_precision_period() {
        let omega = real_period_lambda(1.0f32 / 3.0, 1e-7).unwrap().omega;
        assert!((omega - 2.974_477_4).abs() < 1e-5);
    }
}
