use crate::error::{Error, Result};
use crate::scalar::{sin_pi, Real};
use crate::Rational;

const LANCZOS_G: f64 = 7.0;

/// Lanczos partial-fraction coefficients for g = 7, n = 9, such that for
/// z > -1/2
///
/// Γ(z + 1) ≈ √(2π) · t^(z + 1/2) · e^(−t) · (c₀ + Σ_{k=1}^{8} c_k / (z + k)),
/// t = z + g + 1/2.
///
/// Regenerate with `scripts/lanczos_coefficients.py` (mpmath, 60 digits).
const LANCZOS_COEFFICIENTS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_9,
    771.323_428_777_653_08,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_570_9e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ on the core interval (1/2, 3/2].
fn lanczos_core<T: Real>(x: T) -> T {
    let z = x - T::one();
    let mut series = T::lit(LANCZOS_COEFFICIENTS[0]);
    for (k, &c) in LANCZOS_COEFFICIENTS.iter().enumerate().skip(1) {
        series += T::lit(c) / (z + T::lit(k as f64));
    }
    let t = z + T::lit(LANCZOS_G + 0.5);
    (T::lit(2.0) * T::PI()).sqrt() * t.powf(z + T::lit(0.5)) * (-t).exp() * series
}

/// The real gamma function.
///
/// Arguments are shifted into (1/2, 3/2] with Γ(x + 1) = xΓ(x); arguments
/// below 1/2 go through the reflection formula Γ(x)Γ(1 − x) = π / sin(πx).
/// Overflows to infinity a little above x = 171.6 in double precision.
pub fn gamma_real<T: Real>(x: T) -> Result<T> {
    if x.is_nan() {
        return Err(Error::Domain("gamma of NaN".into()));
    }
    if x <= T::zero() && x == x.floor() {
        return Err(Error::Pole(x.to_f64().unwrap_or(f64::NAN)));
    }
    let half = T::lit(0.5);
    if x < half {
        let reflected = gamma_real(T::one() - x)?;
        return Ok(T::PI() / (sin_pi(x) * reflected));
    }

    let three_halves = T::lit(1.5);
    let mut y = x;
    let mut scale = T::one();
    while y > three_halves {
        y -= T::one();
        scale *= y;
        if scale.is_infinite() {
            return Ok(T::infinity());
        }
    }
    Ok(scale * lanczos_core(y))
}

/// Binomial coefficient with rational arguments,
/// Γ(n + 1) / (Γ(k + 1) Γ(n − k + 1)).
///
/// Any gamma factor landing on a pole is an error, including the
/// denominator poles that would make an integer binomial vanish.
pub fn rational_binomial<T: Real>(n: Rational, k: Rational) -> Result<T> {
    let one = Rational::from_integer(1);
    let top = gamma_real(T::from_ratio(&(n + one)))?;
    let left = gamma_real(T::from_ratio(&(k + one)))?;
    let right = gamma_real(T::from_ratio(&(n - k + one)))?;
    Ok(top / (left * right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn classical_values() {
        assert!(rel(gamma_real(0.5).unwrap(), PI.sqrt()) < 1e-14);
        assert!(rel(gamma_real(5.0).unwrap(), 24.0) < 1e-14);
        assert!(rel(gamma_real(1.0).unwrap(), 1.0) < 1e-14);
        // mpmath: 2.678938534707747633655692940974677644129
        assert!(rel(gamma_real(1.0 / 3.0).unwrap(), 2.678_938_534_707_747_6) < 1e-13);
    }

    #[test]
    fn integer_arguments_are_factorials() {
        let mut factorial = 1.0f64;
        for n in 1..=170u32 {
            assert!(rel(gamma_real(n as f64).unwrap(), factorial) < 1e-12, "n = {n}");
            factorial *= n as f64;
        }
    }

    #[test]
    fn reflection_for_negative_arguments() {
        // Γ(-1/2) = -2√π
        assert!(rel(gamma_real(-0.5).unwrap(), -2.0 * PI.sqrt()) < 1e-14);
        // Γ(-3/2) = 4√π/3
        assert!(rel(gamma_real(-1.5).unwrap(), 4.0 * PI.sqrt() / 3.0) < 1e-14);
    }

    #[test]
    fn poles() {
        for x in [0.0, -1.0, -2.0, -17.0] {
            assert!(matches!(gamma_real(x), Err(Error::Pole(_))));
        }
    }

    #[test]
    fn recurrence_on_grid() {
        for i in 1..=50 {
            let x = i as f64 / 10.0;
            let lhs = gamma_real(1.0 + x).unwrap();
            let rhs = x * gamma_real(x).unwrap();
            assert!(rel(lhs, rhs) < 1e-12, "x = {x}");
        }
    }

    #[test]
    fn binomials() {
        let r = Rational::new;
        assert!(rel(rational_binomial(r(4, 1), r(2, 1)).unwrap(), 6.0) < 1e-14);
        assert!(rel(rational_binomial(r(7, 3), r(0, 1)).unwrap(), 1.0) < 1e-14);
        // Γ(4/3)/(Γ(3/2)Γ(5/6)), mpmath: 0.8926568527101866590576809279369940544066
        let b: f64 = rational_binomial(r(1, 3), r(1, 2)).unwrap();
        assert!(rel(b, 0.892_656_852_710_186_7) < 1e-13);
        assert!(rational_binomial::<f64>(r(2, 1), r(3, 1)).is_err());
    }

    #[test]
    fn single_precision() {
        assert!((gamma_real(0.5f32).unwrap() - std::f32::consts::PI.sqrt()).abs() < 1e-6);
        assert!((gamma_real(5.0f32).unwrap() - 24.0).abs() < 1e-4);
    }
}
