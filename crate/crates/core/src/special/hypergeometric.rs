use num_traits::Signed;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::Rational;

/// Parameters and argument of a generalized hypergeometric series
/// ₚF_q(a₁, …, a_p; b₁, …, b_q; z).
///
/// Parameters are kept as exact rationals; they are converted to the
/// floating-point scalar only inside the term recurrence.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricSpec<T> {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
    argument: T,
}

impl<T: Real> HypergeometricSpec<T> {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, argument: T) -> Result<Self> {
        if let Some(b) = lower.iter().find(|b| b.is_integer() && !b.is_positive()) {
            return Err(Error::InvalidSpec(format!(
                "lower parameter {b} is zero or a negative integer"
            )));
        }
        if !argument.is_finite() {
            return Err(Error::InvalidSpec("argument is not finite".into()));
        }
        Ok(Self { upper, lower, argument })
    }

    /// ₂F₁(a, b; c; z).
    pub fn gauss(a: Rational, b: Rational, c: Rational, z: T) -> Result<Self> {
        Self::new(vec![a, b], vec![c], z)
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    pub fn argument(&self) -> T {
        self.argument
    }

    /// Number of upper parameters.
    pub fn p(&self) -> usize {
        self.upper.len()
    }

    /// Number of lower parameters.
    pub fn q(&self) -> usize {
        self.lower.len()
    }

    /// Same parameters, different argument.
    pub fn with_argument(&self, argument: T) -> Self {
        Self { argument, ..self.clone() }
    }

    /// Index at which the series terminates, if some upper parameter is a
    /// non-positive integer `-m` (all terms past `n = m` vanish).
    fn terminating_degree(&self) -> Option<u64> {
        self.upper
            .iter()
            .filter(|a| a.is_integer() && !a.is_positive())
            .map(|a| a.numer().unsigned_abs())
            .min()
    }

    fn check_convergence(&self) -> Result<()> {
        if self.terminating_degree().is_some() || self.argument == T::zero() {
            return Ok(());
        }
        let (p, q) = (self.p(), self.q());
        let modulus = self.argument.abs();
        if p > q + 1 {
            return Err(Error::Divergent(format!("{p}F{q} with nonzero argument")));
        }
        if p == q + 1 {
            if modulus > T::one() {
                return Err(Error::Divergent(format!("|z| = {modulus} > 1")));
            }
            if modulus == T::one() {
                let excess: Rational = self.lower.iter().sum::<Rational>() - self.upper.iter().sum::<Rational>();
                if !excess.is_positive() {
                    return Err(Error::Divergent(format!(
                        "|z| = 1 and sum(lower) - sum(upper) = {excess} <= 0"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Truncation controls for [`pfq`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions<T> {
    pub relative_tolerance: T,
    pub max_terms: usize,
}

impl<T: Real> Default for EvalOptions<T> {
    fn default() -> Self {
        Self { relative_tolerance: T::default_tolerance(), max_terms: 200_000 }
    }
}

impl<T: Real> EvalOptions<T> {
    pub fn new(relative_tolerance: T, max_terms: usize) -> Result<Self> {
        if !(relative_tolerance > T::zero()) {
            return Err(Error::Domain(format!("relative tolerance {relative_tolerance} must be positive")));
        }
        if max_terms == 0 {
            return Err(Error::Domain("max_terms must be at least 1".into()));
        }
        Ok(Self { relative_tolerance, max_terms })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    pub value: T,
    /// Number of series terms summed, counting the constant term.
    pub terms_used: usize,
    pub converged: bool,
    pub last_term_magnitude: T,
}

/// `(num + n·den) / den`, the Pochhammer step factor `a + n`, formed exactly
/// in integers before conversion.
#[inline]
fn shifted<T: Real>(a: &Rational, n: u64) -> T {
    let num = *a.numer() as i128 + n as i128 * *a.denom() as i128;
    T::lit(num as f64) / T::lit(*a.denom() as f64)
}

/// Successive series terms `t_0 = 1, t_1, t_2, …` generated by the ratio
/// recurrence `t_{n+1} = t_n · Π(a_i + n) / Π(b_j + n) · z / (n + 1)`.
#[derive(Debug, Clone)]
pub struct SeriesTerms<'a, T> {
    spec: &'a HypergeometricSpec<T>,
    next_index: u64,
    term: T,
}

impl<'a, T: Real> SeriesTerms<'a, T> {
    pub fn new(spec: &'a HypergeometricSpec<T>) -> Self {
        Self { spec, next_index: 0, term: T::one() }
    }
}

impl<T: Real> Iterator for SeriesTerms<'_, T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        let n = self.next_index;
        if n > 0 {
            let k = n - 1;
            let mut ratio = self.spec.argument / T::lit(n as f64);
            for a in &self.spec.upper {
                ratio *= shifted::<T>(a, k);
            }
            for b in &self.spec.lower {
                ratio /= shifted::<T>(b, k);
            }
            self.term *= ratio;
        }
        self.next_index += 1;
        Some(self.term)
    }
}

/// Evaluates ₚF_q by summing the terms of [`SeriesTerms`].
///
/// Summation stops once two consecutive terms are both below
/// `relative_tolerance · |partial sum|`, or the series terminates. If
/// `max_terms` is reached first the best partial sum is returned with
/// `converged = false`.
pub fn pfq<T: Real>(spec: &HypergeometricSpec<T>, opts: &EvalOptions<T>) -> Result<EvalResult<T>> {
    spec.check_convergence()?;
    let tol = opts.relative_tolerance;

    let mut terms = SeriesTerms::new(spec);
    let mut sum = terms.next().unwrap_or_else(T::one);
    let mut last = T::one();
    let mut terms_used = 1;
    let mut small_run = 0;

    for term in terms.take(opts.max_terms - 1) {
        if term == T::zero() {
            return Ok(EvalResult { value: sum, terms_used, converged: true, last_term_magnitude: T::zero() });
        }
        sum += term;
        terms_used += 1;
        last = term.abs();
        if last <= tol * sum.abs() {
            small_run += 1;
            if small_run == 2 {
                return Ok(EvalResult { value: sum, terms_used, converged: true, last_term_magnitude: last });
            }
        } else {
            small_run = 0;
        }
    }

    Ok(EvalResult { value: sum, terms_used, converged: false, last_term_magnitude: last })
}

/// The `n`-th series term `Π(a_i)_n / Π(b_j)_n · zⁿ / n!`, computed from
/// scratch: each upper Pochhammer symbol is paired with a lower one (or
/// with `n!`), the pair ratios are multiplied, and `zⁿ` is applied last.
pub fn pfq_term<T: Real>(spec: &HypergeometricSpec<T>, n: u64) -> T {
    let ones = Rational::from_integer(1);
    let len = spec.upper.len().max(spec.lower.len() + 1);
    let mut value = T::one();
    for i in 0..len {
        let top = spec.upper.get(i);
        // the factorial is the Pochhammer symbol (1)_n
        let bottom = if i == 0 { Some(&ones) } else { spec.lower.get(i - 1) };
        let mut pair = T::one();
        for k in 0..n {
            if let Some(a) = top {
                pair *= shifted::<T>(a, k);
            }
            if let Some(b) = bottom {
                pair /= shifted::<T>(b, k);
            }
        }
        value *= pair;
    }
    let exponent = i32::try_from(n).unwrap_or(i32::MAX);
    value * spec.argument.powi(exponent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn half() -> Rational {
        r(1, 2)
    }

    #[test]
    fn zero_argument_is_exactly_one() {
        let spec = HypergeometricSpec::new(vec![half(), r(7, 3)], vec![r(5, 2)], 0.0).unwrap();
        let res = pfq(&spec, &EvalOptions::default()).unwrap();
        assert_eq!(res.value, 1.0);
        assert!(res.converged);
        assert!(res.terms_used <= 2);
    }

    #[test]
    fn three_f_two_at_quarter() {
        // mpmath, 40 digits: 1.035120661425648981045957551450862849975
        let spec = HypergeometricSpec::new(vec![half(); 3], vec![r(1, 1); 2], 0.25).unwrap();
        let res = pfq(&spec, &EvalOptions::default()).unwrap();
        assert!(res.converged);
        assert!((res.value - 1.035_120_661_425_649).abs() < 1e-12);
    }

    #[test]
    fn pfaff_instance_for_lambda_one_third() {
        // mpmath: 0.9468055707360212106119335977102005138773
        let spec = HypergeometricSpec::gauss(r(1, 4), r(3, 4), r(1, 1), -1.0 / 3.0).unwrap();
        let res = pfq(&spec, &EvalOptions::default()).unwrap();
        assert!((res.value - 0.946_805_570_736_021_2).abs() < 1e-12);
    }

    #[test]
    fn terminating_series_is_a_polynomial() {
        // ₂F₁(-2, b; c; z) = 1 - 2bz/c + b(b+1)z²/(c(c+1))
        let (b, c, z) = (1.5f64, 2.5, 3.0);
        let spec = HypergeometricSpec::gauss(r(-2, 1), r(3, 2), r(5, 2), z).unwrap();
        let res = pfq(&spec, &EvalOptions::default()).unwrap();
        let expected = 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
        assert!(res.converged);
        assert!((res.value - expected).abs() < 1e-13);
    }

    #[test]
    fn exponential_is_0f0() {
        let spec = HypergeometricSpec::new(vec![], vec![], 1.0).unwrap();
        let res = pfq(&spec, &EvalOptions::default()).unwrap();
        assert!((res.value - std::f64::consts::E).abs() < 1e-14);
    }

    #[test]
    fn rejects_nonpositive_integer_lower_parameter() {
        assert!(matches!(
            HypergeometricSpec::new(vec![half()], vec![r(0, 1)], 0.1),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            HypergeometricSpec::new(vec![half()], vec![r(-3, 1)], 0.1),
            Err(Error::InvalidSpec(_))
        ));
        assert!(HypergeometricSpec::new(vec![half()], vec![r(-1, 2)], 0.1).is_ok());
    }

    #[test]
    fn divergent_arguments() {
        let opts = EvalOptions::default();
        let big = HypergeometricSpec::gauss(half(), half(), r(1, 1), 1.5).unwrap();
        assert!(matches!(pfq(&big, &opts), Err(Error::Divergent(_))));
        let over = HypergeometricSpec::new(vec![half(); 3], vec![r(1, 1)], 0.1).unwrap();
        assert!(matches!(pfq(&over, &opts), Err(Error::Divergent(_))));
        // |z| = 1 needs sum(lower) - sum(upper) > 0
        let edge = HypergeometricSpec::gauss(half(), half(), r(1, 1), 1.0).unwrap();
        assert!(matches!(pfq(&edge, &opts), Err(Error::Divergent(_))));
        // but 3F2(1/2,1/2,1/2;1,1;1) has excess 1/2 and is admissible
        let ok = HypergeometricSpec::new(vec![half(); 3], vec![r(1, 1); 2], 1.0).unwrap();
        assert!(pfq(&ok, &EvalOptions::new(1e-6, 10).unwrap()).is_ok());
    }

    #[test]
    fn max_terms_reports_non_convergence() {
        let spec = HypergeometricSpec::gauss(half(), half(), r(1, 1), 0.9).unwrap();
        let res = pfq(&spec, &EvalOptions::new(1e-15, 5).unwrap()).unwrap();
        assert!(!res.converged);
        assert_eq!(res.terms_used, 5);
    }

    #[test]
    fn options_validation() {
        assert!(EvalOptions::new(0.0f64, 10).is_err());
        assert!(EvalOptions::new(1e-9f64, 0).is_err());
    }

    #[test]
    fn direct_term_matches_recurrence() {
        let spec = HypergeometricSpec::new(vec![half(); 3], vec![r(1, 1); 2], 0.25).unwrap();
        // (1/2)_2^3 / (1)_2^2 · z²/2! = (3/4)³/4 · 1/16 / 2
        let expected = (0.75f64).powi(3) / 4.0 * 0.0625 / 2.0;
        assert!((pfq_term(&spec, 2) - expected).abs() < 1e-17);
        assert_eq!(pfq_term(&spec, 0), 1.0);
    }

    #[test]
    fn single_precision_path() {
        let spec = HypergeometricSpec::new(vec![half(); 3], vec![r(1, 1); 2], 0.25f32).unwrap();
        let res = pfq(&spec, &EvalOptions::default()).unwrap();
        assert!((res.value - 1.035_120_7f32).abs() < 1e-5);
    }
}
