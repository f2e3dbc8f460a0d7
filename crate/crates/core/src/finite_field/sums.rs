use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::finite_field::{Character, PrimeContext};

/// Sums `Σ_e counts[e]·exp(2πi·e/(p−1))`; counts are exact, so the only
/// rounding is in this final weighted sum.
fn weighted_unity_sum(ctx: &PrimeContext, counts: &[i64]) -> Complex64 {
    counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| ctx.unity_root(e as u64) * c as f64)
        .sum()
}

/// G(χ) = Σ_{x ∈ F_p} χ(x)·exp(2πi·x/p).
pub fn gauss_sum(ch: &Character<'_>) -> Complex64 {
    let ctx = ch.context();
    let p = ctx.p();
    let mut total = if ch.unit_at_zero() { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
    for x in 1..p {
        let e = ch.log_value(x).expect("nonzero residue");
        total += ctx.unity_root(e) * ctx.additive_root(x);
    }
    total
}

/// J(χ, λ) = Σ_{x ∈ F_p} χ(x)·λ(1 − x).
pub fn jacobi_sum(chi: &Character<'_>, lam: &Character<'_>) -> Result<Complex64> {
    chi.same_context(lam)?;
    let ctx = chi.context();
    let n = ctx.group_order();
    let mut counts = vec![0i64; n as usize];
    for x in 2..ctx.p() {
        let a = chi.log_value(x).expect("nonzero residue");
        let b = ctx.dlog_one_minus(x).expect("x != 1") * lam.exponent() % n;
        counts[((a + b) % n) as usize] += 1;
    }
    // x = 0 contributes χ(0)λ(1), x = 1 contributes χ(1)λ(0)
    if chi.unit_at_zero() {
        counts[0] += 1;
    }
    if lam.unit_at_zero() {
        counts[0] += 1;
    }
    Ok(weighted_unity_sum(ctx, &counts))
}

/// The finite-field binomial coefficient `(A B) = B(−1)/p · J(A, B̄)`.
pub fn ff_binomial(a: &Character<'_>, b: &Character<'_>) -> Result<Complex64> {
    let j = jacobi_sum(a, &b.conj())?;
    Ok(j * (b.sign_at_minus_one() as f64 / a.context().p() as f64))
}

/// Greene's Gaussian hypergeometric series
///
/// ₙ₊₁Fₙ(A₀, …, Aₙ; B₁, …, Bₙ | x)_p = p/(p−1) · Σ_χ (A₀χ χ)(A₁χ B₁χ)···(Aₙχ Bₙχ) χ(x),
///
/// with the per-character coefficient (everything except χ(x)) computed
/// once, so evaluating at every x ∈ F_p costs O(p²) in total.
pub struct GaussianHypergeometric<'a> {
    ctx: &'a PrimeContext,
    coefficients: Vec<Complex64>,
}

type JacobiKey = (u64, bool, u64, bool);

impl<'a> GaussianHypergeometric<'a> {
    pub fn new(upper: &[Character<'a>], lower: &[Character<'a>]) -> Result<Self> {
        let first = upper.first().ok_or(Error::LengthMismatch { expected: 0, got: lower.len() })?;
        if upper.len() != lower.len() + 1 {
            return Err(Error::LengthMismatch { expected: upper.len() - 1, got: lower.len() });
        }
        for ch in upper.iter().chain(lower) {
            first.same_context(ch)?;
        }
        let ctx = first.context();
        let p = ctx.p();

        let mut jacobi_cache: HashMap<JacobiKey, Complex64> = HashMap::new();
        let mut binomial = |a: Character<'a>, b: Character<'a>| -> Result<Complex64> {
            let bar = b.conj();
            let key = (a.exponent(), a.unit_at_zero(), bar.exponent(), bar.unit_at_zero());
            let j = match jacobi_cache.get(&key) {
                Some(&j) => j,
                None => {
                    let j = jacobi_sum(&a, &bar)?;
                    jacobi_cache.insert(key, j);
                    j
                }
            };
            Ok(j * (b.sign_at_minus_one() as f64 / p as f64))
        };

        let scale = p as f64 / (p - 1) as f64;
        let mut coefficients = Vec::with_capacity((p - 1) as usize);
        for k in 0..ctx.group_order() {
            let chi = Character::new(ctx, k as i64);
            let mut product = binomial(upper[0].mul(&chi)?, chi)?;
            for (a, b) in upper[1..].iter().zip(lower) {
                product *= binomial(a.mul(&chi)?, b.mul(&chi)?)?;
            }
            coefficients.push(product * scale);
        }
        Ok(Self { ctx, coefficients })
    }

    /// ₙ₊₁Fₙ(x)_p: every Aᵢ = φ_p and every Bⱼ = ε_p.
    pub fn phi_eps(ctx: &'a PrimeContext, n: usize) -> Result<Self> {
        let upper = vec![Character::quadratic(ctx); n + 1];
        let lower = vec![Character::trivial(ctx); n];
        Self::new(&upper, &lower)
    }

    pub fn context(&self) -> &'a PrimeContext {
        self.ctx
    }

    /// The series at `x`; identically zero at `x ≡ 0`.
    pub fn eval(&self, x: i64) -> Complex64 {
        let Some(d) = self.ctx.dlog(x) else {
            return Complex64::new(0.0, 0.0);
        };
        let n = self.ctx.group_order();
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| c * self.ctx.unity_root(k as u64 * d % n))
            .sum()
    }
}

/// One-shot evaluation of Greene's series at `x`.
pub fn gaussian_hyp<'a>(upper: &[Character<'a>], lower: &[Character<'a>], x: i64) -> Result<Complex64> {
    Ok(GaussianHypergeometric::new(upper, lower)?.eval(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_gauss(ch: &Character<'_>) -> Complex64 {
        let p = ch.context().p();
        (0..p)
            .map(|x| ch.eval(x as i64) * Complex64::from_polar(1.0, std::f64::consts::TAU * x as f64 / p as f64))
            .sum()
    }

    fn brute_jacobi(a: &Character<'_>, b: &Character<'_>) -> Complex64 {
        let p = a.context().p() as i64;
        (0..p).map(|x| a.eval(x) * b.eval(1 - x)).sum()
    }

    #[test]
    fn gauss_sum_of_trivial_character() {
        let ctx = PrimeContext::new(13).unwrap();
        let g = gauss_sum(&Character::trivial(&ctx));
        assert!((g - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn quadratic_gauss_sum_mod_5() {
        let ctx = PrimeContext::new(5).unwrap();
        let g = gauss_sum(&Character::quadratic(&ctx));
        assert!((g - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-12);
    }

    #[test]
    fn gauss_sums_have_modulus_sqrt_p() {
        let ctx = PrimeContext::new(11).unwrap();
        for k in 1..10 {
            let ch = Character::new(&ctx, k);
            let g = gauss_sum(&ch);
            assert!((g.norm_sqr() - 11.0).abs() < 1e-10);
            assert!((g - brute_gauss(&ch)).norm() < 1e-12);
        }
    }

    #[test]
    fn jacobi_matches_brute_force() {
        let ctx = PrimeContext::new(13).unwrap();
        let mut chars: Vec<Character> = (0..12).map(|k| Character::new(&ctx, k)).collect();
        chars.push(Character::constant_one(&ctx));
        for a in &chars {
            for b in &chars {
                assert!((jacobi_sum(a, b).unwrap() - brute_jacobi(a, b)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn jacobi_examples() {
        for p in [5u64, 7, 11, 101] {
            let ctx = PrimeContext::new(p).unwrap();
            let j = jacobi_sum(&Character::quadratic(&ctx), &Character::trivial(&ctx)).unwrap();
            assert!((j - Complex64::new(-1.0, 0.0)).norm() < 1e-12, "p = {p}");
        }
        let c7 = PrimeContext::new(7).unwrap();
        let j = jacobi_sum(&Character::cubic(&c7), &Character::quadratic(&c7)).unwrap();
        assert!((j.re - 2.0).abs() < 1e-12);
        // p ≡ 2 mod 3: χ₃ is the constant 1, so J = Σ φ(1 − x) = 0
        let c5 = PrimeContext::new(5).unwrap();
        let j = jacobi_sum(&Character::cubic(&c5), &Character::quadratic(&c5)).unwrap();
        assert!(j.norm() < 1e-12);
    }

    #[test]
    fn jacobi_context_mismatch() {
        let a = PrimeContext::new(5).unwrap();
        let b = PrimeContext::new(7).unwrap();
        assert!(matches!(
            jacobi_sum(&Character::trivial(&a), &Character::trivial(&b)),
            Err(Error::ContextMismatch(5, 7))
        ));
    }

    #[test]
    fn binomial_examples() {
        let c5 = PrimeContext::new(5).unwrap();
        let phi = Character::quadratic(&c5);
        assert!((ff_binomial(&phi, &phi).unwrap() - Complex64::new(-0.2, 0.0)).norm() < 1e-14);
        for p in [5u64, 7, 13] {
            let ctx = PrimeContext::new(p).unwrap();
            let eps = Character::trivial(&ctx);
            let expected = (p as f64 - 2.0) / p as f64;
            assert!((ff_binomial(&eps, &eps).unwrap().re - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn three_f_two_at_four_mod_7() {
        let ctx = PrimeContext::new(7).unwrap();
        let series = GaussianHypergeometric::phi_eps(&ctx, 2).unwrap();
        let v = series.eval(4);
        assert!((v.re - 9.0 / 49.0).abs() < 1e-13 && v.im.abs() < 1e-13);
        assert_eq!(series.eval(0), Complex64::new(0.0, 0.0));
        assert_eq!(series.eval(7), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn one_shot_matches_precomputed() {
        let ctx = PrimeContext::new(11).unwrap();
        let upper = [Character::new(&ctx, 3), Character::new(&ctx, 5)];
        let lower = [Character::new(&ctx, 2)];
        let series = GaussianHypergeometric::new(&upper, &lower).unwrap();
        for x in 0..11 {
            assert!((gaussian_hyp(&upper, &lower, x).unwrap() - series.eval(x)).norm() < 1e-14);
        }
    }

    #[test]
    fn length_mismatch() {
        let ctx = PrimeContext::new(7).unwrap();
        let phi = Character::quadratic(&ctx);
        assert!(matches!(gaussian_hyp(&[phi, phi], &[], 2), Err(Error::LengthMismatch { .. })));
        assert!(matches!(gaussian_hyp(&[], &[], 2), Err(Error::LengthMismatch { .. })));
    }
}
