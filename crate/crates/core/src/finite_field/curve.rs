use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::elliptic::{lambda_admissible, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::finite_field::context::mul_mod;
use crate::finite_field::PrimeContext;
use crate::{BigRational, Rational};

/// Monic cubic `x³ + a·x² + b·x + c` over F_p, the right-hand side of
/// `y² = f(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubicModP {
    p: u64,
    a: u64,
    b: u64,
    c: u64,
}

impl CubicModP {
    pub fn new(p: u64, a: i64, b: i64, c: i64) -> Self {
        let r = |x: i64| x.rem_euclid(p as i64) as u64;
        Self { p, a: r(a), b: r(b), c: r(c) }
    }

    /// `(x − 1)(x² + λ) = x³ − x² + λx − λ` with λ reduced mod p.
    pub fn lambda(lambda: Rational, p: u64) -> Result<Self> {
        if !lambda_admissible(lambda) {
            return Err(Error::ExcludedLambda(lambda.to_string()));
        }
        let l = reduce_small(&lambda, p)?;
        Ok(Self { p, a: p - 1, b: l, c: (p - l) % p })
    }

    /// Reduction of `y² + a1xy + a3y = x³ + a2x² + a4x + a6` at an odd
    /// prime, after completing the square: `x³ + (b2/4)x² + (b4/2)x + b6/4`.
    pub fn from_curve(curve: &WeierstrassCurve<BigRational>, p: u64) -> Result<Self> {
        if p % 2 == 0 {
            return Err(Error::NotOddPrime(p));
        }
        let inv2 = (p + 1) / 2;
        let inv4 = mul_mod(inv2, inv2, p);
        let b2 = reduce_big(&curve.b2(), p)?;
        let b4 = reduce_big(&curve.b4(), p)?;
        let b6 = reduce_big(&curve.b6(), p)?;
        // the b-quantities are p-integral whenever the a-coefficients are
        for a in [&curve.a1, &curve.a2, &curve.a3, &curve.a4, &curve.a6] {
            reduce_big(a, p)?;
        }
        Ok(Self { p, a: mul_mod(b2, inv4, p), b: mul_mod(b4, inv2, p), c: mul_mod(b6, inv4, p) })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coefficients(&self) -> (u64, u64, u64) {
        (self.a, self.b, self.c)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let x = x % p;
        // Horner: ((x + a)x + b)x + c
        let mut v = (x + self.a) % p;
        v = (mul_mod(v, x, p) + self.b) % p;
        (mul_mod(v, x, p) + self.c) % p
    }

    /// Discriminant 18abc − 4a³c + a²b² − 4b³ − 27c² reduced mod p.
    pub fn discriminant(&self) -> u64 {
        let p = self.p as i128;
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        let m = |x: i128| x.rem_euclid(p);
        let a2 = m(a * a);
        let terms = [
            m(m(18 * a * b) * c),
            -m(m(4 * a2 * a) * c),
            m(a2 * m(b * b)),
            -m(m(4 * b * b) * b),
            -m(27 * m(c * c)),
        ];
        terms.iter().fold(0i128, |acc, &t| m(acc + t)) as u64
    }

    pub fn is_nonsingular(&self) -> bool {
        self.discriminant() != 0
    }
}

fn reduce_small(r: &Rational, p: u64) -> Result<u64> {
    let den = r.denom().rem_euclid(p as i64) as u64;
    if den == 0 {
        return Err(Error::NotIntegral { p });
    }
    let num = r.numer().rem_euclid(p as i64) as u64;
    Ok(mul_mod(num, inverse_mod(den, p), p))
}

fn reduce_big(r: &BigRational, p: u64) -> Result<u64> {
    let modulus = BigInt::from(p);
    let den = r.denom().mod_floor(&modulus).to_u64().expect("residue fits");
    if den == 0 {
        return Err(Error::NotIntegral { p });
    }
    let num = r.numer().mod_floor(&modulus).to_u64().expect("residue fits");
    Ok(mul_mod(num, inverse_mod(den, p), p))
}

fn inverse_mod(x: u64, p: u64) -> u64 {
    crate::finite_field::context::pow_mod(x, p - 2, p)
}

fn check_reduction(ctx: &PrimeContext, f: &CubicModP) -> Result<()> {
    if ctx.p() != f.p {
        return Err(Error::ContextMismatch(ctx.p(), f.p));
    }
    if !f.is_nonsingular() {
        return Err(Error::SingularReduction(f.p));
    }
    Ok(())
}

/// a_p = −Σ_{x ∈ F_p} φ_p(f(x)).
pub fn trace_frobenius(ctx: &PrimeContext, f: &CubicModP) -> Result<i64> {
    check_reduction(ctx, f)?;
    Ok(-(0..ctx.p()).map(|x| ctx.legendre_residue(f.eval(x))).sum::<i64>())
}

/// N_p = #{(x, y) ∈ F_p² : y² = f(x)} + 1, by scanning every pair.
pub fn count_points(ctx: &PrimeContext, f: &CubicModP) -> Result<u64> {
    check_reduction(ctx, f)?;
    let p = ctx.p();
    let mut affine = 0u64;
    for x in 0..p {
        let fx = f.eval(x);
        for y in 0..p {
            if mul_mod(y, y, p) == fx {
                affine += 1;
            }
        }
    }
    Ok(affine + 1)
}

/// Whether `p ∤ Δ(E)`. Requires Δ ≠ 0 and p-integral coefficients.
pub fn good_reduction(curve: &WeierstrassCurve<BigRational>, p: u64) -> Result<bool> {
    let delta = curve.discriminant();
    if delta.is_zero() {
        return Err(Error::Domain("curve is singular (discriminant 0)".into()));
    }
    for a in [&curve.a1, &curve.a2, &curve.a3, &curve.a4, &curve.a6] {
        if (a.denom() % BigInt::from(p)).is_zero() {
            return Err(Error::NotIntegral { p });
        }
    }
    Ok(!(delta.numer().abs() % BigInt::from(p)).is_zero())
}

/// Whether `ord_p(λ(λ + 1)) = 0` for `λ = r/s` in lowest terms, i.e.
/// `p ∤ r`, `p ∤ s` and `p ∤ r + s`.
pub fn ono_condition(lambda: Rational, p: u64) -> Result<bool> {
    if !lambda_admissible(lambda) {
        return Err(Error::ExcludedLambda(lambda.to_string()));
    }
    let p = p as i128;
    let (r, s) = (*lambda.numer() as i128, *lambda.denom() as i128);
    Ok(r % p != 0 && s % p != 0 && (r + s) % p != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{e_one_third_pair, lambda_curve};

    fn one_third(p: u64) -> (PrimeContext, CubicModP) {
        (PrimeContext::new(p).unwrap(), CubicModP::lambda(Rational::new(1, 3), p).unwrap())
    }

    #[test]
    fn traces_of_e_one_third() {
        for (p, expected) in [(5u64, 0i64), (7, -4), (13, -2)] {
            let (ctx, f) = one_third(p);
            assert_eq!(trace_frobenius(&ctx, &f).unwrap(), expected, "p = {p}");
        }
        let (_, f5) = one_third(5);
        assert_eq!(f5, CubicModP::new(5, -1, 2, -2));
        let (_, f7) = one_third(7);
        assert_eq!(f7, CubicModP::new(7, -1, 5, -5));
    }

    #[test]
    fn point_counts() {
        let (ctx, f) = one_third(5);
        assert_eq!(count_points(&ctx, &f).unwrap(), 6);
        let (ctx, f) = one_third(7);
        assert_eq!(count_points(&ctx, &f).unwrap(), 12);
    }

    #[test]
    fn singular_reduction_is_an_error() {
        let ctx = PrimeContext::new(7).unwrap();
        let cusp = CubicModP::new(7, 0, 0, 0);
        assert!(matches!(trace_frobenius(&ctx, &cusp), Err(Error::SingularReduction(7))));
        assert!(matches!(count_points(&ctx, &cusp), Err(Error::SingularReduction(7))));
        let other = PrimeContext::new(11).unwrap();
        assert!(matches!(trace_frobenius(&other, &CubicModP::new(7, 0, 0, 1)), Err(Error::ContextMismatch(11, 7))));
    }

    #[test]
    fn general_weierstrass_reduction_preserves_counts() {
        // y² + xy + y = x³ − x² + 2 against its completed-square model
        let q = |n: i64| BigRational::from_integer(n.into());
        let curve = WeierstrassCurve::new(q(1), q(-1), q(1), q(0), q(2));
        for p in [5u64, 7, 11, 13, 17] {
            let ctx = PrimeContext::new(p).unwrap();
            let f = CubicModP::from_curve(&curve, p).unwrap();
            if !f.is_nonsingular() {
                continue;
            }
            // direct count on the long form
            let mut affine = 0;
            let pi = p as i64;
            for x in 0..pi {
                for y in 0..pi {
                    let lhs = (y * y + x * y + y).rem_euclid(pi);
                    let rhs = (x * x * x - x * x + 2).rem_euclid(pi);
                    if lhs == rhs {
                        affine += 1;
                    }
                }
            }
            assert_eq!(count_points(&ctx, &f).unwrap(), affine + 1, "p = {p}");
        }
    }

    #[test]
    fn nonsingular_iff_p_does_not_divide_delta() {
        let curve = lambda_curve(Rational::new(1, 3)).unwrap();
        for p in [5u64, 7, 11, 13, 17, 19] {
            let f = CubicModP::from_curve(&curve, p).unwrap();
            assert_eq!(f.is_nonsingular(), good_reduction(&curve, p).unwrap());
            assert_eq!(f, CubicModP::lambda(Rational::new(1, 3), p).unwrap());
        }
    }

    #[test]
    fn good_reduction_of_x3_minus_216() {
        let (_, model) = e_one_third_pair();
        assert!(good_reduction(&model, 5).unwrap());
        assert!(!good_reduction(&model, 2).unwrap());
        assert!(!good_reduction(&model, 3).unwrap());
        let e = lambda_curve(Rational::new(1, 3)).unwrap();
        assert!(matches!(good_reduction(&e, 3), Err(Error::NotIntegral { p: 3 })));
    }

    #[test]
    fn ono_conditions() {
        let l = Rational::new(1, 3);
        assert!(ono_condition(l, 7).unwrap());
        assert!(!ono_condition(l, 3).unwrap());
        assert!(!ono_condition(l, 2).unwrap());
        assert!(ono_condition(Rational::new(0, 1), 5).is_err());
        assert!(ono_condition(Rational::new(-1, 1), 5).is_err());
    }

    #[test]
    fn discriminant_mod_p_matches_rational() {
        let curve = lambda_curve(Rational::new(2, 1)).unwrap();
        let delta = curve.discriminant();
        for p in [5u64, 7, 11, 13, 101] {
            let f = CubicModP::from_curve(&curve, p).unwrap();
            // Δ = 16·disc(f)
            let expected = reduce_big(&delta, p).unwrap();
            assert_eq!(mul_mod(16, f.discriminant(), p), expected, "p = {p}");
        }
    }
}
