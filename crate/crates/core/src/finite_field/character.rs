use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::finite_field::PrimeContext;

/// A multiplicative character of F_p*, `χ(g^j) = exp(2πi·k·j/(p−1))` for the
/// context's primitive root `g`, extended to F_p by `χ(0) = 0`.
///
/// The single exception is [`Character::constant_one`], the function equal
/// to 1 on all of F_p. It stands in for "χ₃" when `p ≡ 2 (mod 3)`, where
/// cubing permutes F_p and no character of order three exists.
#[derive(Clone, Copy)]
pub struct Character<'a> {
    ctx: &'a PrimeContext,
    exponent: u64,
    unit_at_zero: bool,
}

impl<'a> Character<'a> {
    /// The character with exponent `k` (taken modulo p − 1).
    pub fn new(ctx: &'a PrimeContext, k: i64) -> Self {
        let exponent = k.rem_euclid(ctx.group_order() as i64) as u64;
        Self { ctx, exponent, unit_at_zero: false }
    }

    /// ε_p.
    pub fn trivial(ctx: &'a PrimeContext) -> Self {
        Self::new(ctx, 0)
    }

    /// φ_p, the Legendre symbol.
    pub fn quadratic(ctx: &'a PrimeContext) -> Self {
        Self::new(ctx, (ctx.group_order() / 2) as i64)
    }

    /// The constant function 1 on F_p (value 1 at zero as well).
    pub fn constant_one(ctx: &'a PrimeContext) -> Self {
        Self { ctx, exponent: 0, unit_at_zero: true }
    }

    /// χ₃ with exponent (p−1)/3 when `p ≡ 1 (mod 3)`; otherwise
    /// [`Character::constant_one`].
    pub fn cubic(ctx: &'a PrimeContext) -> Self {
        let order = ctx.group_order();
        if order % 3 == 0 {
            Self::new(ctx, (order / 3) as i64)
        } else {
            Self::constant_one(ctx)
        }
    }

    pub fn context(&self) -> &'a PrimeContext {
        self.ctx
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Whether χ(0) = 1 rather than 0.
    pub fn unit_at_zero(&self) -> bool {
        self.unit_at_zero
    }

    /// Order of χ in the character group, (p−1)/gcd(k, p−1).
    pub fn order(&self) -> u64 {
        let n = self.ctx.group_order();
        n / self.exponent.gcd(&n)
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent == 0
    }

    /// χ̄, with exponent −k.
    pub fn conj(&self) -> Self {
        let n = self.ctx.group_order();
        Self { exponent: (n - self.exponent) % n, ..*self }
    }

    pub fn mul(&self, other: &Character<'a>) -> Result<Self> {
        self.same_context(other)?;
        Ok(Self {
            ctx: self.ctx,
            exponent: (self.exponent + other.exponent) % self.ctx.group_order(),
            unit_at_zero: self.unit_at_zero && other.unit_at_zero,
        })
    }

    pub(crate) fn same_context(&self, other: &Character<'_>) -> Result<()> {
        if self.ctx.p() != other.ctx.p() {
            return Err(Error::ContextMismatch(self.ctx.p(), other.ctx.p()));
        }
        Ok(())
    }

    /// Index `e` with χ(x) = exp(2πi·e/(p−1)), for a canonical nonzero residue.
    #[inline]
    pub(crate) fn log_value(&self, x: u64) -> Option<u64> {
        self.ctx.dlog_residue(x).map(|d| self.exponent * d % self.ctx.group_order())
    }

    /// χ(x).
    pub fn eval(&self, x: i64) -> Complex64 {
        let r = self.ctx.reduce(x);
        match self.log_value(r) {
            Some(e) => self.ctx.unity_root(e),
            None if self.unit_at_zero => Complex64::new(1.0, 0.0),
            None => Complex64::new(0.0, 0.0),
        }
    }

    /// χ(−1) = (−1)^k, exactly.
    pub fn sign_at_minus_one(&self) -> i64 {
        if self.exponent % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for Character<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Character")
            .field("p", &self.ctx.p())
            .field("exponent", &self.exponent)
            .field("unit_at_zero", &self.unit_at_zero)
            .finish()
    }
}

impl PartialEq for Character<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.p() == other.ctx.p() && self.exponent == other.exponent && self.unit_at_zero == other.unit_at_zero
    }
}

/// χ(x) as a complex number; exactly 0 at x ≡ 0 (except for the constant
/// function 1).
pub fn char_eval(ch: &Character<'_>, x: i64) -> Complex64 {
    ch.eval(x)
}
