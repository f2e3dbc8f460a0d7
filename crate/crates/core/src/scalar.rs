use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_rational::Ratio;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar for the real-analytic layer: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Default relative tolerance for series truncation.
    fn default_tolerance() -> Self;

    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Converts an exact rational, dividing only at the very end.
    #[inline]
    fn from_ratio(r: &Ratio<i64>) -> Self {
        Self::lit(*r.numer() as f64) / Self::lit(*r.denom() as f64)
    }
}

impl Real for f64 {
    fn default_tolerance() -> Self {
        1e-12
    }
}

impl Real for f32 {
    fn default_tolerance() -> Self {
        1e-6
    }
}

/// `sin(πx)` with exact argument reduction, so integers give exactly zero.
pub(crate) fn sin_pi<T: Real>(x: T) -> T {
    let two = T::lit(2.0);
    let mut r = x % two;
    if r < T::zero() {
        r += two;
    }
    // r in [0, 2)
    let (r, sign) = if r >= T::one() { (r - T::one(), -T::one()) } else { (r, T::one()) };
    let r = if r > T::lit(0.5) { T::one() - r } else { r };
    sign * (T::PI() * r).sin()
}
