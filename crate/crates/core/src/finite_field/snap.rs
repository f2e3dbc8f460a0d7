use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Rational;

/// A floating character-sum value identified with the exact rational it
/// equals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SnappedRational {
    #[serde(with = "ratio_text")]
    pub value: Rational,
    /// `|den·re − num|`: distance to the snapped rational measured in units
    /// of `1/den`.
    pub residual: f64,
}

/// Snap tolerance for sums over F_p.
pub fn default_snap_tolerance(p: u64) -> f64 {
    1e-6 * p as f64
}

/// Rounds `v` to the nearest `num/denominator`.
///
/// Both the imaginary part and the real residual are measured in units of
/// `1/denominator` and must not exceed `tolerance`.
pub fn snap_to_rational(v: Complex64, denominator: i64, tolerance: f64) -> Result<SnappedRational> {
    if denominator <= 0 {
        return Err(Error::Domain(format!("snap denominator must be positive, got {denominator}")));
    }
    let scale = denominator as f64;
    let scaled = v.re * scale;
    let imaginary = (v.im * scale).abs();
    let numerator = scaled.round();
    let residual = (scaled - numerator).abs();
    if !scaled.is_finite() || imaginary > tolerance || residual > tolerance || numerator.abs() > 9.0e15 {
        return Err(Error::Snap {
            re: v.re,
            im: v.im,
            denominator,
            residual: residual.max(imaginary),
            tolerance,
        });
    }
    Ok(SnappedRational { value: Rational::new(numerator as i64, denominator), residual })
}

pub(crate) mod ratio_text {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use crate::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&format!("{}/{}", r.numer(), r.denom()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse::<Rational>().map_err(de::Error::custom)
    }
}
