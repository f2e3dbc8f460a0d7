use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_ITERATIONS: usize = 100;

/// Arithmetic-geometric mean of two positive reals.
///
/// Iterates α ← (α + β)/2, β ← √(αβ) until |α − β| ≤ tol·α and returns the
/// midpoint of the final pair. The iteration converges quadratically, so
/// the cap of 100 steps is only reached when `tol` is below the scalar's
/// resolution; the last midpoint is returned in that case.
pub fn agm<T: Real>(alpha: T, beta: T, tol: T) -> Result<T> {
    if !(alpha > T::zero()) || !(beta > T::zero()) || !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::Domain(format!("agm needs positive finite inputs, got ({alpha}, {beta})")));
    }
    if !(tol > T::zero()) {
        return Err(Error::Domain(format!("agm tolerance {tol} must be positive")));
    }
    let (mut a, mut b) = (alpha, beta);
    for _ in 0..MAX_ITERATIONS {
        if (a - b).abs() <= tol * a {
            break;
        }
        let next = (a + b) / T::lit(2.0);
        b = (a * b).sqrt();
        a = next;
    }
    Ok((a + b) / T::lit(2.0))
}
