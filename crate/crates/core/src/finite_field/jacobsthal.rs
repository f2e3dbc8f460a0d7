use crate::error::{Error, Result};
use crate::finite_field::{is_prime, PrimeContext};

/// Σ_{x ∈ F_p} φ_p(x³ + 1), for p > 3.
pub fn jacobsthal_phi_cubic(ctx: &PrimeContext) -> Result<i64> {
    let p = ctx.p();
    if p <= 3 {
        return Err(Error::Domain(format!("Jacobsthal sum needs p > 3, got {p}")));
    }
    Ok((0..p)
        .map(|x| {
            let cube = x * x % p * x % p;
            ctx.legendre_residue((cube + 1) % p)
        })
        .sum())
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// The representation `p = a² + 3b²` with `b ≥ 0` and `a ≡ −1 (mod 3)`,
/// for a prime `p ≡ 1 (mod 3)`, found by exhaustive search over b.
pub fn represent_a2_3b2(p: u64) -> Result<(i64, u64)> {
    if !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p % 3 != 1 {
        return Err(Error::Domain(format!("{p} is not 1 mod 3")));
    }
    let mut found = Vec::new();
    for b in 0..=isqrt(p / 3) {
        let rest = p - 3 * b * b;
        let a = isqrt(rest);
        if a * a == rest {
            found.push((a as i64, b));
        }
    }
    match found.as_slice() {
        [(a, b)] => {
            let a = if a.rem_euclid(3) == 2 { *a } else { -a };
            if a.rem_euclid(3) != 2 {
                return Err(Error::Internal(format!("{p} = {a}² + 3·{b}² with 3 | a")));
            }
            Ok((a, *b))
        }
        [] => Err(Error::Internal(format!("no representation {p} = a² + 3b²"))),
        _ => Err(Error::Internal(format!("representation of {p} is not unique: {found:?}"))),
    }
}
