use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::Rational;

/// Largest prime a context will tabulate; tables are O(p).
pub const MAX_CONTEXT_PRIME: u64 = 1 << 22;

/// Deterministic Miller–Rabin; exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    factors
}

/// An odd prime `p` together with its smallest primitive root `g`, the
/// discrete-log table `g^dlog[x] = x`, and tables of the (p−1)-th and p-th
/// roots of unity. Immutable once built.
pub struct PrimeContext {
    p: u64,
    generator: u64,
    dlog: Vec<u32>,
    powers: Vec<u32>,
    log_one_minus: Vec<u32>,
    unity: Vec<Complex64>,
    additive: Vec<Complex64>,
}

const NO_LOG: u32 = u32::MAX;

impl PrimeContext {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if p > MAX_CONTEXT_PRIME {
            return Err(Error::Domain(format!("prime {p} exceeds the table limit {MAX_CONTEXT_PRIME}")));
        }
        let order = p - 1;
        let factors = distinct_prime_factors(order);
        let generator = (2..p)
            .find(|&g| factors.iter().all(|&q| pow_mod(g, order / q, p) != 1))
            .ok_or_else(|| Error::Internal(format!("no primitive root found mod {p}")))?;

        let n = p as usize;
        let mut dlog = vec![NO_LOG; n];
        let mut powers = Vec::with_capacity(n - 1);
        let mut x = 1u64;
        for k in 0..order {
            dlog[x as usize] = k as u32;
            powers.push(x as u32);
            x = x * generator % p;
        }
        let log_one_minus = (0..p)
            .map(|x| dlog[((1 + p - x) % p) as usize])
            .collect();
        let unity = (0..order)
            .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / order as f64))
            .collect();
        let additive = (0..p)
            .map(|x| Complex64::from_polar(1.0, TAU * x as f64 / p as f64))
            .collect();

        Ok(Self { p, generator, dlog, powers, log_one_minus, unity, additive })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The smallest primitive root.
    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// `p − 1`, the order of F_p*.
    pub fn group_order(&self) -> u64 {
        self.p - 1
    }

    /// Canonical residue of an integer.
    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    /// Discrete logarithm base `g`; `None` for zero.
    pub fn dlog(&self, x: i64) -> Option<u64> {
        match self.dlog[self.reduce(x) as usize] {
            NO_LOG => None,
            k => Some(k as u64),
        }
    }

    /// `dlog` of a canonical residue, without bounds reduction.
    #[inline]
    pub(crate) fn dlog_residue(&self, x: u64) -> Option<u64> {
        match self.dlog[x as usize] {
            NO_LOG => None,
            k => Some(k as u64),
        }
    }

    /// `dlog(1 − x)` for a canonical residue `x`.
    #[inline]
    pub(crate) fn dlog_one_minus(&self, x: u64) -> Option<u64> {
        match self.log_one_minus[x as usize] {
            NO_LOG => None,
            k => Some(k as u64),
        }
    }

    /// `g^k`.
    pub fn generator_power(&self, k: u64) -> u64 {
        self.powers[(k % (self.p - 1)) as usize] as u64
    }

    /// `exp(2πi·k/(p−1))`.
    #[inline]
    pub fn unity_root(&self, k: u64) -> Complex64 {
        self.unity[(k % (self.p - 1)) as usize]
    }

    /// `exp(2πi·x/p)`.
    #[inline]
    pub fn additive_root(&self, x: u64) -> Complex64 {
        self.additive[(x % self.p) as usize]
    }

    /// Legendre symbol φ_p(x) ∈ {−1, 0, 1}.
    pub fn legendre(&self, x: i64) -> i64 {
        self.legendre_residue(self.reduce(x))
    }

    #[inline]
    pub(crate) fn legendre_residue(&self, x: u64) -> i64 {
        match self.dlog[x as usize] {
            NO_LOG => 0,
            k if k % 2 == 0 => 1,
            _ => -1,
        }
    }

    pub fn inverse(&self, x: i64) -> Option<u64> {
        let r = self.reduce(x);
        (r != 0).then(|| pow_mod(r, self.p - 2, self.p))
    }

    /// Image of `num/den` in F_p; `None` when `p | den`.
    pub fn reduce_rational(&self, r: Rational) -> Option<u64> {
        let inv = self.inverse(*r.denom())?;
        Some(mul_mod(self.reduce(*r.numer()), inv, self.p))
    }
}

impl fmt::Debug for PrimeContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrimeContext").field("p", &self.p).field("generator", &self.generator).finish()
    }
}

/// Builds the character arena for an odd prime.
pub fn make_prime_context(p: u64) -> Result<PrimeContext> {
    PrimeContext::new(p)
}

/// Odd primes in `[lo, hi]`.
pub fn odd_primes(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(3)..=hi).filter(|&n| is_prime(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_generator(p: u64) -> u64 {
        (2..p)
            .find(|&g| {
                let mut seen = vec![false; p as usize];
                let mut x = 1;
                for _ in 0..p - 1 {
                    seen[x as usize] = true;
                    x = x * g % p;
                }
                seen[1..].iter().all(|&s| s)
            })
            .unwrap()
    }

    #[test]
    fn small_generators() {
        assert_eq!(PrimeContext::new(7).unwrap().generator(), 3);
        assert_eq!(PrimeContext::new(5).unwrap().generator(), 2);
        for p in odd_primes(3, 400) {
            assert_eq!(PrimeContext::new(p).unwrap().generator(), brute_force_generator(p), "p = {p}");
        }
    }

    #[test]
    fn rejects_non_primes() {
        for n in [0, 1, 2, 9, 15, 91, 561] {
            assert!(matches!(PrimeContext::new(n), Err(Error::NotOddPrime(_))), "n = {n}");
        }
    }

    #[test]
    fn primality_agrees_with_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        assert!(is_prime(4_294_967_291));
        assert!(!is_prime(4_294_967_297));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn dlog_is_a_bijection() {
        let ctx = PrimeContext::new(101).unwrap();
        let mut seen = vec![false; 100];
        for x in 1..101 {
            let k = ctx.dlog(x).unwrap();
            assert!(!seen[k as usize]);
            seen[k as usize] = true;
            assert_eq!(ctx.generator_power(k), x as u64);
        }
        assert_eq!(ctx.dlog(0), None);
        assert_eq!(ctx.dlog(-1), Some(50));
    }

    #[test]
    fn legendre_and_inverses() {
        let ctx = PrimeContext::new(7).unwrap();
        let residues: Vec<i64> = (1..7).filter(|&x| ctx.legendre(x) == 1).collect();
        assert_eq!(residues, vec![1, 2, 4]);
        assert_eq!(ctx.legendre(0), 0);
        assert_eq!(ctx.inverse(3), Some(5));
        assert_eq!(ctx.inverse(14), None);
        assert_eq!(ctx.reduce_rational(Rational::new(1, 3)), Some(5));
        assert_eq!(ctx.reduce_rational(Rational::new(1, 7)), None);
    }
}
