use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::special::gamma_real;

// 15-point Kronrod nodes (non-negative half) and weights; the odd-indexed
// nodes are the embedded 7-point Gauss rule.
const KRONROD_NODES: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const KRONROD_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const GAUSS_WEIGHTS: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_DEPTH: u32 = 48;

/// One G7/K15 panel: returns the Kronrod estimate and |K15 − G7|.
fn kronrod_panel<T: Real, F: Fn(T) -> T>(f: &F, lo: T, hi: T) -> (T, T) {
    let two = T::lit(2.0);
    let center = (lo + hi) / two;
    let half = (hi - lo) / two;
    let fc = f(center);
    let mut kronrod = fc * T::lit(KRONROD_WEIGHTS[7]);
    let mut gauss = fc * T::lit(GAUSS_WEIGHTS[3]);
    for i in 0..7 {
        let dx = half * T::lit(KRONROD_NODES[i]);
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * T::lit(KRONROD_WEIGHTS[i]);
        if i % 2 == 1 {
            gauss += pair * T::lit(GAUSS_WEIGHTS[i / 2]);
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

fn refine<T: Real, F: Fn(T) -> T>(f: &F, lo: T, hi: T, whole: (T, T), tol: T, depth: u32) -> T {
    let (estimate, error) = whole;
    if error <= tol || depth >= MAX_DEPTH {
        return estimate;
    }
    let mid = (lo + hi) / T::lit(2.0);
    let left = kronrod_panel(f, lo, mid);
    let right = kronrod_panel(f, mid, hi);
    let half_tol = tol / T::lit(2.0);
    refine(f, lo, mid, left, half_tol, depth + 1) + refine(f, mid, hi, right, half_tol, depth + 1)
}

/// Adaptive Gauss–Kronrod (G7/K15) integration of `f` over `[lo, hi]` to
/// absolute accuracy `tol`, by recursive bisection. The rule never samples
/// the endpoints, so integrable endpoint singularities are admissible.
pub fn adaptive_gauss_kronrod<T: Real, F: Fn(T) -> T>(f: F, lo: T, hi: T, tol: T) -> T {
    let whole = kronrod_panel(&f, lo, hi);
    refine(&f, lo, hi, whole, tol, 0)
}

/// ∫₀^{π/4} g(t)·(sin t)^exponent dt, where g is smooth on the interval.
///
/// For exponents in (−1, 0) the substitution t = s^k with k = 1/(1 + exponent)
/// turns the endpoint singularity into a bounded integrand.
fn endpoint_integral<T: Real, G: Fn(T) -> T>(g: G, exponent: T, tol: T) -> T {
    let quarter_pi = T::FRAC_PI_4();
    if exponent < T::zero() && exponent > -T::one() {
        let k = T::one() / (T::one() + exponent);
        let upper = quarter_pi.powf(T::one() / k);
        adaptive_gauss_kronrod(
            |s: T| {
                let t = s.powf(k);
                g(t) * t.sin().powf(exponent) * k * s.powf(k - T::one())
            },
            T::zero(),
            upper,
            tol,
        )
    } else {
        adaptive_gauss_kronrod(|t: T| g(t) * t.sin().powf(exponent), T::zero(), quarter_pi, tol)
    }
}

/// ₂F₁(a, b; c; z) through the Euler-type integral
///
/// 2Γ(c)/(Γ(b)Γ(c − b)) ∫₀^{π/2} (sin t)^{2b−1} (cos t)^{2c−2b−1} (1 − z sin²t)^{−a} dt,
///
/// valid for c > b > 0 and z < 1. The integral is split at π/4 and each
/// half is mapped so that its possibly singular endpoint sits at zero.
/// Serves as an independent oracle for the series evaluation.
pub fn gauss_2f1_integral<T: Real>(a: T, b: T, c: T, z: T) -> Result<T> {
    if !(b > T::zero()) || !(c > b) {
        return Err(Error::Domain(format!("integral representation needs c > b > 0, got b = {b}, c = {c}")));
    }
    if !(z < T::one()) {
        return Err(Error::Domain(format!("integral representation needs z < 1, got {z}")));
    }
    let two = T::lit(2.0);
    let sin_exponent = two * b - T::one();
    let cos_exponent = two * (c - b) - T::one();
    let kernel = |s2: T| (T::one() - z * s2).powf(-a);

    let tol = T::lit(1e-12).max(T::epsilon() * T::lit(16.0));
    // t in [0, π/4]: singular part is (sin t)^(2b−1)
    let near_zero = endpoint_integral(
        |t: T| {
            let s = t.sin();
            t.cos().powf(cos_exponent) * kernel(s * s)
        },
        sin_exponent,
        tol,
    );
    // t = π/2 − u, u in [0, π/4]: singular part is (sin u)^(2c−2b−1)
    let near_right_angle = endpoint_integral(
        |u: T| {
            let s = u.cos();
            s.powf(sin_exponent) * kernel(s * s)
        },
        cos_exponent,
        tol,
    );

    let norm = two * gamma_real(c)? / (gamma_real(b)? * gamma_real(c - b)?);
    Ok(norm * (near_zero + near_right_angle))
}
