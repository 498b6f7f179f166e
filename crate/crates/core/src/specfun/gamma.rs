use std::f64::consts::PI;

use crate::{c64, Error, Result, C64};

// Lanczos approximation, g = 607/128 with 15 coefficients (Godfrey).
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_7;

/// True if `z` is (to rounding) one of 0, −1, −2, …
pub fn is_nonpositive_integer(z: C64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Lanczos `ln Γ` for `Re z ≥ 0.5`.
fn ln_gamma_right(z: C64) -> C64 {
    let z = z - 1.0;
    let mut sum = c64(LANCZOS_COEF[0], 0.0);
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + sum.ln()
}

/// `ln sin(πz)`, stable for large `|Im z|`.
fn ln_sin_pi(z: C64) -> C64 {
    // For large |Im z| the direct sine overflows long before its log does.
    if z.im.abs() > 30.0 {
        let sign = z.im.signum();
        // sin(πz) = (e^{iπz} − e^{−iπz}) / 2i; the dominant exponential is
        // e^{−iπz·sign}.
        let w = c64(0.0, -sign) * PI * z;
        let small = (c64(0.0, 2.0 * sign) * PI * z).exp();
        return w + (1.0 - small).ln() + c64(-std::f64::consts::LN_2, sign * PI / 2.0);
    }
    (PI * z).sin().ln()
}

/// Complex log-gamma. The imaginary part is not normalised to any branch;
/// `exp(ln_gamma(z)) = Γ(z)`.
pub fn ln_gamma(z: C64) -> Result<C64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole {
            function: "ln_gamma",
            at: z,
        });
    }
    if z.re >= 0.5 {
        Ok(ln_gamma_right(z))
    } else {
        Ok(c64(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma_right(1.0 - z))
    }
}

/// Complex gamma function with reflection for `Re z < 0.5`.
pub fn gamma(z: C64) -> Result<C64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole {
            function: "gamma",
            at: z,
        });
    }
    if z.re >= 0.5 {
        Ok(ln_gamma_right(z).exp())
    } else {
        let s = (PI * z).sin();
        Ok(PI / (s * ln_gamma_right(1.0 - z).exp()))
    }
}

/// Reciprocal gamma `1/Γ(z)`, an entire function (zero at the poles of Γ).
pub fn rgamma(z: C64) -> C64 {
    if is_nonpositive_integer(z) {
        return C64::new(0.0, 0.0);
    }
    if z.re >= 0.5 {
        (-ln_gamma_right(z)).exp()
    } else {
        (PI * z).sin() * ln_gamma_right(1.0 - z).exp() / PI
    }
}

/// Complex digamma `ψ(z) = Γ'(z)/Γ(z)`.
pub fn digamma(z: C64) -> Result<C64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole {
            function: "digamma",
            at: z,
        });
    }
    if z.re < 0.5 {
        // ψ(z) = ψ(1 − z) − π cot(πz)
        let cot = (PI * z).cos() / (PI * z).sin();
        return Ok(digamma(1.0 - z)? - PI * cot);
    }
    let mut z = z;
    let mut acc = C64::new(0.0, 0.0);
    while z.norm() < 12.0 {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // Asymptotic series with Bernoulli numbers B_2k / 2k.
    const B: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ];
    let inv2 = 1.0 / (z * z);
    let mut pow = inv2;
    let mut tail = C64::new(0.0, 0.0);
    for b in B {
        tail += b * pow;
        pow *= inv2;
    }
    Ok(acc + z.ln() - 0.5 / z - tail)
}

/// Product `Π Γ(num) / Π Γ(den)`; zero if any denominator sits on a pole.
pub(crate) fn gamma_ratio(num: &[C64], den: &[C64]) -> Result<C64> {
    if den.iter().any(|&d| is_nonpositive_integer(d)) {
        return Ok(C64::new(0.0, 0.0));
    }
    let mut acc = C64::new(0.0, 0.0);
    for &x in num {
        acc += ln_gamma(x)?;
    }
    for &x in den {
        acc -= ln_gamma(x)?;
    }
    Ok(acc.exp())
}

/// Principal power `base^exponent` with `base^0 = 1`.
pub(crate) fn cpow(base: C64, exponent: C64) -> C64 {
    if exponent.norm() == 0.0 {
        return C64::new(1.0, 0.0);
    }
    (exponent * base.ln()).exp()
}
