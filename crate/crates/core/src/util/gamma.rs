//! Complex log-gamma (Lanczos) and the log-space Γ·sin assembly used by the
//! functional-equation factor.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Lanczos coefficients, g = 7, n = 9 (the GSL set).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Bernoulli numbers B_2, B_4, ..., B_32.
pub const BERNOULLI_EVEN: [f64; 16] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
];

/// log Γ(z), analytic on the plane cut along the negative real axis,
/// continuous on vertical lines in the right half-plane (no arg unwinding
/// needed there, which the zero-scan phase θ_χ relies on).
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.0 {
        // reflection in log space: logΓ(z) = log π - log sin(πz) - logΓ(1-z)
        let lnpi = Complex64::new(PI.ln(), 0.0);
        return lnpi - ln_sin(PI * z) - ln_gamma(Complex64::new(1.0, 0.0) - z);
    }
    let zm1 = z - 1.0;
    let mut series = Complex64::new(LANCZOS_P[0], 0.0);
    for (i, p) in LANCZOS_P.iter().enumerate().skip(1) {
        series += p / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt().ln() + (zm1 + 0.5) * t.ln() - t + series.ln()
}

/// Γ(z) for moderate arguments (tests and the near-pole bookkeeping).
pub fn gamma(z: Complex64) -> Complex64 {
    ln_gamma(z).exp()
}

/// log sin(z) assembled from complex exponentials so that |Im z| up to ~10^3
/// neither overflows nor loses the dominant phase. Any 2πi branch offset is
/// harmless: callers only exponentiate sums of these logs.
pub fn ln_sin(z: Complex64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    let ln_2i = Complex64::new(2.0_f64.ln(), PI / 2.0);
    if z.im >= 0.0 {
        // sin z = -e^{-iz}(1 - e^{2iz}) / (2i)
        let small = (2.0 * i * z).exp();
        -i * z + (Complex64::new(1.0, 0.0) - small).ln() - ln_2i + Complex64::new(0.0, PI)
    } else {
        // sin z = e^{iz}(1 - e^{-2iz}) / (2i)
        let small = (-2.0 * i * z).exp();
        i * z + (Complex64::new(1.0, 0.0) - small).ln() - ln_2i
    }
}

/// log of Γ(1-s)·sin(π(s+κ)/2) with explicit bookkeeping at integer s where
/// Γ(1-s) has a pole: if the sine zero cancels it the finite limit is used,
/// otherwise this is a genuine pole of the product.
///
/// At s = m ≥ 1 with m + κ even the limit is
///   (-1)^m (-1)^{(m+κ)/2} (π/2) / (m-1)!.
pub fn ln_gamma_sin_half(s: Complex64, kappa: u8) -> Result<Complex64> {
    let m = s.re.round();
    let near_int = (s.re - m).abs() < 1e-9 && s.im.abs() < 1e-9 && m >= 1.0;
    if near_int {
        let mi = m as i64;
        if (mi + kappa as i64) % 2 == 0 {
            // cancelled pole: return log of the limit value
            let mut val = PI / 2.0;
            let mut sign = if mi % 2 == 0 { 1.0 } else { -1.0 };
            if (mi + kappa as i64) / 2 % 2 != 0 {
                sign = -sign;
            }
            for k in 1..mi {
                val /= k as f64;
            }
            return Ok(Complex64::new(val.ln(), if sign < 0.0 { PI } else { 0.0 }));
        }
        return Err(Error::Pole(s));
    }
    let one = Complex64::new(1.0, 0.0);
    Ok(ln_gamma(one - s) + ln_sin(PI / 2.0 * (s + kappa as f64)))
}
