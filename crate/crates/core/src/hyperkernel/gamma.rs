//! Gamma function family for complex arguments (Lanczos, g = 7).

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::scalar::{near_integer, re, Scalar};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// True when `z` is exactly 0, -1, -2, ...
pub fn is_gamma_pole(z: Scalar) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Complex log-gamma. The imaginary part is only determined modulo 2π;
/// callers exponentiate, so the branch does not matter.
pub fn ln_gamma(z: Scalar) -> Result<Scalar> {
    if is_gamma_pole(z) {
        return Err(Error::PoleArgument(format!("{z}")));
    }
    Ok(ln_gamma_unchecked(z))
}

fn ln_gamma_unchecked(z: Scalar) -> Scalar {
    if z.re < 0.5 {
        // reflection: Γ(z)Γ(1-z) = π / sin(πz)
        let s = (z * PI).sin();
        return re(PI.ln()) - s.ln() - ln_gamma_unchecked(re(1.0) - z);
    }
    let z = z - 1.0;
    let mut x = re(LANCZOS[0]);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        x += re(p) / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    re(0.5 * (2.0 * PI).ln()) + (z + 0.5) * t.ln() - t + x.ln()
}

pub fn gamma(z: Scalar) -> Result<Scalar> {
    let v = ln_gamma(z)?.exp();
    Ok(if z.im == 0.0 { re(v.re) } else { v })
}

/// 1/Γ(z), entire: zero at the poles of Γ.
pub fn rgamma(z: Scalar) -> Scalar {
    if is_gamma_pole(z) {
        return re(0.0);
    }
    let v = (-ln_gamma_unchecked(z)).exp();
    if z.im == 0.0 {
        re(v.re)
    } else {
        v
    }
}

/// Γ(z+a)/Γ(z+b) via a log-gamma difference.
pub fn gamma_ratio(z: Scalar, a: Scalar, b: Scalar) -> Result<Scalar> {
    let (za, zb) = (z + a, z + b);
    if is_gamma_pole(za) || is_gamma_pole(zb) {
        return Err(Error::PoleArgument(format!("Γ({za})/Γ({zb})")));
    }
    let v = (ln_gamma_unchecked(za) - ln_gamma_unchecked(zb)).exp();
    Ok(if za.im == 0.0 && zb.im == 0.0 {
        re(v.re)
    } else {
        v
    })
}

/// Distance-aware pole test used by callers that reject near-poles.
pub fn near_gamma_pole(z: Scalar, tol: f64) -> bool {
    matches!(near_integer(z, tol), Some(k) if k <= 0)
}
