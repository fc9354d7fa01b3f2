//! Complex binary64 scalars and a few helpers shared by every module.

use num_complex::Complex64;

/// All evaluations are complex-capable.
pub type Scalar = Complex64;

pub fn re(x: f64) -> Scalar {
    Scalar::new(x, 0.0)
}

pub fn is_finite(z: Scalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Nearest integer to `z` when `z` is within `tol` of a real integer.
pub fn near_integer(z: Scalar, tol: f64) -> Option<i64> {
    let r = z.re.round();
    if (z.re - r).abs() <= tol && z.im.abs() <= tol && r.abs() < 9.0e15 {
        Some(r as i64)
    } else {
        None
    }
}

/// True when `z` lies within `tol` of 0, -1, -2, ...
pub fn near_nonpositive_integer(z: Scalar, tol: f64) -> bool {
    matches!(near_integer(z, tol), Some(k) if k <= 0)
}

/// `|a - b| / |b|`, falling back to the absolute difference when `b` is zero.
pub fn rel_diff(a: Scalar, b: Scalar) -> f64 {
    let d = (a - b).norm();
    let s = b.norm();
    if s > 0.0 {
        d / s
    } else {
        d
    }
}

/// Principal-branch power `base^exponent`, with `0^0 = 1`.
pub fn cpow(base: Scalar, exponent: Scalar) -> Scalar {
    if exponent == Scalar::new(0.0, 0.0) {
        return re(1.0);
    }
    if base == Scalar::new(0.0, 0.0) {
        return Scalar::new(0.0, 0.0);
    }
    if base.im == 0.0 && exponent.im == 0.0 && base.re > 0.0 {
        return re(base.re.powf(exponent.re));
    }
    (exponent * base.ln()).exp()
}

/// Integer power by repeated squaring; keeps real inputs exactly real.
pub fn ipow(base: Scalar, k: i64) -> Scalar {
    if k < 0 {
        return re(1.0) / ipow(base, -k);
    }
    base.powu(k as u32)
}
