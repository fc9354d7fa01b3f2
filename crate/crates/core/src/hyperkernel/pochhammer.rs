//! Rising factorials.

use crate::error::{Error, Result};
use crate::scalar::{re, Scalar};

use super::gamma::ln_gamma;

/// Above this many factors the product is replaced by a log-gamma difference.
const DIRECT_LIMIT: usize = 512;

/// `(a)_k = a(a+1)···(a+k−1)`.
pub fn pochhammer(a: Scalar, k: usize) -> Scalar {
    if k <= DIRECT_LIMIT {
        let mut p = re(1.0);
        for j in 0..k {
            p *= a + j as f64;
        }
        return p;
    }
    match pochhammer_log(a, k) {
        Ok((mag, phase)) => phase * mag.exp(),
        Err(_) => re(0.0),
    }
}

/// `(a)_k` as `(ln|(a)_k|, phase)` with `|phase| = 1`.
pub fn pochhammer_log(a: Scalar, k: usize) -> Result<(f64, Scalar)> {
    if a.im == 0.0 && a.re <= 0.0 && a.re == a.re.round() && (-a.re) < k as f64 {
        return Err(Error::ZeroPochhammer);
    }
    if k <= DIRECT_LIMIT {
        let mut mag = 0.0;
        let mut phase = re(1.0);
        for j in 0..k {
            let f = a + j as f64;
            let n = f.norm();
            mag += n.ln();
            phase *= f / n;
        }
        let n = phase.norm();
        return Ok((mag, phase / n));
    }
    if a.im == 0.0 {
        // explicit sign for real arguments: one sign flip per negative factor
        let negatives = if a.re < 0.0 {
            ((-a.re).ceil() as usize).min(k)
        } else {
            0
        };
        let sign = if negatives % 2 == 0 { 1.0 } else { -1.0 };
        let lg = ln_gamma(a + k as f64)? - ln_gamma(a)?;
        return Ok((lg.re, re(sign)));
    }
    let lg = ln_gamma(a + k as f64)? - ln_gamma(a)?;
    Ok((lg.re, Scalar::from_polar(1.0, lg.im)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(pochhammer(re(7.3), 0), re(1.0));
        assert_eq!(pochhammer(re(2.0), 3), re(24.0));
        assert_eq!(pochhammer(re(-3.0), 5), re(0.0));
        let (m, p) = pochhammer_log(re(2.0), 3).unwrap();
        assert!((m - 24f64.ln()).abs() < 1e-15 && p == re(1.0));
        assert_eq!(pochhammer_log(re(0.5), 0).unwrap(), (0.0, re(1.0)));
        assert!(matches!(
            pochhammer_log(re(-3.0), 5),
            Err(Error::ZeroPochhammer)
        ));
    }

    #[test]
    fn log_form_matches_gamma() {
        let (m, p) = pochhammer_log(re(1.5), 100).unwrap();
        let lg = (ln_gamma(re(101.5)).unwrap() - ln_gamma(re(1.5)).unwrap()).re;
        assert!((m - lg).abs() / lg.abs() < 1e-12);
        assert_eq!(p, re(1.0));
    }

    #[test]
    fn negative_real_sign() {
        // (-2.5)_3 = (-2.5)(-1.5)(-0.5) < 0
        let (_, p) = pochhammer_log(re(-2.5), 3).unwrap();
        assert!((p.re + 1.0).abs() < 1e-15);
        // long product through the gamma path keeps the same sign as the direct one
        let (m_long, p_long) = pochhammer_log(re(-2.5), 600).unwrap();
        let direct: f64 = (0..600).map(|j| (-2.5f64 + j as f64).abs().ln()).sum();
        assert!((m_long - direct).abs() / direct.abs() < 1e-12);
        assert_eq!(p_long, re(-1.0));
    }

    #[test]
    fn complex_phase_has_unit_modulus() {
        let a = Scalar::new(0.3, 2.0);
        let (m, p) = pochhammer_log(a, 7).unwrap();
        assert!((p.norm() - 1.0).abs() < 1e-14);
        let direct = pochhammer(a, 7);
        assert!((p * m.exp() - direct).norm() / direct.norm() < 1e-13);
    }
}
