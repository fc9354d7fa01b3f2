//! Gauss hypergeometric function ₂F₁.

use crate::error::{Error, Result};
use crate::scalar::{cpow, near_integer, re, Scalar};

use super::gamma::{is_gamma_pole, ln_gamma};
use super::series::{sum_until_converged, EvalOutcome, SeriesConfig};
use super::terminating::{hyp_terminating, hyp_terminating_wide};
use crate::wide::Wide;

/// Half-width of the band around integer a−b where the connection formula
/// is refused.
pub const CONNECTION_INTEGER_TOL: f64 = 1e-6;

/// Pfaff is used up to this |z/(z−1)| before the connection formula; the
/// latter cancels badly when a parameter is large.
const PFAFF_PREFERRED: f64 = 0.85;

fn nonpositive_int(z: Scalar) -> Option<usize> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() && z.re > -1e9 {
        Some((-z.re) as usize)
    } else {
        None
    }
}

/// Direct Maclaurin series, or the finite sum when a or b stops it.
fn direct(a: Scalar, b: Scalar, c: Scalar, z: Scalar, cfg: &SeriesConfig) -> Result<EvalOutcome> {
    let stop = [a, b].into_iter().filter_map(nonpositive_int).min();
    if let Some(n) = stop {
        let v = hyp_terminating(&[a, b], &[c], z, n)?;
        return Ok(EvalOutcome::exact(v, n + 1));
    }
    if is_gamma_pole(c) {
        return Err(Error::PoleArgument(format!("₂F₁ lower parameter {c}")));
    }
    let mut t = re(1.0);
    sum_until_converged(cfg, |k| {
        if k > 0 {
            let j = (k - 1) as f64;
            t = t * (a + j) * (b + j) / ((c + j) * (j + 1.0)) * z;
        }
        Ok(t)
    })
}

/// Γ(p1)Γ(p2)/(Γ(q1)Γ(q2)); zero when a denominator argument is a pole.
fn gamma_quotient(p1: Scalar, p2: Scalar, q1: Scalar, q2: Scalar) -> Result<Scalar> {
    if is_gamma_pole(q1) || is_gamma_pole(q2) {
        return Ok(re(0.0));
    }
    let v = (ln_gamma(p1)? + ln_gamma(p2)? - ln_gamma(q1)? - ln_gamma(q2)?).exp();
    Ok(v)
}

fn pfaff(a: Scalar, b: Scalar, c: Scalar, z: Scalar, cfg: &SeriesConfig) -> Result<EvalOutcome> {
    let w = z / (z - 1.0);
    // pick the Pfaff form whose inner series terminates, if either does
    if nonpositive_int(c - a).is_some() && nonpositive_int(c - b).is_none() {
        let inner = direct(c - a, b, c, w, cfg)?;
        return Ok(inner.scaled(cpow(re(1.0) - z, -b)));
    }
    let inner = direct(a, c - b, c, w, cfg)?;
    Ok(inner.scaled(cpow(re(1.0) - z, -a)))
}

fn connection(
    a: Scalar,
    b: Scalar,
    c: Scalar,
    z: Scalar,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    if near_integer(a - b, CONNECTION_INTEGER_TOL).is_some() {
        return Err(Error::IllConditioned(format!("{}", a - b)));
    }
    let w = re(1.0) / (re(1.0) - z);
    let g1 = gamma_quotient(c, b - a, b, c - a)?;
    let g2 = gamma_quotient(c, a - b, a, c - b)?;
    let mut value = re(0.0);
    let mut err = 0.0;
    let mut terms = 0;
    if g1 != re(0.0) {
        let f = direct(a, c - b, a - b + 1.0, w, cfg)?.scaled(g1 * cpow(re(1.0) - z, -a));
        value += f.value;
        err += f.err_estimate;
        terms += f.terms_used;
    }
    if g2 != re(0.0) {
        let f = direct(b, c - a, b - a + 1.0, w, cfg)?.scaled(g2 * cpow(re(1.0) - z, -b));
        value += f.value;
        err += f.err_estimate;
        terms += f.terms_used;
    }
    Ok(EvalOutcome {
        value,
        converged: true,
        terms_used: terms,
        err_estimate: err,
    })
}

/// ₂F₁(a, b; c; z).
pub fn gauss_2f1(
    a: Scalar,
    b: Scalar,
    c: Scalar,
    z: Scalar,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    cfg.validate()?;
    if z == re(0.0) {
        return Ok(EvalOutcome::exact(re(1.0), 1));
    }
    if nonpositive_int(a).is_some() || nonpositive_int(b).is_some() {
        return direct(a, b, c, z, cfg);
    }
    if is_gamma_pole(c) {
        return Err(Error::PoleArgument(format!("₂F₁ lower parameter {c}")));
    }
    let s = c - a - b;
    if z == re(1.0) {
        // Gauss summation
        if s.re <= 0.0 {
            return Err(Error::DomainError("₂F₁ at z = 1 with Re(c−a−b) ≤ 0".into()));
        }
        let v = gamma_quotient(c, s, c - a, c - b)?;
        return Ok(EvalOutcome::exact(v, 0));
    }
    if (z - 1.0).norm() < cfg.unit_exclusion && s.re <= 0.0 {
        return Err(Error::DomainError(format!(
            "₂F₁ argument {z} too close to 1"
        )));
    }
    let r_direct = z.norm();
    let r_pfaff = (z / (z - 1.0)).norm();
    let r_conn = (re(1.0) / (re(1.0) - z)).norm();
    let conn_ok = near_integer(a - b, CONNECTION_INTEGER_TOL).is_none();

    if r_direct <= 0.5 {
        return direct(a, b, c, z, cfg);
    }
    if r_pfaff <= PFAFF_PREFERRED {
        return pfaff(a, b, c, z, cfg);
    }
    if conn_ok && r_conn < 1.0 {
        return connection(a, b, c, z, cfg);
    }
    if r_direct < 1.0 || r_pfaff < 1.0 {
        return if r_direct <= r_pfaff {
            direct(a, b, c, z, cfg)
        } else {
            pfaff(a, b, c, z, cfg)
        };
    }
    if r_conn < 1.0 {
        return connection(a, b, c, z, cfg);
    }
    Err(Error::DomainError(format!(
        "₂F₁ argument {z} outside every convergent map"
    )))
}

/// Direct series in extended precision for |z| ≤ 0.9, for right-hand sides
/// that subtract nearly equal products of Gauss functions.
pub fn gauss_2f1_wide(a: Scalar, b: Scalar, c: Scalar, z: Scalar, prec: usize) -> Result<Wide> {
    if let Some(n) = [a, b].into_iter().filter_map(nonpositive_int).min() {
        return hyp_terminating_wide(&[a, b], &[c], z, n.max(1), prec);
    }
    if is_gamma_pole(c) {
        return Err(Error::PoleArgument(format!("₂F₁ lower parameter {c}")));
    }
    if z.norm() > 0.9 {
        return Err(Error::DomainError(format!(
            "extended-precision ₂F₁ needs |z| ≤ 0.9, got {z}"
        )));
    }
    let (aw, bw, cw, zw) = (
        Wide::from_scalar(a, prec)?,
        Wide::from_scalar(b, prec)?,
        Wide::from_scalar(c, prec)?,
        Wide::from_scalar(z, prec)?,
    );
    let small = 2f64.powi(16 - prec as i32);
    let max_terms = 100_000;
    let mut term = Wide::one(prec);
    let mut sum = Wide::one(prec);
    let mut quiet = 0;
    for k in 0..max_terms as i64 {
        let num = &(&aw.add_i64(k) * &bw.add_i64(k)) * &zw;
        let den = &cw.add_i64(k) * &Wide::from_i64(k + 1, prec);
        term = &(&term * &num) / &den;
        sum = &sum + &term;
        quiet = if term.norm() <= small * sum.norm() {
            quiet + 1
        } else {
            0
        };
        if quiet == 2 {
            return Ok(sum);
        }
    }
    Err(Error::NotConverged {
        terms: max_terms,
        err_estimate: term.norm(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: f64, b: f64, c: f64, z: f64) -> f64 {
        gauss_2f1(re(a), re(b), re(c), re(z), &SeriesConfig::default())
            .unwrap()
            .value
            .re
    }

    #[test]
    fn examples() {
        assert!((f(0.5, 3.0, 3.0, 0.5) - 2f64.sqrt()).abs() < 1e-14);
        assert_eq!(f(-2.0, -1.0, 2.0, -1.0), 0.0);
        assert_eq!(f(0.3, 0.7, 1.9, 0.0), 1.0);
    }

    #[test]
    fn elementary_closed_forms() {
        // ln(1+z) = z ₂F₁(1,1;2;−z)
        for z in [0.2, 0.7, 0.95, 0.999] {
            let v = z * f(1.0, 1.0, 2.0, -z);
            assert!((v - (1.0 + z).ln()).abs() < 1e-13, "z={z}");
        }
        // arcsin z = z ₂F₁(1/2,1/2;3/2;z²)
        for z in [0.3f64, 0.8, 0.95] {
            let v = z * f(0.5, 0.5, 1.5, z * z);
            assert!((v - z.asin()).abs() < 1e-13, "z={z}");
        }
    }

    #[test]
    fn connection_region() {
        // (1−z)^{−a} for b = c, at z far from the origin
        for z in [-5.0, -30.0, 2.5, 4.0] {
            let v = gauss_2f1(re(0.3), re(1.7), re(1.7), re(z), &SeriesConfig::default()).unwrap();
            let want = cpow(re(1.0 - z), re(-0.3));
            assert!((v.value - want).norm() / want.norm() < 1e-12, "z={z}");
        }
    }

    #[test]
    fn gauss_sum_at_one() {
        let v = f(0.5, 0.25, 2.0, 1.0);
        let want = gamma_quotient(re(2.0), re(1.25), re(1.5), re(1.75))
            .unwrap()
            .re;
        assert!((v - want).abs() < 1e-14);
    }

    #[test]
    fn errors() {
        let cfg = SeriesConfig::default();
        assert!(matches!(
            gauss_2f1(re(0.5), re(0.5), re(-2.0), re(0.3), &cfg),
            Err(Error::PoleArgument(_))
        ));
        assert!(matches!(
            gauss_2f1(re(0.5), re(1.5), re(2.5), Scalar::new(1.0, 3.0), &cfg),
            Err(Error::IllConditioned(_))
        ));
        assert!(matches!(
            gauss_2f1(re(1.5), re(1.5), re(2.0), re(1.0), &cfg),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn wide_series_agrees() {
        for (a, b, c, z) in [
            (0.5, 3.0, 3.0, 0.5),
            (1.95, 11.49, 0.177, -0.48),
            (-0.95, -10.49, 1.82, -0.48),
            (-3.0, 0.5, 1.5, 0.7),
        ] {
            let w = gauss_2f1_wide(re(a), re(b), re(c), re(z), 256)
                .unwrap()
                .to_scalar();
            let d = gauss_2f1(re(a), re(b), re(c), re(z), &SeriesConfig::default())
                .unwrap()
                .value;
            assert!(
                (w - d).norm() <= 1e-10 * w.norm(),
                "{a} {b} {c} {z}: {w} {d}"
            );
        }
        // mpmath: ₂F₁(1.952999520870939, 11.48535805698705; 0.1769469680853224; −0.4844534827755511)
        let w = gauss_2f1_wide(
            re(1.9529995208709394),
            re(11.48535805698705),
            re(0.1769469680853224),
            re(-0.4844534827755511),
            256,
        );
        assert!((w.unwrap().to_scalar().re - 0.312_364_471_126_806_67).abs() < 1e-15);
        assert!(gauss_2f1_wide(re(0.5), re(0.5), re(1.0), re(0.95), 256).is_err());
    }

    #[test]
    fn complex_argument() {
        let z = Scalar::new(0.4, 0.7);
        let v = gauss_2f1(re(1.0), re(1.0), re(2.0), -z, &SeriesConfig::default()).unwrap();
        let want = (re(1.0) + z).ln() / z;
        assert!((v.value - want).norm() < 1e-13);
    }
}
