//! Appell F₁ and Humbert Φ₁ as single sums over inner ₂F₁ / ₁F₁ values.

use crate::error::{Error, Result};
use crate::scalar::{cpow, re, Scalar};

use super::gamma::is_gamma_pole;
use super::gauss::gauss_2f1;
use super::kummer::kummer_1f1;
use super::series::{sum_until_converged, EvalOutcome, SeriesConfig};

fn f1_single_sum(
    alpha: Scalar,
    beta1: Scalar,
    beta2: Scalar,
    sigma: Scalar,
    x: Scalar,
    y: Scalar,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    if x == re(0.0) {
        return gauss_2f1(alpha, beta2, sigma, y, cfg);
    }
    let mut coeff = re(1.0);
    let mut inner_terms = 0;
    let mut out = sum_until_converged(cfg, |m| {
        if m > 0 {
            let j = (m - 1) as f64;
            coeff = coeff * (alpha + j) * (beta1 + j) / ((sigma + j) * (j + 1.0)) * x;
        }
        if coeff == re(0.0) {
            return Ok(coeff);
        }
        let inner = gauss_2f1(alpha + m as f64, beta2, sigma + m as f64, y, cfg)?;
        inner_terms += inner.terms_used;
        Ok(coeff * inner.value)
    })?;
    out.terms_used += inner_terms;
    Ok(out)
}

/// Appell F₁[α, β₁, β₂; σ; x, y].
///
/// Summed directly inside the unit bidisk, otherwise after the map
/// `(x, y) → (x/(x−1), y/(y−1))`, whichever gives the smaller arguments.
pub fn appell_f1(
    alpha: Scalar,
    beta1: Scalar,
    beta2: Scalar,
    sigma: Scalar,
    x: Scalar,
    y: Scalar,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    cfg.validate()?;
    if is_gamma_pole(sigma) {
        return Err(Error::PoleArgument(format!("F₁ lower parameter {sigma}")));
    }
    let m_direct = x.norm().max(y.norm());
    let (xt, yt) = (x / (x - 1.0), y / (y - 1.0));
    let m_trans = if x == re(1.0) || y == re(1.0) {
        f64::INFINITY
    } else {
        xt.norm().max(yt.norm())
    };
    if m_direct < 1.0 && (m_direct <= 0.6 || m_direct <= m_trans) {
        return f1_single_sum(alpha, beta1, beta2, sigma, x, y, cfg);
    }
    if m_trans < 1.0 {
        let pref = cpow(re(1.0) - x, -beta1) * cpow(re(1.0) - y, -beta2);
        let inner = f1_single_sum(sigma - alpha, beta1, beta2, sigma, xt, yt, cfg)?;
        return Ok(inner.scaled(pref));
    }
    if m_direct < 1.0 {
        return f1_single_sum(alpha, beta1, beta2, sigma, x, y, cfg);
    }
    Err(Error::DomainError(format!(
        "F₁ arguments ({x}, {y}) outside the unit bidisk before and after transformation"
    )))
}

/// F₁ by its defining double series, for `|x|, |y| < 1`.
pub fn appell_f1_double(
    alpha: Scalar,
    beta1: Scalar,
    beta2: Scalar,
    sigma: Scalar,
    x: Scalar,
    y: Scalar,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    cfg.validate()?;
    if is_gamma_pole(sigma) {
        return Err(Error::PoleArgument(format!("F₁ lower parameter {sigma}")));
    }
    if x.norm() >= 1.0 || y.norm() >= 1.0 {
        return Err(Error::DomainError(
            "F₁ double series needs |x|, |y| < 1".into(),
        ));
    }
    let mut row = re(1.0);
    sum_until_converged(cfg, |m| {
        let mf = m as f64;
        if m > 0 {
            let j = mf - 1.0;
            row = row * (alpha + j) * (beta1 + j) / ((sigma + j) * (j + 1.0)) * x;
        }
        let row0 = row;
        let mut t = row0;
        let inner = sum_until_converged(cfg, |n| {
            if n > 0 {
                let j = (n - 1) as f64;
                t = t * (alpha + mf + j) * (beta2 + j) / ((sigma + mf + j) * (j + 1.0)) * y;
            }
            Ok(t)
        });
        match inner {
            Ok(o) => Ok(o.value),
            Err(_) if row0 == re(0.0) => Ok(re(0.0)),
            Err(e) => Err(e),
        }
    })
}

/// Humbert Φ₁[α₁, λ; α₂; x, y] for `|x| < 1`.
pub fn humbert_phi1(
    alpha1: Scalar,
    lambda: Scalar,
    alpha2: Scalar,
    x: Scalar,
    y: Scalar,
    cfg: &SeriesConfig,
) -> Result<EvalOutcome> {
    cfg.validate()?;
    if is_gamma_pole(alpha2) {
        return Err(Error::PoleArgument(format!("Φ₁ lower parameter {alpha2}")));
    }
    if x.norm() >= 1.0 {
        return Err(Error::DomainError(format!("Φ₁ needs |x| < 1, got {x}")));
    }
    if x == re(0.0) {
        return kummer_1f1(alpha1, alpha2, y, cfg);
    }
    let mut coeff = re(1.0);
    sum_until_converged(cfg, |m| {
        if m > 0 {
            let j = (m - 1) as f64;
            coeff = coeff * (alpha1 + j) * (lambda + j) / ((alpha2 + j) * (j + 1.0)) * x;
        }
        if coeff == re(0.0) {
            return Ok(coeff);
        }
        let inner = kummer_1f1(alpha1 + m as f64, alpha2 + m as f64, y, cfg)?;
        Ok(coeff * inner.value)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    #[test]
    fn collapses_to_gauss() {
        let (a, b1, b2, s, x) = (re(0.7), re(1.3), re(-0.4), re(2.2), re(0.45));
        let f1 = appell_f1(a, b1, b2, s, x, re(0.0), &cfg()).unwrap().value;
        let g = gauss_2f1(a, b1, s, x, &cfg()).unwrap().value;
        assert!((f1 - g).norm() < 1e-14);
    }

    #[test]
    fn equal_arguments_reduction() {
        let (g, l1, l2, t) = (0.8, 0.4, 1.1, 0.35);
        let f1 = appell_f1(re(g), re(l1), re(l2), re(g + 1.0), re(t), re(t), &cfg())
            .unwrap()
            .value;
        let f = gauss_2f1(re(g), re(l1 + l2), re(g + 1.0), re(t), &cfg())
            .unwrap()
            .value;
        assert!((f1 - f).norm() / f.norm() < 1e-13);
        let f1 = appell_f1(re(0.5), re(0.3), re(0.7), re(1.5), re(0.2), re(0.2), &cfg())
            .unwrap()
            .value;
        let f = gauss_2f1(re(0.5), re(1.0), re(1.5), re(0.2), &cfg())
            .unwrap()
            .value;
        assert!((f1 - f).norm() / f.norm() < 1e-12);
    }

    #[test]
    fn transformed_region() {
        // x, y near −1 only converge after the transformation
        let args = (re(0.6), re(0.5), re(1.2), re(1.9));
        let (x, y) = (re(-2.5), re(-0.9));
        let f = appell_f1(args.0, args.1, args.2, args.3, x, y, &cfg())
            .unwrap()
            .value;
        let g = appell_f1(
            args.3 - args.0,
            args.1,
            args.2,
            args.3,
            x / (x - 1.0),
            y / (y - 1.0),
            &cfg(),
        )
        .unwrap()
        .value
            * cpow(re(1.0) - x, -args.1)
            * cpow(re(1.0) - y, -args.2);
        assert!((f - g).norm() / f.norm() < 1e-12);
    }

    #[test]
    fn domain_error() {
        let r = appell_f1(re(0.5), re(0.5), re(0.5), re(1.5), re(3.0), re(0.1), &cfg());
        assert!(matches!(r, Err(Error::DomainError(_))));
        assert!(humbert_phi1(re(0.5), re(0.5), re(1.5), re(1.0), re(0.1), &cfg()).is_err());
    }

    #[test]
    fn phi1_edges() {
        let (a1, l, a2) = (re(0.4), re(0.6), re(1.4));
        let p = humbert_phi1(a1, l, a2, re(0.3), re(0.0), &cfg())
            .unwrap()
            .value;
        let g = gauss_2f1(a1, l, a2, re(0.3), &cfg()).unwrap().value;
        assert!((p - g).norm() < 1e-14);
        let p = humbert_phi1(a1, l, a2, re(0.0), re(-0.5), &cfg())
            .unwrap()
            .value;
        let k = kummer_1f1(a1, a2, re(-0.5), &cfg()).unwrap().value;
        assert!((p - k).norm() < 1e-15);
    }

    #[test]
    fn phi1_is_limit_of_f1() {
        let (a1, l, a2, x, y) = (re(0.4), re(0.6), re(1.4), re(0.3), re(-0.5));
        let mu = 1e6;
        let p = humbert_phi1(a1, l, a2, x, y, &cfg()).unwrap().value;
        let f = appell_f1(a1, l, re(mu), a2, x, y / mu, &cfg())
            .unwrap()
            .value;
        assert!((p - f).norm() / p.norm() < 1e-5);
    }
}
