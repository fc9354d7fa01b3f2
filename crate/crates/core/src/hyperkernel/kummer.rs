//! Confluent hypergeometric function ₁F₁.

use crate::error::{Error, Result};
use crate::scalar::{re, Scalar};

use super::gamma::is_gamma_pole;
use super::series::{sum_until_converged, EvalOutcome, SeriesConfig};
use super::terminating::hyp_terminating;

fn series(a: Scalar, b: Scalar, z: Scalar, cfg: &SeriesConfig) -> Result<EvalOutcome> {
    if a.im == 0.0 && a.re <= 0.0 && a.re == a.re.round() {
        let n = (-a.re) as usize;
        let v = hyp_terminating(&[a], &[b], z, n)?;
        return Ok(EvalOutcome::exact(v, n + 1));
    }
    let mut t = re(1.0);
    sum_until_converged(cfg, |k| {
        if k > 0 {
            let j = (k - 1) as f64;
            t = t * (a + j) / ((b + j) * (j + 1.0)) * z;
        }
        Ok(t)
    })
}

/// ₁F₁(a; b; z), summed as a same-sign series by Kummer's transformation
/// when Re z < 0.
pub fn kummer_1f1(a: Scalar, b: Scalar, z: Scalar, cfg: &SeriesConfig) -> Result<EvalOutcome> {
    cfg.validate()?;
    if is_gamma_pole(b) {
        return Err(Error::PoleArgument(format!("₁F₁ lower parameter {b}")));
    }
    if z == re(0.0) {
        return Ok(EvalOutcome::exact(re(1.0), 1));
    }
    let a_terminates = a.im == 0.0 && a.re <= 0.0 && a.re == a.re.round();
    if z.re < 0.0 && !a_terminates {
        let inner = series(b - a, b, -z, cfg)?;
        return Ok(inner.scaled(z.exp()));
    }
    series(a, b, z, cfg)
}
