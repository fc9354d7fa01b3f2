//! Truncation policy and the shared infinite-series driver.

use crate::error::{Error, Result};
use crate::scalar::{is_finite, Scalar};

/// Truncation policy for infinite series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    pub rel_tol: f64,
    pub max_terms: usize,
    pub use_compensated_sum: bool,
    /// Radius of the disk around z = 1 where ₂F₁ refuses to sum a divergent-at-1 series.
    pub unit_exclusion: f64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            rel_tol: 1e-14,
            max_terms: 10_000,
            use_compensated_sum: true,
            unit_exclusion: 1e-3,
        }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "rel_tol = {}",
                self.rel_tol
            )));
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidParameter("max_terms = 0".into()));
        }
        Ok(())
    }
}

/// Value of a series together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOutcome {
    pub value: Scalar,
    pub converged: bool,
    pub terms_used: usize,
    pub err_estimate: f64,
}

impl EvalOutcome {
    pub fn exact(value: Scalar, terms_used: usize) -> Self {
        EvalOutcome {
            value,
            converged: true,
            terms_used,
            err_estimate: 0.0,
        }
    }

    /// Multiply by a prefactor, scaling the error estimate along with it.
    pub fn scaled(self, factor: Scalar) -> Self {
        EvalOutcome {
            value: self.value * factor,
            err_estimate: self.err_estimate * factor.norm(),
            ..self
        }
    }
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy)]
pub struct Accumulator {
    sum: Scalar,
    comp: Scalar,
    compensated: bool,
}

fn neumaier(sum: f64, comp: &mut f64, x: f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}

impl Accumulator {
    pub fn new(compensated: bool) -> Self {
        Accumulator {
            sum: Scalar::new(0.0, 0.0),
            comp: Scalar::new(0.0, 0.0),
            compensated,
        }
    }

    pub fn add(&mut self, x: Scalar) {
        if self.compensated {
            self.sum.re = neumaier(self.sum.re, &mut self.comp.re, x.re);
            self.sum.im = neumaier(self.sum.im, &mut self.comp.im, x.im);
        } else {
            self.sum += x;
        }
    }

    pub fn value(&self) -> Scalar {
        self.sum + self.comp
    }
}

/// Sums `Σ_k term(k)` from k = 0, stopping once two consecutive terms are
/// both below `rel_tol · |partial sum|`.
pub(crate) fn sum_until_converged<F>(cfg: &SeriesConfig, mut term: F) -> Result<EvalOutcome>
where
    F: FnMut(usize) -> Result<Scalar>,
{
    let mut acc = Accumulator::new(cfg.use_compensated_sum);
    let mut prev_small = false;
    let mut prev_mag = f64::INFINITY;
    for k in 0..cfg.max_terms {
        let t = term(k)?;
        if !is_finite(t) {
            return Err(Error::NonFinite(format!("series term {k}")));
        }
        acc.add(t);
        let s = acc.value().norm();
        let mag = t.norm();
        let small = mag <= cfg.rel_tol * s || mag == 0.0 && s == 0.0;
        if small && prev_small {
            return Ok(EvalOutcome {
                value: acc.value(),
                converged: true,
                terms_used: k + 1,
                err_estimate: mag.max(prev_mag),
            });
        }
        prev_small = small;
        prev_mag = mag;
    }
    Err(Error::NotConverged {
        terms: cfg.max_terms,
        err_estimate: prev_mag,
    })
}
