//! Tanh-sinh quadrature for Euler-type integrals on (0, 1).

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::scalar::{cpow, is_finite, re, Scalar};

use super::series::{Accumulator, EvalOutcome, SeriesConfig};

/// `∫₀¹ u^{γ−1} e^{κu} Π_j (1 − b_j u)^{e_j} du`.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerIntegrand {
    pub gamma: Scalar,
    /// `(b_j, e_j)` pairs.
    pub factors: Vec<(Scalar, Scalar)>,
    /// κ; zero for a pure Euler integral.
    pub exp_coeff: Scalar,
}

impl EulerIntegrand {
    pub fn new(gamma: Scalar, factors: Vec<(Scalar, Scalar)>) -> Self {
        EulerIntegrand {
            gamma,
            factors,
            exp_coeff: re(0.0),
        }
    }

    pub fn with_exp(mut self, kappa: Scalar) -> Self {
        self.exp_coeff = kappa;
        self
    }
}

const T_MAX: f64 = 6.5;
const MAX_LEVEL: u32 = 11;

fn softplus(x: f64) -> f64 {
    if x > 30.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// Integrand times the Jacobian at node t.
fn node(spec: &EulerIntegrand, t: f64) -> Scalar {
    let s = PI * t.sinh();
    // u = 1/(1+e^{−s}), 1−u = 1/(1+e^{s}), both in log form
    let ln_u = -softplus(-s);
    let ln_v = -softplus(s);
    let u = ln_u.exp();
    let v = ln_v.exp();
    // u^{γ−1} · du/dt = π cosh t · u^γ · (1−u)
    let w = (spec.gamma * ln_u).exp() * (PI * t.cosh() * v);
    if w == re(0.0) {
        return w;
    }
    let mut f = w;
    for &(b, e) in &spec.factors {
        f *= cpow(re(1.0) - b * u, e);
    }
    if spec.exp_coeff != re(0.0) {
        f *= (spec.exp_coeff * u).exp();
    }
    f
}

/// Double-exponential quadrature with level doubling until two successive
/// levels agree to `cfg.rel_tol` (floored at a few ulps).
pub fn euler_integral(spec: &EulerIntegrand, cfg: &SeriesConfig) -> Result<EvalOutcome> {
    cfg.validate()?;
    if !(spec.gamma.re > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "Re γ must be positive, got {}",
            spec.gamma
        )));
    }
    for &(b, _) in &spec.factors {
        if b.im == 0.0 && b.re >= 1.0 {
            return Err(Error::SingularIntegrand(format!(
                "factor 1 − {}u vanishes at u = {}",
                b.re,
                1.0 / b.re
            )));
        }
    }
    let tol = cfg.rel_tol.max(64.0 * f64::EPSILON);
    let mut h = 1.0;
    let mut acc = Accumulator::new(cfg.use_compensated_sum);
    let mut evals = 0usize;
    let n0 = (T_MAX / h) as i64;
    for k in -n0..=n0 {
        acc.add(node(spec, k as f64 * h));
        evals += 1;
    }
    let mut prev = acc.value() * h;
    let mut last_diff = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        h /= 2.0;
        let n = (T_MAX / h) as i64;
        let mut k = -n + if n % 2 == 0 { 1 } else { 0 };
        while k <= n {
            acc.add(node(spec, k as f64 * h));
            evals += 1;
            k += 2;
        }
        let cur = acc.value() * h;
        if !is_finite(cur) {
            return Err(Error::NonFinite("quadrature sum".into()));
        }
        last_diff = (cur - prev).norm();
        if level >= 3 && last_diff <= tol * cur.norm() {
            return Ok(EvalOutcome {
                value: cur,
                converged: true,
                terms_used: evals,
                err_estimate: last_diff,
            });
        }
        prev = cur;
    }
    Err(Error::QuadratureNotConverged {
        levels: MAX_LEVEL as usize,
        err_estimate: last_diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(spec: EulerIntegrand) -> Scalar {
        euler_integral(&spec, &SeriesConfig::default())
            .unwrap()
            .value
    }

    #[test]
    fn examples() {
        assert!((run(EulerIntegrand::new(re(1.0), vec![])).re - 1.0).abs() < 1e-14);
        assert!((run(EulerIntegrand::new(re(0.5), vec![])).re - 2.0).abs() < 1e-14);
        let v = run(EulerIntegrand::new(re(2.0), vec![(re(0.5), re(-1.0))])).re;
        assert!((v - 4.0 * (2f64.ln() - 0.5)).abs() < 1e-14);
    }

    #[test]
    fn endpoint_singularity_against_gauss() {
        // ∫₀¹ u^{γ−1}(1−zu)^{−a} du = ₂F₁(a, γ; γ+1; z)/γ
        use crate::hyperkernel::gauss::gauss_2f1;
        let (g, a, z) = (0.2, 0.7, 0.9);
        let v = run(EulerIntegrand::new(re(g), vec![(re(z), re(-a))])).re;
        let f = gauss_2f1(re(a), re(g), re(g + 1.0), re(z), &SeriesConfig::default()).unwrap();
        let want = f.value.re / g;
        assert!((v - want).abs() / want < 1e-12);
    }

    #[test]
    fn exponential_factor() {
        // ∫ e^{-2u} du = (1 − e^{-2})/2
        let v = run(EulerIntegrand::new(re(1.0), vec![]).with_exp(re(-2.0))).re;
        assert!((v - (1.0 - (-2f64).exp()) / 2.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_singular_and_invalid() {
        let cfg = SeriesConfig::default();
        let r = euler_integral(
            &EulerIntegrand::new(re(1.0), vec![(re(2.0), re(-1.0))]),
            &cfg,
        );
        assert!(matches!(r, Err(Error::SingularIntegrand(_))));
        let r = euler_integral(&EulerIntegrand::new(re(-0.5), vec![]), &cfg);
        assert!(matches!(r, Err(Error::InvalidParameter(_))));
    }
}
