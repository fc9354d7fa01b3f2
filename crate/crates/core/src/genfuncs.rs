//! Generating functions: truncated left-hand sides from the recurrences and
//! closed right-hand sides in terms of F₁, Φ₁, ₂F₁, ₁F₁, elementary
//! functions and Euler integrals. Also the Charlier generating-function ODE
//! and the convolution identities.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperkernel::{
    appell_f1, euler_integral, gauss_2f1, humbert_phi1, hyp_terminating, kummer_1f1,
    EulerIntegrand, SeriesConfig,
};
use crate::recurrences::{
    charlier_wide, laguerre_wide, meixner_wide, CharlierParams, FamilyParams, LaguerreParams,
    MeixnerParams,
};
use crate::report::{point, IdentityReport};
use crate::scalar::{cpow, re, Scalar};
use crate::wide::{Wide, DEFAULT_PRECISION};

/// Hard cap for automatic truncation escalation.
pub const MAX_TRUNCATION: usize = 960;
pub const DEFAULT_TRUNCATION: usize = 60;

/// Coefficient sequence multiplying `t^n P_n(x)` on the series side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Normalization {
    /// Meixner: c^n/(γ+β)_n.
    ByGammaBeta,
    /// Meixner: c^n/(γ+1)_n; Charlier: 1/(γ+1)_n.
    ByGammaOne,
    /// Meixner: c^n/n!; Charlier: 1/n!; Laguerre: 1/n!.
    ByFactorial,
    /// 1.
    Plain,
    /// γ/(n+γ) times the `ByFactorial` coefficient (Plain for Laguerre),
    /// applied to the classical (γ = 0) polynomials.
    WeightedGammaOverNPlusGamma,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GfSpec {
    pub family: FamilyParams,
    pub x: Scalar,
    pub t: Scalar,
    pub normalization: Normalization,
    pub truncation_n: usize,
    /// Largest acceptable `|last term| / |partial sum|`.
    pub tail_tol: f64,
}

impl GfSpec {
    pub fn new(family: FamilyParams, x: Scalar, t: Scalar, normalization: Normalization) -> Self {
        GfSpec {
            family,
            x,
            t,
            normalization,
            truncation_n: DEFAULT_TRUNCATION,
            tail_tol: 1e-13,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSum {
    pub value: Scalar,
    pub n_used: usize,
    pub tail: f64,
}

fn w(z: Scalar) -> Result<Wide> {
    Wide::from_scalar(z, DEFAULT_PRECISION)
}

fn with_gamma(family: &FamilyParams, gamma: f64) -> FamilyParams {
    match *family {
        FamilyParams::Meixner(p) => FamilyParams::Meixner(MeixnerParams { gamma, ..p }),
        FamilyParams::Charlier(p) => FamilyParams::Charlier(CharlierParams { gamma, ..p }),
        FamilyParams::Laguerre(p) => FamilyParams::Laguerre(LaguerreParams { gamma, ..p }),
        other => other,
    }
}

fn sequence_wide(family: &FamilyParams, x: Scalar, n: usize) -> Result<Vec<Wide>> {
    match family {
        FamilyParams::Meixner(p) => meixner_wide(x, p, n),
        FamilyParams::Charlier(p) => charlier_wide(x, p, n),
        FamilyParams::Laguerre(p) => laguerre_wide(x, p, n),
        FamilyParams::MeixnerPollaczek(_) => Err(Error::InvalidParameter(
            "no generating function is implemented for the Meixner–Pollaczek family".into(),
        )),
    }
}

/// Ratio coef_n / coef_{n−1} (n ≥ 1) of the normalizing sequence, without
/// the γ/(n+γ) weight.
fn coefficient_ratio(family: &FamilyParams, norm: Normalization, n: usize) -> Result<Wide> {
    let prec = DEFAULT_PRECISION;
    let m = n as i64 - 1;
    let rho = match family {
        FamilyParams::Meixner(p) => w(p.c)?,
        _ => Wide::one(prec),
    };
    let gamma = w(re(family.gamma()))?;
    let unsupported = || {
        Error::InvalidParameter(format!(
            "normalization {norm:?} is not defined for this family"
        ))
    };
    Ok(match (family, norm) {
        (FamilyParams::Meixner(p), Normalization::ByGammaBeta) => {
            &rho / &(&gamma + &w(re(p.beta))?).add_i64(m)
        }
        (FamilyParams::Meixner(_) | FamilyParams::Charlier(_), Normalization::ByGammaOne) => {
            &rho / &gamma.add_i64(m + 1)
        }
        (FamilyParams::Laguerre(_), Normalization::Plain) => Wide::one(prec),
        (FamilyParams::Laguerre(_), Normalization::WeightedGammaOverNPlusGamma) => Wide::one(prec),
        (_, Normalization::ByFactorial | Normalization::WeightedGammaOverNPlusGamma) => {
            &rho / &Wide::from_i64(n as i64, prec)
        }
        _ => return Err(unsupported()),
    })
}

/// `Σ_{n=0}^{N} coef_n t^n P_n(x)` with the last-term tail check.
pub fn gf_lhs_partial(spec: &GfSpec) -> Result<PartialSum> {
    if spec.truncation_n < 1 {
        return Err(Error::InvalidParameter(
            "truncation N must be at least 1".into(),
        ));
    }
    let n_max = spec.truncation_n;
    let weighted = spec.normalization == Normalization::WeightedGammaOverNPlusGamma;
    let gamma = spec.family.gamma();
    let family = if weighted {
        with_gamma(&spec.family, 0.0)
    } else {
        spec.family
    };
    let values = sequence_wide(&family, spec.x, n_max)?;
    let prec = DEFAULT_PRECISION;
    let t = w(spec.t)?;
    let gw = w(re(gamma))?;
    let mut coef = Wide::one(prec);
    let mut sum = Wide::zero(prec);
    let mut last = [0.0f64; 2];
    for (n, v) in values.iter().enumerate() {
        if n > 0 {
            coef = &(&coef * &coefficient_ratio(&spec.family, spec.normalization, n)?) * &t;
        }
        let mut term = &coef * v;
        if weighted {
            if (n as f64 + gamma).abs() < 1e-6 {
                return Err(Error::InvalidParameter(format!(
                    "weight γ/(n+γ) singular at n = {n}"
                )));
            }
            term = &(&term * &gw) / &gw.add_i64(n as i64);
        }
        last = [last[1], term.norm()];
        sum = &sum + &term;
    }
    let value = sum.to_scalar();
    let tail = last[0].max(last[1]);
    if tail > spec.tail_tol * value.norm() {
        return Err(Error::TailTooLarge {
            last: tail,
            sum: value.norm(),
        });
    }
    Ok(PartialSum {
        value,
        n_used: n_max,
        tail,
    })
}

/// Repeats [`gf_lhs_partial`] with N doubled until the tail passes or
/// [`MAX_TRUNCATION`] is exceeded.
pub fn gf_lhs_auto(spec: &GfSpec) -> Result<PartialSum> {
    let mut s = *spec;
    loop {
        match gf_lhs_partial(&s) {
            Err(Error::TailTooLarge { .. }) if s.truncation_n * 2 <= MAX_TRUNCATION => {
                s.truncation_n *= 2;
            }
            other => return other,
        }
    }
}

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

fn meixner_t_domain(p: &MeixnerParams, t: Scalar) -> Result<()> {
    let bound = 1.0f64.min(1.0 / p.c.norm());
    if t.norm() >= bound {
        return Err(Error::DomainError(format!(
            "|t| = {} must be below {bound}",
            t.norm()
        )));
    }
    Ok(())
}

/// Σ c^n/(γ+β)_n · M_n t^n as (1−ct)^{−1} F₁[1, γ, −x; γ+β; t, t(1−c)/(1−ct)].
pub fn gf_meixner_appell(x: Scalar, p: &MeixnerParams, t: Scalar) -> Result<Scalar> {
    meixner_t_domain(p, t)?;
    let c = p.c;
    let one_ct = re(1.0) - c * t;
    let y = t * (re(1.0) - c) / one_ct;
    let f = appell_f1(re(1.0), re(p.gamma), -x, re(p.gamma + p.beta), t, y, &cfg())?;
    Ok(f.value / one_ct)
}

/// γ = 0 case of [`gf_meixner_appell`]: (1−ct)^{−1} ₂F₁(1, −x; β; t(1−c)/(1−ct)).
pub fn gf_meixner_classical(x: Scalar, beta: f64, c: Scalar, t: Scalar) -> Result<Scalar> {
    let one_ct = re(1.0) - c * t;
    let y = t * (re(1.0) - c) / one_ct;
    Ok(gauss_2f1(re(1.0), -x, re(beta), y, &cfg())?.value / one_ct)
}

fn meixner_alt_prefactor(x: Scalar, p: &MeixnerParams, t: Scalar) -> Scalar {
    cpow(re(1.0) - p.c * t, -x - p.beta) * cpow(re(1.0) - t, x)
}

/// Σ c^n/(γ+1)_n · M_n t^n as (1−ct)^{−β−x}(1−t)^x F₁[γ, 1−β−x, 1+x; γ+1; ct, t].
pub fn gf_meixner_alt(x: Scalar, p: &MeixnerParams, t: Scalar) -> Result<Scalar> {
    meixner_t_domain(p, t)?;
    let g = re(p.gamma);
    let f = appell_f1(
        g,
        re(1.0 - p.beta) - x,
        x + 1.0,
        g + 1.0,
        p.c * t,
        t,
        &cfg(),
    )?;
    Ok(meixner_alt_prefactor(x, p, t) * f.value)
}

/// Classical Σ (ct)^n/n! M_n = (1−ct)^{−β−x}(1−t)^x.
pub fn gf_meixner_elementary(x: Scalar, p: &MeixnerParams, t: Scalar) -> Result<Scalar> {
    meixner_t_domain(p, t)?;
    Ok(meixner_alt_prefactor(x, p, t))
}

/// Euler-integral form of [`gf_meixner_alt`].
pub fn gf_meixner_integral(x: Scalar, p: &MeixnerParams, t: Scalar) -> Result<Scalar> {
    meixner_t_domain(p, t)?;
    if !(p.gamma > 0.0) {
        return Err(Error::InvalidParameter("integral form needs γ > 0".into()));
    }
    let spec = EulerIntegrand::new(
        re(p.gamma),
        vec![(p.c * t, x + p.beta - 1.0), (t, -x - 1.0)],
    );
    let i = euler_integral(&spec, &cfg())?;
    Ok(meixner_alt_prefactor(x, p, t) * i.value * p.gamma)
}

fn charlier_t_domain(p: &CharlierParams, t: Scalar) -> Result<()> {
    if t.norm() >= p.a.abs() {
        return Err(Error::DomainError(format!(
            "|t| = {} must be below |a| = {}",
            t.norm(),
            p.a.abs()
        )));
    }
    Ok(())
}

fn charlier_prefactor(x: Scalar, p: &CharlierParams, t: Scalar) -> Scalar {
    t.exp() * cpow(re(1.0) - t / p.a, x)
}

/// Σ C_n t^n/(γ+1)_n as e^t(1−t/a)^x Φ₁[γ, x+1; γ+1; t/a, −t].
pub fn gf_charlier_phi1(x: Scalar, p: &CharlierParams, t: Scalar) -> Result<Scalar> {
    charlier_t_domain(p, t)?;
    let g = re(p.gamma);
    let phi = humbert_phi1(g, x + 1.0, g + 1.0, t / p.a, -t, &cfg())?;
    Ok(charlier_prefactor(x, p, t) * phi.value)
}

/// Classical Σ C_n t^n/n! = e^t(1−t/a)^x.
pub fn gf_charlier_classical(x: Scalar, p: &CharlierParams, t: Scalar) -> Result<Scalar> {
    charlier_t_domain(p, t)?;
    Ok(charlier_prefactor(x, p, t))
}

/// |t(a−t)G′ + (t² + (x−a−γ)t + aγ)G − aγ| with a five-point derivative.
pub fn gf_charlier_ode_residual(x: Scalar, p: &CharlierParams, t: Scalar, h: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::InvalidParameter(format!("step h = {h}")));
    }
    if t.norm() + 2.0 * h >= p.a.abs() {
        return Err(Error::DomainError("stencil leaves |t| < |a|".into()));
    }
    let g = |s: Scalar| gf_charlier_phi1(x, p, s);
    let hh = re(h);
    let d =
        (g(t - hh * 2.0)? - g(t - hh)? * 8.0 + g(t + hh)? * 8.0 - g(t + hh * 2.0)?) / (12.0 * h);
    let a = p.a;
    let ag = a * p.gamma;
    let r = t * (re(a) - t) * d + (t * t + (x - a - p.gamma) * t + ag) * g(t)? - ag;
    Ok(r.norm())
}

/// Euler-integral form of [`gf_charlier_phi1`], with an exponential weight.
pub fn gf_charlier_integral(x: Scalar, p: &CharlierParams, t: Scalar) -> Result<Scalar> {
    charlier_t_domain(p, t)?;
    if !(p.gamma > 0.0) {
        return Err(Error::InvalidParameter("integral form needs γ > 0".into()));
    }
    let spec = EulerIntegrand::new(re(p.gamma), vec![(t / p.a, -x - 1.0)]).with_exp(-t);
    let i = euler_integral(&spec, &cfg())?;
    Ok(charlier_prefactor(x, p, t) * i.value * p.gamma)
}

fn laguerre_t_domain(t: Scalar) -> Result<()> {
    if t.norm() >= 0.5 {
        return Err(Error::DomainError(format!(
            "|t| = {} must be below 1/2",
            t.norm()
        )));
    }
    Ok(())
}

/// Σ L_n t^n as (1−t)^{−γ−α−1} e^{xt/(t−1)} Φ₁[γ, γ+α; γ+1; t/(t−1), −xt/(t−1)].
pub fn gf_laguerre(x: Scalar, p: &LaguerreParams, t: Scalar) -> Result<Scalar> {
    laguerre_t_domain(t)?;
    let (g, a) = (re(p.gamma), re(p.alpha));
    let s = t / (t - 1.0);
    let phi = humbert_phi1(g, g + a, g + 1.0, s, -x * s, &cfg())?;
    Ok(cpow(re(1.0) - t, -g - a - 1.0) * (x * s).exp() * phi.value)
}

/// Classical Σ L_n^{(α)} t^n = (1−t)^{−α−1} e^{xt/(t−1)}.
pub fn gf_laguerre_classical(x: Scalar, alpha: f64, t: Scalar) -> Result<Scalar> {
    laguerre_t_domain(t)?;
    Ok(cpow(re(1.0) - t, re(-alpha - 1.0)) * (x * t / (t - 1.0)).exp())
}

/// Σ α/(n+α) L_n^{(α)} t^n = (1−t)^{−α} ₁F₁(α; α+1; xt/(t−1)).
pub fn gf_laguerre_equal_weight(x: Scalar, alpha: f64, t: Scalar) -> Result<Scalar> {
    laguerre_t_domain(t)?;
    let a = re(alpha);
    let k = kummer_1f1(a, a + 1.0, x * t / (t - 1.0), &cfg())?;
    Ok(cpow(re(1.0) - t, -a) * k.value)
}

fn family_point(family: &FamilyParams, x: Scalar) -> Vec<(&'static str, f64)> {
    let mut v = vec![("x_re", x.re), ("x_im", x.im), ("gamma", family.gamma())];
    match family {
        FamilyParams::Meixner(p) => {
            v.extend([("beta", p.beta), ("c_re", p.c.re), ("c_im", p.c.im)]);
        }
        FamilyParams::Charlier(p) => v.push(("a", p.a)),
        FamilyParams::Laguerre(p) => v.push(("alpha", p.alpha)),
        FamilyParams::MeixnerPollaczek(p) => v.extend([("nu", p.nu), ("phi", p.phi)]),
    }
    v
}

fn family_name(family: &FamilyParams) -> &'static str {
    match family {
        FamilyParams::Meixner(_) => "meixner",
        FamilyParams::Charlier(_) => "charlier",
        FamilyParams::Laguerre(_) => "laguerre",
        FamilyParams::MeixnerPollaczek(_) => "meixner_pollaczek",
    }
}

/// Associated polynomial as a γ/(k+γ)-weighted convolution of two
/// classical sequences.
pub fn convolution_identity(
    x: Scalar,
    params: &FamilyParams,
    n: usize,
    rel_tol: f64,
) -> Result<IdentityReport> {
    let gamma = params.gamma();
    if !(gamma > 0.0) {
        return Err(Error::InvalidParameter(
            "convolution weights need γ > 0".into(),
        ));
    }
    // the convolution sums cancel, so both sides run in extended precision
    let prec = DEFAULT_PRECISION;
    let gw = w(re(gamma))?;
    let mut binom = vec![Wide::one(prec)];
    for k in 1..=n {
        let next = &(&binom[k - 1] * &Wide::from_i64((n - k + 1) as i64, prec))
            / &Wide::from_i64(k as i64, prec);
        binom.push(next);
    }
    let coef = |k: usize, alternate: bool| -> Wide {
        let c = &(&binom[k] * &gw) / &gw.add_i64(k as i64);
        if alternate && k % 2 == 1 {
            -&c
        } else {
            c
        }
    };
    let convolve = |left: &[Wide], right: &[Wide], binomial: bool, alternate: bool| -> Wide {
        let mut acc = Wide::zero(prec);
        for k in 0..=n {
            let c = if binomial {
                coef(k, alternate)
            } else {
                &gw / &gw.add_i64(k as i64)
            };
            acc = &acc + &(&(&left[n - k] * &right[k]) * &c);
        }
        acc
    };
    // n!/(γ+1)_n
    let norm = (1..=n).fold(Wide::one(prec), |acc, k| {
        &(&acc * &Wide::from_i64(k as i64, prec)) / &gw.add_i64(k as i64)
    });
    let (lhs, rhs) = match params {
        FamilyParams::Meixner(p) => {
            let lhs = &meixner_wide(x, p, n)?[n] * &norm;
            let left = meixner_wide(x, &MeixnerParams { gamma: 0.0, ..*p }, n)?;
            let right = meixner_wide(
                -x - 1.0,
                &MeixnerParams {
                    beta: 2.0 - p.beta,
                    c: p.c,
                    gamma: 0.0,
                },
                n,
            )?;
            (lhs, convolve(&left, &right, true, false))
        }
        FamilyParams::Charlier(p) => {
            let lhs = &charlier_wide(x, p, n)?[n] * &norm;
            let left = charlier_wide(x, &CharlierParams { a: p.a, gamma: 0.0 }, n)?;
            let right = charlier_wide(
                -x - 1.0,
                &CharlierParams {
                    a: -p.a,
                    gamma: 0.0,
                },
                n,
            )?;
            (lhs, convolve(&left, &right, true, true))
        }
        FamilyParams::Laguerre(p) => {
            let lhs = laguerre_wide(x, p, n)?[n].clone();
            let left = laguerre_wide(
                x,
                &LaguerreParams {
                    alpha: p.alpha,
                    gamma: 0.0,
                },
                n,
            )?;
            let right = laguerre_wide(
                -x,
                &LaguerreParams {
                    alpha: -p.alpha,
                    gamma: 0.0,
                },
                n,
            )?;
            (lhs, convolve(&left, &right, false, false))
        }
        FamilyParams::MeixnerPollaczek(_) => {
            return Err(Error::InvalidParameter(
                "no convolution identity for Meixner–Pollaczek".into(),
            ))
        }
    };
    let (lhs, rhs) = (lhs.to_scalar(), rhs.to_scalar());
    let mut pt = point(&family_point(params, x));
    pt.insert("n".into(), n as f64);
    Ok(IdentityReport::new(
        format!("convolution_{}", family_name(params)),
        pt,
        lhs,
        rhs,
        rel_tol,
    ))
}

/// γ/(n+γ)-weighted generating function of the classical polynomials, with
/// γ taken from `params` as a free weight.
pub fn weighted_classical_gf(
    x: Scalar,
    params: &FamilyParams,
    t: Scalar,
    rel_tol: f64,
) -> Result<IdentityReport> {
    let g = re(params.gamma());
    let rhs = match params {
        FamilyParams::Meixner(p) => {
            meixner_t_domain(p, t)?;
            appell_f1(g, x + p.beta, -x, g + 1.0, p.c * t, t, &cfg())?.value
        }
        FamilyParams::Charlier(p) => {
            charlier_t_domain(p, t)?;
            humbert_phi1(g, -x, g + 1.0, t / p.a, t, &cfg())?.value
        }
        FamilyParams::Laguerre(p) => {
            laguerre_t_domain(t)?;
            let s = t / (t - 1.0);
            cpow(re(1.0) - t, -g) * humbert_phi1(g, g - p.alpha, g + 1.0, s, x * s, &cfg())?.value
        }
        FamilyParams::MeixnerPollaczek(_) => {
            return Err(Error::InvalidParameter(
                "no weighted generating function for Meixner–Pollaczek".into(),
            ))
        }
    };
    let lhs = gf_lhs_auto(&GfSpec::new(
        *params,
        x,
        t,
        Normalization::WeightedGammaOverNPlusGamma,
    ))?;
    let mut pt = point(&family_point(params, x));
    pt.extend(point(&[
        ("t_re", t.re),
        ("t_im", t.im),
        ("N", lhs.n_used as f64),
    ]));
    Ok(IdentityReport::new(
        format!("weighted_gf_{}", family_name(params)),
        pt,
        lhs.value,
        rhs,
        rel_tol,
    ))
}

/// The α = γ Laguerre case, whose right side reduces to a single ₁F₁.
pub fn laguerre_equal_weight_identity(
    x: Scalar,
    alpha: f64,
    t: Scalar,
    rel_tol: f64,
) -> Result<IdentityReport> {
    let params = FamilyParams::Laguerre(LaguerreParams {
        alpha,
        gamma: alpha,
    });
    let rhs = gf_laguerre_equal_weight(x, alpha, t)?;
    let lhs = gf_lhs_auto(&GfSpec::new(
        params,
        x,
        t,
        Normalization::WeightedGammaOverNPlusGamma,
    ))?;
    let mut pt = point(&family_point(&params, x));
    pt.extend(point(&[
        ("t_re", t.re),
        ("t_im", t.im),
        ("N", lhs.n_used as f64),
    ]));
    Ok(IdentityReport::new(
        "weighted_gf_laguerre_equal",
        pt,
        lhs.value,
        rhs,
        rel_tol,
    ))
}

/// c = 1 series Σ (γ+β)_n/n! ₃F₂(−n, γ+β−1, γ; γ+β, γ+1; 1) t^n against
/// (1−t)^{−β} ₂F₁(2−β, γ; γ+1; t).
pub fn c1_reduction_identity(
    beta: f64,
    gamma: f64,
    t: Scalar,
    rel_tol: f64,
) -> Result<IdentityReport> {
    if t.norm() >= 1.0 {
        return Err(Error::DomainError("|t| must be below 1".into()));
    }
    let (b, g) = (re(beta), re(gamma));
    let rhs = cpow(re(1.0) - t, -b) * gauss_2f1(re(2.0) - b, g, g + 1.0, t, &cfg())?.value;
    let mut n_max = DEFAULT_TRUNCATION;
    let lhs = loop {
        let mut sum = re(0.0);
        let mut coef = re(1.0);
        let mut last = [0.0f64; 2];
        for n in 0..=n_max {
            if n > 0 {
                coef = coef * (g + b + (n - 1) as f64) / n as f64 * t;
            }
            let f = hyp_terminating(
                &[re(-(n as f64)), g + b - 1.0, g],
                &[g + b, g + 1.0],
                re(1.0),
                n,
            )?;
            let term = coef * f;
            last = [last[1], term.norm()];
            sum += term;
        }
        if last[0].max(last[1]) <= 1e-14 * sum.norm() || n_max * 2 > MAX_TRUNCATION {
            break sum;
        }
        n_max *= 2;
    };
    Ok(IdentityReport::new(
        "c1_reduction",
        point(&[
            ("beta", beta),
            ("gamma", gamma),
            ("t_re", t.re),
            ("t_im", t.im),
        ]),
        lhs,
        rhs,
        rel_tol,
    ))
}

/// d/dt [t^α (1−t)^{−α} ₁F₁(α; α+1; xt/(t−1))] = α t^{α−1} (1−t)^{−α−1} e^{xt/(t−1)},
/// with the derivative taken numerically.
pub fn laguerre_derivative_identity(
    x: Scalar,
    alpha: f64,
    t: f64,
    rel_tol: f64,
) -> Result<IdentityReport> {
    if !(t > 0.0) {
        return Err(Error::DomainError("t must be positive for t^α".into()));
    }
    let h = 1e-3 * t;
    let f = |s: f64| -> Result<Scalar> {
        Ok(gf_laguerre_equal_weight(x, alpha, re(s))? * s.powf(alpha))
    };
    let lhs = (f(t - 2.0 * h)? - f(t - h)? * 8.0 + f(t + h)? * 8.0 - f(t + 2.0 * h)?) / (12.0 * h);
    let rhs = gf_laguerre_classical(x, alpha, re(t))? * (alpha * t.powf(alpha - 1.0));
    Ok(IdentityReport::new(
        "laguerre_derivative",
        point(&[("x_re", x.re), ("x_im", x.im), ("alpha", alpha), ("t", t)]),
        lhs,
        rhs,
        rel_tol,
    ))
}

fn gf_report(
    id: &str,
    family: &FamilyParams,
    x: Scalar,
    t: Scalar,
    norm: Normalization,
    rhs: Scalar,
    rel_tol: f64,
) -> Result<IdentityReport> {
    let lhs = gf_lhs_auto(&GfSpec::new(*family, x, t, norm))?;
    let mut pt = point(&family_point(family, x));
    pt.extend(point(&[
        ("t_re", t.re),
        ("t_im", t.im),
        ("N", lhs.n_used as f64),
    ]));
    Ok(IdentityReport::new(id, pt, lhs.value, rhs, rel_tol))
}

/// Every generating function that applies to `family`, each closed form
/// against the truncated series.
pub fn gf_check(
    x: Scalar,
    family: &FamilyParams,
    t: Scalar,
    rel_tol: f64,
) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    let gamma = family.gamma();
    match family {
        FamilyParams::Meixner(p) => {
            out.push(gf_report(
                "gf_meixner_appell",
                family,
                x,
                t,
                Normalization::ByGammaBeta,
                gf_meixner_appell(x, p, t)?,
                rel_tol,
            )?);
            let alt = gf_meixner_alt(x, p, t)?;
            out.push(gf_report(
                "gf_meixner_alt",
                family,
                x,
                t,
                Normalization::ByGammaOne,
                alt,
                rel_tol,
            )?);
            if gamma > 0.0 {
                out.push(gf_report(
                    "gf_meixner_integral",
                    family,
                    x,
                    t,
                    Normalization::ByGammaOne,
                    gf_meixner_integral(x, p, t)?,
                    rel_tol,
                )?);
                out.push(weighted_classical_gf(x, family, t, rel_tol)?);
            } else {
                let cl = gf_meixner_classical(x, p.beta, p.c, t)?;
                out.push(gf_report(
                    "gf_meixner_classical",
                    family,
                    x,
                    t,
                    Normalization::ByGammaBeta,
                    cl,
                    rel_tol,
                )?);
                let el = gf_meixner_elementary(x, p, t)?;
                out.push(gf_report(
                    "gf_meixner_elementary",
                    family,
                    x,
                    t,
                    Normalization::ByFactorial,
                    el,
                    rel_tol,
                )?);
            }
        }
        FamilyParams::Charlier(p) => {
            out.push(gf_report(
                "gf_charlier_phi1",
                family,
                x,
                t,
                Normalization::ByGammaOne,
                gf_charlier_phi1(x, p, t)?,
                rel_tol,
            )?);
            if gamma > 0.0 {
                out.push(gf_report(
                    "gf_charlier_integral",
                    family,
                    x,
                    t,
                    Normalization::ByGammaOne,
                    gf_charlier_integral(x, p, t)?,
                    rel_tol,
                )?);
                out.push(weighted_classical_gf(x, family, t, rel_tol)?);
            } else {
                let cl = gf_charlier_classical(x, p, t)?;
                out.push(gf_report(
                    "gf_charlier_classical",
                    family,
                    x,
                    t,
                    Normalization::ByFactorial,
                    cl,
                    rel_tol,
                )?);
            }
        }
        FamilyParams::Laguerre(p) => {
            out.push(gf_report(
                "gf_laguerre",
                family,
                x,
                t,
                Normalization::Plain,
                gf_laguerre(x, p, t)?,
                rel_tol,
            )?);
            if gamma > 0.0 {
                out.push(weighted_classical_gf(x, family, t, rel_tol)?);
            } else {
                let cl = gf_laguerre_classical(x, p.alpha, t)?;
                out.push(gf_report(
                    "gf_laguerre_classical",
                    family,
                    x,
                    t,
                    Normalization::Plain,
                    cl,
                    rel_tol,
                )?);
            }
            if p.alpha > 0.0 {
                out.push(laguerre_equal_weight_identity(x, p.alpha, t, rel_tol)?);
            }
        }
        FamilyParams::MeixnerPollaczek(_) => {
            return Err(Error::InvalidParameter(
                "no generating function is implemented for the Meixner–Pollaczek family".into(),
            ))
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rel_diff;

    const MP: MeixnerParams = MeixnerParams {
        beta: 1.5,
        c: Scalar { re: 0.4, im: 0.0 },
        gamma: 0.7,
    };

    fn lhs(family: FamilyParams, x: f64, t: f64, norm: Normalization, n: usize) -> Scalar {
        let mut s = GfSpec::new(family, re(x), re(t), norm);
        s.truncation_n = n;
        gf_lhs_partial(&s).unwrap().value
    }

    #[test]
    fn zero_t_gives_one() {
        let f = FamilyParams::Meixner(MP);
        assert_eq!(lhs(f, 0.5, 0.0, Normalization::ByGammaBeta, 5), re(1.0));
        assert_eq!(gf_meixner_appell(re(0.5), &MP, re(0.0)).unwrap(), re(1.0));
        assert_eq!(gf_meixner_alt(re(0.5), &MP, re(0.0)).unwrap(), re(1.0));
        assert!(rel_diff(gf_meixner_integral(re(0.5), &MP, re(0.0)).unwrap(), re(1.0)) < 1e-13);
        let cp = CharlierParams { a: 1.0, gamma: 0.5 };
        assert_eq!(gf_charlier_phi1(re(0.25), &cp, re(0.0)).unwrap(), re(1.0));
        assert!(
            rel_diff(
                gf_charlier_integral(re(0.25), &cp, re(0.0)).unwrap(),
                re(1.0)
            ) < 1e-13
        );
        assert_eq!(
            gf_laguerre(
                re(1.2),
                &LaguerreParams {
                    alpha: 0.5,
                    gamma: 0.9
                },
                re(0.0)
            )
            .unwrap(),
            re(1.0)
        );
    }

    #[test]
    fn meixner_pairs() {
        let f = FamilyParams::Meixner(MP);
        let x = re(0.5);
        let l = lhs(f, 0.5, 0.05, Normalization::ByGammaBeta, 60);
        assert!(rel_diff(l, gf_meixner_appell(x, &MP, re(0.05)).unwrap()) < 1e-9);
        let l = lhs(f, 0.5, 0.05, Normalization::ByGammaOne, 60);
        let alt = gf_meixner_alt(x, &MP, re(0.05)).unwrap();
        assert!(rel_diff(l, alt) < 1e-9);
        assert!(rel_diff(gf_meixner_integral(x, &MP, re(0.05)).unwrap(), alt) < 1e-8);
        let p1 = MeixnerParams { gamma: 1.0, ..MP };
        let a1 = gf_meixner_alt(x, &p1, re(0.05)).unwrap();
        assert!(rel_diff(gf_meixner_integral(x, &p1, re(0.05)).unwrap(), a1) < 1e-8);
    }

    #[test]
    fn meixner_classical_cases() {
        let p = MeixnerParams::new(1.5, 0.4, 0.0);
        let (x, t) = (re(2.0), re(0.1));
        let a = gf_meixner_appell(x, &p, t).unwrap();
        assert!(rel_diff(a, gf_meixner_classical(x, 1.5, p.c, t).unwrap()) < 1e-13);
        let b = gf_meixner_alt(x, &p, t).unwrap();
        assert!(rel_diff(b, gf_meixner_elementary(x, &p, t).unwrap()) < 1e-14);
        let l = lhs(
            FamilyParams::Meixner(p),
            2.0,
            0.1,
            Normalization::ByFactorial,
            60,
        );
        assert!(rel_diff(l, b) < 1e-12);
    }

    #[test]
    fn charlier_pairs() {
        let cp = CharlierParams { a: 2.0, gamma: 0.0 };
        let l = lhs(
            FamilyParams::Charlier(cp),
            1.0,
            0.1,
            Normalization::ByGammaOne,
            40,
        );
        let want = 0.1f64.exp() * 0.95;
        assert!((l.re - want).abs() < 1e-14);
        assert!((gf_charlier_phi1(re(1.0), &cp, re(0.1)).unwrap().re - want).abs() < 1e-14);
        let cp = CharlierParams { a: 1.0, gamma: 0.5 };
        let x = re(0.25);
        let phi = gf_charlier_phi1(x, &cp, re(0.1)).unwrap();
        let l = lhs(
            FamilyParams::Charlier(cp),
            0.25,
            0.1,
            Normalization::ByGammaOne,
            50,
        );
        assert!(rel_diff(l, phi) < 1e-9);
        assert!(rel_diff(gf_charlier_integral(x, &cp, re(0.1)).unwrap(), phi) < 1e-8);
        let cp1 = CharlierParams { a: 1.0, gamma: 1.0 };
        let phi1 = gf_charlier_phi1(x, &cp1, re(0.1)).unwrap();
        assert!(rel_diff(gf_charlier_integral(x, &cp1, re(0.1)).unwrap(), phi1) < 1e-8);
    }

    #[test]
    fn ode_residuals() {
        let cp = CharlierParams { a: 1.0, gamma: 0.5 };
        assert!(gf_charlier_ode_residual(re(0.25), &cp, re(0.1), 1e-4).unwrap() <= 1e-8);
        assert!(gf_charlier_ode_residual(re(0.25), &cp, re(0.0), 1e-4).unwrap() <= 1e-12);
        let c0 = CharlierParams { a: 1.0, gamma: 0.0 };
        assert!(gf_charlier_ode_residual(re(0.25), &c0, re(0.1), 1e-4).unwrap() <= 1e-10);
    }

    #[test]
    fn laguerre_pairs() {
        let lp = LaguerreParams {
            alpha: 0.5,
            gamma: 0.9,
        };
        let l = lhs(
            FamilyParams::Laguerre(lp),
            1.2,
            0.1,
            Normalization::Plain,
            60,
        );
        assert!(rel_diff(l, gf_laguerre(re(1.2), &lp, re(0.1)).unwrap()) < 1e-9);
        let l0 = LaguerreParams {
            alpha: 0.5,
            gamma: 0.0,
        };
        let a = gf_laguerre(re(1.0), &l0, re(0.2)).unwrap();
        assert!(rel_diff(a, gf_laguerre_classical(re(1.0), 0.5, re(0.2)).unwrap()) < 1e-14);
    }

    #[test]
    fn tail_too_large() {
        let mut s = GfSpec::new(
            FamilyParams::Laguerre(LaguerreParams {
                alpha: 0.5,
                gamma: 0.9,
            }),
            re(1.2),
            re(0.45),
            Normalization::Plain,
        );
        s.truncation_n = 5;
        assert!(matches!(
            gf_lhs_partial(&s),
            Err(Error::TailTooLarge { .. })
        ));
        let auto = gf_lhs_auto(&s).unwrap();
        assert!(auto.n_used > 5);
    }

    #[test]
    fn convolutions() {
        for n in 0..=12 {
            let c = FamilyParams::Charlier(CharlierParams { a: 1.0, gamma: 0.5 });
            assert!(
                convolution_identity(re(0.25), &c, n, 1e-9).unwrap().passed,
                "charlier n={n}"
            );
            let l = FamilyParams::Laguerre(LaguerreParams {
                alpha: 0.5,
                gamma: 0.9,
            });
            assert!(
                convolution_identity(re(1.2), &l, n, 1e-9).unwrap().passed,
                "laguerre n={n}"
            );
            let m = FamilyParams::Meixner(MP);
            assert!(
                convolution_identity(re(0.5), &m, n, 1e-9).unwrap().passed,
                "meixner n={n}"
            );
        }
    }

    #[test]
    fn weighted_generating_functions() {
        let m = FamilyParams::Meixner(MeixnerParams { gamma: 1.3, ..MP });
        let r = weighted_classical_gf(re(0.5), &m, re(0.1), 1e-9).unwrap();
        assert!(r.passed, "{r:?}");
        let c = FamilyParams::Charlier(CharlierParams { a: 1.0, gamma: 0.5 });
        assert!(
            weighted_classical_gf(re(0.25), &c, re(0.1), 1e-9)
                .unwrap()
                .passed
        );
        let l = FamilyParams::Laguerre(LaguerreParams {
            alpha: 0.5,
            gamma: 0.9,
        });
        assert!(
            weighted_classical_gf(re(1.2), &l, re(0.1), 1e-9)
                .unwrap()
                .passed
        );
        assert!(
            laguerre_equal_weight_identity(re(1.0), 0.8, re(0.2), 1e-9)
                .unwrap()
                .passed
        );
        let r = weighted_classical_gf(re(0.5), &m, re(0.0), 1e-12).unwrap();
        assert!(r.passed && r.lhs == re(1.0));
    }

    #[test]
    fn gf_check_all_families() {
        let fams = [
            (0.5, FamilyParams::Meixner(MP)),
            (
                2.0,
                FamilyParams::Meixner(MeixnerParams::new(1.5, 0.4, 0.0)),
            ),
            (
                0.25,
                FamilyParams::Charlier(CharlierParams { a: 1.0, gamma: 0.5 }),
            ),
            (
                0.25,
                FamilyParams::Charlier(CharlierParams { a: 1.0, gamma: 0.0 }),
            ),
            (
                1.2,
                FamilyParams::Laguerre(LaguerreParams {
                    alpha: 0.5,
                    gamma: 0.9,
                }),
            ),
            (
                1.2,
                FamilyParams::Laguerre(LaguerreParams {
                    alpha: 0.5,
                    gamma: 0.0,
                }),
            ),
        ];
        for (x, f) in fams {
            for r in gf_check(re(x), &f, re(-0.1), 1e-8).unwrap() {
                assert!(r.passed, "{r:?}");
            }
        }
    }

    #[test]
    fn c1_and_derivative() {
        assert!(
            c1_reduction_identity(2.5, 0.7, re(0.2), 1e-9)
                .unwrap()
                .passed
        );
        let r = laguerre_derivative_identity(re(1.0), 0.8, 0.2, 1e-6).unwrap();
        assert!(r.passed, "{r:?}");
    }
}
