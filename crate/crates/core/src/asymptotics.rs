//! Mehler–Heine type limits of the associated Meixner and Charlier
//! polynomials and the scaled recurrences used to reach large degree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperkernel::gamma::is_gamma_pole;
use crate::hyperkernel::{gamma_ratio, gauss_2f1, kummer_1f1, rgamma, SeriesConfig};
use crate::recurrences::{run_wide, CharlierParams, FamilyParams, MeixnerParams, Step};
use crate::scalar::{cpow, re, Scalar};
use crate::wide::{Wide, DEFAULT_PRECISION};

pub const MAX_CHECKPOINT: usize = 10_000;

/// `r_n = ρ^n P_n(x) / Γ(n+γ−x)` with ρ = c (Meixner) or a (Charlier).
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledSequence {
    pub r: Vec<Scalar>,
    pub family: FamilyParams,
    pub x: Scalar,
    pub n_max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MHSample {
    pub n: usize,
    pub scaled_value: Scalar,
    pub abs_error: f64,
    /// Meixner only: n^{2x+β} c^{n+1} (1−c)^x |₂F₁(x+1, 2−β−γ; 2+x−γ; c)|.
    pub predicted_second_term: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MHStudy {
    pub samples: Vec<MHSample>,
    pub limit: Scalar,
    pub monotone_tail: bool,
}

fn w(z: Scalar) -> Result<Wide> {
    Wide::from_scalar(z, DEFAULT_PRECISION)
}

fn pole_guard(gamma: f64, x: Scalar) -> Result<Scalar> {
    let s = re(gamma) - x;
    if is_gamma_pole(s) {
        return Err(Error::PoleArgument(format!("Γ(γ − x) with γ − x = {s}")));
    }
    Ok(s)
}

/// Runs `s_n = ρ^n P_n/(γ−x)_n` in extended precision and multiplies by
/// 1/Γ(γ−x) at the end.
fn scaled<F>(shift: Scalar, n_max: usize, rho: Scalar, mut coeffs: F) -> Result<Vec<Scalar>>
where
    F: FnMut(usize) -> Result<(Wide, Wide)>,
{
    let sw = w(shift)?;
    let rw = w(rho)?;
    // the recurrence in s: (n+γ−x) s_{n+1} = A_n s_n − ρ B_n s_{n−1}/(n+γ−x−1)
    let values = run_wide(n_max, DEFAULT_PRECISION, |n| {
        let (a, b) = coeffs(n)?;
        let d = sw.add_i64(n as i64);
        let back = if n == 0 {
            Wide::zero(DEFAULT_PRECISION)
        } else {
            &(&rw * &b) / &sw.add_i64(n as i64 - 1)
        };
        Ok(Step {
            lead: d,
            mid: a,
            back,
        })
    })?;
    let rg = rgamma(shift);
    Ok(values.iter().map(|v| v.to_scalar() * rg).collect())
}

pub fn scaled_meixner_seq(x: Scalar, p: &MeixnerParams, n_max: usize) -> Result<ScaledSequence> {
    if p.c == re(0.0) {
        return Err(Error::ZeroC);
    }
    let shift = pole_guard(p.gamma, x)?;
    let (xw, c, beta, g) = (w(x)?, w(p.c)?, w(re(p.beta))?, w(re(p.gamma))?);
    let one = Wide::one(DEFAULT_PRECISION);
    let cm1x = &(&c - &one) * &xw;
    let cp1 = &c + &one;
    let beta_c = &beta * &c;
    let bm1 = &beta - &one;
    let r = scaled(shift, n_max, p.c, |n| {
        let ng = g.add_i64(n as i64);
        let a = &(&cm1x + &(&cp1 * &ng)) + &beta_c;
        let b = &ng * &(&ng + &bm1);
        Ok((a, b))
    })?;
    Ok(ScaledSequence {
        r,
        family: FamilyParams::Meixner(*p),
        x,
        n_max,
    })
}

pub fn scaled_charlier_seq(x: Scalar, p: &CharlierParams, n_max: usize) -> Result<ScaledSequence> {
    if p.a == 0.0 {
        return Err(Error::ZeroA);
    }
    let shift = pole_guard(p.gamma, x)?;
    let (xw, a, g) = (w(x)?, w(re(p.a))?, w(re(p.gamma))?);
    let a_minus_x = &a - &xw;
    let r = scaled(shift, n_max, re(p.a), |n| {
        let ng = g.add_i64(n as i64);
        Ok((&ng + &a_minus_x, ng))
    })?;
    Ok(ScaledSequence {
        r,
        family: FamilyParams::Charlier(*p),
        x,
        n_max,
    })
}

/// lim c^n M_n/Γ(n+γ−x) = (1−c)^{−β−x}/Γ(γ−x) · ₂F₁(γ, 1−β−x; γ−x; c), 0 < c < 1.
pub fn mh_meixner_limit(x: Scalar, p: &MeixnerParams) -> Result<Scalar> {
    if !(p.c.im == 0.0 && p.c.re > 0.0 && p.c.re < 1.0) {
        return Err(Error::DomainError(format!(
            "limit needs 0 < c < 1, got {}",
            p.c
        )));
    }
    let shift = pole_guard(p.gamma, x)?;
    let b = re(p.beta);
    let f = gauss_2f1(
        re(p.gamma),
        re(1.0) - b - x,
        shift,
        p.c,
        &SeriesConfig::default(),
    )?;
    Ok(cpow(re(1.0) - p.c, -b - x) * rgamma(shift) * f.value)
}

/// lim a^n C_n/Γ(n+γ−x) = e^a/Γ(γ−x) · ₁F₁(γ; γ−x; −a).
pub fn mh_charlier_limit(x: Scalar, p: &CharlierParams) -> Result<Scalar> {
    let shift = pole_guard(p.gamma, x)?;
    let f = kummer_1f1(re(p.gamma), shift, re(-p.a), &SeriesConfig::default())?;
    Ok(p.a.exp() * rgamma(shift) * f.value)
}

fn predicted_second_term(x: Scalar, p: &MeixnerParams, n: usize) -> Result<f64> {
    let (b, g, c) = (re(p.beta), re(p.gamma), p.c);
    let f = gauss_2f1(
        x + 1.0,
        re(2.0) - b - g,
        re(2.0) + x - g,
        c,
        &SeriesConfig::default(),
    )?;
    let nf = n as f64;
    let mag = nf.powf((x * 2.0 + b).re) * c.norm().powi(n as i32 + 1) * cpow(re(1.0) - c, x).norm();
    Ok(mag * f.value.norm())
}

/// Scaled values and their distance to the limit at each checkpoint, from
/// one forward pass of the scaled recurrence.
pub fn mh_convergence_study(
    x: Scalar,
    params: &FamilyParams,
    checkpoints: &[usize],
) -> Result<MHStudy> {
    if checkpoints.is_empty() {
        return Err(Error::InvalidParameter("no checkpoints".into()));
    }
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "checkpoints must be strictly ascending".into(),
        ));
    }
    let n_max = *checkpoints.last().unwrap();
    if n_max > MAX_CHECKPOINT {
        return Err(Error::InvalidParameter(format!(
            "checkpoint {n_max} above {MAX_CHECKPOINT}"
        )));
    }
    let (limit, seq) = match params {
        FamilyParams::Meixner(p) => (mh_meixner_limit(x, p)?, scaled_meixner_seq(x, p, n_max)?),
        FamilyParams::Charlier(p) => (mh_charlier_limit(x, p)?, scaled_charlier_seq(x, p, n_max)?),
        _ => {
            return Err(Error::InvalidParameter(
                "Mehler–Heine limits are available for Meixner and Charlier only".into(),
            ))
        }
    };
    let mut samples = Vec::with_capacity(checkpoints.len());
    for &n in checkpoints {
        let v = seq.r[n];
        let predicted = match params {
            FamilyParams::Meixner(p) => Some(predicted_second_term(x, p, n)?),
            _ => None,
        };
        samples.push(MHSample {
            n,
            scaled_value: v,
            abs_error: (v - limit).norm(),
            predicted_second_term: predicted,
        });
    }
    let tail = &samples[samples.len().saturating_sub(3)..];
    let monotone_tail = tail.windows(2).all(|w| w[1].abs_error <= w[0].abs_error);
    Ok(MHStudy {
        samples,
        limit,
        monotone_tail,
    })
}

/// `|₂F₁(a+ελ, b; c+λ; z)·(1−εz)^b − 1|`, which tends to zero as λ → ∞.
pub fn gauss_large_parameter_deviation(
    a: f64,
    b: f64,
    c: f64,
    z: f64,
    eps: f64,
    lambda: f64,
) -> Result<f64> {
    let f = gauss_2f1(
        re(a + eps * lambda),
        re(b),
        re(c + lambda),
        re(z),
        &SeriesConfig::default(),
    )?;
    Ok((f.value * cpow(re(1.0 - eps * z), re(b)) - 1.0).norm())
}

/// `(|Γ(z+a)/Γ(z+b)·z^{b−a} − 1|, 2|a−b||a+b−1|/z)`.
pub fn gamma_ratio_stirling(z: f64, a: f64, b: f64) -> Result<(f64, f64)> {
    let r = gamma_ratio(re(z), re(a), re(b))?;
    let dev = (r * z.powf(b - a) - 1.0).norm();
    let bound = 2.0 * (a - b).abs() * (a + b - 1.0).abs() / z;
    Ok((dev, bound))
}
