//! Forward three-term recurrences for the four associated families.
//!
//! Every sequence is run in extended precision and rounded once at the end,
//! so the values here serve as the reference against which the closed forms,
//! generating functions and asymptotics are checked.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{is_finite, re, Scalar};
use crate::wide::{Wide, DEFAULT_PRECISION};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeixnerParams {
    pub beta: f64,
    pub c: Scalar,
    pub gamma: f64,
}

impl MeixnerParams {
    pub fn new(beta: f64, c: f64, gamma: f64) -> Self {
        MeixnerParams {
            beta,
            c: re(c),
            gamma,
        }
    }

    /// Real orthogonality regime: c > 0, c ≠ 1, γ + β > 0.
    pub fn is_valid(&self) -> bool {
        self.c.im == 0.0 && self.c.re > 0.0 && self.c.re != 1.0 && self.gamma + self.beta > 0.0
    }

    /// c̃ = (c − 1)/c.
    pub fn c_tilde(&self) -> Scalar {
        (self.c - 1.0) / self.c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CharlierParams {
    pub a: f64,
    pub gamma: f64,
}

impl CharlierParams {
    pub fn is_valid(&self) -> bool {
        self.a > 0.0 && self.gamma >= 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LaguerreParams {
    pub alpha: f64,
    pub gamma: f64,
}

impl LaguerreParams {
    pub fn is_valid(&self) -> bool {
        self.alpha > -1.0 && self.gamma >= 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MPParams {
    pub nu: f64,
    pub phi: f64,
    pub gamma: f64,
}

impl MPParams {
    /// 0 < φ < π together with either 2ν + γ > 0, or 2ν + γ ≥ 1 with ν > −1.
    pub fn is_valid(&self) -> bool {
        let angle = self.phi > 0.0 && self.phi < std::f64::consts::PI;
        let s = 2.0 * self.nu + self.gamma;
        angle && self.gamma >= 0.0 && (s > 0.0 || (s >= 1.0 && self.nu > -1.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyParams {
    Meixner(MeixnerParams),
    Charlier(CharlierParams),
    Laguerre(LaguerreParams),
    MeixnerPollaczek(MPParams),
}

impl FamilyParams {
    pub fn is_valid(&self) -> bool {
        match self {
            FamilyParams::Meixner(p) => p.is_valid(),
            FamilyParams::Charlier(p) => p.is_valid(),
            FamilyParams::Laguerre(p) => p.is_valid(),
            FamilyParams::MeixnerPollaczek(p) => p.is_valid(),
        }
    }

    pub fn gamma(&self) -> f64 {
        match self {
            FamilyParams::Meixner(p) => p.gamma,
            FamilyParams::Charlier(p) => p.gamma,
            FamilyParams::Laguerre(p) => p.gamma,
            FamilyParams::MeixnerPollaczek(p) => p.gamma,
        }
    }
}

/// P_0(x), ..., P_{n_max}(x) for one family and one point x.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySequence {
    pub values: Vec<Scalar>,
    pub params: FamilyParams,
    pub x: Scalar,
}

impl PolySequence {
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Scalar {
        self.values[n]
    }
}

/// Coefficients of `lead·P_{n+1} = mid·P_n − back·P_{n−1}` at step n.
pub(crate) struct Step {
    pub lead: Wide,
    pub mid: Wide,
    pub back: Wide,
}

/// Runs a recurrence from P_{−1} = 0, P_0 = 1, returning wide values.
pub(crate) fn run_wide<F>(n_max: usize, prec: usize, mut step: F) -> Result<Vec<Wide>>
where
    F: FnMut(usize) -> Result<Step>,
{
    let mut out = Vec::with_capacity(n_max + 1);
    let mut prev = Wide::zero(prec);
    let mut cur = Wide::one(prec);
    out.push(cur.clone());
    for n in 0..n_max {
        let s = step(n)?;
        if s.lead.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "vanishing leading coefficient at n = {n}"
            )));
        }
        let next = &(&(&s.mid * &cur) - &(&s.back * &prev)) / &s.lead;
        prev = cur;
        cur = next;
        out.push(cur.clone());
    }
    Ok(out)
}

fn w(z: Scalar) -> Result<Wide> {
    Wide::from_scalar(z, DEFAULT_PRECISION)
}

fn wf(x: f64) -> Result<Wide> {
    Wide::from_f64(x, DEFAULT_PRECISION)
}

/// Rounds to binary64, failing if a value is outside its range.
fn to_scalars(v: &[Wide]) -> Result<Vec<Scalar>> {
    v.iter()
        .enumerate()
        .map(|(n, w)| {
            let z = w.to_scalar();
            if is_finite(z) {
                Ok(z)
            } else {
                Err(Error::NonFinite(format!(
                    "degree {n} value overflows binary64"
                )))
            }
        })
        .collect()
}

pub(crate) fn meixner_wide(x: Scalar, p: &MeixnerParams, n_max: usize) -> Result<Vec<Wide>> {
    if p.c == re(0.0) {
        return Err(Error::ZeroC);
    }
    let (xw, c, beta, g) = (w(x)?, w(p.c)?, wf(p.beta)?, wf(p.gamma)?);
    let one = Wide::one(DEFAULT_PRECISION);
    let cm1x = &(&c - &one) * &xw;
    let cp1 = &c + &one;
    let beta_c = &beta * &c;
    let bm1 = &beta - &one;
    run_wide(n_max, DEFAULT_PRECISION, |n| {
        let ng = g.add_i64(n as i64);
        Ok(Step {
            lead: c.clone(),
            mid: &(&cm1x + &(&cp1 * &ng)) + &beta_c,
            back: &ng * &(&ng + &bm1),
        })
    })
}

pub fn meixner_seq(x: Scalar, p: &MeixnerParams, n_max: usize) -> Result<PolySequence> {
    Ok(PolySequence {
        values: to_scalars(&meixner_wide(x, p, n_max)?)?,
        params: FamilyParams::Meixner(*p),
        x,
    })
}

pub(crate) fn charlier_wide(x: Scalar, p: &CharlierParams, n_max: usize) -> Result<Vec<Wide>> {
    if p.a == 0.0 {
        return Err(Error::ZeroA);
    }
    let (xw, a, g) = (w(x)?, wf(p.a)?, wf(p.gamma)?);
    let a_minus_x = &a - &xw;
    run_wide(n_max, DEFAULT_PRECISION, |n| {
        let ng = g.add_i64(n as i64);
        Ok(Step {
            lead: a.clone(),
            mid: &ng + &a_minus_x,
            back: ng,
        })
    })
}

pub fn charlier_seq(x: Scalar, p: &CharlierParams, n_max: usize) -> Result<PolySequence> {
    Ok(PolySequence {
        values: to_scalars(&charlier_wide(x, p, n_max)?)?,
        params: FamilyParams::Charlier(*p),
        x,
    })
}

pub(crate) fn laguerre_wide(x: Scalar, p: &LaguerreParams, n_max: usize) -> Result<Vec<Wide>> {
    let (xw, alpha, g) = (w(x)?, wf(p.alpha)?, wf(p.gamma)?);
    let alpha_p1_mx = &alpha.add_i64(1) - &xw;
    run_wide(n_max, DEFAULT_PRECISION, |n| {
        let ng = g.add_i64(n as i64);
        Ok(Step {
            lead: ng.add_i64(1),
            mid: &(&ng + &ng) + &alpha_p1_mx,
            back: &ng + &alpha,
        })
    })
}

pub fn laguerre_seq(x: Scalar, p: &LaguerreParams, n_max: usize) -> Result<PolySequence> {
    Ok(PolySequence {
        values: to_scalars(&laguerre_wide(x, p, n_max)?)?,
        params: FamilyParams::Laguerre(*p),
        x,
    })
}

pub fn mp_seq(x: Scalar, p: &MPParams, n_max: usize) -> Result<PolySequence> {
    if !(p.phi > 0.0 && p.phi < std::f64::consts::PI) {
        return Err(Error::InvalidParameter(format!(
            "φ = {} outside (0, π)",
            p.phi
        )));
    }
    let (xw, nu, g) = (w(x)?, wf(p.nu)?, wf(p.gamma)?);
    let two_cos = wf(2.0 * p.phi.cos())?;
    let two_x_sin = &xw * &wf(2.0 * p.phi.sin())?;
    let two_nu_m1 = (&nu + &nu).add_i64(-1);
    let values = run_wide(n_max, DEFAULT_PRECISION, |n| {
        let ng = g.add_i64(n as i64);
        Ok(Step {
            lead: ng.add_i64(1),
            mid: &(&two_cos * &(&ng + &nu)) + &two_x_sin,
            back: &ng + &two_nu_m1,
        })
    })?;
    Ok(PolySequence {
        values: to_scalars(&values)?,
        params: FamilyParams::MeixnerPollaczek(*p),
        x,
    })
}

/// Evaluates whichever family `params` names.
pub fn family_seq(x: Scalar, params: &FamilyParams, n_max: usize) -> Result<PolySequence> {
    match params {
        FamilyParams::Meixner(p) => meixner_seq(x, p, n_max),
        FamilyParams::Charlier(p) => charlier_seq(x, p, n_max),
        FamilyParams::Laguerre(p) => laguerre_seq(x, p, n_max),
        FamilyParams::MeixnerPollaczek(p) => mp_seq(x, p, n_max),
    }
}

fn normalized(values: Vec<Wide>, shift: f64) -> Result<Vec<Scalar>> {
    let s = wf(shift)?;
    let mut poch = Wide::one(DEFAULT_PRECISION);
    let mut out = Vec::with_capacity(values.len());
    for (n, v) in values.iter().enumerate() {
        if n > 0 {
            poch = &poch * &s.add_i64(n as i64 - 1);
        }
        out.push(v / &poch);
    }
    to_scalars(&out)
}

/// M_n(x; β, a/(a+β), γ)/(γ+β)_n, which tends to the associated Charlier
/// value C_n(x; a, γ) as β → ∞.
pub fn charlier_via_meixner(
    x: Scalar,
    p: &CharlierParams,
    beta: f64,
    n_max: usize,
) -> Result<PolySequence> {
    let m = MeixnerParams::new(beta, p.a / (p.a + beta), p.gamma);
    Ok(PolySequence {
        values: normalized(meixner_wide(x, &m, n_max)?, p.gamma + beta)?,
        params: FamilyParams::Charlier(*p),
        x,
    })
}

/// M_n(x/(1−c); α+1, c, γ)/(γ+1)_n, which tends to the associated Laguerre
/// value L_n^{(α)}(x; γ) as c → 1.
pub fn laguerre_via_meixner(
    x: Scalar,
    p: &LaguerreParams,
    c: f64,
    n_max: usize,
) -> Result<PolySequence> {
    if c == 1.0 {
        return Err(Error::InvalidParameter(
            "c = 1 is the limit point itself".into(),
        ));
    }
    let m = MeixnerParams::new(p.alpha + 1.0, c, p.gamma);
    Ok(PolySequence {
        values: normalized(meixner_wide(x / (1.0 - c), &m, n_max)?, p.gamma + 1.0)?,
        params: FamilyParams::Laguerre(*p),
        x,
    })
}

/// Strict positivity of the shifted product A_{n−1}B_{n−1}B_nD_n at index n + γ.
pub fn positivity_check(family: &FamilyParams, n: usize) -> bool {
    let m = n as f64 + family.gamma();
    let v = match family {
        FamilyParams::Meixner(p) => {
            if p.c.im != 0.0 {
                return false;
            }
            let c = p.c.re;
            c * (c - 1.0) * (c - 1.0) * m * (m + p.beta - 1.0)
        }
        FamilyParams::Charlier(p) => p.a * m,
        FamilyParams::Laguerre(p) => m * (m + p.alpha),
        FamilyParams::MeixnerPollaczek(p) => {
            let s = p.phi.sin();
            m * 4.0 * s * s * (m + 2.0 * p.nu - 1.0)
        }
    };
    v > 0.0
}
