//! Explicit finite representations of the associated polynomials.
//!
//! The double sums are evaluated in extended precision. Where an outer
//! Pochhammer factor cancels against an inner lower parameter, the two are
//! combined as `(p)_k (p+k)_j / (p)_j = (p+j)_k` so that the sum stays finite
//! at points where the printed inner series has a removable singularity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperkernel::{gauss_2f1, gauss_2f1_wide, hyp_terminating, pochhammer, SeriesConfig};
use crate::recurrences::{meixner_wide, CharlierParams, LaguerreParams, MPParams, MeixnerParams};
use crate::report::{point, IdentityReport};
use crate::scalar::{cpow, ipow, near_integer, re, Scalar};
use crate::wide::{Wide, DEFAULT_PRECISION};

/// Lower parameters closer than this to a pole are rejected.
pub const POLE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RepresentationTag {
    Recurrence,
    ClosedForm4F3,
    ClosedForm4F3Alt,
    Quadratic2F1,
    CrossProduct2F1,
    Charlier3F2,
    Charlier3F2Alt,
    Laguerre3F2,
    Laguerre3F2Alt,
    MPConnection,
    DegenerateC1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharlierVariant {
    Primary,
    Transformed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaguerreVariant {
    Primary,
    Rahman,
}

fn w(z: Scalar) -> Result<Wide> {
    Wide::from_scalar(z, DEFAULT_PRECISION)
}

fn wv(zs: &[Scalar]) -> Result<Vec<Wide>> {
    zs.iter().map(|&z| w(z)).collect()
}

fn factorial(n: usize) -> Wide {
    let mut f = Wide::one(DEFAULT_PRECISION);
    for k in 2..=n {
        f = &f * &Wide::from_i64(k as i64, DEFAULT_PRECISION);
    }
    f
}

fn wpoch(a: Scalar, k: usize) -> Result<Wide> {
    Ok(w(a)?.pochhammer(k))
}

/// Rejects `q` when `q + m` is within [`POLE_TOL`] of zero for some `m < count`.
fn check_lower(q: Scalar, count: usize, what: &str) -> Result<()> {
    if let Some(k) = near_integer(q, POLE_TOL) {
        if k <= 0 && ((-k) as usize) < count {
            return Err(Error::DenominatorPole(format!("{what} parameter {q}")));
        }
    }
    Ok(())
}

/// `Σ_{k=0}^{n} Σ_{j=0}^{n−k} z^k Π(s)_k / Π(r)_k · Π(p)_j Π(p'+k)_j / (Π(r')_j Π(q)_{k+j} j!) · (P+j)_k`
#[derive(Default)]
struct DoubleSum {
    n: usize,
    z: Scalar,
    outer_upper: Vec<Scalar>,
    outer_lower: Vec<Scalar>,
    inner_upper: Vec<Scalar>,
    inner_shifted: Vec<Scalar>,
    inner_lower: Vec<Scalar>,
    joint_lower: Vec<Scalar>,
    fold: Option<Scalar>,
}

impl DoubleSum {
    fn eval(&self) -> Result<Wide> {
        let n = self.n;
        let prec = DEFAULT_PRECISION;
        for &r in &self.outer_lower {
            check_lower(r, n, "outer lower")?;
        }
        for &r in &self.inner_lower {
            check_lower(r, n, "inner lower")?;
        }
        for &q in &self.joint_lower {
            check_lower(q, n, "lower")?;
        }
        let z = w(self.z)?;
        let (ou, ol) = (wv(&self.outer_upper)?, wv(&self.outer_lower)?);
        let (iu, is, il) = (
            wv(&self.inner_upper)?,
            wv(&self.inner_shifted)?,
            wv(&self.inner_lower)?,
        );
        let jl = wv(&self.joint_lower)?;
        let fold = self.fold.map(w).transpose()?;

        let mut fold_poch = vec![Wide::one(prec); n + 1];
        let mut outer = Wide::one(prec);
        let mut joint = Wide::one(prec);
        let mut sum = Wide::zero(prec);
        for k in 0..=n {
            if k > 0 {
                let km1 = k as i64 - 1;
                let mut num = z.clone();
                for s in &ou {
                    num = &num * &s.add_i64(km1);
                }
                let mut den = Wide::one(prec);
                for r in &ol {
                    den = &den * &r.add_i64(km1);
                }
                outer = &(&outer * &num) / &den;
                for q in &jl {
                    joint = &joint * &q.add_i64(km1);
                }
                if let Some(p) = &fold {
                    for (j, fp) in fold_poch.iter_mut().enumerate().take(n - k + 1) {
                        *fp = &*fp * &p.add_i64((j + k - 1) as i64);
                    }
                }
            }
            if outer.is_zero() {
                continue;
            }
            let mut t = &outer / &joint;
            for j in 0..=(n - k) {
                if j > 0 {
                    let jm1 = j as i64 - 1;
                    let mut num = Wide::one(prec);
                    for p in &iu {
                        num = &num * &p.add_i64(jm1);
                    }
                    for p in &is {
                        num = &num * &p.add_i64(k as i64 + jm1);
                    }
                    let mut den = Wide::from_i64(j as i64, prec);
                    for r in &il {
                        den = &den * &r.add_i64(jm1);
                    }
                    for q in &jl {
                        den = &den * &q.add_i64(k as i64 + jm1);
                    }
                    t = &(&t * &num) / &den;
                }
                if t.is_zero() {
                    break;
                }
                sum = match &fold {
                    Some(_) => &sum + &(&t * &fold_poch[j]),
                    None => &sum + &t,
                };
            }
        }
        Ok(sum)
    }
}

fn gamma_beta_guard(p: &MeixnerParams) -> Result<()> {
    if p.c == re(0.0) {
        return Err(Error::ZeroC);
    }
    Ok(())
}

fn meixner_fold(p: &MeixnerParams, n: usize, z: Scalar, fold: Scalar) -> Result<Wide> {
    let (g, b) = (re(p.gamma), re(p.beta));
    let nf = re(-(n as f64));
    DoubleSum {
        n,
        z,
        outer_upper: vec![nf],
        inner_upper: vec![g + b - 1.0, g],
        inner_shifted: vec![nf],
        joint_lower: vec![g + 1.0, g + b],
        fold: Some(fold),
        ..Default::default()
    }
    .eval()
}

/// Closed form with powers of (1 − c).
pub fn meixner_4f3(x: Scalar, p: &MeixnerParams, n: usize) -> Result<Scalar> {
    gamma_beta_guard(p)?;
    let (g, b) = (re(p.gamma), re(p.beta));
    let s = meixner_fold(p, n, re(1.0) - p.c, g + b + x)?;
    let inv_c = &Wide::one(DEFAULT_PRECISION) / &w(p.c)?;
    let pref =
        &(&(&inv_c.powi(n as u32) * &wpoch(g + 1.0, n)?) * &wpoch(g + b, n)?) / &factorial(n);
    Ok((&pref * &s).to_scalar())
}

/// Closed form with powers of c̃ = (c − 1)/c.
pub fn meixner_4f3_alt(x: Scalar, p: &MeixnerParams, n: usize) -> Result<Scalar> {
    gamma_beta_guard(p)?;
    let (g, b) = (re(p.gamma), re(p.beta));
    let one = Wide::one(DEFAULT_PRECISION);
    let cw = w(p.c)?;
    let c_tilde = (&(&cw - &one) / &cw).to_scalar();
    let s = meixner_fold(p, n, c_tilde, g - x)?;
    let pref = &(&wpoch(g + 1.0, n)? * &wpoch(g + b, n)?) / &factorial(n);
    Ok((&pref * &s).to_scalar())
}

fn f21(a: Scalar, b: Scalar, c: Scalar, z: Scalar) -> Result<Scalar> {
    Ok(gauss_2f1(a, b, c, z, &SeriesConfig::default())?.value)
}

/// Quadratic form in four ₂F₁ values at c̃.
pub fn meixner_quadratic(x: Scalar, p: &MeixnerParams, n: usize) -> Result<Scalar> {
    gamma_beta_guard(p)?;
    if let Some(k) = near_integer(re(p.beta), POLE_TOL) {
        if k >= 1 {
            return Err(Error::RestrictedParameter(format!(
                "β = {} is a positive integer",
                p.beta
            )));
        }
    }
    let (g, b) = (re(p.gamma), re(p.beta));
    let ct = p.c_tilde();
    let nf = n as f64;
    let first = pochhammer(g + b - 1.0, n + 1)
        * f21(x + 1.0, g, re(2.0) - b, ct)?
        * f21(-x, -g - nf, b, ct)?;
    let second = pochhammer(g, n + 1)
        * f21(x + b, g + b - 1.0, b, ct)?
        * f21(re(1.0) - b - x, -g - b - nf + 1.0, re(2.0) - b, ct)?;
    Ok((first - second) / (b - 1.0))
}

/// Two-term cross product of ₂F₁ values at c.
pub fn meixner_cross_2f1(x: Scalar, p: &MeixnerParams, n: usize) -> Result<Scalar> {
    gamma_beta_guard(p)?;
    let (g, b, c) = (re(p.gamma), re(p.beta), p.c);
    if near_integer(g - x, POLE_TOL).is_some() {
        return Err(Error::DenominatorPole(format!(
            "γ − x = {} is an integer",
            g - x
        )));
    }
    let f = |m: f64| f21(x + 1.0, re(2.0) - b - g - m, re(2.0) + x - g - m, c);
    let gg = |m: f64| f21(g + m, re(1.0) - b - x, g - x + m, c);
    let nf = n as f64;
    let first = ipow(re(1.0) / c, n as i64) * pochhammer(g - x, n) * f(nf + 1.0)? * gg(0.0)?;
    let second = c * pochhammer(g, n + 1) * pochhammer(g + b - 1.0, n + 1)
        / pochhammer(g - x - 1.0, n + 2)
        * f(0.0)?
        * gg(nf + 1.0)?;
    Ok(cpow(re(1.0) - c, re(1.0) - b) * (first - second))
}

/// Associated Charlier polynomial from its ₃F₂ double sum.
pub fn charlier_3f2(
    x: Scalar,
    p: &CharlierParams,
    n: usize,
    variant: CharlierVariant,
) -> Result<Scalar> {
    if p.a == 0.0 {
        return Err(Error::ZeroA);
    }
    let g = re(p.gamma);
    let z = re(-1.0 / p.a);
    match variant {
        CharlierVariant::Primary => {
            let nf = re(-(n as f64));
            let s = DoubleSum {
                n,
                z,
                outer_upper: vec![nf],
                inner_upper: vec![g],
                inner_shifted: vec![nf],
                joint_lower: vec![g + 1.0],
                fold: Some(g - x),
                ..Default::default()
            }
            .eval()?;
            let pref = &wpoch(g + 1.0, n)? / &factorial(n);
            Ok((&pref * &s).to_scalar())
        }
        CharlierVariant::Transformed => charlier_transformed(x, p, n),
    }
}

/// `Σ_k (−1/a)^k (−n)_k (γ−x)_k / k! · ₃F₂(−k, γ, k−n; −n, γ−x; 1)`, with the
/// outer (−n)_k and (γ−x)_k absorbed into the inner lower parameters.
fn charlier_transformed(x: Scalar, p: &CharlierParams, n: usize) -> Result<Scalar> {
    let prec = DEFAULT_PRECISION;
    let z = w(re(-1.0 / p.a))?;
    let g = w(re(p.gamma))?;
    let px = w(re(p.gamma) - x)?;
    let mut sum = Wide::zero(prec);
    let mut zk_over_kfact = Wide::one(prec);
    for k in 0..=n {
        if k > 0 {
            zk_over_kfact = &(&zk_over_kfact * &z) / &Wide::from_i64(k as i64, prec);
        }
        let top = k.min(n - k);
        let mut inner = Wide::zero(prec);
        // (−k)_j (γ)_j (k−n)_j / j!
        let mut coeff = Wide::one(prec);
        for j in 0..=top {
            if j > 0 {
                let jm1 = j as i64 - 1;
                let num = &(&Wide::from_i64(-(k as i64) + jm1, prec) * &g.add_i64(jm1))
                    * &Wide::from_i64(k as i64 - n as i64 + jm1, prec);
                coeff = &(&coeff * &num) / &Wide::from_i64(j as i64, prec);
            }
            // (−n+j)_{k−j} (γ−x+j)_{k−j}
            let mut fold = Wide::one(prec);
            for i in j..k {
                fold =
                    &(&fold * &Wide::from_i64(i as i64 - n as i64, prec)) * &px.add_i64(i as i64);
            }
            inner = &inner + &(&coeff * &fold);
        }
        sum = &sum + &(&zk_over_kfact * &inner);
    }
    Ok(sum.to_scalar())
}

/// Associated Laguerre polynomial from its ₃F₂ double sum.
pub fn laguerre_3f2(
    x: Scalar,
    p: &LaguerreParams,
    n: usize,
    variant: LaguerreVariant,
) -> Result<Scalar> {
    let (g, a) = (re(p.gamma), re(p.alpha));
    let nf = re(-(n as f64));
    match variant {
        LaguerreVariant::Primary => {
            let s = DoubleSum {
                n,
                z: x,
                outer_upper: vec![nf],
                inner_upper: vec![g + a, g],
                inner_shifted: vec![nf],
                joint_lower: vec![g + 1.0, g + a + 1.0],
                ..Default::default()
            }
            .eval()?;
            let pref = &wpoch(g + a + 1.0, n)? / &factorial(n);
            Ok((&pref * &s).to_scalar())
        }
        LaguerreVariant::Rahman => {
            let s = DoubleSum {
                n,
                z: x,
                outer_upper: vec![nf],
                outer_lower: vec![a + 1.0],
                inner_upper: vec![g],
                inner_shifted: vec![nf, re(1.0) - a],
                inner_lower: vec![-a - n as f64],
                joint_lower: vec![g + 1.0],
                ..Default::default()
            }
            .eval()?;
            let pref = &wpoch(a + 1.0, n)? / &factorial(n);
            Ok((&pref * &s).to_scalar())
        }
    }
}

/// Meixner–Pollaczek polynomial through the associated Meixner recurrence
/// at complex c = e^{−2iφ} and argument ix − ν.
pub fn mp_from_meixner(x: Scalar, p: &MPParams, n: usize) -> Result<Scalar> {
    if !(p.phi > 0.0 && p.phi < std::f64::consts::PI) {
        return Err(Error::InvalidParameter(format!(
            "φ = {} outside (0, π)",
            p.phi
        )));
    }
    let mp = MeixnerParams {
        beta: 2.0 * p.nu,
        c: Scalar::from_polar(1.0, -2.0 * p.phi),
        gamma: p.gamma,
    };
    let arg = Scalar::i() * x - p.nu;
    let m = meixner_wide(arg, &mp, n)?;
    let phase = w(Scalar::from_polar(1.0, -(n as f64) * p.phi))?;
    let v = &(&phase * &m[n]) / &wpoch(re(p.gamma + 1.0), n)?;
    Ok(v.to_scalar())
}

/// Value at c = 1, where the polynomial no longer depends on x.
pub fn meixner_c1_degenerate(beta: f64, gamma: f64, n: usize) -> Result<Scalar> {
    if (beta - 1.0).abs() < POLE_TOL {
        return Err(Error::RestrictedParameter("β = 1".into()));
    }
    let d = &wpoch(re(gamma + beta - 1.0), n + 1)? - &wpoch(re(gamma), n + 1)?;
    Ok((&d / &w(re(beta - 1.0))?).to_scalar())
}

fn finite_sum_lhs(n: usize, a: f64, b: f64, t: Scalar, y: Scalar) -> Result<Scalar> {
    let nf = re(-(n as f64));
    let s = DoubleSum {
        n,
        z: t,
        outer_upper: vec![nf],
        inner_upper: vec![re(a), re(b)],
        inner_shifted: vec![nf],
        joint_lower: vec![re(a + 1.0), re(b + 1.0)],
        fold: Some(re(a) + y),
        ..Default::default()
    }
    .eval()?;
    Ok(s.to_scalar())
}

fn finite_sum_restrictions(a: f64, b: f64) -> Result<()> {
    if !(a > 0.0 && b > -1.0 && b != 0.0) {
        return Err(Error::RestrictedParameter(format!(
            "need a > 0, b > −1, b ≠ 0; got a = {a}, b = {b}"
        )));
    }
    if (b - a).abs() < POLE_TOL {
        return Err(Error::RestrictedParameter("b = a".into()));
    }
    Ok(())
}

fn nfact(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Finite sum of terminating ₄F₃(1) series in powers of t against its
/// closed form in Gauss functions.
pub fn identity_4f3_finite_sum(
    n: usize,
    a: f64,
    b: f64,
    t: Scalar,
    y: Scalar,
    rel_tol: f64,
) -> Result<IdentityReport> {
    finite_sum_restrictions(a, b)?;
    let lhs = finite_sum_lhs(n, a, b, t, y)?;
    let (ar, br) = (re(a), re(b));
    let nf = n as f64;
    let rhs = if t == re(0.0) {
        re(nfact(n) / (b - a)) * (br / pochhammer(ar + 1.0, n) - ar / pochhammer(br + 1.0, n))
    } else {
        if near_integer(re(b - a), POLE_TOL).is_some() {
            return Err(Error::RestrictedParameter(format!(
                "b − a = {} is an integer",
                b - a
            )));
        }
        // the two products nearly cancel, so the whole side runs in extended precision
        let prec = DEFAULT_PRECISION;
        let f = |p: Scalar, q: Scalar, r: Scalar| gauss_2f1_wide(p, q, r, t, prec);
        let one = re(1.0);
        let (aw, bw) = (w(ar)?, w(br)?);
        let first = &(&(&bw / &aw.add_i64(1).pochhammer(n)) * &f(one - y, ar, ar - br + 1.0)?)
            * &f(y, -ar - nf, br - ar + 1.0)?;
        let second = &(&(&w(one - t)?.powi(n as u32 + 1) * &(&aw / &bw.add_i64(1).pochhammer(n)))
            * &f(one - y, ar + nf + 1.0, ar - br + 1.0)?)
            * &f(y, one - ar, br - ar + 1.0)?;
        let scale = &Wide::from_f64(nfact(n), prec)? / &(&bw - &aw);
        (&scale * &(&first - &second)).to_scalar()
    };
    let mut pt = point(&[
        ("n", nf),
        ("a", a),
        ("b", b),
        ("t_re", t.re),
        ("t_im", t.im),
    ]);
    pt.insert("y_re".into(), y.re);
    pt.insert("y_im".into(), y.im);
    Ok(IdentityReport::new("finite_sum_4f3", pt, lhs, rhs, rel_tol))
}

/// `₃F₂(−n, a, b; a+1, b+1; 1)` against its Pochhammer closed form.
pub fn identity_3f2_special(n: usize, a: f64, b: f64, rel_tol: f64) -> Result<IdentityReport> {
    if (b - a).abs() < POLE_TOL {
        return Err(Error::RestrictedParameter("b = a".into()));
    }
    let (ar, br) = (re(a), re(b));
    let lhs = hyp_terminating(
        &[re(-(n as f64)), ar, br],
        &[ar + 1.0, br + 1.0],
        re(1.0),
        n,
    )?;
    let rhs =
        re(nfact(n) / (b - a)) * (br / pochhammer(ar + 1.0, n) - ar / pochhammer(br + 1.0, n));
    Ok(IdentityReport::new(
        "special_3f2",
        point(&[("n", n as f64), ("a", a), ("b", b)]),
        lhs,
        rhs,
        rel_tol,
    ))
}

/// `Σ_k t^k (−n)_k/(b+1)_k ₃F₂(k−n, a, b; a+1, b+1+k; 1)` against its
/// closed form in ₂F₁(1, ·; b−a+1; t).
pub fn identity_3f2_t_powered(
    n: usize,
    a: f64,
    b: f64,
    t: Scalar,
    rel_tol: f64,
) -> Result<IdentityReport> {
    if near_integer(re(b - a), POLE_TOL).is_some() {
        return Err(Error::RestrictedParameter(format!(
            "b − a = {} is an integer",
            b - a
        )));
    }
    let (ar, br) = (re(a), re(b));
    let nf = re(-(n as f64));
    let lhs = DoubleSum {
        n,
        z: t,
        outer_upper: vec![nf],
        inner_upper: vec![ar, br],
        inner_shifted: vec![nf],
        inner_lower: vec![ar + 1.0],
        joint_lower: vec![br + 1.0],
        ..Default::default()
    }
    .eval()?
    .to_scalar();
    let one = re(1.0);
    let first = br / pochhammer(ar + 1.0, n) * f21(one, -ar - n as f64, br - ar + 1.0, t)?;
    let second = ipow(one - t, n as i64 + 1) * ar / pochhammer(br + 1.0, n)
        * f21(one, one - ar, br - ar + 1.0, t)?;
    let rhs = re(nfact(n) / (b - a)) * (first - second);
    Ok(IdentityReport::new(
        "t_powered_3f2",
        point(&[
            ("n", n as f64),
            ("a", a),
            ("b", b),
            ("t_re", t.re),
            ("t_im", t.im),
        ]),
        lhs,
        rhs,
        rel_tol,
    ))
}

/// `₃F₂(−n, a, b; a+m, b+1; 1)` for a positive integer m, against the
/// finite-sum formula that generalizes the m = 1 case.
pub fn identity_3f2_shifted(
    n: usize,
    a: f64,
    b: f64,
    m: usize,
    rel_tol: f64,
) -> Result<IdentityReport> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let (ar, br) = (re(a), re(b));
    check_lower(ar - br, m, "a − b")?;
    let lhs = hyp_terminating(
        &[re(-(n as f64)), ar, br],
        &[ar + m as f64, br + 1.0],
        re(1.0),
        n,
    )?;
    let mut tail = re(0.0);
    for l in 0..m {
        let lf = l as f64;
        tail += pochhammer(ar - br, l) * pochhammer(re(1.0 + lf), n)
            / (pochhammer(ar + 1.0, l) * pochhammer(ar + 1.0 + lf, n));
    }
    let rhs = pochhammer(ar, m) / pochhammer(ar - br, m)
        * (re(nfact(n)) / pochhammer(br + 1.0, n) - br / ar * tail);
    Ok(IdentityReport::new(
        "shifted_3f2",
        point(&[("n", n as f64), ("a", a), ("b", b), ("m", m as f64)]),
        lhs,
        rhs,
        rel_tol,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrences::{charlier_seq, laguerre_seq, meixner_seq, mp_seq};
    use crate::scalar::rel_diff;

    const P: MeixnerParams = MeixnerParams {
        beta: 1.5,
        c: Scalar { re: 0.4, im: 0.0 },
        gamma: 0.7,
    };

    #[test]
    fn meixner_forms_match_recurrence() {
        let x = re(0.5);
        let seq = meixner_seq(x, &P, 15).unwrap();
        for n in 0..=15 {
            let want = seq.get(n);
            assert!(
                rel_diff(meixner_4f3(x, &P, n).unwrap(), want) < 1e-12,
                "4f3 n={n}"
            );
            assert!(
                rel_diff(meixner_4f3_alt(x, &P, n).unwrap(), want) < 1e-12,
                "alt n={n}"
            );
            assert!(
                rel_diff(meixner_cross_2f1(x, &P, n).unwrap(), want) < 1e-8,
                "cross n={n}"
            );
            if n <= 8 {
                assert!(
                    rel_diff(meixner_quadratic(x, &P, n).unwrap(), want) < 1e-8,
                    "quad n={n}"
                );
            }
        }
        assert!((meixner_4f3(x, &P, 1).unwrap().re - 3.2).abs() < 1e-14);
        assert_eq!(meixner_4f3(x, &P, 0).unwrap(), re(1.0));
    }

    #[test]
    fn quadratic_collapses_at_degree_zero() {
        let p = MeixnerParams::new(2.5, 0.6, 0.3);
        assert!(rel_diff(meixner_quadratic(re(0.0), &p, 0).unwrap(), re(1.0)) < 1e-12);
        let p = MeixnerParams::new(1.0, 0.6, 0.3);
        assert!(matches!(
            meixner_quadratic(re(0.0), &p, 2),
            Err(Error::RestrictedParameter(_))
        ));
    }

    #[test]
    fn gamma_zero_is_classical() {
        let p = MeixnerParams::new(1.3, 0.3, 0.0);
        let x = re(2.2);
        for n in 0..=20 {
            let want = pochhammer(re(p.beta), n)
                * hyp_terminating(&[re(-(n as f64)), -x], &[re(p.beta)], p.c_tilde(), n).unwrap();
            assert!(
                rel_diff(meixner_4f3(x, &p, n).unwrap(), want) < 1e-10,
                "n={n}"
            );
        }
    }

    #[test]
    fn removable_singularity_is_finite() {
        // γ − x = 0 and γ + β + x = 0 sit on the printed forms' removable poles
        let p = MeixnerParams::new(1.5, 0.4, 0.0);
        let seq = meixner_seq(re(0.0), &p, 10).unwrap();
        assert!(rel_diff(meixner_4f3_alt(re(0.0), &p, 10).unwrap(), seq.get(10)) < 1e-12);
        let x = re(-1.5);
        let seq = meixner_seq(x, &p, 10).unwrap();
        assert!(rel_diff(meixner_4f3(x, &p, 10).unwrap(), seq.get(10)) < 1e-12);
        assert!(matches!(
            meixner_cross_2f1(re(0.0), &p, 3),
            Err(Error::DenominatorPole(_))
        ));
    }

    #[test]
    fn reflection() {
        let x = re(0.5);
        let refl = MeixnerParams {
            c: re(1.0) / P.c,
            ..P
        };
        let other = meixner_seq(re(-P.beta) - x, &refl, 10).unwrap();
        let direct = meixner_4f3(x, &P, 10).unwrap();
        assert!(rel_diff(direct, ipow(P.c, -10) * other.get(10)) < 1e-9);
        let alt = meixner_4f3_alt(re(-P.beta) - x, &refl, 10).unwrap();
        assert!(rel_diff(direct, ipow(P.c, -10) * alt) < 1e-9);
    }

    #[test]
    fn charlier_variants() {
        let p = CharlierParams { a: 1.0, gamma: 0.5 };
        let x = re(0.25);
        let seq = charlier_seq(x, &p, 15).unwrap();
        for n in 0..=15 {
            let a = charlier_3f2(x, &p, n, CharlierVariant::Primary).unwrap();
            let b = charlier_3f2(x, &p, n, CharlierVariant::Transformed).unwrap();
            assert!(rel_diff(a, b) < 1e-10, "n={n}");
            assert!(rel_diff(a, seq.get(n)) < 1e-10, "n={n}");
        }
        let p = CharlierParams { a: 2.0, gamma: 0.0 };
        for v in [CharlierVariant::Primary, CharlierVariant::Transformed] {
            assert!((charlier_3f2(re(1.0), &p, 1, v).unwrap().re - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn laguerre_variants() {
        let p = LaguerreParams {
            alpha: 0.5,
            gamma: 0.9,
        };
        let x = re(1.2);
        let seq = laguerre_seq(x, &p, 12).unwrap();
        for n in 0..=12 {
            let a = laguerre_3f2(x, &p, n, LaguerreVariant::Primary).unwrap();
            let b = laguerre_3f2(x, &p, n, LaguerreVariant::Rahman).unwrap();
            assert!(rel_diff(a, b) < 1e-9, "n={n}");
            assert!(rel_diff(a, seq.get(n)) < 1e-10, "n={n}");
        }
        for alpha in [0.0, 1.0, 2.0] {
            let p = LaguerreParams { alpha, gamma: 0.9 };
            let seq = laguerre_seq(x, &p, 9).unwrap();
            let r = laguerre_3f2(x, &p, 9, LaguerreVariant::Rahman).unwrap();
            assert!(rel_diff(r, seq.get(9)) < 1e-10, "alpha={alpha}");
        }
    }

    #[test]
    fn meixner_pollaczek_connection() {
        let p = MPParams {
            nu: 0.8,
            phi: std::f64::consts::FRAC_PI_3,
            gamma: 0.5,
        };
        let x = re(0.3);
        let seq = mp_seq(x, &p, 12).unwrap();
        for n in 0..=12 {
            let v = mp_from_meixner(x, &p, n).unwrap();
            assert!(rel_diff(v, seq.get(n)) < 1e-10, "n={n}");
            assert!(v.im.abs() <= 1e-10 * v.norm());
        }
    }

    #[test]
    fn degenerate_c1() {
        assert!((meixner_c1_degenerate(2.0, 0.5, 2).unwrap().re - 11.25).abs() < 1e-13);
        assert_eq!(meixner_c1_degenerate(2.0, 0.5, 0).unwrap(), re(1.0));
        for x in [-3.0, 0.0, 7.0] {
            let s = meixner_seq(re(x), &MeixnerParams::new(2.0, 1.0, 0.5), 2).unwrap();
            assert!(rel_diff(s.get(2), re(11.25)) < 1e-12);
        }
        assert!(meixner_c1_degenerate(1.0, 0.5, 2).is_err());
    }

    #[test]
    fn finite_sums() {
        let r = identity_4f3_finite_sum(2, 1.0, 2.0, re(0.0), re(0.4), 1e-12).unwrap();
        assert!(r.passed && (r.lhs.re - 0.5).abs() < 1e-15);
        let r = identity_4f3_finite_sum(5, 0.7, 1.9, re(0.3), re(0.4), 1e-9).unwrap();
        assert!(r.passed, "{r:?}");
        let r = identity_4f3_finite_sum(0, 0.7, 1.9, re(0.3), re(0.4), 1e-12).unwrap();
        assert!(r.passed && (r.lhs.re - 1.0).abs() < 1e-15);
        assert!(matches!(
            identity_4f3_finite_sum(2, 1.0, 2.0, re(0.3), re(0.4), 1e-9),
            Err(Error::RestrictedParameter(_))
        ));
        assert!(identity_3f2_special(2, 1.0, 2.0, 1e-14).unwrap().passed);
        assert!(
            identity_3f2_t_powered(7, 0.7, 1.9, re(-0.4), 1e-9)
                .unwrap()
                .passed
        );
    }

    #[test]
    #[cfg_attr(not(feature = "cited-identities"), ignore)]
    fn shifted_3f2() {
        for (n, a, b, m) in [(3, 0.7, 1.9, 2), (6, 1.3, 0.4, 3), (5, 2.2, 0.9, 4)] {
            let r = identity_3f2_shifted(n, a, b, m, 1e-12).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }
}
