//! Identity suites: every cross-representation, transformation, convolution
//! and finite-sum identity, evaluated on fixed grids and on seeded random
//! points.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closedforms::{
    charlier_3f2, identity_3f2_special, identity_3f2_t_powered, identity_4f3_finite_sum,
    laguerre_3f2, meixner_4f3, meixner_4f3_alt, meixner_c1_degenerate, meixner_cross_2f1,
    meixner_quadratic, mp_from_meixner, CharlierVariant, LaguerreVariant,
};
use crate::error::{Error, Result};
use crate::genfuncs::convolution_identity;
use crate::hyperkernel::{
    appell_f1, appell_f1_double, gauss_2f1, humbert_phi1, hyp_terminating, kummer_1f1, pochhammer,
    SeriesConfig,
};
use crate::recurrences::{
    charlier_seq, laguerre_seq, meixner_seq, mp_seq, CharlierParams, FamilyParams, LaguerreParams,
    MPParams, MeixnerParams,
};
use crate::report::{point, IdentityReport};
use crate::scalar::{cpow, ipow, near_integer, re, Scalar};

pub const MEIXNER_BETAS: [f64; 3] = [0.5, 1.5, 2.5];
pub const MEIXNER_CS: [f64; 3] = [0.2, 0.4, 0.8];
pub const MEIXNER_GAMMAS: [f64; 4] = [0.0, 0.3, 1.0, 2.7];
pub const MEIXNER_XS: [f64; 4] = [-1.2, 0.0, 0.5, 3.0];

/// Tolerance of the Φ₁-as-limit-of-F₁ check at μ = 10⁶.
pub const PHI1_LIMIT_TOL: f64 = 1e-5;
/// Tolerance of the c = 1 x-independence check.
pub const DEGENERATE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IdentitySet {
    Representations,
    Transformations,
    Convolutions,
    FiniteSums,
    All,
}

impl std::str::FromStr for IdentitySet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "representations" => IdentitySet::Representations,
            "transformations" => IdentitySet::Transformations,
            "convolutions" => IdentitySet::Convolutions,
            "finite-sums" => IdentitySet::FiniteSums,
            "all" => IdentitySet::All,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown identity set '{other}'"
                )))
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub set: IdentitySet,
    pub seed: u64,
    /// Random points per randomized identity.
    pub points: usize,
    pub n_max: usize,
    pub rel_tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            set: IdentitySet::All,
            seed: 0,
            points: 200,
            n_max: 25,
            rel_tol: 1e-8,
        }
    }
}

/// Reports plus grid points where an identity was not applicable.
#[derive(Debug, Clone, Default)]
pub struct VerifyOutcome {
    pub reports: Vec<IdentityReport>,
    pub skipped: Vec<String>,
}

impl VerifyOutcome {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityReport> {
        self.reports.iter().filter(|r| !r.passed)
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    fn extend(&mut self, other: VerifyOutcome) {
        self.reports.extend(other.reports);
        self.skipped.extend(other.skipped);
    }
}

pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyOutcome> {
    if !(cfg.rel_tol > 0.0) {
        return Err(Error::InvalidParameter("rel_tol must be positive".into()));
    }
    if cfg.points == 0
        && matches!(
            cfg.set,
            IdentitySet::Transformations | IdentitySet::Convolutions | IdentitySet::FiniteSums
        )
    {
        return Err(Error::InvalidParameter(
            "empty grid: no random points requested".into(),
        ));
    }
    let mut out = VerifyOutcome::default();
    let all = cfg.set == IdentitySet::All;
    if all || cfg.set == IdentitySet::Representations {
        out.extend(representations(cfg.n_max, cfg.rel_tol)?);
    }
    if all || cfg.set == IdentitySet::Transformations {
        out.extend(transformations(cfg.seed, cfg.points, cfg.rel_tol)?);
    }
    if all || cfg.set == IdentitySet::Convolutions {
        out.extend(convolutions(cfg.seed, cfg.points, cfg.rel_tol)?);
    }
    if all || cfg.set == IdentitySet::FiniteSums {
        out.extend(finite_sums(cfg.seed, cfg.points, cfg.rel_tol)?);
    }
    Ok(out)
}

fn meixner_point(x: f64, p: &MeixnerParams, n: usize) -> std::collections::BTreeMap<String, f64> {
    point(&[
        ("x", x),
        ("beta", p.beta),
        ("c", p.c.re),
        ("gamma", p.gamma),
        ("n", n as f64),
    ])
}

/// Every Meixner representation against the recurrence over the standard
/// grid, plus the Charlier, Laguerre and Meixner–Pollaczek closed forms.
pub fn representations(n_max: usize, rel_tol: f64) -> Result<VerifyOutcome> {
    let mut out = VerifyOutcome::default();
    for &beta in &MEIXNER_BETAS {
        for &c in &MEIXNER_CS {
            for &gamma in &MEIXNER_GAMMAS {
                for &x in &MEIXNER_XS {
                    let p = MeixnerParams::new(beta, c, gamma);
                    out.extend(meixner_point_suite(x, &p, n_max, rel_tol)?);
                }
            }
        }
    }
    out.extend(classical_reductions(n_max.min(20), rel_tol)?);
    out.extend(other_families(n_max.min(15), rel_tol)?);
    Ok(out)
}

/// All Meixner representations at one (x, β, c, γ) for n ≤ n_max.
pub fn meixner_point_suite(
    x: f64,
    p: &MeixnerParams,
    n_max: usize,
    rel_tol: f64,
) -> Result<VerifyOutcome> {
    let mut out = VerifyOutcome::default();
    let xs = re(x);
    let seq = meixner_seq(xs, p, n_max)?;
    let refl = meixner_seq(
        re(-p.beta - x),
        &MeixnerParams {
            c: re(1.0) / p.c,
            ..*p
        },
        n_max,
    )?;
    let quad_ok = near_integer(re(p.beta), 1e-8).is_none_or(|k| k < 1);
    let cross_ok = near_integer(re(p.gamma - x), 1e-8).is_none();
    if !cross_ok {
        out.skipped.push(format!(
            "meixner_cross_2f1 at x={x}, beta={}, c={}, gamma={}: γ − x is an integer",
            p.beta, p.c.re, p.gamma
        ));
    }
    if !quad_ok {
        out.skipped.push(format!(
            "meixner_quadratic at beta={}: positive integer",
            p.beta
        ));
    }
    for n in 0..=n_max {
        let oracle = seq.get(n);
        let pt = || meixner_point(x, p, n);
        out.reports.push(IdentityReport::new(
            "meixner_4f3",
            pt(),
            meixner_4f3(xs, p, n)?,
            oracle,
            rel_tol,
        ));
        out.reports.push(IdentityReport::new(
            "meixner_4f3_alt",
            pt(),
            meixner_4f3_alt(xs, p, n)?,
            oracle,
            rel_tol,
        ));
        if cross_ok {
            out.reports.push(IdentityReport::new(
                "meixner_cross_2f1",
                pt(),
                meixner_cross_2f1(xs, p, n)?,
                oracle,
                rel_tol,
            ));
        }
        if quad_ok {
            out.reports.push(IdentityReport::new(
                "meixner_quadratic",
                pt(),
                meixner_quadratic(xs, p, n)?,
                oracle,
                rel_tol,
            ));
        }
        let reflected = ipow(p.c, -(n as i64)) * refl.get(n);
        out.reports.push(IdentityReport::new(
            "meixner_reflection",
            pt(),
            reflected,
            oracle,
            rel_tol,
        ));
    }
    Ok(out)
}

/// γ = 0 against the classical hypergeometric and generating-function forms.
pub fn classical_reductions(n_max: usize, rel_tol: f64) -> Result<VerifyOutcome> {
    let mut out = VerifyOutcome::default();
    for &beta in &MEIXNER_BETAS {
        for &c in &MEIXNER_CS {
            for &x in &MEIXNER_XS {
                let p = MeixnerParams::new(beta, c, 0.0);
                let seq = meixner_seq(re(x), &p, n_max)?;
                for n in 0..=n_max {
                    let classical = pochhammer(re(beta), n)
                        * hyp_terminating(
                            &[re(-(n as f64)), re(-x)],
                            &[re(beta)],
                            p.c_tilde(),
                            n.max(1),
                        )
                        .or_else(|_| Ok::<_, Error>(re(1.0)))?;
                    let classical = if n == 0 { re(1.0) } else { classical };
                    let pt = meixner_point(x, &p, n);
                    out.reports.push(IdentityReport::new(
                        "classical_meixner",
                        pt.clone(),
                        seq.get(n),
                        classical,
                        rel_tol,
                    ));
                    out.reports.push(IdentityReport::new(
                        "classical_meixner_4f3",
                        pt,
                        meixner_4f3(re(x), &p, n)?,
                        classical,
                        rel_tol,
                    ));
                }
            }
        }
    }
    // Charlier: C_n(x; a)/n! is the t^n coefficient of e^t (1 − t/a)^x
    for &a in &[0.5, 2.0] {
        for &x in &[-1.0, 0.5, 2.0] {
            let seq = charlier_seq(re(x), &CharlierParams { a, gamma: 0.0 }, n_max)?;
            let mut coeff_binom = vec![re(1.0); n_max + 1];
            for k in 1..=n_max {
                coeff_binom[k] = coeff_binom[k - 1] * (x - (k - 1) as f64) / k as f64 * (-1.0 / a);
            }
            let mut fact = 1.0;
            for n in 0..=n_max {
                if n > 0 {
                    fact *= n as f64;
                }
                let mut cauchy = re(0.0);
                let mut inv_fact = 1.0;
                for j in 0..=n {
                    if j > 0 {
                        inv_fact /= j as f64;
                    }
                    cauchy += coeff_binom[n - j] * inv_fact;
                }
                out.reports.push(IdentityReport::new(
                    "classical_charlier",
                    point(&[("x", x), ("a", a), ("n", n as f64)]),
                    seq.get(n) / fact,
                    cauchy,
                    rel_tol,
                ));
            }
        }
    }
    // Laguerre: L_n^{(α)}(x) = (α+1)_n/n! ₁F₁(−n; α+1; x)
    for &alpha in &[-0.5, 0.0, 0.5, 2.0] {
        for &x in &[0.3, 1.2, 4.0] {
            let seq = laguerre_seq(re(x), &LaguerreParams { alpha, gamma: 0.0 }, n_max)?;
            let mut fact = 1.0;
            for n in 0..=n_max {
                if n > 0 {
                    fact *= n as f64;
                }
                let classical = if n == 0 {
                    re(1.0)
                } else {
                    pochhammer(re(alpha + 1.0), n) / fact
                        * hyp_terminating(&[re(-(n as f64))], &[re(alpha + 1.0)], re(x), n)?
                };
                out.reports.push(IdentityReport::new(
                    "classical_laguerre",
                    point(&[("x", x), ("alpha", alpha), ("n", n as f64)]),
                    seq.get(n),
                    classical,
                    rel_tol,
                ));
            }
        }
    }
    Ok(out)
}

fn other_families(n_max: usize, rel_tol: f64) -> Result<VerifyOutcome> {
    let mut out = VerifyOutcome::default();
    for &a in &[0.5, 2.0] {
        for &gamma in &[0.0, 0.8] {
            for &x in &[-1.0, 0.5, 2.0] {
                let p = CharlierParams { a, gamma };
                let seq = charlier_seq(re(x), &p, n_max)?;
                for n in 0..=n_max {
                    let pt = || point(&[("x", x), ("a", a), ("gamma", gamma), ("n", n as f64)]);
                    let pr = charlier_3f2(re(x), &p, n, CharlierVariant::Primary)?;
                    let tr = charlier_3f2(re(x), &p, n, CharlierVariant::Transformed)?;
                    out.reports.push(IdentityReport::new(
                        "charlier_3f2",
                        pt(),
                        pr,
                        seq.get(n),
                        rel_tol,
                    ));
                    out.reports.push(IdentityReport::new(
                        "charlier_3f2_transformed",
                        pt(),
                        tr,
                        pr,
                        rel_tol,
                    ));
                }
            }
        }
    }
    for &alpha in &[-0.5, 0.0, 0.5, 2.0] {
        for &gamma in &[0.0, 0.9] {
            for &x in &[0.3, 1.2, 4.0] {
                let p = LaguerreParams { alpha, gamma };
                let seq = laguerre_seq(re(x), &p, n_max)?;
                for n in 0..=n_max {
                    let pt = || {
                        point(&[
                            ("x", x),
                            ("alpha", alpha),
                            ("gamma", gamma),
                            ("n", n as f64),
                        ])
                    };
                    let pr = laguerre_3f2(re(x), &p, n, LaguerreVariant::Primary)?;
                    let rh = laguerre_3f2(re(x), &p, n, LaguerreVariant::Rahman)?;
                    out.reports.push(IdentityReport::new(
                        "laguerre_3f2",
                        pt(),
                        pr,
                        seq.get(n),
                        rel_tol,
                    ));
                    out.reports.push(IdentityReport::new(
                        "laguerre_3f2_rahman",
                        pt(),
                        rh,
                        pr,
                        rel_tol,
                    ));
                }
            }
        }
    }
    for &nu in &[0.3, 0.8] {
        for &phi in &[PI / 4.0, PI / 3.0, 2.0 * PI / 3.0] {
            for &gamma in &[0.0, 0.5] {
                for &x in &[-1.0, 0.3, 2.0] {
                    let p = MPParams { nu, phi, gamma };
                    let seq = mp_seq(re(x), &p, n_max)?;
                    for n in 0..=n_max {
                        out.reports.push(IdentityReport::new(
                            "mp_connection",
                            point(&[
                                ("x", x),
                                ("nu", nu),
                                ("phi", phi),
                                ("gamma", gamma),
                                ("n", n as f64),
                            ]),
                            mp_from_meixner(re(x), &p, n)?,
                            seq.get(n),
                            rel_tol,
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn f21(a: f64, b: f64, c: f64, z: f64) -> Result<Scalar> {
    Ok(gauss_2f1(re(a), re(b), re(c), re(z), &SeriesConfig::default())?.value)
}

fn pfaff_report(a: f64, b: f64, c: f64, z: f64, rel_tol: f64) -> Result<IdentityReport> {
    let lhs = f21(a, b, c, z)?;
    let rhs = cpow(re(1.0 - z), re(-a)) * f21(a, c - b, c, z / (z - 1.0))?;
    Ok(IdentityReport::new(
        "pfaff",
        point(&[("a", a), ("b", b), ("c", c), ("z", z)]),
        lhs,
        rhs,
        rel_tol,
    ))
}

fn euler_report(a: f64, b: f64, c: f64, z: f64, rel_tol: f64) -> Result<IdentityReport> {
    let lhs = f21(a, b, c, z)?;
    let rhs = cpow(re(1.0 - z), re(c - a - b)) * f21(c - a, c - b, c, z)?;
    Ok(IdentityReport::new(
        "euler",
        point(&[("a", a), ("b", b), ("c", c), ("z", z)]),
        lhs,
        rhs,
        rel_tol,
    ))
}

fn kummer_report(a: f64, b: f64, z: f64, rel_tol: f64) -> Result<IdentityReport> {
    let cfg = SeriesConfig::default();
    // sum both sides as plain series so the identity is not assumed
    let direct = |a: f64, z: f64| -> Result<Scalar> {
        let mut t = re(1.0);
        let mut s = re(1.0);
        for k in 0..cfg.max_terms {
            let kf = k as f64;
            t = t * (a + kf) / ((b + kf) * (kf + 1.0)) * z;
            s += t;
            if t.norm() <= 1e-17 * s.norm() {
                return Ok(s);
            }
        }
        Err(Error::NotConverged {
            terms: cfg.max_terms,
            err_estimate: t.norm(),
        })
    };
    let lhs = kummer_1f1(re(a), re(b), re(z), &cfg)?.value;
    let rhs = re(z.exp()) * direct(b - a, -z)?;
    // for z < 0 the kernel itself applies the transformation, so test the plain series
    let lhs = if z < 0.0 { direct(a, z)? } else { lhs };
    Ok(IdentityReport::new(
        "kummer",
        point(&[("a", a), ("b", b), ("z", z)]),
        lhs,
        rhs,
        rel_tol,
    ))
}

fn f1_transform_report(
    al: f64,
    b1: f64,
    b2: f64,
    s: f64,
    x: f64,
    y: f64,
    rel_tol: f64,
) -> Result<IdentityReport> {
    let cfg = SeriesConfig::default();
    let lhs = appell_f1_double(re(al), re(b1), re(b2), re(s), re(x), re(y), &cfg)?.value;
    let (xt, yt) = (x / (x - 1.0), y / (y - 1.0));
    let rhs = cpow(re(1.0 - x), re(-b1))
        * cpow(re(1.0 - y), re(-b2))
        * appell_f1_double(re(s - al), re(b1), re(b2), re(s), re(xt), re(yt), &cfg)?.value;
    Ok(IdentityReport::new(
        "f1_transformation",
        point(&[
            ("alpha", al),
            ("beta1", b1),
            ("beta2", b2),
            ("sigma", s),
            ("x", x),
            ("y", y),
        ]),
        lhs,
        rhs,
        rel_tol,
    ))
}

fn f1_double_report(
    al: f64,
    b1: f64,
    b2: f64,
    s: f64,
    x: f64,
    y: f64,
    rel_tol: f64,
) -> Result<IdentityReport> {
    let cfg = SeriesConfig::default();
    let lhs = appell_f1(re(al), re(b1), re(b2), re(s), re(x), re(y), &cfg)?.value;
    let rhs = appell_f1_double(re(al), re(b1), re(b2), re(s), re(x), re(y), &cfg)?.value;
    Ok(IdentityReport::new(
        "f1_single_vs_double",
        point(&[
            ("alpha", al),
            ("beta1", b1),
            ("beta2", b2),
            ("sigma", s),
            ("x", x),
            ("y", y),
        ]),
        lhs,
        rhs,
        rel_tol,
    ))
}

fn phi1_limit_report(a1: f64, l: f64, a2: f64, x: f64, y: f64, mu: f64) -> Result<IdentityReport> {
    let cfg = SeriesConfig::default();
    let lhs = humbert_phi1(re(a1), re(l), re(a2), re(x), re(y), &cfg)?.value;
    let rhs = appell_f1(re(a1), re(l), re(mu), re(a2), re(x), re(y / mu), &cfg)?.value;
    Ok(IdentityReport::new(
        "phi1_as_f1_limit",
        point(&[
            ("alpha1", a1),
            ("lambda", l),
            ("alpha2", a2),
            ("x", x),
            ("y", y),
            ("mu", mu),
        ]),
        lhs,
        rhs,
        PHI1_LIMIT_TOL,
    ))
}

/// Pfaff, Euler, Kummer, F₁-transformation, F₁ single/double and Φ₁-limit
/// invariants on their fixed grids and on `points` random draws each.
pub fn transformations(seed: u64, points: usize, rel_tol: f64) -> Result<VerifyOutcome> {
    let mut out = VerifyOutcome::default();
    let grid_ab = [-1.5, 0.5, 2.0];
    for &a in &grid_ab {
        for &b in &grid_ab {
            for &c in &[1.3, 2.7] {
                for &z in &[-0.4, 0.3] {
                    out.reports
                        .push(pfaff_report(a, b, c, z, rel_tol.min(1e-11))?);
                    out.reports
                        .push(euler_report(a, b, c, z, rel_tol.min(1e-11))?);
                }
            }
        }
    }
    for &a in &[0.5, 1.5, 3.0] {
        for &b in &[0.5, 1.5, 3.0] {
            for &z in &[-2.0, -0.5, 1.0] {
                out.reports
                    .push(kummer_report(a, b, z, rel_tol.min(1e-12))?);
            }
        }
    }
    for &x in &[-0.3, 0.2] {
        for &y in &[-0.3, 0.2] {
            out.reports.push(f1_transform_report(
                0.6,
                0.5,
                1.2,
                1.9,
                x,
                y,
                rel_tol.min(1e-10),
            )?);
            out.reports.push(f1_double_report(
                0.6,
                0.5,
                1.2,
                1.9,
                x,
                y,
                rel_tol.min(1e-11),
            )?);
        }
    }
    out.reports
        .push(phi1_limit_report(0.4, 0.6, 1.4, 0.3, -0.5, 1e6)?);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..points {
        let a = rng.gen_range(-2.0..3.0);
        let b = rng.gen_range(-2.0..3.0);
        let c = rng.gen_range(0.5..3.5);
        let z = rng.gen_range(-0.6..0.6);
        out.reports.push(pfaff_report(a, b, c, z, rel_tol)?);
        out.reports.push(euler_report(a, b, c, z, rel_tol)?);
        let (ka, kb, kz) = (
            rng.gen_range(0.2..3.0),
            rng.gen_range(0.2..3.0),
            rng.gen_range(-3.0..3.0),
        );
        out.reports.push(kummer_report(ka, kb, kz, rel_tol)?);
        let al = rng.gen_range(0.2..2.0);
        let b1 = rng.gen_range(0.2..2.0);
        let b2 = rng.gen_range(0.2..2.0);
        let s = rng.gen_range(0.5..3.0);
        let x = rng.gen_range(-0.4..0.4);
        let y = rng.gen_range(-0.4..0.4);
        out.reports
            .push(f1_transform_report(al, b1, b2, s, x, y, rel_tol)?);
        out.reports
            .push(f1_double_report(al, b1, b2, s, x, y, rel_tol)?);
        let (pa, pl, pa2) = (
            rng.gen_range(0.2..2.0),
            rng.gen_range(0.2..2.0),
            rng.gen_range(0.5..3.0),
        );
        out.reports.push(phi1_limit_report(
            pa,
            pl,
            pa2,
            rng.gen_range(-0.5..0.5),
            rng.gen_range(-1.0..1.0),
            1e9,
        )?);
    }
    Ok(out)
}

/// The three convolution identities at seeded random points.
pub fn convolutions(seed: u64, points: usize, rel_tol: f64) -> Result<VerifyOutcome> {
    let mut out = VerifyOutcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC0);
    for _ in 0..points {
        let n = rng.gen_range(0..=12usize);
        let gamma = rng.gen_range(0.1..3.0);
        let m = FamilyParams::Meixner(MeixnerParams::new(
            rng.gen_range(0.2..3.0),
            rng.gen_range(0.1..0.9),
            gamma,
        ));
        out.reports.push(convolution_identity(
            re(rng.gen_range(-2.0..3.0)),
            &m,
            n,
            rel_tol,
        )?);
        let c = FamilyParams::Charlier(CharlierParams {
            a: rng.gen_range(0.3..3.0),
            gamma,
        });
        out.reports.push(convolution_identity(
            re(rng.gen_range(-2.0..3.0)),
            &c,
            n,
            rel_tol,
        )?);
        let l = FamilyParams::Laguerre(LaguerreParams {
            alpha: rng.gen_range(-0.9..3.0),
            gamma,
        });
        out.reports.push(convolution_identity(
            re(rng.gen_range(0.0..5.0)),
            &l,
            n,
            rel_tol,
        )?);
    }
    Ok(out)
}

fn away_from_integer(v: f64, d: f64) -> bool {
    (v - v.round()).abs() > d
}

/// Finite-sum identities, the c = 1 degenerate value and the reflection
/// relation at seeded random points.
pub fn finite_sums(seed: u64, points: usize, rel_tol: f64) -> Result<VerifyOutcome> {
    let mut out = VerifyOutcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xF5);
    let mut drawn = 0;
    while drawn < points {
        let a = rng.gen_range(0.1..5.0);
        let b = rng.gen_range(0.1..5.0);
        let n20 = rng.gen_range(0..=20usize);
        let n12 = rng.gen_range(0..=12usize);
        let t = rng.gen_range(-0.5..0.5);
        let y = rng.gen_range(-1.0..1.0);
        let t_comp = if rng.gen_bool(0.5) { -0.4 } else { 0.25 };
        if !away_from_integer(b - a, 0.1) {
            continue;
        }
        drawn += 1;
        out.reports.push(identity_3f2_special(n20, a, b, rel_tol)?);
        out.reports
            .push(identity_3f2_t_powered(n12, a, b, re(t_comp), rel_tol)?);
        out.reports
            .push(identity_4f3_finite_sum(n12, a, b, re(t), re(y), rel_tol)?);

        let beta = loop {
            let v = rng.gen_range(0.1..3.0);
            if (v - 1.0f64).abs() > 0.05 {
                break v;
            }
        };
        let gamma = rng.gen_range(0.0..3.0);
        let deg = meixner_c1_degenerate(beta, gamma, n20)?;
        for &x in &[-3.0, 0.0, 7.0] {
            let s = meixner_seq(re(x), &MeixnerParams::new(beta, 1.0, gamma), n20)?;
            out.reports.push(IdentityReport::new(
                "degenerate_c1",
                point(&[
                    ("x", x),
                    ("beta", beta),
                    ("gamma", gamma),
                    ("n", n20 as f64),
                ]),
                s.get(n20),
                deg,
                DEGENERATE_TOL.min(rel_tol),
            ));
        }

        let p = MeixnerParams::new(
            rng.gen_range(0.2..3.0),
            rng.gen_range(0.1..0.9),
            rng.gen_range(0.0..3.0),
        );
        let x = rng.gen_range(-2.0..4.0);
        let direct = meixner_seq(re(x), &p, n20)?.get(n20);
        let refl = meixner_4f3_alt(
            re(-p.beta - x),
            &MeixnerParams {
                c: re(1.0) / p.c,
                ..p
            },
            n20,
        )?;
        out.reports.push(IdentityReport::new(
            "meixner_reflection",
            meixner_point(x, &p, n20),
            ipow(p.c, -(n20 as i64)) * refl,
            direct,
            rel_tol,
        ));
    }
    Ok(out)
}
