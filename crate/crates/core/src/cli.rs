//! Command-line front end: `eval`, `table`, `verify`, `gf-check`, `mh-study`.
//!
//! Exit codes: 0 success, 1 identity failure, 2 invalid input, 3 numerical
//! failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::asymptotics::mh_convergence_study;
use crate::closedforms::{
    charlier_3f2, laguerre_3f2, meixner_4f3, meixner_4f3_alt, meixner_c1_degenerate,
    meixner_cross_2f1, meixner_quadratic, mp_from_meixner, CharlierVariant, LaguerreVariant,
};
use crate::error::Error;
use crate::genfuncs::gf_check;
use crate::recurrences::{
    family_seq, CharlierParams, FamilyParams, LaguerreParams, MPParams, MeixnerParams,
};
use crate::report::IdentityReport;
use crate::scalar::{re, Scalar};
use crate::verify::{run_verify, IdentitySet, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILURE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "aopoly",
    version,
    about = "Associated Meixner, Charlier, Laguerre and Meixner–Pollaczek polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate P_n(x) with one representation.
    Eval(EvalArgs),
    /// Tabulate P_n(x) over an x grid and 0 ≤ n ≤ n-max.
    Table(TableArgs),
    /// Run an identity suite.
    Verify(VerifyArgs),
    /// Compare generating-function closed forms with truncated series.
    GfCheck(GfArgs),
    /// Scaled values against the Mehler–Heine limit at checkpoints.
    MhStudy(MhArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Meixner,
    Charlier,
    Laguerre,
    MeixnerPollaczek,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rep {
    Recurrence,
    #[value(name = "4f3")]
    #[serde(rename = "4f3")]
    FourF3,
    #[value(name = "4f3-alt")]
    #[serde(rename = "4f3-alt")]
    FourF3Alt,
    Quadratic,
    Cross,
    DegenerateC1,
    #[value(name = "3f2")]
    #[serde(rename = "3f2")]
    ThreeF2,
    #[value(name = "3f2-transformed")]
    #[serde(rename = "3f2-transformed")]
    ThreeF2Transformed,
    Rahman,
    MpConnection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SetArg {
    Representations,
    Transformations,
    Convolutions,
    FiniteSums,
    All,
}

impl From<SetArg> for IdentitySet {
    fn from(s: SetArg) -> Self {
        match s {
            SetArg::Representations => IdentitySet::Representations,
            SetArg::Transformations => IdentitySet::Transformations,
            SetArg::Convolutions => IdentitySet::Convolutions,
            SetArg::FiniteSums => IdentitySet::FiniteSums,
            SetArg::All => IdentitySet::All,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub output: OutputFormat,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-8)]
    pub rel_tol: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "recurrence")]
    pub rep: Rep,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// `start:stop:step` or a comma-separated list.
    #[arg(long, allow_hyphen_values = true)]
    pub x_grid: String,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "recurrence")]
    pub rep: Rep,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub set: SetArg,
    #[arg(long, default_value_t = 25)]
    pub n_max: usize,
    /// Random points per randomized identity.
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GfArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.1)]
    pub t: f64,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct MhArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
    #[arg(long, value_delimiter = ',', default_value = "50,100,200,400")]
    pub checkpoints: Vec<usize>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug)]
enum Failure {
    Validation(String),
    Numerical(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(m) | Error::RestrictedParameter(m) => Failure::Validation(m),
            Error::ZeroC | Error::ZeroA => Failure::Validation(e.to_string()),
            other => Failure::Numerical(other),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn required(v: Option<f64>, name: &str, family: Family) -> CliResult<f64> {
    v.ok_or_else(|| Failure::Validation(format!("--{name} is required for {family:?}")))
}

impl FamilyArgs {
    /// Parameters for the family; `degenerate` admits the Meixner c = 1 case.
    fn params(&self, degenerate: bool) -> CliResult<FamilyParams> {
        let f = self.family;
        let gamma = required(self.gamma, "gamma", f)?;
        let p = match f {
            Family::Meixner => FamilyParams::Meixner(MeixnerParams::new(
                required(self.beta, "beta", f)?,
                required(self.c, "c", f)?,
                gamma,
            )),
            Family::Charlier => FamilyParams::Charlier(CharlierParams {
                a: required(self.a, "a", f)?,
                gamma,
            }),
            Family::Laguerre => FamilyParams::Laguerre(LaguerreParams {
                alpha: required(self.alpha, "alpha", f)?,
                gamma,
            }),
            Family::MeixnerPollaczek => FamilyParams::MeixnerPollaczek(MPParams {
                nu: required(self.nu, "nu", f)?,
                phi: required(self.phi, "phi", f)?,
                gamma,
            }),
        };
        let ok = match (&p, degenerate) {
            (FamilyParams::Meixner(m), true) => m.c == re(1.0) && m.gamma + m.beta > 0.0,
            (p, _) => p.is_valid(),
        };
        if !ok {
            return Err(Failure::Validation(format!(
                "parameters outside the valid region: {p:?}"
            )));
        }
        Ok(p)
    }
}

fn evaluate(params: &FamilyParams, rep: Rep, x: f64, n: usize) -> CliResult<Scalar> {
    let xs = re(x);
    let bad = || {
        Failure::Validation(format!(
            "representation {rep:?} does not apply to this family"
        ))
    };
    Ok(match (params, rep) {
        (_, Rep::Recurrence) => family_seq(xs, params, n)?.get(n),
        (FamilyParams::Meixner(p), Rep::FourF3) => meixner_4f3(xs, p, n)?,
        (FamilyParams::Meixner(p), Rep::FourF3Alt) => meixner_4f3_alt(xs, p, n)?,
        (FamilyParams::Meixner(p), Rep::Quadratic) => meixner_quadratic(xs, p, n)?,
        (FamilyParams::Meixner(p), Rep::Cross) => meixner_cross_2f1(xs, p, n)?,
        (FamilyParams::Meixner(p), Rep::DegenerateC1) => meixner_c1_degenerate(p.beta, p.gamma, n)?,
        (FamilyParams::Charlier(p), Rep::ThreeF2) => {
            charlier_3f2(xs, p, n, CharlierVariant::Primary)?
        }
        (FamilyParams::Charlier(p), Rep::ThreeF2Transformed) => {
            charlier_3f2(xs, p, n, CharlierVariant::Transformed)?
        }
        (FamilyParams::Laguerre(p), Rep::ThreeF2) => {
            laguerre_3f2(xs, p, n, LaguerreVariant::Primary)?
        }
        (FamilyParams::Laguerre(p), Rep::Rahman) => {
            laguerre_3f2(xs, p, n, LaguerreVariant::Rahman)?
        }
        (FamilyParams::MeixnerPollaczek(p), Rep::MpConnection) => mp_from_meixner(xs, p, n)?,
        _ => return Err(bad()),
    })
}

/// A flat output record.
trait Row: Serialize {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Serialize)]
struct EvalRow {
    family: Family,
    representation: Rep,
    x: f64,
    n: usize,
    value_re: f64,
    value_im: f64,
    terms_used: usize,
    err_estimate: f64,
}

impl Row for EvalRow {
    fn header() -> &'static [&'static str] {
        &[
            "family",
            "representation",
            "x",
            "n",
            "value_re",
            "value_im",
            "terms_used",
            "err_estimate",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            enum_name(&self.family),
            enum_name(&self.representation),
            num(self.x),
            self.n.to_string(),
            num(self.value_re),
            num(self.value_im),
            self.terms_used.to_string(),
            num(self.err_estimate),
        ]
    }
}

#[derive(Debug, Serialize)]
struct TableRow {
    family: Family,
    representation: Rep,
    x: f64,
    n: usize,
    value_re: f64,
    value_im: f64,
}

impl Row for TableRow {
    fn header() -> &'static [&'static str] {
        &["family", "representation", "x", "n", "value_re", "value_im"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            enum_name(&self.family),
            enum_name(&self.representation),
            num(self.x),
            self.n.to_string(),
            num(self.value_re),
            num(self.value_im),
        ]
    }
}

#[derive(Debug, Serialize)]
struct IdentityRow {
    seed: u64,
    identity_id: String,
    point: BTreeMap<String, f64>,
    lhs_re: f64,
    lhs_im: f64,
    rhs_re: f64,
    rhs_im: f64,
    rel_discrepancy: f64,
    passed: bool,
}

impl IdentityRow {
    fn new(seed: u64, r: &IdentityReport) -> Self {
        IdentityRow {
            seed,
            identity_id: r.identity_id.clone(),
            point: r.point.clone(),
            lhs_re: r.lhs.re,
            lhs_im: r.lhs.im,
            rhs_re: r.rhs.re,
            rhs_im: r.rhs.im,
            rel_discrepancy: r.rel_discrepancy,
            passed: r.passed,
        }
    }
}

impl Row for IdentityRow {
    fn header() -> &'static [&'static str] {
        &[
            "seed",
            "identity_id",
            "point",
            "lhs_re",
            "lhs_im",
            "rhs_re",
            "rhs_im",
            "rel_discrepancy",
            "passed",
        ]
    }

    fn cells(&self) -> Vec<String> {
        let point = self
            .point
            .iter()
            .map(|(k, v)| format!("{k}={}", num(*v)))
            .collect::<Vec<_>>()
            .join(";");
        vec![
            self.seed.to_string(),
            self.identity_id.clone(),
            point,
            num(self.lhs_re),
            num(self.lhs_im),
            num(self.rhs_re),
            num(self.rhs_im),
            num(self.rel_discrepancy),
            self.passed.to_string(),
        ]
    }
}

#[derive(Debug, Serialize)]
struct MhRow {
    n: usize,
    scaled_value_re: f64,
    scaled_value_im: f64,
    limit_re: f64,
    limit_im: f64,
    abs_error: f64,
}

impl Row for MhRow {
    fn header() -> &'static [&'static str] {
        &[
            "n",
            "scaled_value_re",
            "scaled_value_im",
            "limit_re",
            "limit_im",
            "abs_error",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            num(self.scaled_value_re),
            num(self.scaled_value_im),
            num(self.limit_re),
            num(self.limit_im),
            num(self.abs_error),
        ]
    }
}

fn enum_name<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|j| j.as_str().map(str::to_owned))
        .unwrap_or_default()
}

fn render_csv<R: Row>(rows: &[R], trailer: Option<String>) -> String {
    let mut s = R::header().join(",");
    s.push('\n');
    for r in rows {
        s.push_str(&r.cells().join(","));
        s.push('\n');
    }
    if let Some(t) = trailer {
        s.push_str(&t);
        s.push('\n');
    }
    s
}

fn render<R: Row>(rows: &[R], format: OutputFormat, trailer: Option<(&str, bool)>) -> String {
    match format {
        OutputFormat::Csv => render_csv(rows, trailer.map(|(k, v)| format!("{k},{v}"))),
        OutputFormat::Json => {
            let mut values: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| serde_json::to_value(r).expect("rows serialize"))
                .collect();
            if let Some((k, v)) = trailer {
                values.push(serde_json::json!({ k: v }));
            }
            let mut s = serde_json::to_string_pretty(&values).expect("rows serialize");
            s.push('\n');
            s
        }
    }
}

fn emit(text: &str, common: &CommonArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let res = match &common.out {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    };
    res.map_err(|e| Failure::Validation(format!("cannot write output: {e}")))
}

fn check_tol(common: &CommonArgs) -> CliResult<()> {
    if !(common.rel_tol > 0.0) || !common.rel_tol.is_finite() {
        return Err(Failure::Validation("--rel-tol must be positive".into()));
    }
    Ok(())
}

/// Parses `start:stop:step` or `v1,v2,...`.
pub fn parse_grid(spec: &str) -> std::result::Result<Vec<f64>, String> {
    let bad = |e: std::num::ParseFloatError| format!("bad grid value in '{spec}': {e}");
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    if spec.contains(':') {
        let parts: Vec<f64> = spec
            .split(':')
            .map(|p| p.trim().parse::<f64>().map_err(bad))
            .collect::<Result<_, _>>()?;
        let [start, stop, step] = parts[..] else {
            return Err(format!("range '{spec}' must be start:stop:step"));
        };
        if !(step > 0.0) || !start.is_finite() || !stop.is_finite() {
            return Err(format!(
                "range '{spec}' needs a positive step and finite ends"
            ));
        }
        let count = ((stop - start) / step + 1e-9).floor();
        if count < 0.0 {
            return Ok(Vec::new());
        }
        if count > 1e6 {
            return Err(format!("range '{spec}' has too many points"));
        }
        return Ok((0..=count as usize)
            .map(|i| start + i as f64 * step)
            .collect());
    }
    spec.split(',')
        .map(|p| p.trim().parse::<f64>().map_err(bad))
        .collect()
}

fn cmd_eval(a: &EvalArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    check_tol(&a.common)?;
    let params = a.family.params(a.rep == Rep::DegenerateC1)?;
    let value = evaluate(&params, a.rep, a.x, a.n)?;
    // closed forms are checked against the recurrence; the recurrence
    // itself runs in extended precision and is rounded once
    let err_estimate = if a.rep == Rep::Recurrence {
        value.norm() * f64::EPSILON
    } else {
        (value - family_seq(re(a.x), &params, a.n)?.get(a.n)).norm()
    };
    let row = EvalRow {
        family: a.family.family,
        representation: a.rep,
        x: a.x,
        n: a.n,
        value_re: value.re,
        value_im: value.im,
        terms_used: a.n + 1,
        err_estimate,
    };
    emit(&render(&[row], a.common.output, None), &a.common, stdout)?;
    let _ = writeln!(
        stderr,
        "eval: {} ({:?}) n={} x={}",
        enum_name(&a.family.family),
        a.rep,
        a.n,
        a.x
    );
    Ok(EXIT_OK)
}

fn cmd_table(a: &TableArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    check_tol(&a.common)?;
    let xs = parse_grid(&a.x_grid).map_err(Failure::Validation)?;
    if xs.is_empty() {
        return Err(Failure::Validation("empty x grid".into()));
    }
    let params = a.family.params(a.rep == Rep::DegenerateC1)?;
    let mut rows = Vec::with_capacity(xs.len() * (a.n_max + 1));
    for &x in &xs {
        for n in 0..=a.n_max {
            let v = evaluate(&params, a.rep, x, n)?;
            rows.push(TableRow {
                family: a.family.family,
                representation: a.rep,
                x,
                n,
                value_re: v.re,
                value_im: v.im,
            });
        }
    }
    emit(&render(&rows, a.common.output, None), &a.common, stdout)?;
    let _ = writeln!(stderr, "table: {} rows", rows.len());
    Ok(EXIT_OK)
}

fn report_identities(
    reports: &[IdentityReport],
    skipped: &[String],
    label: &str,
    common: &CommonArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult<i32> {
    let rows: Vec<_> = reports
        .iter()
        .map(|r| IdentityRow::new(common.seed, r))
        .collect();
    emit(&render(&rows, common.output, None), common, stdout)?;
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
    for r in &failed {
        let _ = writeln!(
            stderr,
            "FAILED {} at {:?}: rel discrepancy {:e}",
            r.identity_id, r.point, r.rel_discrepancy
        );
    }
    for s in skipped {
        let _ = writeln!(stderr, "skipped {s}");
    }
    let _ = writeln!(
        stderr,
        "{label}: {} passed, {} failed, {} skipped (seed {})",
        reports.len() - failed.len(),
        failed.len(),
        skipped.len(),
        common.seed
    );
    Ok(if failed.is_empty() {
        EXIT_OK
    } else {
        EXIT_IDENTITY_FAILURE
    })
}

fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    check_tol(&a.common)?;
    let cfg = VerifyConfig {
        set: a.set.into(),
        seed: a.common.seed,
        points: a.points,
        n_max: a.n_max,
        rel_tol: a.common.rel_tol,
    };
    let out = run_verify(&cfg)?;
    if out.reports.is_empty() {
        return Err(Failure::Validation("empty grid: nothing to verify".into()));
    }
    report_identities(
        &out.reports,
        &out.skipped,
        "verify",
        &a.common,
        stdout,
        stderr,
    )
}

fn cmd_gf_check(a: &GfArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    check_tol(&a.common)?;
    let params = a.family.params(false)?;
    let reports = gf_check(re(a.x), &params, re(a.t), a.common.rel_tol)?;
    report_identities(&reports, &[], "gf-check", &a.common, stdout, stderr)
}

fn cmd_mh_study(a: &MhArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    check_tol(&a.common)?;
    if !matches!(a.family.family, Family::Meixner | Family::Charlier) {
        return Err(Failure::Validation(
            "mh-study supports meixner and charlier".into(),
        ));
    }
    let params = a.family.params(false)?;
    let study = mh_convergence_study(re(a.x), &params, &a.checkpoints)?;
    let rows: Vec<_> = study
        .samples
        .iter()
        .map(|s| MhRow {
            n: s.n,
            scaled_value_re: s.scaled_value.re,
            scaled_value_im: s.scaled_value.im,
            limit_re: study.limit.re,
            limit_im: study.limit.im,
            abs_error: s.abs_error,
        })
        .collect();
    let text = render(
        &rows,
        a.common.output,
        Some(("monotone_tail", study.monotone_tail)),
    );
    emit(&text, &a.common, stdout)?;
    let _ = writeln!(
        stderr,
        "mh-study: {} checkpoints, monotone tail {}",
        rows.len(),
        study.monotone_tail
    );
    Ok(EXIT_OK)
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_VALIDATION
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a, stdout, stderr),
        Command::Table(a) => cmd_table(a, stdout, stderr),
        Command::Verify(a) => cmd_verify(a, stdout, stderr),
        Command::GfCheck(a) => cmd_gf_check(a, stdout, stderr),
        Command::MhStudy(a) => cmd_mh_study(a, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Validation(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            EXIT_VALIDATION
        }
        Err(Failure::Numerical(e)) => {
            let _ = writeln!(stderr, "numerical failure: {e}");
            EXIT_NUMERICAL
        }
    }
}
