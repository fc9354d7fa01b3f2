use thiserror::Error;

/// Errors raised by evaluators in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Pochhammer symbol vanishes: a factor a+j is zero")]
    ZeroPochhammer,
    #[error("argument {0} hits a pole of the gamma function")]
    PoleArgument(String),
    #[error("denominator parameter vanishes within the summation range: {0}")]
    DenominatorPole(String),
    #[error("series did not converge within {terms} terms (last error estimate {err_estimate:e})")]
    NotConverged { terms: usize, err_estimate: f64 },
    #[error("connection formula is ill-conditioned: a - b = {0} is within 1e-6 of an integer")]
    IllConditioned(String),
    #[error("arguments outside the convergence region: {0}")]
    DomainError(String),
    #[error("integrand is singular inside the integration interval: {0}")]
    SingularIntegrand(String),
    #[error(
        "quadrature did not converge after {levels} refinement levels (estimate {err_estimate:e})"
    )]
    QuadratureNotConverged { levels: usize, err_estimate: f64 },
    #[error("parameter outside the region where the formula is stated: {0}")]
    RestrictedParameter(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("leading recurrence coefficient c is zero")]
    ZeroC,
    #[error("leading recurrence coefficient a is zero")]
    ZeroA,
    #[error("truncated series tail too large: last terms {last:e} vs partial sum {sum:e}")]
    TailTooLarge { last: f64, sum: f64 },
    #[error("non-finite value produced: {0}")]
    NonFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
