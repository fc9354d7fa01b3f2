//! Terminating generalized hypergeometric sums.

use crate::error::{Error, Result};
use crate::scalar::{near_integer, Scalar};
use crate::wide::{Wide, DEFAULT_PRECISION};

/// Index at which the series cuts off: the smallest m with some numerator
/// parameter equal to −m, if that is within `top_index`.
fn cutoff(num: &[Scalar], top_index: usize) -> Option<usize> {
    num.iter()
        .filter_map(|&p| {
            if p.im == 0.0 && p.re <= 0.0 && p.re == p.re.round() {
                Some((-p.re) as usize)
            } else {
                None
            }
        })
        .filter(|&m| m <= top_index)
        .min()
}

/// `Σ_{j=0..n} Π(num)_j / Π(den)_j · arg^j / j!` in extended precision.
pub fn hyp_terminating_wide(
    num: &[Scalar],
    den: &[Scalar],
    arg: Scalar,
    top_index: usize,
    prec: usize,
) -> Result<Wide> {
    let n = cutoff(num, top_index).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "no numerator parameter equals −m with m ≤ {top_index}"
        ))
    })?;
    for &d in den {
        if let Some(k) = near_integer(d, 0.0) {
            if k <= 0 && ((-k) as usize) < n {
                return Err(Error::DenominatorPole(format!("denominator parameter {d}")));
            }
        }
    }
    let num_w = num
        .iter()
        .map(|&p| Wide::from_scalar(p, prec))
        .collect::<Result<Vec<_>>>()?;
    let den_w = den
        .iter()
        .map(|&p| Wide::from_scalar(p, prec))
        .collect::<Result<Vec<_>>>()?;
    let z = Wide::from_scalar(arg, prec)?;
    let mut term = Wide::one(prec);
    let mut sum = Wide::one(prec);
    for j in 0..n {
        let mut top = z.clone();
        for p in &num_w {
            top = &top * &p.add_i64(j as i64);
        }
        let mut bottom = Wide::from_i64(j as i64 + 1, prec);
        for p in &den_w {
            bottom = &bottom * &p.add_i64(j as i64);
        }
        term = &(&term * &top) / &bottom;
        sum = &sum + &term;
    }
    Ok(sum)
}

/// Terminating `pFq` at `arg`; `top_index` is the degree n of the
/// numerator parameter −n that stops the series.
pub fn hyp_terminating(
    num: &[Scalar],
    den: &[Scalar],
    arg: Scalar,
    top_index: usize,
) -> Result<Scalar> {
    Ok(hyp_terminating_wide(num, den, arg, top_index, DEFAULT_PRECISION)?.to_scalar())
}
