//! Multi-precision complex arithmetic.
//!
//! Used wherever an exact finite sum or a three-term recurrence suffers
//! cancellation that binary64 cannot absorb. Values are built from binary64
//! inputs exactly and rounded back only at the end.

use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

type Real = FBig<HalfEven, 2>;

/// Working precision, in bits, of the extended-precision paths.
pub const DEFAULT_PRECISION: usize = 256;

#[derive(Clone, Debug)]
pub struct Wide {
    re: Real,
    im: Real,
}

fn real_from_f64(x: f64, prec: usize) -> Result<Real> {
    let v = Real::try_from(x).map_err(|_| Error::NonFinite(format!("{x}")))?;
    Ok(v.with_precision(prec).value())
}

fn real_zero(prec: usize) -> Real {
    Real::ZERO.with_precision(prec).value()
}

impl Wide {
    pub fn from_scalar(z: Scalar, prec: usize) -> Result<Self> {
        Ok(Wide {
            re: real_from_f64(z.re, prec)?,
            im: real_from_f64(z.im, prec)?,
        })
    }

    pub fn from_f64(x: f64, prec: usize) -> Result<Self> {
        Ok(Wide {
            re: real_from_f64(x, prec)?,
            im: real_zero(prec),
        })
    }

    /// Exact small integers (counters, binomials of modest size).
    pub fn from_i64(k: i64, prec: usize) -> Self {
        Wide {
            re: Real::from(k).with_precision(prec).value(),
            im: real_zero(prec),
        }
    }

    pub fn zero(prec: usize) -> Self {
        Self::from_i64(0, prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn is_real(&self) -> bool {
        self.im.repr().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.repr().is_zero() && self.im.repr().is_zero()
    }

    pub fn to_scalar(&self) -> Scalar {
        Scalar::new(self.re.to_f64().value(), self.im.to_f64().value())
    }

    /// Magnitude rounded to binary64 (overflows to infinity for huge values).
    pub fn norm(&self) -> f64 {
        self.to_scalar().norm()
    }

    pub fn add_i64(&self, k: i64) -> Wide {
        Wide {
            re: &self.re + Real::from(k),
            im: self.im.clone(),
        }
    }

    pub fn powi(&self, k: u32) -> Wide {
        let prec = self.re.precision().max(self.im.precision());
        let mut acc = Wide::one(prec);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Rising factorial `(self)_k` by direct product.
    pub fn pochhammer(&self, k: usize) -> Wide {
        let prec = self.re.precision().max(self.im.precision());
        let mut acc = Wide::one(prec);
        for j in 0..k {
            acc = &acc * &self.add_i64(j as i64);
        }
        acc
    }
}

impl<'a> Add<&'a Wide> for &'a Wide {
    type Output = Wide;
    fn add(self, rhs: &Wide) -> Wide {
        Wide {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a Wide> for &'a Wide {
    type Output = Wide;
    fn sub(self, rhs: &Wide) -> Wide {
        Wide {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a Wide> for &'a Wide {
    type Output = Wide;
    fn mul(self, rhs: &Wide) -> Wide {
        if self.is_real() && rhs.is_real() {
            return Wide {
                re: &self.re * &rhs.re,
                im: self.im.clone(),
            };
        }
        Wide {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Div<&'a Wide> for &'a Wide {
    type Output = Wide;
    /// Panics on division by an exact zero; callers screen denominators first.
    fn div(self, rhs: &Wide) -> Wide {
        if rhs.is_real() {
            return Wide {
                re: &self.re / &rhs.re,
                im: &self.im / &rhs.re,
            };
        }
        let den = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        Wide {
            re: (&self.re * &rhs.re + &self.im * &rhs.im) / &den,
            im: (&self.im * &rhs.re - &self.re * &rhs.im) / &den,
        }
    }
}

impl Neg for &Wide {
    type Output = Wide;
    fn neg(self) -> Wide {
        Wide {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Wide> for Wide {
            type Output = Wide;
            fn $f(self, rhs: Wide) -> Wide {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Wide> for Wide {
            type Output = Wide;
            fn $f(self, rhs: &Wide) -> Wide {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);
