use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use super::literal::{parse_scalar, LiteralError};
use super::{Field, Rational, ScalarError, Sign};

/// Complex number with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    /// `re_n/re_d + (im_n/im_d) i`.
    pub fn from_parts(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> Self {
        GaussianRational::new(Rational::new(re_n, re_d), Rational::new(im_n, im_d))
    }

    pub fn norm_sqr(&self) -> Rational {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }
}

impl Field for GaussianRational {
    fn zero() -> Self {
        GaussianRational::real(Rational::zero())
    }

    fn one() -> Self {
        GaussianRational::real(Rational::one())
    }

    fn from_i64(n: i64) -> Self {
        GaussianRational::real(Rational::integer(n))
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    fn real_sign(&self) -> Option<Sign> {
        self.is_real().then(|| self.re.sign())
    }

    /// Principal square root (non-negative real part) when it has rational
    /// components.
    fn sqrt_exact(&self) -> Result<Option<Self>, ScalarError> {
        // (x + iy)^2 = re + i im  <=>  x^2 - y^2 = re, 2xy = im
        let modulus = match self.norm_sqr().sqrt_exact()? {
            Some(m) => m,
            None => return Ok(None),
        };
        let half = Rational::new(1, 2);
        let x_sq = (modulus.clone() + self.re.clone()) * half.clone();
        let y_sq = (modulus - self.re.clone()) * half;
        let (Some(x), Some(mut y)) = (x_sq.sqrt_exact()?, y_sq.sqrt_exact()?) else {
            return Ok(None);
        };
        if self.im.sign() == Sign::Negative {
            y = -y;
        }
        Ok(Some(GaussianRational::new(x, y)))
    }

    fn imaginary_unit() -> Option<Self> {
        Some(GaussianRational::i())
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    fn tolerance(&self) -> Option<f64> {
        None
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        GaussianRational::new(re, im)
    }
}

impl Div for GaussianRational {
    type Output = Self;
    /// Panics on division by zero.
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm_sqr();
        let num = self * rhs.conj();
        GaussianRational::new(num.re / n.clone(), num.im / n)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        GaussianRational::real(re)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_i64(n)
    }
}

/// Canonical literal form: `0`, `-3/2`, `i`, `-i`, `2+3i`, `-3/4+9/4i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if !self.re.is_zero() {
            write!(f, "{}", self.re)?;
            if self.im.sign() == Sign::Positive {
                f.write_str("+")?;
            }
        }
        if self.im == Rational::one() {
            f.write_str("i")
        } else if self.im == -Rational::one() {
            f.write_str("-i")
        } else {
            write!(f, "{}i", self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = LiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (re, im) = parse_scalar(s)?;
        Ok(GaussianRational::new(re, im))
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
