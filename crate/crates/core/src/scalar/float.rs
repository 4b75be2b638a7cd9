use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use super::{Field, GaussianRational, Rational, ScalarError, Sign};

pub const DEFAULT_EPS: f64 = 1e-12;

/// Double-precision complex scalar with an explicit tolerance.
///
/// Results of binary operations carry the larger tolerance of their operands.
/// Constants (`zero`, `one`, `from_i64`) carry tolerance 0 so they never
/// loosen a comparison. Equality is componentwise within tolerance, which is
/// not transitive.
#[derive(Clone, Copy)]
pub struct FloatScalar {
    value: Complex64,
    eps: f64,
}

impl FloatScalar {
    pub fn new(re: f64, im: f64, eps: f64) -> Self {
        assert!(eps >= 0.0, "tolerance must be non-negative");
        FloatScalar { value: Complex64::new(re, im), eps }
    }

    pub fn from_complex(value: Complex64, eps: f64) -> Self {
        FloatScalar::new(value.re, value.im, eps)
    }

    pub fn from_rational(x: &Rational, eps: f64) -> Self {
        FloatScalar::new(x.to_f64(), 0.0, eps)
    }

    pub fn from_gaussian(x: &GaussianRational, eps: f64) -> Self {
        FloatScalar::new(x.re.to_f64(), x.im.to_f64(), eps)
    }

    /// Convert any scalar, keeping an existing float tolerance when present.
    pub fn from_field<F: Field>(x: &F, eps: f64) -> Self {
        FloatScalar::from_complex(x.to_complex(), x.tolerance().unwrap_or(eps))
    }

    pub fn re(&self) -> f64 {
        self.value.re
    }

    pub fn im(&self) -> f64 {
        self.value.im
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn with_eps(self, eps: f64) -> Self {
        FloatScalar::new(self.value.re, self.value.im, eps)
    }

    fn combine(a: f64, b: f64) -> f64 {
        a.max(b)
    }
}

impl Field for FloatScalar {
    fn zero() -> Self {
        FloatScalar::new(0.0, 0.0, 0.0)
    }

    fn one() -> Self {
        FloatScalar::new(1.0, 0.0, 0.0)
    }

    fn from_i64(n: i64) -> Self {
        FloatScalar::new(n as f64, 0.0, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.value.re.abs() <= self.eps && self.value.im.abs() <= self.eps
    }

    fn conj(&self) -> Self {
        FloatScalar { value: self.value.conj(), eps: self.eps }
    }

    fn is_real(&self) -> bool {
        self.value.im.abs() <= self.eps
    }

    fn real_sign(&self) -> Option<Sign> {
        if !self.is_real() {
            return None;
        }
        Some(if self.value.re.abs() <= self.eps {
            Sign::Zero
        } else if self.value.re > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        })
    }

    /// Principal complex square root; always present.
    fn sqrt_exact(&self) -> Result<Option<Self>, ScalarError> {
        Ok(Some(FloatScalar { value: self.value.sqrt(), eps: self.eps }))
    }

    fn imaginary_unit() -> Option<Self> {
        Some(FloatScalar::new(0.0, 1.0, 0.0))
    }

    fn to_complex(&self) -> Complex64 {
        self.value
    }

    fn tolerance(&self) -> Option<f64> {
        Some(self.eps)
    }
}

impl PartialEq for FloatScalar {
    fn eq(&self, other: &Self) -> bool {
        let eps = Self::combine(self.eps, other.eps);
        (self.value.re - other.value.re).abs() <= eps && (self.value.im - other.value.im).abs() <= eps
    }
}

macro_rules! float_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for FloatScalar {
            type Output = FloatScalar;
            fn $method(self, rhs: FloatScalar) -> FloatScalar {
                FloatScalar {
                    value: self.value $op rhs.value,
                    eps: Self::combine(self.eps, rhs.eps),
                }
            }
        }
    };
}

float_binop!(Add, add, +);
float_binop!(Sub, sub, -);
float_binop!(Mul, mul, *);
float_binop!(Div, div, /);

impl Neg for FloatScalar {
    type Output = FloatScalar;
    fn neg(self) -> FloatScalar {
        FloatScalar { value: -self.value, eps: self.eps }
    }
}

impl fmt::Display for FloatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Complex64 { re, im } = self.value;
        if im == 0.0 {
            write!(f, "{re}")
        } else if re == 0.0 {
            write!(f, "{im}i")
        } else if im < 0.0 {
            write!(f, "{re}{im}i")
        } else {
            write!(f, "{re}+{im}i")
        }
    }
}

impl fmt::Debug for FloatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (eps {})", self.eps)
    }
}

impl Serialize for FloatScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
