//! Scalar fields used throughout the crate.
//!
//! Three concrete scalars implement [`Field`]:
//!
//! - [`Rational`]: exact rationals (real field only).
//! - [`GaussianRational`]: exact complex numbers with rational real and
//!   imaginary parts.
//! - [`FloatScalar`]: double-precision complex numbers that carry an explicit
//!   comparison tolerance.
//!
//! Every geometric type is generic over `F: Field`, so exact and float values
//! can never meet in the same expression: such a mix does not type-check.

mod float;
mod gaussian;
mod literal;
mod rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use float::{FloatScalar, DEFAULT_EPS};
pub use gaussian::GaussianRational;
pub use literal::LiteralError;
pub(crate) use literal::split_tuple;
pub use rational::{exact_sign, Rational};

/// Ground field of a problem, independent of how scalars are stored.
///
/// Real problems may still be stored as Gaussian rationals (with zero
/// imaginary parts) or floats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Real,
    Complex,
}

impl std::fmt::Display for FieldKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FieldKind::Real => "real",
            FieldKind::Complex => "complex",
        })
    }
}

impl std::str::FromStr for FieldKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "real" => Ok(FieldKind::Real),
            "complex" => Ok(FieldKind::Complex),
            other => Err(format!("unknown field {other:?}; expected \"real\" or \"complex\"")),
        }
    }
}

/// Sign of a real value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("no real square root of negative value {0}")]
    NoRealSquareRoot(String),
}

/// A commutative field with conjugation.
///
/// Conjugation is the identity on real scalars. Exact scalars report
/// `tolerance() == None`; float scalars report their comparison tolerance.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Serialize
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;

    /// `true` when the imaginary part vanishes.
    fn is_real(&self) -> bool;

    /// Sign of the value when it is real, `None` otherwise.
    fn real_sign(&self) -> Option<Sign>;

    /// A square root inside the field, if one exists.
    ///
    /// Rational input must be non-negative.
    fn sqrt_exact(&self) -> Result<Option<Self>, ScalarError>;

    /// The imaginary unit, if the field contains it.
    fn imaginary_unit() -> Option<Self>;

    fn to_complex(&self) -> Complex64;

    /// Comparison tolerance; `None` for exact scalars.
    fn tolerance(&self) -> Option<f64>;

    /// `x * conj(x)`.
    fn abs_sqr(&self) -> Self {
        self.clone() * self.conj()
    }

    /// Zero test against a tolerance scaled by `scale`. Exact scalars ignore
    /// the scale.
    fn is_zero_scaled(&self, scale: f64) -> bool {
        match self.tolerance() {
            None => self.is_zero(),
            Some(eps) => self.to_complex().norm() <= eps * scale,
        }
    }
}

/// Multiplicative inverse, `None` for zero.
pub fn inverse<F: Field>(x: &F) -> Option<F> {
    if x.is_zero() {
        None
    } else {
        Some(F::one() / x.clone())
    }
}
